#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "derivlab/ring.hpp"

namespace derivlab::cli {

/// Optional config file: {"ring": "q" | {"kind":...}, "output_dir": "path"}.
struct Config {
  std::optional<RingSpec> ring;
  std::optional<std::filesystem::path> output_dir;
};

Config load_config(const std::filesystem::path& path);

struct AlgebraChoice {
  std::string expr;
  std::optional<std::size_t> n;
  std::string file;
};

struct SolveOptions {
  AlgebraChoice algebra;
  std::string kind;
  RingSpec ring;
  bool g_eq_h = false;
  bool f_zero = false;
  bool emit_system = false;
  bool verify = false;
};

struct CheckOptions {
  std::string triple_file;
  std::string kind;
  RingSpec ring;
  /// Used when the triple document names no algebra.
  AlgebraChoice algebra;
};

struct VerifyOptions {
  std::string filter;
  bool json = false;
  bool timings = true;
  RingSpec ring;
  std::string trace_path;
};

struct ExportOptions {
  std::filesystem::path out_dir;
  RingSpec ring;
};

/// Exit codes: 0 success, 1 malformed input, 2 composite modulus.
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_catalog(bool json, std::ostream& out);
/// 0 iff every asserted, non-skipped entry passes.
int cmd_verify_paper(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_export(const ExportOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace derivlab::cli
