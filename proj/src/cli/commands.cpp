#include "derivlab/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "derivlab/cli/algebra_expr.hpp"
#include "derivlab/cli/catalog.hpp"
#include "derivlab/cli/json_io.hpp"
#include "derivlab/errors.hpp"

namespace derivlab::cli {

namespace fs = std::filesystem;

namespace {

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

AlgebraPtr resolve_algebra(const AlgebraChoice& choice, const RingSpec& ring) {
  if (!choice.file.empty()) return algebra_from_json(read_json_file(choice.file), ring);
  if (choice.expr.empty()) throw ParseError("no algebra given");
  return parse_algebra(choice.expr, ring, choice.n);
}

// Maps library exceptions to exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const CompositeModulusUnsupported& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

Config load_config(const fs::path& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  Config c;
  if (doc.contains("ring")) c.ring = ring_from_json(doc.at("ring"));
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) throw ParseError("output_dir must be a string");
    c.output_dir = doc.at("output_dir").get<std::string>();
  }
  return c;
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AlgebraPtr alg = resolve_algebra(opts.algebra, opts.ring);
    const IdentityKind kind = parse_kind(opts.kind);
    const Constraints c{opts.g_eq_h, opts.f_zero, {}};
    if (opts.emit_system) {
      out << system_to_json(build_system(alg, kind, c)).dump() << "\n";
      return 0;
    }
    const SolutionSpace space = solve(alg, kind, c);
    Json doc = space_to_json(space);
    if (opts.verify) {
      const SpaceVerification v = verify_space(space);
      doc["verification"] = Json{{"substitution", v.substitution},
                                 {"rank_nullity", v.rank_nullity},
                                 {"permutation", v.permutation},
                                 {"canonical", v.canonical},
                                 {"ok", v.ok()}};
    }
    out << doc.dump(2) << "\n";
    return 0;
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = read_json_file(opts.triple_file);
    AlgebraPtr fallback;
    if (!opts.algebra.expr.empty() || !opts.algebra.file.empty()) fallback = resolve_algebra(opts.algebra, opts.ring);
    const MapTriple t = triple_from_json(doc, opts.ring, fallback);
    const IdentityKind kind = parse_kind(opts.kind);
    out << check_report_to_json(kind, t, check(kind, t)).dump(2) << "\n";
    return 0;
  });
}

int cmd_catalog(bool json, std::ostream& out) {
  Json list = Json::array();
  for (const auto& e : catalog()) {
    if (json) {
      list.push_back(Json{{"id", e.id},
                          {"title", e.title},
                          {"anchor", e.anchor},
                          {"origin", origin_name(e.origin)},
                          {"asserted", e.asserted},
                          {"ring_generic", e.ring_generic}});
    } else {
      out << e.id << "  " << e.title << (e.asserted ? "" : " (reported only)") << "\n";
    }
  }
  if (json) out << list.dump(2) << "\n";
  return 0;
}

int cmd_verify_paper(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunReport report = run_catalog(opts.filter, opts.ring);
    if (report.results.empty()) {
      err << "error: filter '" << opts.filter << "' matches no entry\n";
      return 1;
    }
    if (!opts.trace_path.empty()) write_file(opts.trace_path, traceability_markdown(report));
    if (opts.json) {
      out << run_report_to_json(report, opts.timings).dump(2) << "\n";
    } else {
      for (const auto& r : report.results) {
        out << "[" << status_name(r.status) << "] " << r.entry->id;
        if (!r.message.empty()) out << "  " << r.message;
        out << "\n";
        if (r.status == Status::Fail || r.status == Status::Reported) {
          for (const auto& l : r.checks) {
            if (l.asserted && l.ok) continue;
            out << "    " << (l.asserted ? "FAILED " : "noted ") << l.name << (l.asserted ? "" : l.ok ? ": true" : ": false");
            if (!l.detail.empty()) out << " (" << l.detail << ")";
            out << "\n";
          }
        }
      }
      out << report.count(Status::Pass) << " passed, " << report.count(Status::Fail) << " failed, "
          << report.count(Status::Skip) << " skipped, " << report.count(Status::Reported) << " reported\n";
    }
    return report.ok() ? 0 : 1;
  });
}

int cmd_export(const ExportOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const fs::path algebras = opts.out_dir / "algebras";
    const fs::path triples = opts.out_dir / "triples";
    std::size_t written = 0;
    for (const char* expr : {"tn2", "tn3", "tn4", "mn2", "mn3", "ring", "diag2", "poly:1:ring", "poly:3:tn2"}) {
      const AlgebraPtr alg = parse_algebra(expr, opts.ring);
      std::string name = expr;
      for (char& c : name) {
        if (c == ':' || c == ',') c = '_';
      }
      write_file(algebras / (name + ".json"), algebra_to_json(*alg).dump(2) + "\n");
      ++written;
    }
    if (opts.ring.is_rationals()) {
      write_file(algebras / "quat.json", algebra_to_json(*quaternions()).dump(2) + "\n");
      ++written;
    }
    for (const auto& [id, t] : example_triples()) {
      write_file(triples / (id + ".json"), triple_to_json(t).dump(2) + "\n");
      ++written;
    }
    out << "wrote " << written << " files to " << opts.out_dir.string() << "\n";
    return 0;
  });
}

}  // namespace derivlab::cli
