#include "derivlab/cli/algebra_expr.hpp"

#include <cctype>
#include <charconv>

#include "derivlab/errors.hpp"

namespace derivlab::cli {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingSpec& ring, std::optional<std::size_t> n)
      : text_(text), ring_(ring), n_(n) {}

  AlgebraPtr parse_all() {
    AlgebraPtr alg = parse();
    if (pos_ != text_.size()) fail("trailing input");
    return alg;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("algebra expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool consume(std::string_view prefix) {
    if (text_.substr(pos_).starts_with(prefix)) {
      pos_ += prefix.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::optional<std::size_t> number() {
    std::size_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::size_t order(const char* what) {
    if (auto v = number()) return *v;
    if (n_) return *n_;
    fail(std::string(what) + " needs an order, e.g. " + what + "3 or --n 3");
  }

  std::size_t positive(std::size_t v, const char* what) const {
    if (v == 0) fail(std::string(what) + " order must be at least 1");
    return v;
  }

  AlgebraPtr parse() {
    if (consume("tensor:")) {
      AlgebraPtr a = parse();
      expect(',');
      AlgebraPtr b = parse();
      return tensor_product(a, b);
    }
    if (consume("poly:")) {
      auto degree = number();
      if (!degree) fail("poly needs a degree");
      expect(':');
      AlgebraPtr base = parse();
      return truncated_poly(base, *degree);
    }
    if (consume("quat")) {
      if (!ring_.is_rationals()) fail("quaternions are built over Q only");
      return quaternions();
    }
    if (consume("ring")) return ring_as_algebra(ring_);
    if (consume("diag")) return diagonal(positive(order("diag"), "diag"), ring_);
    if (consume("tn")) return upper_triangular(positive(order("tn"), "tn"), ring_);
    if (consume("mn")) return full_matrix(positive(order("mn"), "mn"), ring_);
    fail("unknown algebra");
  }

  std::string_view text_;
  RingSpec ring_;
  std::optional<std::size_t> n_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraPtr parse_algebra(std::string_view expr, const RingSpec& ring, std::optional<std::size_t> n) {
  return ExprParser(expr, ring, n).parse_all();
}

std::optional<std::string> algebra_name(const StructureAlgebra& alg) {
  const AlgebraOrigin& o = alg.origin();
  switch (o.family) {
    case AlgebraFamily::FullMatrix:
      return "mn" + std::to_string(o.order);
    case AlgebraFamily::UpperTriangular:
      return "tn" + std::to_string(o.order);
    case AlgebraFamily::Quaternions:
      return "quat";
    case AlgebraFamily::RingAsAlgebra:
      return "ring";
    case AlgebraFamily::Diagonal:
      return "diag" + std::to_string(o.order);
    case AlgebraFamily::Tensor: {
      auto a = algebra_name(*o.first);
      auto b = algebra_name(*o.second);
      if (!a || !b) return std::nullopt;
      return "tensor:" + *a + "," + *b;
    }
    case AlgebraFamily::TruncatedPoly: {
      auto base = algebra_name(*o.first);
      if (!base || o.variable != "x") return std::nullopt;
      return "poly:" + std::to_string(o.degree) + ":" + *base;
    }
    case AlgebraFamily::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace derivlab::cli
