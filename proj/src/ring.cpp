#include "derivlab/ring.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "derivlab/errors.hpp"

namespace derivlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  bool ok = !digits.empty();
  for (std::size_t i = 0; i < digits.size() && ok; ++i) {
    const char c = digits[i];
    ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1);
  }
  if (!ok) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  return mpz_class(digits, 10);
}

std::int64_t to_int64(const mpz_class& z, std::string_view context) {
  if (!z.fits_slong_p()) throw ParseError("integer out of range in '" + std::string(context) + "'");
  return z.get_si();
}

std::int64_t reduce(long long value, std::int64_t m) {
  long long r = value % m;
  if (r < 0) r += m;
  return r;
}

// Extended Euclid; returns gcd and sets x with a*x = gcd (mod m).
std::int64_t egcd(std::int64_t a, std::int64_t m, std::int64_t& x) {
  __int128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    const __int128 nr = old_r - q * r;
    old_r = r;
    r = nr;
    const __int128 ns = old_s - q * s;
    old_s = s;
    s = ns;
  }
  x = static_cast<std::int64_t>(old_s);
  return static_cast<std::int64_t>(old_r);
}

}  // namespace

RingSpec RingSpec::integers_mod(std::int64_t m) {
  if (m < 2) throw Error("IntegersMod requires m >= 2, got " + std::to_string(m));
  RingSpec spec;
  spec.kind_ = Kind::IntegersMod;
  spec.modulus_ = m;
  return spec;
}

bool is_prime(std::int64_t m) noexcept {
  if (m < 2) return false;
  for (std::int64_t d = 2; d <= m / d; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

bool RingSpec::is_field() const noexcept { return is_rationals() || is_prime(modulus_); }

std::string RingSpec::name() const {
  return is_rationals() ? std::string("Q") : "Z/" + std::to_string(modulus_);
}

bool two_torsion_free(const RingSpec& spec) noexcept {
  return spec.is_rationals() || spec.modulus() % 2 == 1;
}

RingSpec parse_ring(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "q" || t == "Q") return RingSpec::rationals();
  std::string_view digits;
  for (std::string_view prefix : {"zmod:", "Zmod:", "Z/", "z/", "z", "Z"}) {
    if (t.starts_with(prefix)) {
      digits = t.substr(prefix.size());
      break;
    }
  }
  if (digits.empty()) throw ParseError("unknown ring '" + std::string(t) + "'");
  return RingSpec::integers_mod(to_int64(parse_integer(digits), t));
}

std::ostream& operator<<(std::ostream& os, const RingSpec& spec) { return os << spec.name(); }

Scalar Scalar::zero(const RingSpec& ring) {
  Scalar s;
  s.ring_ = ring;
  return s;
}

Scalar Scalar::one(const RingSpec& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const RingSpec& ring, long long value) {
  Scalar s;
  s.ring_ = ring;
  if (ring.is_rationals()) {
    s.q_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    s.r_ = reduce(value, ring.modulus());
  }
  return s;
}

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  Scalar s;
  s.q_ = std::move(value);
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw Error("zero denominator");
  return rational(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

Scalar Scalar::residue(long long value, std::int64_t modulus) {
  return from_int(RingSpec::integers_mod(modulus), value);
}

Scalar Scalar::parse(std::string_view text) {
  const std::string_view t = trim(text);
  if (const auto pos = t.find("mod"); pos != std::string_view::npos) {
    const mpz_class m = parse_integer(t.substr(pos + 3));
    const mpz_class r = parse_integer(t.substr(0, pos));
    const RingSpec ring = RingSpec::integers_mod(to_int64(m, t));
    mpz_class red = r % m;
    if (red < 0) red += m;
    return from_int(ring, to_int64(red, t));
  }
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(t.substr(0, slash));
    const mpz_class den = parse_integer(t.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(t) + "'");
    return rational(mpq_class(num, den));
  }
  return rational(mpq_class(parse_integer(t)));
}

Scalar Scalar::parse(std::string_view text, const RingSpec& ring) {
  const Scalar raw = parse(text);
  if (raw.ring() == ring) return raw;
  if (!raw.ring().is_rationals()) {
    throw RingMismatch("'" + std::string(trim(text)) + "' is not in " + ring.name());
  }
  // A rational literal mapped into Z/m: p/q -> p * q^{-1}.
  const mpz_class m(static_cast<long>(ring.modulus()));
  mpz_class num = raw.q_.get_num() % m;
  mpz_class den = raw.q_.get_den() % m;
  if (num < 0) num += m;
  const Scalar n = from_int(ring, num.get_si());
  const Scalar d = from_int(ring, den.get_si());
  return n * inv_unit(d);
}

bool Scalar::is_zero() const noexcept { return ring_.is_rationals() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return ring_.is_rationals() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational_value() const {
  if (!ring_.is_rationals()) throw RingMismatch("expected a rational, have " + ring_.name());
  return q_;
}

std::int64_t Scalar::residue_value() const {
  if (ring_.is_rationals()) throw RingMismatch("expected a residue, have Q");
  return r_;
}

std::string Scalar::to_string() const {
  if (ring_.is_rationals()) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(ring_.modulus());
}

void Scalar::require_same_ring(const Scalar& other, const char* op) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch(std::string(op) + " of " + ring_.name() + " and " + other.ring_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (ring_.is_rationals()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = ring_.modulus() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_ring(other, "sum");
  if (ring_.is_rationals()) {
    q_ += other.q_;
  } else {
    const std::int64_t m = ring_.modulus();
    r_ = static_cast<std::int64_t>((static_cast<__int128>(r_) + other.r_) % m);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_ring(other, "difference");
  if (ring_.is_rationals()) {
    q_ -= other.q_;
  } else {
    const std::int64_t m = ring_.modulus();
    r_ = static_cast<std::int64_t>((static_cast<__int128>(r_) - other.r_ + m) % m);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_ring(other, "product");
  if (ring_.is_rationals()) {
    q_ *= other.q_;
  } else {
    const std::int64_t m = ring_.modulus();
    r_ = static_cast<std::int64_t>((static_cast<__int128>(r_) * other.r_) % m);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.ring_ == b.ring_)) return false;
  return a.ring_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

Scalar add(const Scalar& x, const Scalar& y) { return x + y; }

Scalar mul(const Scalar& x, const Scalar& y) { return x * y; }

Scalar inv_unit(const Scalar& x) {
  if (x.ring().is_rationals()) {
    if (x.is_zero()) throw NotAUnit("0 in Q");
    return Scalar::rational(1 / x.rational_value());
  }
  const std::int64_t m = x.ring().modulus();
  std::int64_t inv = 0;
  if (egcd(x.residue_value(), m, inv) != 1) throw NotAUnit(x.to_string());
  return Scalar::from_int(x.ring(), inv);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace derivlab
