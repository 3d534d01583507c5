#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace derivlab {

/// Coefficient ring descriptor: the rationals or the integers modulo m (m >= 2).
class RingSpec {
 public:
  enum class Kind { Rationals, IntegersMod };

  RingSpec() = default;

  static RingSpec rationals() noexcept { return RingSpec(); }
  static RingSpec integers_mod(std::int64_t m);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// Zero for the rationals.
  std::int64_t modulus() const noexcept { return modulus_; }

  /// Q, or Z/p with p prime. Elimination-based routines require this.
  bool is_field() const noexcept;

  /// "Q" or "Z/m".
  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::int64_t modulus_ = 0;
};

/// True iff 2x = 0 implies x = 0.
bool two_torsion_free(const RingSpec& spec) noexcept;

bool is_prime(std::int64_t m) noexcept;

/// Accepts "q", "Q", "z5", "Z5", "zmod:5", "Z/5".
RingSpec parse_ring(std::string_view text);

std::ostream& operator<<(std::ostream& os, const RingSpec& spec);

/// Exact element of a coefficient ring. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, m).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const RingSpec& ring);
  static Scalar one(const RingSpec& ring);
  static Scalar from_int(const RingSpec& ring, long long value);
  static Scalar rational(mpq_class value);
  static Scalar rational(long long num, long long den);
  static Scalar residue(long long value, std::int64_t modulus);

  /// Text form: "p/q" or "p" for rationals, "r mod m" for residues.
  static Scalar parse(std::string_view text);
  /// As above, but plain integers and fractions are mapped into `ring`, and an
  /// explicit "r mod m" must agree with it.
  static Scalar parse(std::string_view text, const RingSpec& ring);

  const RingSpec& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Requires a rational scalar.
  const mpq_class& rational_value() const;
  /// Requires a residue scalar.
  std::int64_t residue_value() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Values from different rings compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_ring(const Scalar& other, const char* op) const;

  RingSpec ring_;
  mpq_class q_;
  std::int64_t r_ = 0;
};

Scalar add(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);
/// Multiplicative inverse; throws NotAUnit for zero or a residue sharing a factor with m.
Scalar inv_unit(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace derivlab
