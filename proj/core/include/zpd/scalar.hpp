#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "zpd/field.hpp"

namespace zpd {

/// Exact field element: a reduced arbitrary-precision fraction over Q, or a
/// residue in {0..p-1} over GF(p). Every operation checks field tags and no
/// floating point appears anywhere in the arithmetic.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}  // zero over Q
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  /// Q fraction num/den, reduced with positive denominator.
  static Scalar rational(long long num, long long den = 1);
  /// Parses the serialized form: "n" or "n/d" over Q, a decimal residue over GF(p).
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // errc::input on division by zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; GF(p) uses the extended Euclidean algorithm.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /// GF(p) residue (valid only over prime fields).
  std::uint64_t residue() const { return res_; }
  const mpq_class& rat() const { return rat_; }

 private:
  Field field_;
  std::uint64_t res_ = 0;  // prime-field residue, always reduced mod p
  mpq_class rat_;          // rational value, always canonical
};

/// Residue inverse mod p by extended Euclid; errc::input when a == 0.
std::uint64_t gfp_inverse(std::uint64_t a, std::uint32_t p);

}  // namespace zpd
