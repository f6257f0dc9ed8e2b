#include "zpd/scalar.hpp"

#include <cstdlib>

namespace zpd {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint32_t p) {
  if (!is_prime_u32(p)) fail(errc::input, "GF(p) requires prime p, got " + std::to_string(p));
  return Field{Kind::prime, p};
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  auto parse_p = [&](const std::string& digits) {
    if (digits.empty()) fail(errc::parse, "malformed field: " + s);
    char* end = nullptr;
    unsigned long v = std::strtoul(digits.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') fail(errc::parse, "malformed field: " + s);
    return gf(static_cast<std::uint32_t>(v));
  };
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') return parse_p(s.substr(3, s.size() - 4));
  if (s.rfind("GF:", 0) == 0) return parse_p(s.substr(3));
  fail(errc::parse, "unknown field \"" + s + "\" (expected Q, GF(p) or GF:p)");
}

std::uint64_t gfp_inverse(std::uint64_t a, std::uint32_t p) {
  if (a % p == 0) fail(errc::input, "division by zero in GF(" + std::to_string(p) + ")");
  // extended Euclid on (a, p)
  std::int64_t r0 = static_cast<std::int64_t>(a % p), r1 = p;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint64_t>(inv);
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.rat_ = mpq_class(static_cast<long>(v));
  } else {
    std::int64_t r = v % static_cast<std::int64_t>(f.p);
    if (r < 0) r += f.p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) fail(errc::input, "rational with zero denominator");
  Scalar s(Field::rationals());
  s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& in) {
  if (in.empty()) fail(errc::parse, "empty scalar");
  if (f.is_rational()) {
    Scalar s(f);
    // mpq_class accepts "n" and "n/d"; reject anything it can't digest.
    if (mpq_set_str(s.rat_.get_mpq_t(), in.c_str(), 10) != 0)
      fail(errc::parse, "malformed rational \"" + in + "\"");
    if (mpz_sgn(mpq_denref(s.rat_.get_mpq_t())) == 0)
      fail(errc::parse, "zero denominator in \"" + in + "\"");
    s.rat_.canonicalize();
    return s;
  }
  char* end = nullptr;
  long long v = std::strtoll(in.c_str(), &end, 10);
  if (end == nullptr || *end != '\0')
    fail(errc::parse, "malformed residue \"" + in + "\" over " + f.str());
  return from_int(f, v);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = -rat_;
  else s.res_ = res_ == 0 ? 0 : field_.p - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar +");
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = rat_ + o.rat_;
  else {
    std::uint64_t t = res_ + o.res_;
    s.res_ = t >= field_.p ? t - field_.p : t;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar -");
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = rat_ - o.rat_;
  else s.res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + field_.p - o.res_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar *");
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = rat_ * o.rat_;
  else s.res_ = (res_ * o.res_) % field_.p;
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    if (rat_ == 0) fail(errc::input, "division by zero over Q");
    s.rat_ = 1 / rat_;
  } else {
    s.res_ = gfp_inverse(res_, field_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar /");
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace zpd
