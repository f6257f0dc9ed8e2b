#pragma once

#include <cstdint>
#include <string>

#include "zpd/error.hpp"

namespace zpd {

/// Ground field descriptor: the rationals Q or a prime field GF(p).
struct Field {
  enum class Kind : std::uint8_t { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;  // modulus, valid when kind == prime

  static Field rationals() { return Field{Kind::rational, 0}; }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return kind == Kind::rational; }
  bool is_prime() const { return kind == Kind::prime; }
  std::uint32_t characteristic() const { return is_prime() ? p : 0; }

  bool operator==(const Field&) const = default;

  std::string str() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
  }

  /// Accepts "Q", "GF(p)" (document form) and "GF:p" (CLI form).
  static Field parse(const std::string& s);
};

bool is_prime_u32(std::uint32_t n);

inline void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b))
    fail(errc::field_mismatch,
         std::string(what) + ": field mismatch (" + a.str() + " vs " + b.str() + ")");
}

}  // namespace zpd
