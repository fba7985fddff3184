#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycollatz/gf2_poly.hpp"

namespace polycollatz {

/// A polynomial over F_p for a small prime p. coeffs()[i] is the residue of
/// the x^i coefficient, always in [0, p), with no trailing zeros.
class FpPoly {
 public:
  using Residue = std::uint32_t;

  /// Throws InvalidArgument unless p is a prime below 2^16.
  explicit FpPoly(std::uint32_t p);
  /// Coefficients are reduced mod p (low degree first).
  FpPoly(std::uint32_t p, std::span<const std::int64_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly from_gf2(const Gf2Poly& f);

  std::uint32_t modulus() const noexcept { return p_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Degree degree() const noexcept;
  Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Residue constant_term() const noexcept { return coeff(0); }

  /// Only defined for p = 2. Throws InvalidArgument otherwise.
  Gf2Poly to_gf2() const;

  // In-place kernels for the orbit engines.
  FpPoly& mul_x_plus_1_assign();
  FpPoly& sub_constant_assign(Residue c);
  FpPoly& div_x_assign();

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void normalize() noexcept;

  std::uint32_t p_;
  std::vector<Residue> coeffs_;
};

struct FpPolyHash {
  std::size_t operator()(const FpPoly& f) const noexcept;
};

bool is_prime(std::uint32_t n) noexcept;

/// Terms by descending degree, e.g. "2x^3+x+4"; zero is "0".
std::string format_fp(const FpPoly& f);

/// Accepts "2x^3+x+4" style input with optional "*" between a coefficient
/// and x; repeated exponents add. Coefficients are reduced mod p.
FpPoly parse_fp(std::uint32_t p, std::string_view text);

/// Visits every polynomial of degree exactly d over F_p ((p-1)·p^d of them)
/// in counting order of the base-p coefficient vector.
void for_each_fp_of_degree(std::uint32_t p, std::size_t d,
                           const std::function<void(const FpPoly&)>& visit);

}  // namespace polycollatz
