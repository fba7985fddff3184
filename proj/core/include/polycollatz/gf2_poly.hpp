#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polycollatz {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which is a distinct state rather than an integer sentinel; it orders
/// below every finite degree.
class Degree {
 public:
  constexpr explicit Degree(std::size_t value) noexcept : value_(value) {}

  static constexpr Degree minus_infinity() noexcept { return Degree(); }

  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  constexpr bool is_finite() const noexcept { return value_.has_value(); }

  /// Throws Error(ZeroInput) for minus infinity.
  std::size_t value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& lhs, const Degree& rhs) noexcept {
    if (lhs.value_.has_value() != rhs.value_.has_value()) {
      return lhs.value_.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (!lhs.value_) return std::strong_ordering::equal;
    return *lhs.value_ <=> *rhs.value_;
  }

 private:
  constexpr Degree() noexcept = default;
  std::optional<std::size_t> value_;
};

std::string to_string(const Degree& d);

/// A polynomial over F_2. Bit i of the limb array is the coefficient of x^i.
/// Limbs are kept canonical: the last limb is never zero, so the zero
/// polynomial has no limbs and equality is limb equality.
class Gf2Poly {
 public:
  using Limb = std::uint64_t;
  static constexpr std::size_t kLimbBits = 64;

  Gf2Poly() noexcept = default;

  static Gf2Poly zero() noexcept { return Gf2Poly(); }
  static Gf2Poly one();
  static Gf2Poly x();
  static Gf2Poly monomial(std::size_t exponent);
  static Gf2Poly from_word(Limb bits);
  static Gf2Poly from_limbs(std::vector<Limb> limbs);
  /// Each exponent toggles its coefficient, so repeated exponents cancel.
  static Gf2Poly from_exponents(std::span<const std::size_t> exponents);

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
  /// f(0) = 1.
  bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1u) != 0; }
  /// Divisible by x. Zero is even.
  bool is_even() const noexcept { return !is_odd(); }

  Degree degree() const noexcept;
  bool coeff(std::size_t i) const noexcept;
  std::size_t term_count() const noexcept;
  /// Largest r with x^r dividing f; 0 for the zero polynomial.
  std::size_t trailing_zeros() const noexcept;

  std::span<const Limb> limbs() const noexcept { return limbs_; }
  /// The coefficient mask as one machine word, when the degree is below 64.
  std::optional<Limb> to_word() const noexcept;
  /// Exponents of the nonzero terms in descending order.
  std::vector<std::size_t> exponents() const;

  // In-place kernels for the iteration engines. Each keeps canonical form.
  Gf2Poly& mul_x_plus_1_assign();
  Gf2Poly& shift_left_assign(std::size_t k);
  Gf2Poly& shift_right_assign(std::size_t k);
  Gf2Poly& toggle(std::size_t exponent);
  /// Removes the leading term. Throws Error(ZeroInput) on zero.
  Gf2Poly& drop_leading_term();
  Gf2Poly& truncate_assign(std::size_t max_exponent);
  Gf2Poly& operator+=(const Gf2Poly& other);

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  /// Numeric order of the coefficient masks; matches the order of hex encodings
  /// of equal length.
  friend std::strong_ordering operator<=>(const Gf2Poly& lhs, const Gf2Poly& rhs) noexcept;

 private:
  void normalize() noexcept;

  std::vector<Limb> limbs_;
};

struct Gf2PolyHash {
  std::size_t operator()(const Gf2Poly& f) const noexcept;
};

Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b);
inline Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) { return add(a, b); }
inline Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) { return mul(a, b); }

/// (x+1)·f as (f << 1) xor f.
Gf2Poly mul_x_plus_1(const Gf2Poly& f);
/// x^k·f.
Gf2Poly shift_left(const Gf2Poly& f, std::size_t k);

/// f/x. Throws ZeroInput for f = 0 and OddInput when x does not divide f.
Gf2Poly div_x(const Gf2Poly& f);

struct StripResult {
  Gf2Poly odd_part;
  std::size_t shift = 0;

  friend bool operator==(const StripResult&, const StripResult&) = default;
};

/// Splits f = x^shift · odd_part with odd_part odd. strip_x(0) = (0, 0).
StripResult strip_x(const Gf2Poly& f);

/// Coefficient reversal x^deg(f) · f(1/x); reverse(0) = 0.
Gf2Poly reverse(const Gf2Poly& f);

/// Keeps the terms of degree <= max_exponent.
Gf2Poly truncate(const Gf2Poly& f, std::size_t max_exponent);

/// (x+1)^k as the product of (x^(2^t) + 1) over the set bits t of k.
Gf2Poly pow_x_plus_1(std::uint64_t k);

/// The `how_many` largest exponents of (x+1)^n, descending. The exponents of
/// (x+1)^n are exactly the bit-submasks of n, so nothing is expanded.
/// Throws InsufficientTerms if (x+1)^n has fewer terms.
std::vector<std::uint64_t> leading_terms_of_pow(std::uint64_t n, std::size_t how_many);

enum class PolyStyle { Symbolic, Hex };

/// Accepts "x^5+x^2+1" (terms in any order, whitespace ignored) or the
/// hex-bits form "0x25". The single token "0" denotes the zero polynomial.
/// Throws SyntaxError (with byte offset) or DuplicateTerm.
Gf2Poly parse_poly(std::string_view text);

/// Symbolic output lists terms by descending degree; zero is "0" / "0x0".
std::string format_poly(const Gf2Poly& f, PolyStyle style = PolyStyle::Symbolic);
inline std::string to_hex(const Gf2Poly& f) { return format_poly(f, PolyStyle::Hex); }
inline std::string to_symbolic(const Gf2Poly& f) { return format_poly(f, PolyStyle::Symbolic); }

}  // namespace polycollatz
