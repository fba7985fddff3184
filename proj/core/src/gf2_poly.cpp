#include "polycollatz/gf2_poly.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "polycollatz/error.hpp"

namespace polycollatz {
namespace {

using Limb = Gf2Poly::Limb;
constexpr std::size_t kBits = Gf2Poly::kLimbBits;

__extension__ typedef unsigned __int128 Wide;

// 64x64 -> 128 carry-less product with a 4-bit window.
Wide clmul64(Limb a, Limb b) noexcept {
  Wide table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; ++i) {
    table[i] = (i & 1) ? (table[i - 1] ^ static_cast<Wide>(a)) : (table[i / 2] << 1);
  }
  Wide acc = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    acc = (acc << 4) ^ table[(b >> shift) & 0xF];
  }
  return acc;
}

Limb reverse_bits(Limb v) noexcept {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
  v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
  return (v >> 32) | (v << 32);
}

}  // namespace

std::size_t Degree::value() const {
  if (!value_) throw Error(ErrorCode::ZeroInput, "degree of the zero polynomial is minus infinity");
  return *value_;
}

std::string to_string(const Degree& d) {
  return d.is_finite() ? std::to_string(d.value()) : std::string("-inf");
}

Gf2Poly Gf2Poly::one() { return from_word(1); }
Gf2Poly Gf2Poly::x() { return from_word(2); }

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
  Gf2Poly f;
  f.limbs_.assign(exponent / kBits + 1, 0);
  f.limbs_.back() = Limb{1} << (exponent % kBits);
  return f;
}

Gf2Poly Gf2Poly::from_word(Limb bits) {
  Gf2Poly f;
  if (bits != 0) f.limbs_.push_back(bits);
  return f;
}

Gf2Poly Gf2Poly::from_limbs(std::vector<Limb> limbs) {
  Gf2Poly f;
  f.limbs_ = std::move(limbs);
  f.normalize();
  return f;
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::size_t> exponents) {
  Gf2Poly f;
  for (std::size_t e : exponents) f.toggle(e);
  return f;
}

void Gf2Poly::normalize() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Degree Gf2Poly::degree() const noexcept {
  if (limbs_.empty()) return Degree::minus_infinity();
  return Degree((limbs_.size() - 1) * kBits + (std::bit_width(limbs_.back()) - 1));
}

bool Gf2Poly::coeff(std::size_t i) const noexcept {
  const std::size_t limb = i / kBits;
  return limb < limbs_.size() && ((limbs_[limb] >> (i % kBits)) & 1u) != 0;
}

std::size_t Gf2Poly::term_count() const noexcept {
  std::size_t n = 0;
  for (Limb l : limbs_) n += static_cast<std::size_t>(std::popcount(l));
  return n;
}

std::size_t Gf2Poly::trailing_zeros() const noexcept {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) return i * kBits + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
  }
  return 0;
}

std::optional<Limb> Gf2Poly::to_word() const noexcept {
  if (limbs_.empty()) return Limb{0};
  if (limbs_.size() == 1) return limbs_[0];
  return std::nullopt;
}

std::vector<std::size_t> Gf2Poly::exponents() const {
  std::vector<std::size_t> out;
  out.reserve(term_count());
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    Limb l = limbs_[i];
    while (l != 0) {
      const int top = std::bit_width(l) - 1;
      out.push_back(i * kBits + static_cast<std::size_t>(top));
      l &= ~(Limb{1} << top);
    }
  }
  return out;
}

Gf2Poly& Gf2Poly::mul_x_plus_1_assign() {
  if (limbs_.empty()) return *this;
  Limb carry = 0;
  for (Limb& l : limbs_) {
    const Limb next_carry = l >> (kBits - 1);
    l ^= (l << 1) | carry;
    carry = next_carry;
  }
  if (carry != 0) limbs_.push_back(carry);
  // The leading term of (x+1)f is always present, so no normalization needed.
  return *this;
}

Gf2Poly& Gf2Poly::shift_left_assign(std::size_t k) {
  if (limbs_.empty() || k == 0) return *this;
  const std::size_t limb_shift = k / kBits;
  const unsigned bit_shift = static_cast<unsigned>(k % kBits);
  const std::size_t old_size = limbs_.size();
  limbs_.resize(old_size + limb_shift + 1, 0);
  for (std::size_t i = old_size; i-- > 0;) {
    const Limb v = limbs_[i];
    limbs_[i] = 0;
    if (bit_shift == 0) {
      limbs_[i + limb_shift] = v;
    } else {
      limbs_[i + limb_shift + 1] |= v >> (kBits - bit_shift);
      limbs_[i + limb_shift] |= v << bit_shift;
    }
  }
  normalize();
  return *this;
}

Gf2Poly& Gf2Poly::shift_right_assign(std::size_t k) {
  if (limbs_.empty() || k == 0) return *this;
  const std::size_t limb_shift = k / kBits;
  const unsigned bit_shift = static_cast<unsigned>(k % kBits);
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  const std::size_t new_size = limbs_.size() - limb_shift;
  for (std::size_t i = 0; i < new_size; ++i) {
    Limb v = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size()) {
      v |= limbs_[i + limb_shift + 1] << (kBits - bit_shift);
    }
    limbs_[i] = v;
  }
  limbs_.resize(new_size);
  normalize();
  return *this;
}

Gf2Poly& Gf2Poly::toggle(std::size_t exponent) {
  const std::size_t limb = exponent / kBits;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] ^= Limb{1} << (exponent % kBits);
  normalize();
  return *this;
}

Gf2Poly& Gf2Poly::drop_leading_term() {
  if (limbs_.empty()) throw Error(ErrorCode::ZeroInput, "zero polynomial has no leading term");
  Limb& top = limbs_.back();
  top &= ~(Limb{1} << (std::bit_width(top) - 1));
  normalize();
  return *this;
}

Gf2Poly& Gf2Poly::truncate_assign(std::size_t max_exponent) {
  const std::size_t keep = max_exponent / kBits + 1;
  if (keep > limbs_.size()) return *this;
  limbs_.resize(keep);
  const unsigned top_bits = static_cast<unsigned>(max_exponent % kBits) + 1;
  if (top_bits < kBits) limbs_.back() &= (Limb{1} << top_bits) - 1;
  normalize();
  return *this;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
  for (std::size_t i = 0; i < other.limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Gf2Poly& lhs, const Gf2Poly& rhs) noexcept {
  if (lhs.limbs_.size() != rhs.limbs_.size()) return lhs.limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Gf2PolyHash::operator()(const Gf2Poly& f) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (Limb l : f.limbs()) {
    h ^= l + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out = a;
  out += b;
  return out;
}

Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return Gf2Poly::zero();
  const auto la = a.limbs();
  const auto lb = b.limbs();
  std::vector<Limb> out(la.size() + lb.size(), 0);
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] == 0) continue;
    for (std::size_t j = 0; j < lb.size(); ++j) {
      const Wide prod = clmul64(la[i], lb[j]);
      out[i + j] ^= static_cast<Limb>(prod);
      out[i + j + 1] ^= static_cast<Limb>(prod >> kBits);
    }
  }
  return Gf2Poly::from_limbs(std::move(out));
}

Gf2Poly mul_x_plus_1(const Gf2Poly& f) {
  Gf2Poly out = f;
  out.mul_x_plus_1_assign();
  return out;
}

Gf2Poly shift_left(const Gf2Poly& f, std::size_t k) {
  Gf2Poly out = f;
  out.shift_left_assign(k);
  return out;
}

Gf2Poly div_x(const Gf2Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "div_x: zero polynomial");
  if (f.is_odd()) throw Error(ErrorCode::OddInput, "div_x: polynomial is odd, x does not divide it");
  Gf2Poly out = f;
  out.shift_right_assign(1);
  return out;
}

StripResult strip_x(const Gf2Poly& f) {
  if (f.is_zero()) return {Gf2Poly::zero(), 0};
  const std::size_t r = f.trailing_zeros();
  Gf2Poly g = f;
  g.shift_right_assign(r);
  return {std::move(g), r};
}

Gf2Poly reverse(const Gf2Poly& f) {
  if (f.is_zero()) return Gf2Poly::zero();
  const auto src = f.limbs();
  const std::size_t n = src.size();
  std::vector<Limb> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[n - 1 - i] = reverse_bits(src[i]);
  // The full-width reversal puts x^deg at bit n*64-1-deg; slide it down to 0.
  const std::size_t deg = f.degree().value();
  Gf2Poly out = Gf2Poly::from_limbs(std::move(rev));
  out.shift_right_assign(n * kBits - 1 - deg);
  return out;
}

Gf2Poly truncate(const Gf2Poly& f, std::size_t max_exponent) {
  Gf2Poly out = f;
  out.truncate_assign(max_exponent);
  return out;
}

Gf2Poly pow_x_plus_1(std::uint64_t k) {
  Gf2Poly acc = Gf2Poly::one();
  for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
    const std::size_t t = static_cast<std::size_t>(std::countr_zero(rest));
    // acc · (x^(2^t) + 1) = acc + x^(2^t)·acc
    acc += shift_left(acc, std::size_t{1} << t);
  }
  return acc;
}

std::vector<std::uint64_t> leading_terms_of_pow(std::uint64_t n, std::size_t how_many) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "leading_terms_of_pow: n must be at least 1");
  const int bits = std::popcount(n);
  if (bits < 64 && how_many > (std::uint64_t{1} << bits)) {
    throw Error(ErrorCode::InsufficientTerms,
                "(x+1)^" + std::to_string(n) + " has only " +
                    std::to_string(std::uint64_t{1} << bits) + " terms");
  }
  std::vector<std::uint64_t> out;
  out.reserve(how_many);
  // Submasks of n in decreasing order.
  std::uint64_t sub = n;
  while (out.size() < how_many) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & n;
  }
  return out;
}

}  // namespace polycollatz
