#include "polycollatz/fp_poly.hpp"

#include <cctype>
#include <map>

#include "polycollatz/error.hpp"

namespace polycollatz {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FpPoly::FpPoly(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument,
                "modulus " + std::to_string(p) + " is not a prime below 65536");
  }
}

FpPoly::FpPoly(std::uint32_t p, std::span<const std::int64_t> coeffs) : FpPoly(p) {
  coeffs_.reserve(coeffs.size());
  const auto m = static_cast<std::int64_t>(p);
  for (std::int64_t c : coeffs) coeffs_.push_back(static_cast<Residue>(((c % m) + m) % m));
  normalize();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) {
  const std::int64_t one[] = {c};
  return FpPoly(p, one);
}

FpPoly FpPoly::from_gf2(const Gf2Poly& f) {
  FpPoly out(2);
  if (f.is_zero()) return out;
  const std::size_t n = f.degree().value() + 1;
  out.coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = f.coeff(i) ? 1 : 0;
  return out;
}

Gf2Poly FpPoly::to_gf2() const {
  if (p_ != 2) throw Error(ErrorCode::InvalidArgument, "to_gf2 requires p = 2");
  std::vector<std::size_t> exps;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) exps.push_back(i);
  }
  return Gf2Poly::from_exponents(exps);
}

void FpPoly::normalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree FpPoly::degree() const noexcept {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(coeffs_.size() - 1);
}

FpPoly& FpPoly::mul_x_plus_1_assign() {
  if (coeffs_.empty()) return *this;
  coeffs_.push_back(0);
  for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
    coeffs_[i] = (coeffs_[i] + coeffs_[i - 1]) % p_;
  }
  normalize();
  return *this;
}

FpPoly& FpPoly::sub_constant_assign(Residue c) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  coeffs_[0] = (coeffs_[0] + p_ - c % p_) % p_;
  normalize();
  return *this;
}

FpPoly& FpPoly::div_x_assign() {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroInput, "div_x: zero polynomial");
  if (coeffs_[0] != 0) throw Error(ErrorCode::OddInput, "div_x: nonzero constant term");
  coeffs_.erase(coeffs_.begin());
  return *this;
}

std::size_t FpPolyHash::operator()(const FpPoly& f) const noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL ^ f.modulus();
  for (FpPoly::Residue c : f.coeffs()) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string format_fp(const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out.push_back('+');
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out.push_back('x');
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FpPoly parse_fp(std::uint32_t p, std::string_view text) {
  [[maybe_unused]] const FpPoly modulus_check(p);
  if (p == 2) {
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text.substr(start, 2) == "0x") {
      return FpPoly::from_gf2(parse_poly(text));
    }
  }
  std::string compact;
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact.push_back(text[i]);
    offsets.push_back(i);
  }
  auto fail = [&](std::size_t at, const std::string& what) -> void {
    const std::size_t off = at < offsets.size() ? offsets[at] : text.size();
    throw Error(ErrorCode::SyntaxError,
                "syntax error at byte " + std::to_string(off) + ": " + what, off);
  };
  if (compact.empty()) fail(0, "empty polynomial");

  auto read_uint = [&](std::size_t& pos, std::uint64_t limit) {
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(compact[pos] - '0');
      if (v > limit) fail(start, "number too large");
      ++pos;
    }
    if (pos == start) fail(pos, "expected an unsigned integer");
    return v;
  };

  std::map<std::size_t, std::int64_t> terms;
  std::size_t pos = 0;
  while (true) {
    std::uint64_t coeff = 1;
    bool has_coeff = false;
    if (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
      coeff = read_uint(pos, std::uint64_t{1} << 40);
      has_coeff = true;
      if (pos < compact.size() && compact[pos] == '*') ++pos;
    }
    std::size_t exponent = 0;
    if (pos < compact.size() && compact[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < compact.size() && compact[pos] == '^') {
        ++pos;
        exponent = static_cast<std::size_t>(read_uint(pos, (1u << 20)));
      }
    } else if (!has_coeff) {
      fail(pos, "expected a term");
    }
    terms[exponent] += static_cast<std::int64_t>(coeff % p);
    if (pos == compact.size()) break;
    if (compact[pos] != '+') fail(pos, "expected '+'");
    ++pos;
  }
  std::vector<std::int64_t> coeffs(terms.rbegin()->first + 1, 0);
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return FpPoly(p, coeffs);
}

void for_each_fp_of_degree(std::uint32_t p, std::size_t d,
                           const std::function<void(const FpPoly&)>& visit) {
  [[maybe_unused]] const FpPoly modulus_check(p);
  std::vector<std::int64_t> coeffs(d + 1, 0);
  coeffs[d] = 1;
  while (true) {
    visit(FpPoly(p, coeffs));
    // Odometer over coefficients 0..d-1, then the leading one over 1..p-1.
    std::size_t i = 0;
    while (i <= d) {
      const std::int64_t low = (i == d) ? 1 : 0;
      if (++coeffs[i] < static_cast<std::int64_t>(p)) break;
      coeffs[i] = low;
      ++i;
    }
    if (i > d) return;
  }
}

}  // namespace polycollatz
