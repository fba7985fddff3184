#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

#include "polycollatz/error.hpp"
#include "polycollatz/gf2_poly.hpp"

namespace polycollatz {
namespace {

// Caps the allocation a single term can force.
constexpr std::size_t kMaxExponent = (std::size_t{1} << 26) - 1;

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                "syntax error at byte " + std::to_string(pos_) + ": " + what, pos_);
  }

  std::size_t read_uint() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an unsigned integer");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Gf2Poly parse_hex(std::string_view text, std::size_t digits_begin) {
  // Collect digits (whitespace ignored), least significant first.
  std::vector<std::pair<int, std::size_t>> digits;
  for (std::size_t i = digits_begin; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const int v = hex_value(c);
    if (v < 0) {
      throw Error(ErrorCode::SyntaxError,
                  "syntax error at byte " + std::to_string(i) + ": invalid hex digit", i);
    }
    digits.emplace_back(v, i);
  }
  if (digits.empty()) {
    throw Error(ErrorCode::SyntaxError,
                "syntax error at byte " + std::to_string(text.size()) + ": expected hex digits",
                text.size());
  }
  std::vector<Gf2Poly::Limb> limbs((digits.size() + 15) / 16, 0);
  std::size_t nibble = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, ++nibble) {
    limbs[nibble / 16] |= static_cast<Gf2Poly::Limb>(it->first) << (4 * (nibble % 16));
  }
  return Gf2Poly::from_limbs(std::move(limbs));
}

}  // namespace

Gf2Poly parse_poly(std::string_view text) {
  Scanner s(text);
  if (s.at_end()) s.fail("empty polynomial");

  const std::size_t first = s.pos();
  if (text[first] == '0') {
    s.advance();
    const char next = s.peek();
    if (next == 'x' || next == 'X') return parse_hex(text, s.pos() + 1);
    if (s.at_end()) return Gf2Poly::zero();
    s.fail("unexpected character after '0'");
  }

  std::vector<std::size_t> exponents;
  std::unordered_set<std::size_t> seen;
  while (true) {
    const char c = s.peek();
    const std::size_t term_start = s.pos();
    std::size_t exponent = 0;
    if (c == '1') {
      s.advance();
      exponent = 0;
    } else if (c == 'x') {
      s.advance();
      if (s.peek() == '^') {
        s.advance();
        exponent = s.read_uint();
      } else {
        exponent = 1;
      }
    } else if (c == '\0') {
      s.fail("expected a term");
    } else {
      s.fail(std::string("unexpected character '") + c + "'");
    }
    if (!seen.insert(exponent).second) {
      throw Error(ErrorCode::DuplicateTerm,
                  "duplicate term x^" + std::to_string(exponent) + " at byte " +
                      std::to_string(term_start),
                  term_start);
    }
    exponents.push_back(exponent);
    if (s.at_end()) break;
    if (s.peek() != '+') s.fail("expected '+'");
    s.advance();
  }
  return Gf2Poly::from_exponents(exponents);
}

std::string format_poly(const Gf2Poly& f, PolyStyle style) {
  if (style == PolyStyle::Hex) {
    if (f.is_zero()) return "0x0";
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    const auto limbs = f.limbs();
    for (std::size_t i = limbs.size(); i-- > 0;) {
      for (int nib = 15; nib >= 0; --nib) {
        const auto v = static_cast<unsigned>((limbs[i] >> (4 * nib)) & 0xF);
        if (out.empty() && v == 0) continue;
        out.push_back(kDigits[v]);
      }
    }
    return "0x" + out;
  }

  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t e : f.exponents()) {
    if (!out.empty()) out.push_back('+');
    if (e == 0) {
      out.push_back('1');
    } else if (e == 1) {
      out.push_back('x');
    } else {
      out += "x^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace polycollatz
