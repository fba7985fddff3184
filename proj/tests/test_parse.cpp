#include <doctest.h>

#include "oracles.hpp"
#include "polycollatz/error.hpp"
#include "polycollatz/gf2_poly.hpp"

using namespace polycollatz;

namespace {

Error error_of(std::string_view text) {
  try {
    (void)parse_poly(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error for ", text);
  return Error(ErrorCode::InvalidArgument, "unreachable");
}

}  // namespace

TEST_CASE("symbolic parse") {
  CHECK(parse_poly("x^2+1") == Gf2Poly::from_word(0b101));
  CHECK(parse_poly("1+x^2") == Gf2Poly::from_word(0b101));
  CHECK(parse_poly("x") == Gf2Poly::x());
  CHECK(parse_poly("1") == Gf2Poly::one());
  CHECK(parse_poly("x^0") == Gf2Poly::one());
  CHECK(parse_poly("x^1+x^200") == Gf2Poly::from_exponents(std::vector<std::size_t>{1, 200}));
  CHECK(parse_poly(" x ^ 3 +\tx + 1 ") == Gf2Poly::from_word(0b1011));
  CHECK(parse_poly("0").is_zero());
}

TEST_CASE("hex parse") {
  CHECK(parse_poly("0x25") == parse_poly("x^5+x^2+1"));
  CHECK(parse_poly("0X1f") == Gf2Poly::from_word(0x1F));
  CHECK(parse_poly("0x0").is_zero());
  CHECK(parse_poly("0x000000000000000000000001") == Gf2Poly::one());
  CHECK(parse_poly("0x10000000000000000") == Gf2Poly::monomial(64));
}

TEST_CASE("parse errors carry codes and byte offsets") {
  const auto dup = error_of("x^2+x^2");
  CHECK(dup.code() == ErrorCode::DuplicateTerm);
  CHECK(dup.offset() == 4);
  CHECK(error_of("x^1+x").code() == ErrorCode::DuplicateTerm);
  CHECK(error_of("1+x^0").code() == ErrorCode::DuplicateTerm);

  const auto bad = error_of("x^2+y");
  CHECK(bad.code() == ErrorCode::SyntaxError);
  CHECK(bad.offset() == 4);
  CHECK(error_of("").code() == ErrorCode::SyntaxError);
  CHECK(error_of("x^").code() == ErrorCode::SyntaxError);
  CHECK(error_of("x^2+").code() == ErrorCode::SyntaxError);
  CHECK(error_of("x x").code() == ErrorCode::SyntaxError);
  CHECK(error_of("2x").code() == ErrorCode::SyntaxError);
  CHECK(error_of("0x").code() == ErrorCode::SyntaxError);
  const auto hex = error_of("0x1g");
  CHECK(hex.code() == ErrorCode::SyntaxError);
  CHECK(hex.offset() == 3);
  CHECK(error_of("x^99999999999999999999").code() == ErrorCode::SyntaxError);
  CHECK(error_of("01").code() == ErrorCode::SyntaxError);
}

TEST_CASE("format") {
  CHECK(format_poly(parse_poly("1+x^2+x^5")) == "x^5+x^2+1");
  CHECK(format_poly(parse_poly("x+1")) == "x+1");
  CHECK(format_poly(Gf2Poly::zero()) == "0");
  CHECK(to_hex(parse_poly("x^5+x^2+1")) == "0x25");
  CHECK(to_hex(Gf2Poly::zero()) == "0x0");
  CHECK(to_hex(Gf2Poly::monomial(64)) == "0x10000000000000000");
}

TEST_CASE("round trip through both styles") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto f = oracle::random_poly(rng, 300);
    REQUIRE(parse_poly(format_poly(f, PolyStyle::Symbolic)) == f);
    REQUIRE(parse_poly(format_poly(f, PolyStyle::Hex)) == f);
  }
}

TEST_CASE("hex encodings of equal length sort like the polynomials") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_poly(rng, 40);
    auto g = oracle::random_poly(rng, 40);
    f.truncate_assign(39);
    g.truncate_assign(39);
    f.toggle(40);
    g.toggle(40);
    CHECK((to_hex(f) < to_hex(g)) == (f < g));
  }
}
