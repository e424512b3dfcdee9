#include "doctest.h"

#include "grothkit/bigint.hpp"
#include "grothkit/poly.hpp"

using namespace grothkit;

namespace {

uint64_t lcg(uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 16;
}

Poly random_poly(uint64_t& rng) {
  Poly p;
  int terms = static_cast<int>(lcg(rng) % 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::var(VarId::beta(), lcg(rng) % 2)
                     .times(Monomial::var(VarId::x(1), lcg(rng) % 3))
                     .times(Monomial::var(VarId::z(1 + lcg(rng) % 2), lcg(rng) % 3));
    long long c = static_cast<long long>(lcg(rng) % 7) - 3;
    p += Poly::term(m, BigInt(c));
  }
  return p;
}

}  // namespace

TEST_CASE("bigint arithmetic and printing") {
  CHECK(BigInt(0).str() == "0");
  CHECK(BigInt(-12345).str() == "-12345");
  CHECK((BigInt(1000000007) * BigInt(998244353)).str() == "998244359987710471");
  BigInt big = BigInt(1);
  for (int i = 0; i < 30; ++i) big *= BigInt(1000000000);
  CHECK(big.str() == "1" + std::string(270, '0'));
  CHECK(BigInt::parse(big.str()) == big);
  CHECK(BigInt::parse("-42") == BigInt(-42));
  CHECK(BigInt(7) - BigInt(7) == BigInt(0));
  CHECK(BigInt(-3) < BigInt(2));
  CHECK(BigInt(1) + BigInt(-4) == BigInt(-3));
  CHECK(BigInt(123456789).fits_int64());
  CHECK_FALSE(big.fits_int64());
}

TEST_CASE("poly identities from the module contract") {
  Poly p = Poly::variable(VarId::z(1)).times_var(VarId::z(1)) * Poly::constant(BigInt(2));
  CHECK((Poly::zero() + p) == p);
  Poly two_z1 = Poly::variable(VarId::z(1)) * Poly::constant(BigInt(2));
  Poly bz1sq = Poly::variable(VarId::beta()).times_var(VarId::z(1), 2);
  CHECK((two_z1 + bz1sq).str() == "2*z1 + b*z1^2");
  CHECK((Poly::variable(VarId::x(1)) + Poly::variable(VarId::x(1)).negated()).is_zero());
  CHECK((Poly::one() * p) == p);
  CHECK((Poly::variable(VarId::z(1)) * Poly::variable(VarId::z(1))).str() == "z1^2");
  Poly x1y1 = Poly::variable(VarId::x(1)) + Poly::variable(VarId::y(1));
  CHECK((x1y1 * Poly::variable(VarId::beta())).str() == "b*x1 + b*y1");
}

TEST_CASE("substitution") {
  Poly p = Poly::parse("2*z1 + b*z1^2");
  CHECK(p.at_beta_zero().str() == "2*z1");
  Poly q = Poly::parse("x1 + y1 + b*x1*y1");
  CHECK(q.substitute({{VarId::y(1), Poly::zero()}}).str() == "x1");
  Poly r = Poly::parse("x1^2");
  Poly s = r.substitute({{VarId::x(1), Poly::parse("y1 + 1")}});
  CHECK(s == Poly::parse("1 + 2*y1 + y1^2"));
}

TEST_CASE("canonical order matches the printed fixtures") {
  CHECK(Poly::parse("8*z1^2*z2^2 + 4*z1*z2^3 + 4*z1^3*z2").str() ==
        "4*z1^3*z2 + 8*z1^2*z2^2 + 4*z1*z2^3");
  CHECK(Poly::parse("b*z1*z2 + z2 + z1").str() == "z1 + z2 + b*z1*z2");
  CHECK(Poly::parse("y1 + b*x1*y1 + x1").str() == "x1 + y1 + b*x1*y1");
}

TEST_CASE("ring axioms on random polynomials") {
  uint64_t rng = 12345;
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("parse print roundtrip") {
  uint64_t rng = 999;
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(rng);
    CHECK(Poly::parse(p.str()) == p);
  }
  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly::parse("-x1 + 3").str() == "3 - x1");
  CHECK(Poly::parse(Poly::parse("3 - x1").str()) == Poly::parse("-x1 + 3"));
}
