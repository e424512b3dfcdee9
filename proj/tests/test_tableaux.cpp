#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "grothkit/idcox.hpp"
#include "grothkit/shapes.hpp"
#include "grothkit/tableaux.hpp"
#include "grothkit/verify.hpp"

using namespace grothkit;

namespace {

Symbol sym(Symbol::Kind kind, int index) { return Symbol{kind, index}; }

Filling make_filling(std::vector<std::pair<Box, std::vector<Symbol>>> cells) {
  Filling f;
  for (auto& [box, syms] : cells) {
    std::sort(syms.begin(), syms.end());
    f.cells[box] = syms;
  }
  return f;
}

std::vector<SignedPermutation> factors_from_words(Family fam, int n,
                                                  const std::vector<std::string>& words) {
  std::vector<SignedPermutation> out;
  for (const std::string& w : words)
    out.push_back(SignedPermutation::from_word(fam, n, Word::parse(w)));
  return out;
}

constexpr auto P = Symbol::Kind::Prime;
constexpr auto B = Symbol::Kind::Bar;
constexpr auto N = Symbol::Kind::Plain;
constexpr auto DP = Symbol::Kind::DPrime;

}  // namespace

TEST_CASE("symbol order and rendering") {
  // (n-1)' < ... < 1' < 1~ < 1 < 2~ < 2 < ... < 1'' < 2''
  CHECK(sym(P, 2) < sym(P, 1));
  CHECK(sym(P, 1) < sym(B, 1));
  CHECK(sym(B, 1) < sym(N, 1));
  CHECK(sym(N, 1) < sym(B, 2));
  CHECK(sym(N, 2) < sym(DP, 1));
  CHECK(sym(DP, 1) < sym(DP, 2));
  CHECK(sym(P, 3).str() == "3'");
  CHECK(sym(B, 1).str() == "1~");
  CHECK(sym(Symbol::Kind::BarCirc, 1).str() == "1~o");
  CHECK(sym(Symbol::Kind::PlainCirc, 2).str() == "2o");
  CHECK(sym(DP, 2).str() == "2''");
}

TEST_CASE("bitableaux of a single box") {
  ShapeRecord lam = ShapeRecord::make(Family::A, 1, {1});
  ShapeRecord mu = ShapeRecord::make(Family::A, 1, {});
  EnumParams p;
  p.n = 2;
  auto chains = enumerate_tableaux(Flavor::Bitableau, lam, mu, p);
  REQUIRE(chains.size() == 3);
  std::set<std::string> fillings;
  for (const auto& c : chains) fillings.insert(c.filling().render(lam, mu));
  CHECK(fillings == std::set<std::string>{"{1'}", "{1}", "{1',1}"});
  CHECK(theorem_rhs(Flavor::Bitableau, lam, mu, p).str() == "x1 + y1 + b*x1*y1");
  // the independent filling enumeration agrees
  BitableauDirect direct = enumerate_bitableaux_direct(lam, mu, 2);
  CHECK(direct.count == 3);
  CHECK(direct.sum == theorem_rhs(Flavor::Bitableau, lam, mu, p));
}

TEST_CASE("barred k-tableaux of exCtab") {
  ShapeRecord lam = ShapeRecord::make(Family::C, 1, {3, 1});
  ShapeRecord mu = ShapeRecord::make(Family::C, 1, {});
  EnumParams p;
  p.nz = 2;
  auto barred = enumerate_tableaux(Flavor::BarredK, lam, mu, p);
  CHECK(barred.size() == 16);
  CHECK(theorem_rhs(Flavor::BarredK, lam, mu, p).str() ==
        "4*z1^3*z2 + 8*z1^2*z2^2 + 4*z1*z2^3");
  // full set-valued sum equals the Stanley oracle and collapses at beta = 0
  Poly tab = theorem_rhs(Flavor::KTableau, lam, mu, p);
  SignedPermutation w = skew_element(lam, mu, 3);
  CHECK(tab == stanley(w, 2));
  CHECK(tab.at_beta_zero() == theorem_rhs(Flavor::BarredK, lam, mu, p));
}

TEST_CASE("barred typed tableaux of exDtab") {
  ShapeRecord mu = ShapeRecord::make(Family::D, 1, {}, 0);
  EnumParams p;
  p.nz = 2;
  for (int type : {1, 2}) {
    ShapeRecord lam = ShapeRecord::make(Family::D, 1, {3, 1}, type);
    auto barred = enumerate_tableaux(Flavor::BarredTypedK, lam, mu, p);
    CHECK(barred.size() == 4);
    CHECK(theorem_rhs(Flavor::BarredTypedK, lam, mu, p).str() ==
          "z1^3*z2 + 2*z1^2*z2^2 + z1*z2^3");
    Poly tab = theorem_rhs(Flavor::TypedKTableau, lam, mu, p);
    CHECK(tab == stanley(skew_element(lam, mu, 3), 2));
  }
  // one of the displayed type-2 barred tableaux, circles included
  ShapeRecord lam2 = ShapeRecord::make(Family::D, 1, {3, 1}, 2);
  Filling fixture = make_filling({
      {{1, 1}, {sym(Symbol::Kind::BarCirc, 1)}},
      {{1, 2}, {sym(N, 1)}},
      {{1, 3}, {sym(N, 1)}},
      {{2, 1}, {sym(Symbol::Kind::PlainCirc, 2)}},
  });
  TableauChain chain = chain_from_filling(Flavor::BarredTypedK, lam2, mu, p, fixture);
  auto sigma = hecke_correspondence(chain);
  auto expected = factors_from_words(Family::D, 3, {"B", "2,1", "", "1"});
  // sigma_1 = s_box, sigma_2 = s_2 s_1, sigma_3 = 1, sigma_4 = s_1
  CHECK(sigma == expected);
}

TEST_CASE("the 10-factor k-tableau of shape (5,3,1)") {
  ShapeRecord lam = ShapeRecord::make(Family::C, 1, {5, 3, 1});
  ShapeRecord mu = ShapeRecord::make(Family::C, 1, {});
  EnumParams p;
  p.nz = 5;
  Filling fixture = make_filling({
      {{1, 1}, {sym(N, 1)}},
      {{1, 2}, {sym(B, 2), sym(N, 2)}},
      {{1, 3}, {sym(N, 2)}},
      {{1, 4}, {sym(B, 3), sym(N, 3), sym(N, 4)}},
      {{1, 5}, {sym(N, 4), sym(N, 5)}},
      {{2, 1}, {sym(N, 1), sym(B, 2)}},
      {{2, 2}, {sym(N, 3), sym(N, 5)}},
      {{2, 3}, {sym(N, 5)}},
      {{3, 1}, {sym(N, 2), sym(B, 3)}},
  });
  TableauChain chain = chain_from_filling(Flavor::KTableau, lam, mu, p, fixture);
  CHECK(Poly::term(chain.weight(), BigInt(1)).str() == "z1^2*z2^5*z3^4*z4^2*z5^3");
  CHECK(chain.beta_size() == 16);
  auto sigma = hecke_correspondence(chain);
  auto expected = factors_from_words(
      Family::C, 4,
      {"", "2,1", "0,2", "3,1,0", "2,3", "2,0", "", "3,2", "", "3,1,0"});
  CHECK(sigma == expected);
}

TEST_CASE("the two type C tritableaux of shape (4,2)") {
  ShapeRecord lam = ShapeRecord::make(Family::C, 1, {4, 2});
  ShapeRecord mu = ShapeRecord::make(Family::C, 1, {});
  EnumParams p;
  p.n = 3;
  p.nz = 2;
  Filling first = make_filling({
      {{1, 1}, {sym(P, 1)}},
      {{1, 2}, {sym(B, 1), sym(N, 1)}},
      {{1, 3}, {sym(N, 1)}},
      {{1, 4}, {sym(N, 1), sym(B, 2), sym(DP, 1)}},
      {{2, 1}, {sym(P, 1), sym(B, 1)}},
      {{2, 2}, {sym(B, 2)}},
  });
  TableauChain c1 = chain_from_filling(Flavor::KTritableau, lam, mu, p, first);
  CHECK(Poly::term(c1.weight(), BigInt(1)).str() == "x1^2*y1*z1^5*z2^2");
  auto sigma1 = hecke_correspondence(c1);
  CHECK(sigma1 == factors_from_words(Family::C, 3,
                                     {"", "2,1", "0,2", "2,1,0", "0,2", "", "2", ""}));
  Filling second = make_filling({
      {{1, 1}, {sym(P, 1), sym(B, 1)}},
      {{1, 2}, {sym(B, 1), sym(N, 1)}},
      {{1, 3}, {sym(N, 1)}},
      {{1, 4}, {sym(N, 1), sym(B, 2), sym(DP, 1), sym(DP, 2)}},
      {{2, 1}, {sym(B, 2)}},
      {{2, 2}, {sym(B, 2)}},
  });
  TableauChain c2 = chain_from_filling(Flavor::KTritableau, lam, mu, p, second);
  CHECK(Poly::term(c2.weight(), BigInt(1)).str() == "x1*y1*y2*z1^5*z2^3");
  auto sigma2 = hecke_correspondence(c2);
  CHECK(sigma2 == factors_from_words(Family::C, 3,
                                     {"", "1", "0,1", "2,1,0", "0,1,2", "", "2", "2"}));
  // both monomials occur in the full tritableau sum with the right beta powers
  Poly rhs = theorem_rhs(Flavor::KTritableau, lam, mu, p);
  SignedPermutation w = skew_element(lam, mu, 3);
  CHECK(rhs == grothendieck(w, 2, 2, 2));
}

TEST_CASE("the two type D tritableaux of shape (4,2)") {
  ShapeRecord lam = ShapeRecord::make(Family::D, 1, {4, 2}, 0);
  ShapeRecord mu = ShapeRecord::make(Family::D, 1, {}, 0);
  EnumParams p;
  p.n = 4;
  p.nz = 2;
  Filling first = make_filling({
      {{1, 1}, {sym(P, 1)}},
      {{1, 2}, {sym(B, 1), sym(B, 2)}},
      {{1, 3}, {sym(N, 2)}},
      {{1, 4}, {sym(N, 2), sym(DP, 1), sym(DP, 2)}},
      {{2, 1}, {sym(P, 1), sym(B, 1)}},
      {{2, 2}, {sym(DP, 1)}},
  });
  TableauChain c1 = chain_from_filling(Flavor::TypedKTritableau, lam, mu, p, first);
  CHECK(Poly::term(c1.weight(), BigInt(1)).str() == "x1^2*y1^2*y2*z1^2*z2^3");
  auto sigma1 = hecke_correspondence(c1);
  CHECK(sigma1 == factors_from_words(
                      Family::D, 4, {"", "", "2,1", "B,2", "", "B", "3,2", "1,3", "3", ""}));
  Filling second = make_filling({
      {{1, 1}, {sym(P, 1)}},
      {{1, 2}, {sym(B, 1), sym(N, 1)}},
      {{1, 3}, {sym(N, 1)}},
      {{1, 4}, {sym(N, 1), sym(B, 2), sym(N, 2)}},
      {{2, 1}, {sym(B, 2)}},
      {{2, 2}, {sym(N, 2), sym(DP, 1)}},
  });
  TableauChain c2 = chain_from_filling(Flavor::TypedKTritableau, lam, mu, p, second);
  CHECK(Poly::term(c2.weight(), BigInt(1)).str() == "x1*y1*z1^4*z2^4");
  auto sigma2 = hecke_correspondence(c2);
  CHECK(sigma2 == factors_from_words(
                      Family::D, 4, {"", "", "1", "B", "3,2,1", "B,3", "3,1", "1", "", ""}));
  Poly rhs = theorem_rhs(Flavor::TypedKTritableau, lam, mu, p);
  CHECK(rhs == grothendieck(skew_element(lam, mu, 4), 3, 3, 2));
}

TEST_CASE("empty shapes and trivial cases") {
  ShapeRecord lam = ShapeRecord::make(Family::C, 1, {2});
  EnumParams p;
  p.nz = 0;
  CHECK(theorem_rhs(Flavor::KTableau, lam, lam, p).is_one());
  CHECK(enumerate_tableaux(Flavor::KTableau, lam, lam, p).size() == 1);
  p.nz = 2;
  CHECK(theorem_rhs(Flavor::KTableau, lam, lam, p).is_one());
  CHECK_THROWS_AS(
      theorem_rhs(Flavor::KTableau, ShapeRecord::make(Family::C, 1, {3, 1}),
                  ShapeRecord::make(Family::C, 1, {3}), p),
      IncompatiblePairError);
}

TEST_CASE("chain filling consistency and deterministic order") {
  ShapeRecord lam = ShapeRecord::make(Family::C, 1, {3, 1});
  ShapeRecord mu = ShapeRecord::make(Family::C, 1, {});
  EnumParams p;
  p.nz = 2;
  auto chains = enumerate_tableaux(Flavor::KTableau, lam, mu, p);
  const int skew = lam.size() - mu.size();
  for (const auto& c : chains) {
    Filling f = c.filling();
    // weight and size recomputed from the filling agree with the chain
    int total = 0;
    Monomial m;
    std::map<int, int> z_count;
    for (const auto& [box, syms] : f.cells) {
      total += static_cast<int>(syms.size());
      for (const Symbol& s : syms) z_count[s.index]++;
    }
    CHECK(total == c.beta_size());
    for (const auto& [h, count] : z_count)
      CHECK(c.weight().exponent(VarId::z(h)) == static_cast<uint32_t>(count));
    CHECK(c.beta_size() >= skew);
    // every box of the skew shape is filled
    CHECK(f.cells.size() == skew_boxes(lam, mu).size());
  }
  // enumeration order is deterministic: sorted by concatenated part sequences
  auto again = enumerate_tableaux(Flavor::KTableau, lam, mu, p);
  REQUIRE(chains.size() == again.size());
  for (size_t i = 0; i < chains.size(); ++i) {
    CHECK(chains[i].lambda_chain == again[i].lambda_chain);
    CHECK(chains[i].nu_chain == again[i].nu_chain);
  }
}

TEST_CASE("hecke correspondence is injective with the factorization count") {
  EnumParams p;
  p.nz = 2;
  for (auto [fam, parts, type] :
       {std::tuple{Family::C, std::vector<int>{3, 1}, 0},
        std::tuple{Family::C, std::vector<int>{4, 1}, 0},
        std::tuple{Family::D, std::vector<int>{3, 1}, 2}}) {
    ShapeRecord lam = ShapeRecord::make(fam, 1, parts, type);
    ShapeRecord mu = ShapeRecord::make(fam, 1, {}, 0);
    Flavor flavor = fam == Family::D ? Flavor::TypedKTableau : Flavor::KTableau;
    CheckResult r = check_hecke_bijection(flavor, lam, mu, p);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("stable grothendieck matches the operator limit") {
  ShapeRecord lam1 = ShapeRecord::make(Family::A, 1, {1});
  ShapeRecord mu0 = ShapeRecord::make(Family::A, 1, {});
  CHECK(skew_stable_grothendieck_A(lam1, mu0, 1, 1).str() == "x1 + y1 + b*x1*y1");
  for (auto [lp, mp, m] : {std::tuple{std::vector<int>{2, 1}, std::vector<int>{1}, 2},
                           std::tuple{std::vector<int>{2, 1}, std::vector<int>{}, 2},
                           std::tuple{std::vector<int>{3, 1}, std::vector<int>{1}, 2}}) {
    ShapeRecord lam = ShapeRecord::make(Family::A, m, lp);
    ShapeRecord mu = ShapeRecord::make(Family::A, m, mp);
    for (int nx : {1, 2})
      for (int ny : {0, 1}) {
        int n = std::max(min_window(lam), min_window(mu)) + nx + ny;  // stable regime
        SignedPermutation w = skew_element(lam, mu, n);
        Poly oracle = mixed_stanley(w, nx, ny, 0);
        CHECK(skew_stable_grothendieck_A(lam, mu, nx, ny) == oracle);
      }
  }
}

TEST_CASE("mixed stanley tableau sums match the oracle") {
  // type C at k = 0 and k = 1, type D at k = 1, small truncations
  for (auto [fam, k, parts, type] : {std::tuple{Family::C, 0, std::vector<int>{1}, 0},
                                     std::tuple{Family::C, 1, std::vector<int>{3, 1}, 0},
                                     std::tuple{Family::B, 1, std::vector<int>{2}, 0},
                                     std::tuple{Family::D, 1, std::vector<int>{1}, 1},
                                     std::tuple{Family::D, 1, std::vector<int>{3, 1}, 2}}) {
    ShapeRecord lam = ShapeRecord::make(fam, k, parts, type);
    ShapeRecord mu = ShapeRecord::make(fam, k, {}, 0);
    int n = std::max(min_window(lam), 2) + 2;  // room for the stable x/y letters
    SignedPermutation w = skew_element(lam, mu, n);
    for (int nx : {0, 1})
      for (int ny : {0, 1}) {
        Poly oracle = mixed_stanley(w, nx, ny, 2);
        CHECK(mixed_stanley_rhs(lam, mu, nx, ny, 2) == oracle);
      }
  }
}

TEST_CASE("filling render shows inner boxes as dots") {
  ShapeRecord lam = ShapeRecord::make(Family::C, 1, {4, 1});
  ShapeRecord mu = ShapeRecord::make(Family::C, 1, {3});
  EnumParams p;
  p.nz = 1;
  auto chains = enumerate_tableaux(Flavor::KTableau, lam, mu, p);
  REQUIRE(!chains.empty());
  std::string text = chains[0].filling().render(lam, mu);
  CHECK(text.substr(0, 6) == ". . . ");
}
