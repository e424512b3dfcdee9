// Acceptance suite: exact-equality checks of the worked-example fixtures, the
// theorem sweeps, the structural-proposition sweeps, the algebra sanity
// checks and the CLI golden outputs. Prints one line per criterion and exits
// nonzero if any of them fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grothkit/idcox.hpp"
#include "grothkit/shapes.hpp"
#include "grothkit/tableaux.hpp"
#include "grothkit/verify.hpp"

using namespace grothkit;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

void report(const std::string& name, bool pass, const std::string& detail = "") {
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cout << (pass ? "PASS" : "FAIL") << " " << name << "  [" << elapsed << "s]\n";
  if (!pass) {
    ++failures;
    if (!detail.empty()) std::cout << "     " << detail << "\n";
  }
  std::cout.flush();
}

void report(const CheckResult& r) {
  report(r.name + " (" + std::to_string(r.cases) + " cases)", r.pass, r.detail);
}

struct CliResult {
  int status;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(GROTHKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult res{-1, ""};
  if (!pipe) return res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

ShapeRecord shape(Family f, int k, std::vector<int> parts, int type = 0) {
  return ShapeRecord::make(f, k, std::move(parts), type);
}

void criterion_1_fixtures() {
  // 1a
  SignedPermutation s1a = SignedPermutation::parse(Family::A, "2,1");
  report("1a: AG_{s_1}(X,Y) = x1 + y1 + b*x1*y1",
         grothendieck(s1a, 1, 1, 0).str() == "x1 + y1 + b*x1*y1");

  // 1b
  bool b_ok = stanley(SignedPermutation::parse(Family::C, "-1"), 1).str() == "2*z1 + b*z1^2";
  b_ok = b_ok &&
         stanley(SignedPermutation::parse(Family::B, "-1"), 2).str() == "z1 + z2 + b*z1*z2";
  b_ok = b_ok && stanley(SignedPermutation::parse(Family::D, "-2,-1"), 2).str() ==
                     "z1 + z2 + b*z1*z2";
  {
    Poly dg = grothendieck(SignedPermutation::parse(Family::D, "2,1"), 1, 1, 2);
    Poly expected;
    for (int mask = 1; mask < 16; ++mask) {
      Monomial m;
      int size = 0;
      if (mask & 1) m = m.times(Monomial::var(VarId::x(1))), ++size;
      if (mask & 2) m = m.times(Monomial::var(VarId::y(1))), ++size;
      if (mask & 4) m = m.times(Monomial::var(VarId::z(1))), ++size;
      if (mask & 8) m = m.times(Monomial::var(VarId::z(2))), ++size;
      expected += Poly::term(m.times(Monomial::var(VarId::beta(), size - 1)), BigInt(1));
    }
    b_ok = b_ok && dg == expected;
  }
  report("1b: length-one Grothendieck fixtures (CG_{s_0}, BG_{s_0}, DG_{s_box}, DG_{s_1})",
         b_ok);

  // 1c
  {
    ShapeRecord lam = shape(Family::C, 1, {3, 1});
    ShapeRecord mu = shape(Family::C, 1, {});
    EnumParams p;
    p.nz = 2;
    bool ok = stanley(skew_element(lam, mu, 3), 2).at_beta_zero().str() ==
              "4*z1^3*z2 + 8*z1^2*z2^2 + 4*z1*z2^3";
    ok = ok && enumerate_tableaux(Flavor::BarredK, lam, mu, p).size() == 16;
    report("1c: F^C at beta=0 for (3,1), k=1 and the 16 barred 1-tableaux", ok);
  }

  // 1d
  {
    bool ok = true;
    EnumParams p;
    p.nz = 2;
    for (int type : {1, 2}) {
      ShapeRecord lam = shape(Family::D, 1, {3, 1}, type);
      ShapeRecord mu = shape(Family::D, 1, {}, 0);
      ok = ok && stanley(skew_element(lam, mu, 3), 2).at_beta_zero().str() ==
                     "z1^3*z2 + 2*z1^2*z2^2 + z1*z2^3";
      ok = ok && enumerate_tableaux(Flavor::BarredTypedK, lam, mu, p).size() == 4;
    }
    report("1d: E^D at beta=0 for both types of (3,1) and the 4+4 barred tableaux", ok);
  }

  // 1e
  {
    ShapeRecord lam = shape(Family::C, 1, {5, 3, 1});
    ShapeRecord mu = shape(Family::C, 1, {});
    EnumParams p;
    p.nz = 5;
    auto sym = [](Symbol::Kind kind, int i) { return Symbol{kind, i}; };
    auto bar = [&](int i) { return sym(Symbol::Kind::Bar, i); };
    auto pl = [&](int i) { return sym(Symbol::Kind::Plain, i); };
    Filling fixture;
    fixture.cells[{1, 1}] = {pl(1)};
    fixture.cells[{1, 2}] = {bar(2), pl(2)};
    fixture.cells[{1, 3}] = {pl(2)};
    fixture.cells[{1, 4}] = {bar(3), pl(3), pl(4)};
    fixture.cells[{1, 5}] = {pl(4), pl(5)};
    fixture.cells[{2, 1}] = {pl(1), bar(2)};
    fixture.cells[{2, 2}] = {pl(3), pl(5)};
    fixture.cells[{2, 3}] = {pl(5)};
    fixture.cells[{3, 1}] = {pl(2), bar(3)};
    for (auto& [box, syms] : fixture.cells) std::sort(syms.begin(), syms.end());
    bool ok = true;
    std::string detail;
    try {
      TableauChain chain = chain_from_filling(Flavor::KTableau, lam, mu, p, fixture);
      ok = Poly::term(chain.weight(), BigInt(1)).str() == "z1^2*z2^5*z3^4*z4^2*z5^3" &&
           chain.beta_size() == 16;
      std::vector<SignedPermutation> sigma = hecke_correspondence(chain);
      std::vector<std::string> words = {"",    "2,1", "0,2", "3,1,0", "2,3",
                                        "2,0", "",    "3,2", "",      "3,1,0"};
      for (int i = 0; i < 10 && ok; ++i)
        ok = sigma[i] == SignedPermutation::from_word(Family::C, 4, Word::parse(words[i]));
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report("1e: the (5,3,1) set-valued 1-tableau and its 10-factor Hecke factorization", ok,
           detail);
  }

  // 1f
  {
    bool ok = true;
    std::string detail;
    try {
      auto sym = [](Symbol::Kind kind, int i) { return Symbol{kind, i}; };
      auto find_weight = [&](Flavor flavor, const ShapeRecord& lam, const ShapeRecord& mu,
                             const EnumParams& p, Filling f) {
        for (auto& [box, syms] : f.cells) std::sort(syms.begin(), syms.end());
        TableauChain chain = chain_from_filling(flavor, lam, mu, p, f);
        return Poly::term(chain.weight(), BigInt(1)).str();
      };
      using K = Symbol::Kind;
      ShapeRecord lamC = shape(Family::C, 1, {4, 2});
      ShapeRecord muC = shape(Family::C, 1, {});
      EnumParams pc;
      pc.n = 3;
      pc.nz = 2;
      Filling c1;
      c1.cells[{1, 1}] = {sym(K::Prime, 1)};
      c1.cells[{1, 2}] = {sym(K::Bar, 1), sym(K::Plain, 1)};
      c1.cells[{1, 3}] = {sym(K::Plain, 1)};
      c1.cells[{1, 4}] = {sym(K::Plain, 1), sym(K::Bar, 2), sym(K::DPrime, 1)};
      c1.cells[{2, 1}] = {sym(K::Prime, 1), sym(K::Bar, 1)};
      c1.cells[{2, 2}] = {sym(K::Bar, 2)};
      ok = ok && find_weight(Flavor::KTritableau, lamC, muC, pc, c1) == "x1^2*y1*z1^5*z2^2";
      Filling c2;
      c2.cells[{1, 1}] = {sym(K::Prime, 1), sym(K::Bar, 1)};
      c2.cells[{1, 2}] = {sym(K::Bar, 1), sym(K::Plain, 1)};
      c2.cells[{1, 3}] = {sym(K::Plain, 1)};
      c2.cells[{1, 4}] = {sym(K::Plain, 1), sym(K::Bar, 2), sym(K::DPrime, 1),
                          sym(K::DPrime, 2)};
      c2.cells[{2, 1}] = {sym(K::Bar, 2)};
      c2.cells[{2, 2}] = {sym(K::Bar, 2)};
      ok = ok && find_weight(Flavor::KTritableau, lamC, muC, pc, c2) == "x1*y1*y2*z1^5*z2^3";
      ShapeRecord lamD = shape(Family::D, 1, {4, 2}, 0);
      ShapeRecord muD = shape(Family::D, 1, {}, 0);
      EnumParams pd;
      pd.n = 4;
      pd.nz = 2;
      Filling d1;
      d1.cells[{1, 1}] = {sym(K::Prime, 1)};
      d1.cells[{1, 2}] = {sym(K::Bar, 1), sym(K::Bar, 2)};
      d1.cells[{1, 3}] = {sym(K::Plain, 2)};
      d1.cells[{1, 4}] = {sym(K::Plain, 2), sym(K::DPrime, 1), sym(K::DPrime, 2)};
      d1.cells[{2, 1}] = {sym(K::Prime, 1), sym(K::Bar, 1)};
      d1.cells[{2, 2}] = {sym(K::DPrime, 1)};
      ok = ok && find_weight(Flavor::TypedKTritableau, lamD, muD, pd, d1) ==
                     "x1^2*y1^2*y2*z1^2*z2^3";
      Filling d2;
      d2.cells[{1, 1}] = {sym(K::Prime, 1)};
      d2.cells[{1, 2}] = {sym(K::Bar, 1), sym(K::Plain, 1)};
      d2.cells[{1, 3}] = {sym(K::Plain, 1)};
      d2.cells[{1, 4}] = {sym(K::Plain, 1), sym(K::Bar, 2), sym(K::Plain, 2)};
      d2.cells[{2, 1}] = {sym(K::Bar, 2)};
      d2.cells[{2, 2}] = {sym(K::Plain, 2), sym(K::DPrime, 1)};
      ok = ok &&
           find_weight(Flavor::TypedKTritableau, lamD, muD, pd, d2) == "x1*y1*z1^4*z2^4";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report("1f: the type C and type D (4,2) tritableau monomials", ok, detail);
  }
}

void criterion_2_sweeps() {
  SweepReport a = sweep_theorems(Family::A, {3, 2, 1}, {}, 3, 4, 0);
  report(a.result);
  for (Family fam : {Family::B, Family::C}) {
    SweepReport r = sweep_theorems(fam, {4, 2, 1}, {0, 1, 2}, 0, 4, 3);
    report(r.result);
  }
  SweepReport d = sweep_theorems(Family::D, {4, 2, 1}, {1, 2}, 0, 4, 3);
  report(d.result);
}

void criterion_3_structural() {
  report(check_factorizations(Family::A, {3, 2, 1}, {}, 3, 7));
  report(check_factorizations(Family::C, {4, 2, 1}, {0, 1, 2}, 0, 5));
  report(check_factorizations(Family::D, {4, 2, 1}, {1, 2}, 0, 5));
  report(check_cauchy(Family::A, {3, 2, 1}, {}, 3, 6, 0));
  report(check_cauchy(Family::C, {4, 2, 1}, {0, 1, 2}, 0, 4, 2));
  report(check_cauchy(Family::D, {4, 2, 1}, {1, 2}, 0, 4, 2));
  report(check_strip_equivalences(Family::C, {4, 2, 1}, {0, 1, 2}));
  report(check_strip_equivalences(Family::B, {4, 2, 1}, {0, 1, 2}));
  report(check_strip_equivalences(Family::D, {4, 2, 1}, {1, 2}));
  report(check_removable_boxes(Family::C, {4, 2, 1}, {0, 1, 2}));
  report(check_removable_boxes(Family::D, {4, 2, 1}, {1, 2}));
  report(check_strip_counts(Family::C, {4, 2, 1}, {0, 1, 2}, 4));
  report(check_strip_counts(Family::D, {4, 2, 1}, {1, 2}, 4));
  // chain <-> factorization bijections for each tableau family
  {
    EnumParams p;
    p.nz = 2;
    report(check_hecke_bijection(Flavor::KTableau, shape(Family::C, 1, {4, 1}),
                                 shape(Family::C, 1, {}), p));
    report(check_hecke_bijection(Flavor::TypedKTableau, shape(Family::D, 1, {3, 1}, 2),
                                 shape(Family::D, 1, {}, 0), p));
    EnumParams pt;
    pt.n = 3;
    pt.nz = 1;
    report(check_hecke_bijection(Flavor::KTritableau, shape(Family::C, 1, {3, 1}),
                                 shape(Family::C, 1, {}), pt));
    EnumParams pa;
    pa.n = 4;
    report(check_hecke_bijection(Flavor::Bitableau, shape(Family::A, 2, {2, 1}),
                                 shape(Family::A, 2, {}), pa));
  }
}

void criterion_4_algebra() {
  for (Family fam : {Family::A, Family::B, Family::C, Family::D})
    report(check_algebra(fam, 4));
}

void criterion_5_cli() {
  CliResult a = run_cli("compute --family C --k 1 --shape 3,1 --nz 2 --beta 0");
  report("5: CLI compute C (3,1) nz=2 beta=0 byte-match",
         a.status == 0 && a.output == "4*z1^3*z2 + 8*z1^2*z2^2 + 4*z1*z2^3\n",
         "got status " + std::to_string(a.status) + " output '" + a.output + "'");
  CliResult b = run_cli("compute --family D --word B --nz 2");
  report("5: CLI compute D word B nz=2 byte-match",
         b.status == 0 && b.output == "z1 + z2 + b*z1*z2\n",
         "got status " + std::to_string(b.status) + " output '" + b.output + "'");
  CliResult c = run_cli("verify --family A --max-shape 3,2,1 --m 2 --n 3");
  std::string expected;
  {
    SweepReport r = sweep_theorems(Family::A, {3, 2, 1}, {}, 2, 3, 0);
    std::ostringstream os;
    for (const std::string& line : r.lines) os << line << "\n";
    os << "verified " << r.result.cases << " checks: all passed\n";
    expected = os.str();
  }
  report("5: CLI verify A status 0 and byte-match", c.status == 0 && c.output == expected,
         "got status " + std::to_string(c.status));
  // error statuses: usage error 2, incompatible pair 3
  CliResult usage = run_cli("compute --family Q --shape 1");
  CliResult incompat = run_cli("compute --family C --k 1 --shape 3,1 --mu 3");
  report("5: CLI exit statuses (usage 2, incompatible pair 3)",
         usage.status == 2 && incompat.status == 3,
         "got " + std::to_string(usage.status) + " and " + std::to_string(incompat.status));
}

}  // namespace

int main() {
  std::cout << "acceptance criteria\n===================\n";
  criterion_1_fixtures();
  criterion_2_sweeps();
  criterion_3_structural();
  criterion_4_algebra();
  criterion_5_cli();
  std::cout << "===================\n";
  if (failures) {
    std::cout << failures << " criteria FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
