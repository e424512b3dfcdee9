#include "grothkit/idcox.hpp"

#include <stdexcept>

namespace grothkit {

namespace {

void push_middle_block(std::vector<OpFactor>& factors, Family f, int n, VarId var) {
  switch (f) {
    case Family::B:
      for (Gen a = n - 1; a >= 0; --a) factors.push_back({a, var});
      for (Gen a = 1; a <= n - 1; ++a) factors.push_back({a, var});
      break;
    case Family::C:
      for (Gen a = n - 1; a >= 0; --a) factors.push_back({a, var});
      for (Gen a = 0; a <= n - 1; ++a) factors.push_back({a, var});
      break;
    case Family::D:
      for (Gen a = n - 1; a >= 1; --a) factors.push_back({a, var});
      factors.push_back({kBoxGen, var});
      for (Gen a = 2; a <= n - 1; ++a) factors.push_back({a, var});
      break;
    case Family::A:
      throw std::invalid_argument("family A has no z operators");
  }
}

}  // namespace

std::vector<OpFactor> grothendieck_factors(Family f, int n, int nx, int ny, int nz) {
  if (nx > n - 1 || ny > n - 1)
    throw std::invalid_argument("grothendieck_factors: nx, ny must be at most n-1");
  if (f == Family::A && nz != 0)
    throw std::invalid_argument("grothendieck_factors: family A has nz = 0");
  std::vector<OpFactor> factors;
  for (int p = n - 1; p >= 1; --p) {
    if (p > ny) continue;  // y_p = 0 deletes A'_p(y_p)
    for (Gen a = p; a <= n - 1; ++a) factors.push_back({a, VarId::y(p)});
  }
  for (int j = 1; j <= nz; ++j) push_middle_block(factors, f, n, VarId::z(j));
  for (int p = 1; p <= n - 1; ++p) {
    if (p > nx) continue;
    for (Gen a = n - 1; a >= p; --a) factors.push_back({a, VarId::x(p)});
  }
  return factors;
}

std::vector<OpFactor> mixed_factors(Family f, int n, int nx, int ny, int nz) {
  std::vector<OpFactor> factors;
  for (int q = ny; q >= 1; --q)
    for (Gen a = 1; a <= n - 1; ++a) factors.push_back({a, VarId::y(q)});
  for (int j = 1; j <= nz; ++j) push_middle_block(factors, f, n, VarId::z(j));
  for (int q = 1; q <= nx; ++q)
    for (Gen a = n - 1; a >= 1; --a) factors.push_back({a, VarId::x(q)});
  return factors;
}

IdCoxElem IdCoxElem::unit(Family f, int n) {
  IdCoxElem e(f, n);
  e.support_[SignedPermutation::identity(f, n)] = Poly::one();
  return e;
}

Poly IdCoxElem::coefficient(const SignedPermutation& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? Poly::zero() : it->second;
}

void IdCoxElem::add(const SignedPermutation& w, const Poly& p) {
  if (p.is_zero()) return;
  Poly& slot = support_[w];
  slot += p;
  if (slot.is_zero()) support_.erase(w);
}

IdCoxElem IdCoxElem::fold_gen(Gen a, const Poly& c) const {
  IdCoxElem out(family_, n_);
  const Poly beta = Poly::variable(VarId::beta());
  for (const auto& [w, p] : support_) {
    out.add(w, p);
    if (w.is_right_descent(a)) {
      out.add(w, beta * c * p);  // pi_w pi_a = beta pi_w
    } else {
      out.add(w.right_mul_gen(a), c * p);
    }
  }
  return out;
}

IdCoxElem IdCoxElem::mul_gen(Gen a) const {
  IdCoxElem out(family_, n_);
  const Poly beta = Poly::variable(VarId::beta());
  for (const auto& [w, p] : support_) {
    if (w.is_right_descent(a)) {
      out.add(w, beta * p);
    } else {
      out.add(w.right_mul_gen(a), p);
    }
  }
  return out;
}

IdCoxElem IdCoxElem::fold_word(const Word& word) const {
  IdCoxElem out = *this;
  for (Gen a : word.letters) out = out.mul_gen(a);
  return out;
}

Poly product_coefficient(const std::vector<OpFactor>& factors, const SignedPermutation& w) {
  // B_j(v) = <pi_v * (factors j+1..N), w>, maintained right to left;
  // the answer is B_0(id)
  const Poly beta = Poly::variable(VarId::beta());
  std::map<SignedPermutation, Poly> need;
  need[w] = Poly::one();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const Poly c = Poly::variable(it->var);
    std::map<SignedPermutation, Poly> next;
    auto add = [&next](const SignedPermutation& v, Poly p) {
      if (p.is_zero()) return;
      Poly& slot = next[v];
      slot += p;
      if (slot.is_zero()) next.erase(v);
    };
    for (const auto& [v, p] : need) {
      add(v, p);
      if (v.is_right_descent(it->gen)) {
        add(v.right_mul_gen(it->gen), c * p);
        add(v, beta * c * p);
      }
    }
    need = std::move(next);
  }
  auto it = need.find(SignedPermutation::identity(w.family(), w.size()));
  return it == need.end() ? Poly::zero() : it->second;
}

Poly grothendieck(const SignedPermutation& w, int nx, int ny, int nz) {
  return product_coefficient(grothendieck_factors(w.family(), w.size(), nx, ny, nz), w);
}

Poly stanley(const SignedPermutation& w, int nz) {
  if (w.family() == Family::A)
    throw std::invalid_argument("stanley: defined for families B/C/D");
  return grothendieck(w, 0, 0, nz);
}

Poly mixed_stanley(const SignedPermutation& w, int nx, int ny, int nz) {
  if (w.family() == Family::A && nz != 0)
    throw std::invalid_argument("mixed_stanley: family A has nz = 0");
  return product_coefficient(mixed_factors(w.family(), w.size(), nx, ny, nz), w);
}

Poly stable_grothendieck_A(const SignedPermutation& varpi, int nx, int ny) {
  if (varpi.family() != Family::A)
    throw std::invalid_argument("stable_grothendieck_A: family A only");
  return product_coefficient(mixed_factors(Family::A, varpi.size(), nx, ny, 0), varpi);
}

}  // namespace grothkit
