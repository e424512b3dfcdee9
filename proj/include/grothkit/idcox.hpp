#ifndef GROTHKIT_IDCOX_HPP
#define GROTHKIT_IDCOX_HPP

#include <map>
#include <vector>

#include "grothkit/poly.hpp"
#include "grothkit/weyl.hpp"

namespace grothkit {

/// One factor (1 + c * pi_a) of an operator product.
struct OpFactor {
  Gen gen;
  VarId var;
};

/// A'_{n-1}(y_{n-1})...A'_1(y_1) {B,C,D}(z_1..z_nz) A_1(x_1)...A_{n-1}(x_{n-1}),
/// with the variables past the truncations set to zero, which deletes their
/// factors outright. Family A has no middle block.
std::vector<OpFactor> grothendieck_factors(Family f, int n, int nx, int ny, int nz);

/// ...A'_1(y_2)A'_1(y_1) {B,C,D}(z_1..z_nz) A_1(x_1)A_1(x_2)..., the
/// stable-limit products of the mixed Stanley functions; family A with
/// nz = 0 gives the stable Grothendieck product A'(Y)A(X).
std::vector<OpFactor> mixed_factors(Family f, int n, int nx, int ny, int nz);

/// Element of the idCoxeter algebra: finitely supported map w -> coefficient.
class IdCoxElem {
 public:
  IdCoxElem(Family f, int n) : family_(f), n_(n) {}

  static IdCoxElem unit(Family f, int n);

  Family family() const { return family_; }
  int rank() const { return n_; }
  const std::map<SignedPermutation, Poly>& support() const { return support_; }

  Poly coefficient(const SignedPermutation& w) const;
  void add(const SignedPermutation& w, const Poly& p);

  /// this * (1 + c * pi_a): every pi_w keeps its coefficient and feeds
  /// c * coeff into pi_{w s_a}, picking up a beta when the length drops.
  IdCoxElem fold_gen(Gen a, const Poly& c) const;
  /// this * pi_a (used by the relation and basis tests).
  IdCoxElem mul_gen(Gen a) const;
  IdCoxElem fold_word(const Word& word) const;  // product of bare pi_a

  friend bool operator==(const IdCoxElem& a, const IdCoxElem& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.support_ == b.support_;
  }

 private:
  Family family_;
  int n_;
  std::map<SignedPermutation, Poly> support_;
};

/// <product, w> evaluated by the adjoint fold: the support never leaves the
/// Bruhat interval under w, so single-coefficient queries stay small.
Poly product_coefficient(const std::vector<OpFactor>& factors, const SignedPermutation& w);

/// The type A/B/C/D double Grothendieck polynomial of w at the given
/// truncations (omitted variables are zero). Requires nx, ny <= n-1 and, in
/// family A, nz = 0.
Poly grothendieck(const SignedPermutation& w, int nx, int ny, int nz);

/// K-theoretic Stanley function <{B,C,D}(z_1..z_nz), w>.
Poly stanley(const SignedPermutation& w, int nz);

/// K-theoretic double mixed Stanley function <A'(Y){B,C,D}(Z)A(X), w>.
Poly mixed_stanley(const SignedPermutation& w, int nx, int ny, int nz);

/// Stable Grothendieck polynomial <A'(Y)A(X), varpi> for varpi in S_n.
Poly stable_grothendieck_A(const SignedPermutation& varpi, int nx, int ny);

}  // namespace grothkit

#endif
