#ifndef GROTHKIT_TABLEAUX_HPP
#define GROTHKIT_TABLEAUX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grothkit/poly.hpp"
#include "grothkit/shapes.hpp"

namespace grothkit {

/// Tableau entry. Primes p' are the marked/x symbols, double primes p'' the
/// y symbols, barred/plain integers (circled in type D when the ambient
/// shape has type 2) the z symbols.
struct Symbol {
  enum class Kind { Prime, Bar, BarCirc, Plain, PlainCirc, DPrime };
  Kind kind;
  int index;

  /// Position in the ordered alphabet; circled and uncircled versions of the
  /// same letter share a slot (they never meet in one tableau).
  std::pair<int, int> order_key() const;
  bool is_prime() const { return kind == Kind::Prime; }
  bool is_dprime() const { return kind == Kind::DPrime; }

  std::string str() const;  // 3' 1~ 1~o 1o 2'' 2

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.order_key() == b.order_key() && a.kind == b.kind;
  }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.order_key() != b.order_key()) return a.order_key() < b.order_key();
    return a.kind < b.kind;
  }
};

enum class Flavor {
  Bitableau,         // set-valued m-bitableaux (family A)
  KTableau,          // set-valued k-tableaux (families B/C)
  KTritableau,       // set-valued k-tritableaux (families B/C)
  TypedKTableau,     // set-valued typed k'-tableaux (family D)
  TypedKTritableau,  // set-valued typed k'-tritableaux (family D)
  BarredK,           // barred k-tableaux (families B/C)
  BarredTypedK,      // barred typed k'-tableaux (family D)
  StableA,           // bitableaux with the bounds dropped (stable limit)
  MixedTri,          // tritableaux with bounds/extremality dropped (mixed Stanley)
};

std::string flavor_name(Flavor f);
std::optional<Flavor> parse_flavor(std::string_view s);

/// Truncations: n is the ambient rank for (bi/tri)tableaux, nz the number of
/// z-variables, nx/ny the stable truncations of StableA/MixedTri.
struct EnumParams {
  int n = 0;
  int nx = 0;
  int ny = 0;
  int nz = 0;
};

struct Filling {
  std::map<Box, std::vector<Symbol>> cells;
  std::string render(const ShapeRecord& lambda, const ShapeRecord& mu) const;
};

/// A tableau as its defining pair of partition chains; the filling and
/// weight are derived views.
struct TableauChain {
  Flavor flavor;
  Family family;
  ShapeRecord lambda, mu;
  EnumParams params;
  std::vector<ShapeRecord> lambda_chain;  // lambda^1 .. lambda^N (lambda^0 = mu)
  std::vector<ShapeRecord> nu_chain;      // nu^1 .. nu^N (nu^0 = mu)

  int steps() const { return static_cast<int>(lambda_chain.size()); }
  const ShapeRecord& lam(int i) const { return i == 0 ? mu : lambda_chain[i - 1]; }
  const ShapeRecord& nu(int i) const { return i == 0 ? mu : nu_chain[i - 1]; }

  int beta_size() const;  // |T|: total entries counted with multiplicity
  Monomial weight() const;
  Filling filling() const;
};

/// All tableaux of the given flavor and shape, deterministically ordered by
/// the concatenated part sequences of (lambda-chain, nu-chain). Throws when
/// (lambda, mu) is not a compatible pair.
std::vector<TableauChain> enumerate_tableaux(Flavor flavor, const ShapeRecord& lambda,
                                             const ShapeRecord& mu, const EnumParams& params);

/// The tableau side of the main theorems: sum of beta^(|T|-|lambda/mu|) * weight.
Poly theorem_rhs(Flavor flavor, const ShapeRecord& lambda, const ShapeRecord& mu,
                 const EnumParams& params);

/// The Hecke factorization sigma_i = w_{lambda^i / nu^(i-1)} encoded by a
/// chain, in chain order (sigma_1 is the factor applied first, i.e. the
/// rightmost in the displayed product). Asserts that the factors recompose
/// to w_{lambda/mu}.
std::vector<SignedPermutation> hecke_correspondence(const TableauChain& chain);

/// Skew stable Grothendieck polynomial via StableA enumeration.
Poly skew_stable_grothendieck_A(const ShapeRecord& lambda, const ShapeRecord& mu, int nx,
                                int ny);

/// Mixed Stanley tableau sum via MixedTri enumeration.
Poly mixed_stanley_rhs(const ShapeRecord& lambda, const ShapeRecord& mu, int nx, int ny,
                       int nz);

/// Independent filling-by-filling enumeration of the m-bitableau
/// conditions (family A), used to cross-check the chain route.
struct BitableauDirect {
  long long count = 0;
  Poly sum;  // beta^(|U|-|lambda/mu|) (xy)^U summed over fillings
};
BitableauDirect enumerate_bitableaux_direct(const ShapeRecord& lambda, const ShapeRecord& mu,
                                            int n);

/// Reconstruct the unique chain whose derived filling equals the given one;
/// throws when the filling is not a valid tableau of the flavor.
TableauChain chain_from_filling(Flavor flavor, const ShapeRecord& lambda,
                                const ShapeRecord& mu, const EnumParams& params,
                                const Filling& filling);

}  // namespace grothkit

#endif
