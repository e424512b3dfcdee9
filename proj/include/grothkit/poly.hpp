#ifndef GROTHKIT_POLY_HPP
#define GROTHKIT_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grothkit/bigint.hpp"

namespace grothkit {

enum class VarClass : uint8_t { Beta = 0, X = 1, Y = 2, Z = 3 };

/// A distinguished variable: b, x_i, y_i or z_i (i >= 1).
struct VarId {
  VarClass cls = VarClass::Beta;
  uint32_t index = 0;  // unused for Beta

  static VarId beta() { return {VarClass::Beta, 0}; }
  static VarId x(uint32_t i) { return {VarClass::X, i}; }
  static VarId y(uint32_t i) { return {VarClass::Y, i}; }
  static VarId z(uint32_t i) { return {VarClass::Z, i}; }

  /// Total order b < x1 < x2 < ... < y1 < ... < z1 < ... as a single integer.
  uint32_t code() const { return (static_cast<uint32_t>(cls) << 28) | index; }

  std::string name() const;
  static std::optional<VarId> parse_name(std::string_view s);

  friend bool operator==(const VarId& a, const VarId& b) { return a.code() == b.code(); }
  friend bool operator<(const VarId& a, const VarId& b) { return a.code() < b.code(); }
};

/// Exponent vector with finite support; factors sorted by variable code,
/// zero exponents never stored.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarId v, uint32_t exp = 1);

  bool is_constant() const { return factors_.empty(); }
  uint64_t degree() const;
  uint32_t exponent(VarId v) const;
  Monomial times(const Monomial& o) const;
  const std::vector<std::pair<uint32_t, uint32_t>>& factors() const { return factors_; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  /// Canonical term order: total degree ascending, ties broken by the first
  /// variable (in the b < x < y < z order) where exponents differ, higher
  /// exponent first. Matches the printed form "4*z1^3*z2 + 8*z1^2*z2^2 + ...".
  static bool term_less(const Monomial& a, const Monomial& b);

  std::string str() const;  // "z1^3*z2", "1" for the constant monomial

 private:
  std::vector<std::pair<uint32_t, uint32_t>> factors_;  // (VarId::code, exp>0)
  friend class Poly;
};

/// Sparse multivariate polynomial over the integers in b, x_i, y_i, z_i.
/// Terms kept in canonical order with nonzero coefficients; equality is
/// structural. Values are immutable in spirit: all operations return copies.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(BigInt(1)); }
  static Poly constant(BigInt c);
  static Poly variable(VarId v) { return term(Monomial::var(v), BigInt(1)); }
  static Poly term(Monomial m, BigInt c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, BigInt>>& terms() const { return terms_; }

  BigInt coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Fast path: multiply every term by a single monomial (order preserving).
  Poly times_monomial(const Monomial& m) const;
  Poly times_var(VarId v, uint32_t exp = 1) const { return times_monomial(Monomial::var(v, exp)); }
  Poly negated() const;

  /// Exact substitution; unassigned variables are left alone.
  Poly substitute(const std::map<VarId, Poly>& assignment) const;
  Poly at_beta_zero() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Canonical text form, e.g. "4*z1^3*z2 + 8*z1^2*z2^2 + 4*z1*z2^3";
  /// beta prints as "b". parse(str(p)) == p for every p.
  std::string str() const;
  static Poly parse(std::string_view s);

 private:
  std::vector<std::pair<Monomial, BigInt>> terms_;
};

}  // namespace grothkit

#endif
