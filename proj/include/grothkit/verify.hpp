#ifndef GROTHKIT_VERIFY_HPP
#define GROTHKIT_VERIFY_HPP

#include <string>
#include <vector>

#include "grothkit/shapes.hpp"
#include "grothkit/tableaux.hpp"

namespace grothkit {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;  // first counterexample, empty when passing

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

/// Lines of the per-shape verification report, sorted by shape key, plus the
/// overall result. Used by the CLI verify command.
struct SweepReport {
  std::vector<std::string> lines;
  CheckResult result;
};

/// Thread budget for the sweeps: GROTHKIT_THREADS when set, hardware
/// concurrency otherwise, at least 1.
int thread_budget();

/// Main theorem equality, tableau sum against the idCoxeter oracle, for one
/// family over all compatible pairs inside max_shape.
///   A: Grothendieck = bitableau sum for every m <= m_max, rank <= n_max,
///      plus the direct filling enumeration cross-check.
///   B/C: Stanley = k-tableau sum (nz <= nz_max) and Grothendieck =
///      k-tritableau sum (rank <= n_max), plus the beta=0 barred collapse.
///   D: same with the typed flavors.
SweepReport sweep_theorems(Family family, const std::vector<int>& max_shape,
                           const std::vector<int>& ks, int m_max, int n_max, int nz_max);

/// Hecke-factorization structure: skewfactorA bijection in A; skewfactC/D
/// plus their converses in B/C/D.
CheckResult check_factorizations(Family family, const std::vector<int>& max_shape,
                                 const std::vector<int>& ks, int m_max, int n_max);

/// Cauchy decompositions Afact/Cfact/Dfact at the given z truncation.
CheckResult check_cauchy(Family family, const std::vector<int>& max_shape,
                         const std::vector<int>& ks, int m_max, int n_max, int nz);

/// Word-vs-box equivalences: unimodal = k-horizontal, khoriz, zdistinct and
/// the typed x/y characterizations.
CheckResult check_strip_equivalences(Family family, const std::vector<int>& max_shape,
                                     const std::vector<int>& ks);

/// Removable-box characterization (families B/C both directions, family D
/// the stated direction).
CheckResult check_removable_boxes(Family family, const std::vector<int>& max_shape,
                                  const std::vector<int>& ks);

/// n(lambda/mu) = n(w) over k-horizontal strips, n' likewise in D, and the
/// power-of-two embedding counts over every unimodal element of rank n_max.
CheckResult check_strip_counts(Family family, const std::vector<int>& max_shape,
                               const std::vector<int>& ks, int n_max);

/// idCoxeter defining relations, Hecke associativity, basis freeness and
/// embedding stability at rank <= n_max.
CheckResult check_algebra(Family family, int n_max);

/// Chain <-> factorization bijection of the tableau correspondence for the
/// given flavor at small bounds.
CheckResult check_hecke_bijection(Flavor flavor, const ShapeRecord& lambda,
                                  const ShapeRecord& mu, const EnumParams& params);

}  // namespace grothkit

#endif
