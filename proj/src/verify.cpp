#include "grothkit/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "grothkit/idcox.hpp"

namespace grothkit {

int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("GROTHKIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, hw);
  }
  return hw;
}

namespace {

/// Run fn over every job, in parallel, keeping result order. Exceptions
/// surface as failed results.
template <typename Result, typename Job, typename Fn>
std::vector<Result> run_jobs(const std::vector<Job>& jobs, Fn fn) {
  std::vector<Result> results(jobs.size());
  auto run_one = [&](size_t i) {
    try {
      results[i] = fn(jobs[i]);
    } catch (const std::exception& e) {
      results[i].failure = std::string("exception: ") + e.what();
    }
  };
  const int threads = std::min<int>(thread_budget(), static_cast<int>(jobs.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) run_one(i);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) run_one(i);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

std::string shape_label(const ShapeRecord& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.parts[i]);
  }
  out += ")";
  if (s.family == Family::D) out += "t" + std::to_string(s.type);
  return out;
}

/// Bruhat lower interval of w with the one-step Demazure table, built from
/// reduced subwords.
struct HeckeInterval {
  std::vector<SignedPermutation> elems;
  std::map<SignedPermutation, int> index;

  static HeckeInterval of(const SignedPermutation& w) {
    HeckeInterval iv;
    std::set<SignedPermutation> seen;
    const Word word = w.canonical_word();
    std::function<void(size_t, const SignedPermutation&)> dfs =
        [&](size_t pos, const SignedPermutation& cur) {
          seen.insert(cur);
          for (size_t i = pos; i < word.letters.size(); ++i)
            if (!cur.is_right_descent(word.letters[i]))
              dfs(i + 1, cur.right_mul_gen(word.letters[i]));
        };
    dfs(0, SignedPermutation::identity(w.family(), w.size()));
    iv.elems.assign(seen.begin(), seen.end());
    for (size_t i = 0; i < iv.elems.size(); ++i) iv.index[iv.elems[i]] = static_cast<int>(i);
    return iv;
  }

  int find(const SignedPermutation& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }
};

/// Elements with a reduced word that is a subword of the given letter
/// window (the monotone classes of the factorization propositions).
std::vector<SignedPermutation> subword_elements(Family f, int n,
                                                const std::vector<Gen>& window) {
  std::set<SignedPermutation> out;
  std::function<void(size_t, const SignedPermutation&)> dfs =
      [&](size_t pos, const SignedPermutation& cur) {
        out.insert(cur);
        for (size_t i = pos; i < window.size(); ++i)
          if (!cur.is_right_descent(window[i])) dfs(i + 1, cur.right_mul_gen(window[i]));
      };
  dfs(0, SignedPermutation::identity(f, n));
  return std::vector<SignedPermutation>(out.begin(), out.end());
}

std::vector<Gen> dec_window(int n, Gen p) {
  std::vector<Gen> w;
  if (p == kBoxGen) {
    for (Gen a = n - 1; a >= 2; --a) w.push_back(a);
    w.push_back(kBoxGen);
  } else {
    for (Gen a = n - 1; a >= p; --a) w.push_back(a);
  }
  return w;
}

std::vector<Gen> inc_window(int n, Gen p) {
  std::vector<Gen> w = dec_window(n, p);
  std::reverse(w.begin(), w.end());
  return w;
}

Poly single_grothendieck_in_y(const SignedPermutation& u_inv_positive, int n) {
  // u lies in S_infinity; its type A single polynomial with x -> y
  SignedPermutation a = SignedPermutation::from_window(Family::A, u_inv_positive.window());
  Poly p = grothendieck(a, n - 1, 0, 0);
  std::map<VarId, Poly> sub;
  for (int i = 1; i <= n - 1; ++i) sub[VarId::x(i)] = Poly::variable(VarId::y(i));
  return p.substitute(sub);
}

std::vector<ShapeRecord> compatible_subshapes(const ShapeRecord& lambda) {
  std::vector<ShapeRecord> out;
  for (const ShapeRecord& mu : shapes_inside(lambda.family, lambda.k, lambda.parts))
    if (lambda.contains(mu) && is_compatible(lambda, mu)) out.push_back(mu);
  return out;
}

std::string poly_mismatch(const std::string& what, const ShapeRecord& lambda,
                          const ShapeRecord& mu, const Poly& oracle, const Poly& tableau) {
  std::ostringstream os;
  os << what << " failed for lambda=" << shape_label(lambda) << " mu=" << shape_label(mu)
     << ": oracle = " << oracle.str() << " ; tableau = " << tableau.str();
  return os.str();
}

}  // namespace

SweepReport sweep_theorems(Family family, const std::vector<int>& max_shape,
                           const std::vector<int>& ks, int m_max, int n_max, int nz_max) {
  SweepReport report;
  report.result.name = "theorems-" + family_name(family);

  struct Group {
    int k;
    ShapeRecord lambda;
  };
  std::vector<Group> groups;
  if (family == Family::A) {
    for (int m = 1; m <= m_max; ++m)
      for (const ShapeRecord& lam : shapes_inside(Family::A, m, max_shape))
        if (min_window(lam) <= n_max) groups.push_back({m, lam});
  } else {
    for (int k : ks)
      for (const ShapeRecord& lam : shapes_inside(family, k, max_shape))
        if (min_window(lam) <= n_max) groups.push_back({k, lam});
  }

  struct GroupOutcome {
    std::string line;
    std::string failure;
    long long cases = 0;
  };

  auto run_group = [&](const Group& g) -> GroupOutcome {
    GroupOutcome out;
    long long pairs = 0, checks = 0;
    std::string failure;
    auto record = [&](bool ok, std::string what) {
      ++checks;
      if (!ok && failure.empty()) failure = std::move(what);
    };
    for (const ShapeRecord& mu : compatible_subshapes(g.lambda)) {
      ++pairs;
      if (family == Family::A) {
        for (int n = std::max(2, min_window(g.lambda)); n <= n_max; ++n) {
          SignedPermutation w = skew_element(g.lambda, mu, n);
          Poly oracle = grothendieck(w, n - 1, n - 1, 0);
          EnumParams params;
          params.n = n;
          Poly tab = theorem_rhs(Flavor::Bitableau, g.lambda, mu, params);
          record(oracle == tab, poly_mismatch("Grothendieck/bitableau n=" + std::to_string(n),
                                              g.lambda, mu, oracle, tab));
          BitableauDirect direct = enumerate_bitableaux_direct(g.lambda, mu, n);
          record(direct.sum == tab,
                 poly_mismatch("bitableau chain/direct n=" + std::to_string(n), g.lambda, mu,
                               direct.sum, tab));
          long long chains = static_cast<long long>(
              enumerate_tableaux(Flavor::Bitableau, g.lambda, mu, params).size());
          record(direct.count == chains,
                 "bitableau count mismatch for lambda=" + shape_label(g.lambda) +
                     " mu=" + shape_label(mu));
        }
        continue;
      }
      const bool typed = family == Family::D;
      const Flavor tab_flavor = typed ? Flavor::TypedKTableau : Flavor::KTableau;
      const Flavor tri_flavor = typed ? Flavor::TypedKTritableau : Flavor::KTritableau;
      const Flavor barred_flavor = typed ? Flavor::BarredTypedK : Flavor::BarredK;
      const int n0 = std::max(min_window(g.lambda), min_window(mu));
      SignedPermutation w0 = skew_element(g.lambda, mu, n0);
      // truncation deletes operator factors, so the smaller-nz oracles are
      // exact substitutions of the largest one
      Poly stanley_full = stanley(w0, nz_max);
      auto truncate_z = [&](const Poly& p, int nz) {
        std::map<VarId, Poly> kill;
        for (int j = nz + 1; j <= nz_max; ++j) kill[VarId::z(j)] = Poly::zero();
        return kill.empty() ? p : p.substitute(kill);
      };
      for (int nz = 0; nz <= nz_max; ++nz) {
        EnumParams params;
        params.nz = nz;
        Poly oracle = truncate_z(stanley_full, nz);
        Poly tab = theorem_rhs(tab_flavor, g.lambda, mu, params);
        record(oracle == tab, poly_mismatch("Stanley/k-tableau nz=" + std::to_string(nz),
                                            g.lambda, mu, oracle, tab));
        Poly barred = theorem_rhs(barred_flavor, g.lambda, mu, params);
        record(tab.at_beta_zero() == barred,
               poly_mismatch("barred collapse nz=" + std::to_string(nz), g.lambda, mu,
                             tab.at_beta_zero(), barred));
        // slack-free set-valued chains are exactly the barred chains
        const int skew_size = g.lambda.size() - mu.size();
        std::set<std::vector<ShapeRecord>> slack_free, barred_chains;
        for (const TableauChain& c : enumerate_tableaux(tab_flavor, g.lambda, mu, params))
          if (c.beta_size() == skew_size) slack_free.insert(c.lambda_chain);
        for (const TableauChain& c : enumerate_tableaux(barred_flavor, g.lambda, mu, params))
          barred_chains.insert(c.lambda_chain);
        record(slack_free == barred_chains,
               "barred bijection mismatch for lambda=" + shape_label(g.lambda) +
                   " mu=" + shape_label(mu) + " nz=" + std::to_string(nz));
      }
      for (int n = std::max(2, n0); n <= n_max; ++n) {
        SignedPermutation w = skew_element(g.lambda, mu, n);
        Poly grothendieck_full = grothendieck(w, n - 1, n - 1, nz_max);
        for (int nz = 0; nz <= nz_max; ++nz) {
          EnumParams params;
          params.n = n;
          params.nz = nz;
          Poly oracle = truncate_z(grothendieck_full, nz);
          Poly tab = theorem_rhs(tri_flavor, g.lambda, mu, params);
          record(oracle == tab,
                 poly_mismatch("Grothendieck/tritableau n=" + std::to_string(n) +
                                   " nz=" + std::to_string(nz),
                               g.lambda, mu, oracle, tab));
        }
      }
    }
    std::ostringstream line;
    line << (failure.empty() ? "ok" : "FAIL") << " " << family_name(family)
         << " k=" << g.k << " lambda=" << shape_label(g.lambda) << " pairs=" << pairs
         << " checks=" << checks;
    out.line = line.str();
    out.failure = failure;
    out.cases = checks;
    return out;
  };

  std::vector<GroupOutcome> outcomes = run_jobs<GroupOutcome>(groups, run_group);
  for (GroupOutcome& o : outcomes) {
    if (o.line.empty()) o.line = "FAIL " + o.failure;  // exception path
  }

  for (const GroupOutcome& o : outcomes) {
    report.lines.push_back(o.line);
    report.result.cases += o.cases;
    if (!o.failure.empty()) report.result.fail(o.failure);
  }
  return report;
}

CheckResult check_factorizations(Family family, const std::vector<int>& max_shape,
                                 const std::vector<int>& ks, int m_max, int n_max) {
  CheckResult res;
  res.name = "factorizations-" + family_name(family);

  if (family == Family::A) {
    for (int m = 1; m <= m_max; ++m) {
      for (const ShapeRecord& lambda : shapes_inside(Family::A, m, max_shape)) {
        if (min_window(lambda) > n_max) continue;
        const int n = min_window(lambda);
        SignedPermutation wl = grassmannian_element(lambda, n);
        for (const ShapeRecord& mu : compatible_subshapes(lambda)) {
          SignedPermutation wm = grassmannian_element(mu, n);
          SignedPermutation w = wl.mul(wm.inverse());
          HeckeInterval iv = HeckeInterval::of(w);
          // rook pairs mu <= rho <= nu <= lambda glue back (converse)
          long long rook_pairs = 0;
          for (const ShapeRecord& nu : shapes_inside(Family::A, m, lambda.parts)) {
            if (!lambda.contains(nu) || !nu.contains(mu)) continue;
            for (const ShapeRecord& rho : shapes_inside(Family::A, m, nu.parts)) {
              if (!nu.contains(rho) || !rho.contains(mu)) continue;
              if (!strip_class(nu, rho).rook) continue;
              ++rook_pairs;
              SignedPermutation u = wl.mul(grassmannian_element(rho, n).inverse());
              SignedPermutation v = grassmannian_element(nu, n).mul(wm.inverse());
              ++res.cases;
              if (SignedPermutation::hecke_product(u, v) != w)
                res.fail("skewfactorA converse failed at lambda=" + shape_label(lambda) +
                         " mu=" + shape_label(mu) + " rho=" + shape_label(rho) +
                         " nu=" + shape_label(nu));
            }
          }
          // every Hecke factorization pair decomposes, and the counts agree
          long long pair_count = 0;
          for (const SignedPermutation& u : iv.elems) {
            for (const SignedPermutation& v : iv.elems) {
              if (SignedPermutation::hecke_product(u, v) != w) continue;
              ++pair_count;
              ++res.cases;
              SignedPermutation wrho = u.inverse().mul(wl);
              SignedPermutation wnu = v.mul(wm);
              bool ok = u.length() + wrho.length() == wl.length() &&
                        v.length() + wm.length() == wnu.length() &&
                        is_grassmannian(wrho, m) && is_grassmannian(wnu, m);
              if (ok) {
                ShapeRecord rho = shape_of_grassmannian(wrho, m);
                ShapeRecord nu = shape_of_grassmannian(wnu, m);
                ok = nu.contains(rho) && rho.contains(mu) && lambda.contains(nu) &&
                     strip_class(nu, rho).rook;
              }
              if (!ok)
                res.fail("skewfactorA direct failed at lambda=" + shape_label(lambda) +
                         " mu=" + shape_label(mu) + " u=" + u.str() + " v=" + v.str());
            }
          }
          ++res.cases;
          if (pair_count != rook_pairs)
            res.fail("skewfactorA bijection count mismatch at lambda=" + shape_label(lambda) +
                     " mu=" + shape_label(mu) + ": " + std::to_string(pair_count) +
                     " factorizations vs " + std::to_string(rook_pairs) + " rook pairs");
        }
      }
    }
    return res;
  }

  const bool typed = family == Family::D;
  for (int k : ks) {
    for (const ShapeRecord& lambda : shapes_inside(family, k, max_shape)) {
      if (min_window(lambda) > n_max) continue;
      const int n = std::max(min_window(lambda), typed ? 2 : 1);
      SignedPermutation wl = grassmannian_element(lambda, n);
      // the monotone left-factor classes of the factorization propositions,
      // tagged with the strip kind the remark predicts for lambda/rho
      struct MonotoneClass {
        std::string name;
        std::vector<SignedPermutation> elems;
        bool z_kind;  // decreasing classes give z-strips, increasing give zbar/y
      };
      std::vector<MonotoneClass> classes;
      if (typed) {
        classes.push_back({"dec1", subword_elements(family, n, dec_window(n, 1)), true});
        classes.push_back({"inc1", subword_elements(family, n, inc_window(n, 1)), false});
        classes.push_back({"incB", subword_elements(family, n, inc_window(n, kBoxGen)), false});
      } else {
        classes.push_back({"dec0", subword_elements(family, n, dec_window(n, 0)), true});
        classes.push_back({"inc0", subword_elements(family, n, inc_window(n, 0)), false});
      }
      std::vector<ShapeRecord> subs = shapes_inside(family, k, lambda.parts);
      for (const ShapeRecord& mu : compatible_subshapes(lambda)) {
        SignedPermutation wm = grassmannian_element(mu, n);
        SignedPermutation w = wl.mul(wm.inverse());
        HeckeInterval iv = HeckeInterval::of(w);
        // forward: monotone left factors always split off compatible shapes,
        // and both quotient strips carry the class's strip kind
        for (const auto& cls : classes) {
          for (const SignedPermutation& u : cls.elems) {
            if (iv.find(u) < 0) continue;
            for (const SignedPermutation& v : iv.elems) {
              if (SignedPermutation::hecke_product(u, v) != w) continue;
              ++res.cases;
              SignedPermutation wrho = u.inverse().mul(wl);
              SignedPermutation wnu = v.mul(wm);
              bool ok = u.length() + wrho.length() == wl.length() &&
                        v.length() + wm.length() == wnu.length() &&
                        is_grassmannian(wrho, k) && is_grassmannian(wnu, k);
              if (ok) {
                ShapeRecord rho = shape_of_grassmannian(wrho, k);
                ShapeRecord nu = shape_of_grassmannian(wnu, k);
                ok = is_compatible_triple(mu, rho, lambda) &&
                     is_compatible_triple(mu, nu, lambda);
                if (ok) {
                  StripFlags fr = strip_class(lambda, rho);
                  StripFlags fn = strip_class(lambda, nu);
                  if (typed)
                    ok = cls.z_kind ? (fr.typed_x && fn.typed_x)
                                    : (cls.name == "incB" ? (fr.typed_zbar && fn.typed_zbar)
                                                          : (fr.typed_y && fn.typed_y));
                  else
                    ok = cls.z_kind ? (fr.z && fn.z) : (fr.zbar && fn.zbar);
                }
              }
              if (!ok)
                res.fail("skewfact" + family_name(family) + " (" + cls.name +
                         ") failed at lambda=" + shape_label(lambda) + " mu=" +
                         shape_label(mu) + " u=" + u.str() + " v=" + v.str());
            }
          }
        }
        // converse: a monotone strip with relation-free rook slack glues back.
        // The hypotheses sharpen the printed ones, which admit counterexamples
        // (see the notes); the sharpened forms hold with no exception here.
        for (const ShapeRecord& rho : subs) {
          if (!rho.contains(mu) || !is_compatible_triple(mu, rho, lambda)) continue;
          StripFlags rho_flags = strip_class(lambda, rho);
          bool monotone = typed ? (rho_flags.typed_x || rho_flags.typed_y ||
                                   rho_flags.typed_zbar)
                                : (rho_flags.z || rho_flags.zbar);
          if (!monotone) continue;
          for (const ShapeRecord& nu : subs) {
            if (!nu.contains(rho) || !lambda.contains(nu) || !nu.contains(mu)) continue;
            if (!is_compatible_triple(mu, nu, lambda)) continue;
            if (typed && nu.type + rho.type == 3) continue;
            std::vector<Box> boxes = skew_boxes(nu, rho);
            {
              std::set<int> rows, cols;
              bool ok = true;
              for (const Box& b : boxes) {
                if (!rows.insert(b.row).second || !cols.insert(b.col).second) ok = false;
              }
              if (!ok) continue;
            }
            bool related = false;
            for (size_t i = 0; i < boxes.size() && !related; ++i)
              for (size_t j = i + 1; j < boxes.size() && !related; ++j) {
                if (std::abs(2 * (boxes[i].col - k) - 1) + 2 * boxes[i].row ==
                    std::abs(2 * (boxes[j].col - k) - 1) + 2 * boxes[j].row)
                  related = true;  // half-offset staircase distance
                if (typed) {
                  if (std::abs(boxes[i].col - k) + boxes[i].row ==
                      std::abs(boxes[j].col - k) + boxes[j].row)
                    related = true;
                } else if (std::abs(boxes[i].col - k - 1) + boxes[i].row ==
                           std::abs(boxes[j].col - k - 1) + boxes[j].row) {
                  related = true;
                }
              }
            if (related) continue;
            ++res.cases;
            SignedPermutation u = wl.mul(grassmannian_element(rho, n).inverse());
            SignedPermutation v = grassmannian_element(nu, n).mul(wm.inverse());
            if (SignedPermutation::hecke_product(u, v) != w)
              res.fail("skew" + family_name(family) +
                       "converse failed at lambda=" + shape_label(lambda) +
                       " mu=" + shape_label(mu) + " rho=" + shape_label(rho) +
                       " nu=" + shape_label(nu));
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_cauchy(Family family, const std::vector<int>& max_shape,
                         const std::vector<int>& ks, int m_max, int n_max, int nz) {
  CheckResult res;
  res.name = "cauchy-" + family_name(family);

  auto run_pair = [&](const ShapeRecord& lambda, const ShapeRecord& mu, int k_or_m) {
    const int n = std::max(min_window(lambda), family == Family::D ? 2 : 1);
    if (n > n_max) return;
    SignedPermutation wl = grassmannian_element(lambda, n);
    SignedPermutation wm = grassmannian_element(mu, n);
    SignedPermutation w = wl.mul(wm.inverse());
    const int use_nz = family == Family::A ? 0 : nz;
    Poly lhs = grothendieck(w, n - 1, n - 1, use_nz);
    HeckeInterval iv = HeckeInterval::of(w);
    Poly by_pairs, by_shapes;
    std::map<std::vector<int>, Poly> y_cache;
    auto y_side = [&](const SignedPermutation& u) {
      SignedPermutation ui = u.inverse();
      auto it = y_cache.find(ui.window());
      if (it == y_cache.end())
        it = y_cache.emplace(ui.window(), single_grothendieck_in_y(ui, n)).first;
      return it->second;
    };
    for (const SignedPermutation& u : iv.elems) {
      if (!u.is_permutation()) continue;
      for (const SignedPermutation& v : iv.elems) {
        if (SignedPermutation::hecke_product(u, v) != w) continue;
        int excess = u.length() + v.length() - w.length();
        by_pairs += (grothendieck(v, n - 1, 0, use_nz) * y_side(u))
                        .times_monomial(Monomial::var(VarId::beta(), excess));
      }
    }
    for (const ShapeRecord& rho : shapes_inside(family, k_or_m, lambda.parts)) {
      if (!rho.contains(mu)) continue;
      if (family == Family::A) {
        if (!is_compatible(lambda, rho) || !is_compatible(rho, mu)) continue;
      } else {
        if (!is_compatible_triple(mu, rho, lambda)) continue;
      }
      SignedPermutation u = wl.mul(grassmannian_element(rho, n).inverse());
      if (!u.is_permutation()) continue;  // l_k(rho) = l_k(lambda) in B/C
      for (const ShapeRecord& nu : shapes_inside(family, k_or_m, lambda.parts)) {
        if (!nu.contains(mu)) continue;
        if (family == Family::A) {
          if (!nu.contains(rho) || !strip_class(nu, rho).rook) continue;
          if (!is_compatible(lambda, nu) || !is_compatible(nu, mu)) continue;
        } else {
          if (!is_compatible_triple(mu, nu, lambda)) continue;
        }
        SignedPermutation v = grassmannian_element(nu, n).mul(wm.inverse());
        if (family != Family::A && SignedPermutation::hecke_product(u, v) != w) continue;
        int excess = u.length() + v.length() - w.length();
        by_shapes += (grothendieck(v, n - 1, 0, use_nz) * y_side(u))
                         .times_monomial(Monomial::var(VarId::beta(), excess));
      }
    }
    res.cases += 2;
    if (lhs != by_pairs)
      res.fail(poly_mismatch("Cauchy (factorization sum)", lambda, mu, lhs, by_pairs));
    if (lhs != by_shapes)
      res.fail(poly_mismatch("Cauchy (shape sum)", lambda, mu, lhs, by_shapes));
  };

  if (family == Family::A) {
    for (int m = 1; m <= m_max; ++m)
      for (const ShapeRecord& lambda : shapes_inside(Family::A, m, max_shape)) {
        if (min_window(lambda) > n_max) continue;
        for (const ShapeRecord& mu : compatible_subshapes(lambda)) run_pair(lambda, mu, m);
      }
  } else {
    for (int k : ks)
      for (const ShapeRecord& lambda : shapes_inside(family, k, max_shape)) {
        if (min_window(lambda) > n_max) continue;
        for (const ShapeRecord& mu : compatible_subshapes(lambda)) run_pair(lambda, mu, k);
      }
  }
  return res;
}

CheckResult check_strip_equivalences(Family family, const std::vector<int>& max_shape,
                                     const std::vector<int>& ks) {
  CheckResult res;
  res.name = "strip-equivalences-" + family_name(family);
  for (int k : ks) {
    for (const ShapeRecord& lambda : shapes_inside(family, k, max_shape)) {
      for (const ShapeRecord& mu : shapes_inside(family, k, lambda.parts)) {
        if (!lambda.contains(mu)) continue;
        StripFlags f = strip_class(lambda, mu);
        ++res.cases;
        if (f.k_horizontal_box && !f.compatible) {
          res.fail("k-horizontal strip is not a compatible pair: lambda=" +
                   shape_label(lambda) + " mu=" + shape_label(mu));
          continue;
        }
        if (!f.compatible) continue;
        auto expect = [&](bool word, bool box, const char* what) {
          if (word != box)
            res.fail(std::string(what) + " word/box mismatch at lambda=" +
                     shape_label(lambda) + " mu=" + shape_label(mu));
        };
        expect(f.k_horizontal_word, f.k_horizontal_box, "k-horizontal");
        if (!f.k_horizontal_word || !f.k_horizontal_box) continue;
        if (family == Family::D) {
          expect(f.typed_x, f.typed_x_box, "typed x-strip");
          expect(f.typed_y, f.typed_y_box, "typed y-strip");
          expect(f.typed_zbar, f.typed_zbar_box, "typed zbar-strip");
        } else {
          expect(f.z, f.z_box, "z-strip");
          expect(f.x, f.x_box, "x-strip");
          expect(f.y, f.y_box, "y-strip");
          if (family == Family::C)
            expect(f.zbar, f.zbar_box, "zbar-strip");
          else
            expect(f.zbar, f.y_box, "zbar-strip (type B rule)");
        }
      }
    }
  }
  return res;
}

CheckResult check_removable_boxes(Family family, const std::vector<int>& max_shape,
                                  const std::vector<int>& ks) {
  CheckResult res;
  res.name = "removable-boxes-" + family_name(family);
  for (int k : ks) {
    for (const ShapeRecord& lambda : shapes_inside(family, k, max_shape)) {
      for (const ShapeRecord& mu : compatible_subshapes(lambda)) {
        ++res.cases;
        std::vector<Box> word_boxes = removable_boxes(lambda, mu);
        std::set<Box> expected;
        for (const Box& b : skew_boxes(lambda, mu)) {
          if (!is_removable_box_of_shape(lambda, b)) continue;
          std::vector<int> trimmed = lambda.parts;
          trimmed[b.row - 1] -= 1;
          bool compatible_removal = false;
          if (family == Family::D) {
            bool has_k = false;
            for (size_t i = 0; i < trimmed.size(); ++i)
              if (trimmed[i] == k) has_k = true;
            for (int t : has_k ? std::vector<int>{1, 2} : std::vector<int>{0})
              if (is_compatible(ShapeRecord::make(family, k, trimmed, t), mu))
                compatible_removal = true;
          } else {
            compatible_removal = is_compatible(ShapeRecord::make(family, k, trimmed), mu);
          }
          if (compatible_removal) expected.insert(b);
        }
        std::set<Box> got(word_boxes.begin(), word_boxes.end());
        bool ok = family == Family::D
                      ? std::includes(expected.begin(), expected.end(), got.begin(), got.end())
                      : got == expected;
        if (!ok)
          res.fail("removable boxes mismatch at lambda=" + shape_label(lambda) +
                   " mu=" + shape_label(mu));
      }
    }
  }
  return res;
}

CheckResult check_strip_counts(Family family, const std::vector<int>& max_shape,
                               const std::vector<int>& ks, int n_max) {
  CheckResult res;
  res.name = "strip-counts-" + family_name(family);
  // power-of-two embedding counts for every unimodal element
  for (int n = 2; n <= n_max; ++n) {
    for (const SignedPermutation& w : all_elements(family, n)) {
      if (!w.is_unimodal()) continue;
      ++res.cases;
      try {
        if (family == Family::D)
          (void)w.n_prime_count();
        else
          (void)w.n_count();
      } catch (const std::exception& e) {
        res.fail("embedding count not a power of two at w=" + w.str() + ": " + e.what());
      }
    }
  }
  // n(lambda/mu) = n(w_{lambda/mu}) over strips
  for (int k : ks) {
    for (const ShapeRecord& lambda : shapes_inside(family, k, max_shape)) {
      for (const ShapeRecord& mu : compatible_subshapes(lambda)) {
        StripFlags f = strip_class(lambda, mu);
        if (!f.k_horizontal_box) continue;
        ++res.cases;
        SignedPermutation w = skew_element(lambda, mu);
        if (family == Family::D) {
          if (n_prime_of_strip(lambda, mu) != w.n_prime_count())
            res.fail("n'(lambda/mu) != n'(w) at lambda=" + shape_label(lambda) +
                     " mu=" + shape_label(mu));
        } else {
          if (n_of_strip(lambda, mu) != w.n_count())
            res.fail("n(lambda/mu) != n(w) at lambda=" + shape_label(lambda) +
                     " mu=" + shape_label(mu));
        }
      }
    }
  }
  return res;
}

namespace {

uint64_t lcg_next(uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return state >> 16;
}

IdCoxElem random_elem(Family f, int n, const std::vector<SignedPermutation>& group,
                      uint64_t& rng) {
  IdCoxElem e(f, n);
  for (int t = 0; t < 3; ++t) {
    const SignedPermutation& w = group[lcg_next(rng) % group.size()];
    Monomial m = Monomial::var(VarId::beta(), lcg_next(rng) % 2)
                     .times(Monomial::var(VarId::z(1), lcg_next(rng) % 2));
    e.add(w, Poly::term(m, BigInt(1 + static_cast<long long>(lcg_next(rng) % 3))));
  }
  return e;
}

IdCoxElem scale(const IdCoxElem& e, const Poly& c) {
  IdCoxElem out(e.family(), e.rank());
  for (const auto& [w, p] : e.support()) out.add(w, p * c);
  return out;
}

}  // namespace

CheckResult check_algebra(Family family, int n_max) {
  CheckResult res;
  res.name = "algebra-" + family_name(family);
  const Poly beta = Poly::variable(VarId::beta());
  uint64_t rng = 0x9e3779b97f4a7c15ULL;

  for (int n = 2; n <= n_max; ++n) {
    std::vector<SignedPermutation> group = all_elements(family, n);
    std::vector<Gen> gens = SignedPermutation::valid_gens(family, n);

    // defining relations folded onto random elements
    std::vector<std::pair<Word, Word>> relations;
    auto word = [](std::initializer_list<Gen> gs) {
      Word w;
      w.letters.assign(gs);
      return w;
    };
    for (Gen a : gens)
      for (Gen b : gens) {
        if (a >= b) continue;
        bool adjacent;
        if (family == Family::D)
          adjacent = (a == kBoxGen && b == 2) || (a >= 1 && b == a + 1);
        else
          adjacent = (a == 0 && b == 1) || b == a + 1;
        if (!adjacent) relations.push_back({word({a, b}), word({b, a})});
      }
    for (Gen a : gens)
      if (a >= 1 && a + 1 < n)
        relations.push_back({word({a, a + 1, a}), word({a + 1, a, a + 1})});
    if (family == Family::B || family == Family::C) {
      if (n >= 2) relations.push_back({word({0, 1, 0, 1}), word({1, 0, 1, 0})});
    } else if (family == Family::D) {
      relations.push_back({word({kBoxGen, 1}), word({1, kBoxGen})});
      if (n >= 3) relations.push_back({word({kBoxGen, 2, kBoxGen}), word({2, kBoxGen, 2})});
    }
    for (int trial = 0; trial < 4; ++trial) {
      IdCoxElem e = random_elem(family, n, group, rng);
      for (const auto& [lhs, rhs] : relations) {
        ++res.cases;
        if (!(e.fold_word(lhs) == e.fold_word(rhs)))
          res.fail("relation " + lhs.str() + " = " + rhs.str() + " failed at rank " +
                   std::to_string(n));
      }
      for (Gen a : gens) {
        ++res.cases;
        IdCoxElem lhs = e.mul_gen(a).mul_gen(a);
        if (!(lhs == scale(e.mul_gen(a), beta)))
          res.fail("pi^2 = beta pi failed for generator " + std::to_string(a));
      }
    }

    // basis freeness: folding a reduced word of w lands exactly on pi_w
    for (const SignedPermutation& w : group) {
      ++res.cases;
      IdCoxElem folded = IdCoxElem::unit(family, n).fold_word(w.canonical_word());
      if (!(folded.support().size() == 1 && folded.coefficient(w).is_one()))
        res.fail("basis freeness failed at w=" + w.str());
    }

    // Hecke associativity and the length criterion
    const bool exhaustive = group.size() <= 64;
    long long triples = exhaustive
                            ? static_cast<long long>(group.size()) * group.size() * group.size()
                            : 1500;
    for (long long t = 0; t < triples; ++t) {
      SignedPermutation u, v, x;
      if (exhaustive) {
        long long idx = t;
        u = group[idx % group.size()];
        idx /= group.size();
        v = group[idx % group.size()];
        idx /= group.size();
        x = group[idx % group.size()];
      } else {
        u = group[lcg_next(rng) % group.size()];
        v = group[lcg_next(rng) % group.size()];
        x = group[lcg_next(rng) % group.size()];
      }
      ++res.cases;
      SignedPermutation uv = SignedPermutation::hecke_product(u, v);
      if (SignedPermutation::hecke_product(uv, x) !=
          SignedPermutation::hecke_product(u, SignedPermutation::hecke_product(v, x)))
        res.fail("Hecke associativity failed at rank " + std::to_string(n));
      bool additive = u.length() + v.length() == u.mul(v).length();
      if (additive != (uv == u.mul(v)))
        res.fail("Hecke length criterion failed at rank " + std::to_string(n));
    }
  }

  // stability under the embedding W_n -> W_{n+1}
  const int n_small = family == Family::A ? 3 : (family == Family::D ? 3 : 2);
  for (const SignedPermutation& w : all_elements(family, n_small)) {
    ++res.cases;
    int nx = 1, ny = 1, nz = family == Family::A ? 0 : 2;
    Poly small = grothendieck(w, nx, ny, nz);
    Poly big = grothendieck(w.embedded(n_small + 1), nx, ny, nz);
    if (small != big) res.fail("embedding stability failed at w=" + w.str());
    ++res.cases;
    for (const Word& rw : w.reduced_words())
      if (static_cast<int>(rw.letters.size()) != w.length())
        res.fail("reduced word length mismatch at w=" + w.str());
  }
  return res;
}

CheckResult check_hecke_bijection(Flavor flavor, const ShapeRecord& lambda,
                                  const ShapeRecord& mu, const EnumParams& params) {
  CheckResult res;
  res.name = "hecke-bijection-" + flavor_name(flavor);
  std::vector<TableauChain> chains = enumerate_tableaux(flavor, lambda, mu, params);
  std::set<std::vector<std::vector<int>>> factor_keys;
  int n_work = 0;
  for (const TableauChain& chain : chains) {
    std::vector<SignedPermutation> sigma = hecke_correspondence(chain);  // asserts recompose
    n_work = sigma.empty() ? std::max(min_window(lambda), params.n) : sigma[0].size();
    std::vector<std::vector<int>> key;
    for (const SignedPermutation& s : sigma) key.push_back(s.window());
    factor_keys.insert(std::move(key));
    ++res.cases;
  }
  if (factor_keys.size() != chains.size()) {
    res.fail("chain -> factorization map is not injective for lambda=" +
             shape_label(lambda) + " mu=" + shape_label(mu));
    return res;
  }

  // independent count of the parity-constrained monotone factorizations
  const Family family = lambda.family;
  if (n_work == 0) n_work = std::max({min_window(lambda), min_window(mu), params.n,
                                      family == Family::D ? 2 : 1});
  SignedPermutation w = skew_element(lambda, mu, n_work);
  HeckeInterval iv = HeckeInterval::of(w);

  struct Slot {
    std::vector<SignedPermutation> elems;
  };
  std::vector<Slot> slots;
  auto add_slot = [&](const std::vector<Gen>& window) {
    slots.push_back({subword_elements(family, n_work, window)});
  };
  const int n = params.n;
  switch (flavor) {
    case Flavor::Bitableau:
      for (int p = n - 1; p >= 1; --p) add_slot(dec_window(n_work, p));
      for (int p = 1; p <= n - 1; ++p) add_slot(inc_window(n_work, p));
      break;
    case Flavor::KTableau:
    case Flavor::TypedKTableau:
      for (int h = 1; h <= params.nz; ++h) {
        if (family == Family::D) {
          add_slot(inc_window(n_work, kBoxGen));
          add_slot(dec_window(n_work, 1));
        } else {
          add_slot(inc_window(n_work, family == Family::B ? 1 : 0));
          add_slot(dec_window(n_work, 0));
        }
      }
      break;
    case Flavor::KTritableau:
    case Flavor::TypedKTritableau:
      for (int p = n - 1; p >= 1; --p) add_slot(dec_window(n_work, p));
      for (int h = 1; h <= params.nz; ++h) {
        if (family == Family::D) {
          add_slot(inc_window(n_work, kBoxGen));
          add_slot(dec_window(n_work, 1));
        } else {
          add_slot(inc_window(n_work, family == Family::B ? 1 : 0));
          add_slot(dec_window(n_work, 0));
        }
      }
      for (int p = 1; p <= n - 1; ++p) add_slot(inc_window(n_work, p));
      break;
    default:
      res.fail("hecke bijection count implemented for the theorem flavors only");
      return res;
  }

  std::map<SignedPermutation, long long> state;
  state[SignedPermutation::identity(family, n_work)] = 1;
  for (const Slot& slot : slots) {
    std::map<SignedPermutation, long long> next;
    for (const auto& [cur, count] : state)
      for (const SignedPermutation& sigma : slot.elems) {
        SignedPermutation prod = SignedPermutation::hecke_product(sigma, cur);
        if (iv.find(prod) < 0) continue;
        next[prod] += count;
      }
    state = std::move(next);
  }
  long long factorization_count = state.count(w) ? state[w] : 0;
  ++res.cases;
  if (factorization_count != static_cast<long long>(chains.size()))
    res.fail("factorization count " + std::to_string(factorization_count) + " != chain count " +
             std::to_string(chains.size()) + " for lambda=" + shape_label(lambda) +
             " mu=" + shape_label(mu));
  return res;
}

}  // namespace grothkit
