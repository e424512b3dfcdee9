#include "grothkit/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace grothkit {

std::pair<int, int> Symbol::order_key() const {
  switch (kind) {
    case Kind::Prime:
      return {0, -index};
    case Kind::Bar:
    case Kind::BarCirc:
      return {1, 2 * index - 1};
    case Kind::Plain:
    case Kind::PlainCirc:
      return {1, 2 * index};
    case Kind::DPrime:
      return {2, index};
  }
  return {3, 0};
}

std::string Symbol::str() const {
  switch (kind) {
    case Kind::Prime:
      return std::to_string(index) + "'";
    case Kind::Bar:
      return std::to_string(index) + "~";
    case Kind::BarCirc:
      return std::to_string(index) + "~o";
    case Kind::Plain:
      return std::to_string(index);
    case Kind::PlainCirc:
      return std::to_string(index) + "o";
    case Kind::DPrime:
      return std::to_string(index) + "''";
  }
  return "?";
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Bitableau:
      return "bitableau";
    case Flavor::KTableau:
      return "ktableau";
    case Flavor::KTritableau:
      return "tritableau";
    case Flavor::TypedKTableau:
      return "typed-ktableau";
    case Flavor::TypedKTritableau:
      return "typed-tritableau";
    case Flavor::BarredK:
      return "barred";
    case Flavor::BarredTypedK:
      return "barred-typed";
    case Flavor::StableA:
      return "stable";
    case Flavor::MixedTri:
      return "mixed";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view s) {
  for (Flavor f : {Flavor::Bitableau, Flavor::KTableau, Flavor::KTritableau,
                   Flavor::TypedKTableau, Flavor::TypedKTritableau, Flavor::BarredK,
                   Flavor::BarredTypedK, Flavor::StableA, Flavor::MixedTri})
    if (flavor_name(f) == s) return f;
  return std::nullopt;
}

namespace {

enum class StripKind {
  BoxHorizontal,
  BoxVertical,
  X,
  Y,
  Z,
  Zbar,
  TypedX,
  TypedY,
  TypedZ,
  TypedZbar
};

struct StepSpec {
  StripKind kind;
  Symbol::Kind sym;
  int sym_index;
  VarId var;
  // lowest letter of the monotone class: u_p decreases down to p, v_p
  // increases up from p; the middle blocks use the family's own bound
  Gen slot = 1;
  bool need_nonextremal = false;
};

bool flavor_is_typed(Flavor f) {
  return f == Flavor::TypedKTableau || f == Flavor::TypedKTritableau ||
         f == Flavor::BarredTypedK;
}

bool flavor_is_barred(Flavor f) {
  return f == Flavor::BarredK || f == Flavor::BarredTypedK;
}

void check_flavor_family(Flavor flavor, Family family) {
  bool ok = false;
  switch (flavor) {
    case Flavor::Bitableau:
    case Flavor::StableA:
      ok = family == Family::A;
      break;
    case Flavor::KTableau:
    case Flavor::KTritableau:
    case Flavor::BarredK:
      ok = family == Family::B || family == Family::C;
      break;
    case Flavor::TypedKTableau:
    case Flavor::TypedKTritableau:
    case Flavor::BarredTypedK:
      ok = family == Family::D;
      break;
    case Flavor::MixedTri:
      ok = family != Family::A;
      break;
  }
  if (!ok)
    throw std::invalid_argument("flavor " + flavor_name(flavor) + " does not fit family " +
                                family_name(family));
}

void push_z_pairs(std::vector<StepSpec>& steps, Family family, int nz) {
  const bool typed = family == Family::D;
  for (int h = 1; h <= nz; ++h) {
    steps.push_back({typed ? StripKind::TypedZbar : StripKind::Zbar, Symbol::Kind::Bar, h,
                     VarId::z(h), typed ? kBoxGen : 0});
    steps.push_back({typed ? StripKind::TypedZ : StripKind::Z, Symbol::Kind::Plain, h,
                     VarId::z(h), typed ? 1 : 0});
  }
}

std::vector<StepSpec> step_specs(Flavor flavor, Family family, const EnumParams& params) {
  std::vector<StepSpec> steps;
  const int n = params.n;
  switch (flavor) {
    case Flavor::Bitableau:
      for (int i = 1; i <= n - 1; ++i)
        steps.push_back(
            {StripKind::BoxHorizontal, Symbol::Kind::Prime, n - i, VarId::x(n - i), n - i});
      for (int i = 1; i <= n - 1; ++i)
        steps.push_back({StripKind::BoxVertical, Symbol::Kind::Plain, i, VarId::y(i), i});
      break;
    case Flavor::StableA:
      for (int i = 1; i <= params.nx; ++i)
        steps.push_back({StripKind::BoxHorizontal, Symbol::Kind::Prime, params.nx + 1 - i,
                         VarId::x(params.nx + 1 - i), 1});
      for (int i = 1; i <= params.ny; ++i)
        steps.push_back({StripKind::BoxVertical, Symbol::Kind::Plain, i, VarId::y(i), 1});
      break;
    case Flavor::KTableau:
    case Flavor::BarredK:
    case Flavor::TypedKTableau:
    case Flavor::BarredTypedK:
      push_z_pairs(steps, family, params.nz);
      break;
    case Flavor::KTritableau:
    case Flavor::TypedKTritableau: {
      const bool typed = family == Family::D;
      for (int i = 1; i <= n - 1; ++i)
        steps.push_back({typed ? StripKind::TypedX : StripKind::X, Symbol::Kind::Prime, n - i,
                         VarId::x(n - i), n - i, typed && i <= n - 2});
      push_z_pairs(steps, family, params.nz);
      for (int i = 1; i <= n - 1; ++i)
        steps.push_back({typed ? StripKind::TypedY : StripKind::Y, Symbol::Kind::DPrime, i,
                         VarId::y(i), i, typed && i >= 2});
      break;
    }
    case Flavor::MixedTri: {
      const bool typed = family == Family::D;
      for (int i = 1; i <= params.nx; ++i)
        steps.push_back({typed ? StripKind::TypedX : StripKind::X, Symbol::Kind::Prime,
                         params.nx + 1 - i, VarId::x(params.nx + 1 - i), 1});
      push_z_pairs(steps, family, params.nz);
      for (int i = 1; i <= params.ny; ++i)
        steps.push_back({typed ? StripKind::TypedY : StripKind::Y, Symbol::Kind::DPrime, i,
                         VarId::y(i), 1});
      break;
    }
  }
  return steps;
}

/// Chain enumeration. A chain is grown step by step through the Hecke
/// absorption equation sigma_i <> w_{lambda^(i-1)/mu} = w_{lambda^i/mu},
/// where sigma_i runs over the step's monotone class; the slack shape
/// nu^(i-1) is the reduced division of lambda^i by sigma_i, so that
/// sigma_i = w_{lambda^i/nu^(i-1)} holds exactly and the factors recompose
/// to w_{lambda/mu} by construction. The flavor's entry bounds are imposed
/// on the boxes of each strip as printed. Barred flavors have no slack and
/// use plain reduced steps.
class ChainEnumerator {
 public:
  ChainEnumerator(Flavor flavor, const ShapeRecord& lambda, const ShapeRecord& mu,
                  const EnumParams& params)
      : flavor_(flavor), family_(lambda.family), lambda_(lambda), mu_(mu), params_(params) {
    check_flavor_family(flavor, family_);
    if (lambda.family != mu.family || lambda.k != mu.k)
      throw std::invalid_argument("enumerate_tableaux: shape family/k mismatch");
    if (!is_compatible(lambda, mu))
      throw IncompatiblePairError("enumerate_tableaux: (" + lambda.str() + ", " + mu.str() +
                                  ") is not a compatible pair");
    steps_ = step_specs(flavor, family_, params);
    const bool needs_rank = flavor == Flavor::Bitableau || flavor == Flavor::KTritableau ||
                            flavor == Flavor::TypedKTritableau;
    if (needs_rank && params.n < min_window(lambda))
      throw std::invalid_argument("enumerate_tableaux: rank n too small for the shape");
    n_work_ = std::max(std::max(min_window(lambda), min_window(mu)), params.n);
    if (family_ == Family::D) n_work_ = std::max(n_work_, 2);

    for (ShapeRecord& s : shapes_inside(family_, lambda.k, lambda.parts))
      if (lambda.contains(s) && s.contains(mu)) shapes_.push_back(std::move(s));
    lambda_id_ = find_shape(lambda);
    mu_id_ = find_shape(mu);

    const size_t m = shapes_.size();
    welem_.reserve(m);
    for (const ShapeRecord& s : shapes_) welem_.push_back(grassmannian_element(s, n_work_));
    SignedPermutation inv_mu = welem_[mu_id_].inverse();
    skew_elem_.reserve(m);
    for (size_t i = 0; i < m; ++i) {
      skew_elem_.push_back(welem_[i].mul(inv_mu));
      elem_to_shape_[welem_[i]] = static_cast<int>(i);
      if (shapes_[i].contains(mu) &&
          skew_elem_[i].length() == shapes_[i].size() - mu_.size())
        skew_to_shape_[skew_elem_[i]] = static_cast<int>(i);
    }

    contains_.assign(m, std::vector<char>(m, 0));
    compatible_.assign(m, std::vector<char>(m, 0));
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        contains_[a][b] = shapes_[a].contains(shapes_[b]);
        if (!contains_[a][b]) continue;
        compatible_[a][b] =
            welem_[a].mul(welem_[b].inverse()).length() == shapes_[a].size() - shapes_[b].size();
      }

    for (const StepSpec& s : steps_) {
      auto key = std::make_pair(static_cast<int>(s.kind), s.slot);
      if (!class_elems_.count(key)) class_elems_[key] = monotone_class(s.kind, s.slot);
    }
  }

  void run(const std::function<void(TableauChain&&)>& emit) {
    const int N = static_cast<int>(steps_.size());
    if (N == 0) {
      if (lambda_id_ == mu_id_)
        emit(TableauChain{flavor_, family_, lambda_, mu_, params_, {}, {}});
      return;
    }
    lam_stack_.assign(N, 0);
    nu_stack_.assign(N, 0);
    if (flavor_is_barred(flavor_))
      dfs_barred(emit, 1, mu_id_);
    else
      dfs(emit, 1, mu_id_);
  }

  /// Restrict every step's strip to a prescribed box set (the chain lookup
  /// for a given filling); an empty vector means unconstrained.
  void set_step_boxes(std::vector<std::vector<Box>> boxes) { step_boxes_ = std::move(boxes); }

  /// Sum of beta^(|T|-|lambda/mu|) * weight over all chains, aggregated by
  /// dynamic programming over the same per-step transitions the explicit
  /// enumeration walks.
  Poly weighted_sum() {
    const int N = static_cast<int>(steps_.size());
    const int skew = lambda_.size() - mu_.size();
    if (N == 0) return lambda_id_ == mu_id_ ? Poly::one() : Poly::zero();
    if (flavor_is_barred(flavor_)) {
      Poly sum;
      run([&](TableauChain&& chain) {
        sum += Poly::term(chain.weight(), BigInt(1));
      });
      return sum;
    }
    std::map<int, Poly> state;
    state[mu_id_] = Poly::one();
    for (int i = 1; i <= N; ++i) {
      std::map<int, Poly> next;
      for (const auto& [s, p] : state) {
        for (const Transition& t : transitions(i, s)) {
          Monomial step_weight = Monomial::var(steps_[i - 1].var, t.count)
                                     .times(Monomial::var(VarId::beta(), t.count));
          Poly& slot = next[t.lam];
          slot += p.times_monomial(step_weight);
        }
      }
      state = std::move(next);
    }
    auto it = state.find(lambda_id_);
    if (it == state.end()) return Poly::zero();
    // every chain covers the skew shape, so each term carries beta^skew
    Poly out;
    for (const auto& [m, c] : it->second.terms()) {
      Monomial reduced;
      for (const auto& [code, exp] : m.factors()) {
        VarId v{static_cast<VarClass>(code >> 28), code & 0x0fffffffu};
        uint32_t e = v == VarId::beta() ? exp - static_cast<uint32_t>(skew) : exp;
        reduced = reduced.times(Monomial::var(v, e));
      }
      out += Poly::term(std::move(reduced), c);
    }
    return out;
  }

 private:
  Flavor flavor_;
  Family family_;
  ShapeRecord lambda_, mu_;
  EnumParams params_;
  std::vector<StepSpec> steps_;
  int n_work_ = 0;
  std::vector<ShapeRecord> shapes_;
  std::vector<SignedPermutation> welem_, skew_elem_;
  std::map<SignedPermutation, int> elem_to_shape_, skew_to_shape_;
  int lambda_id_ = -1, mu_id_ = -1;
  std::vector<std::vector<char>> contains_, compatible_;
  std::map<std::pair<int, Gen>, std::vector<SignedPermutation>> class_elems_;
  std::vector<int> lam_stack_, nu_stack_;

  struct Transition {
    int lam;    // lambda^i
    int nu;     // nu^(i-1)
    int count;  // boxes added by the step
  };
  std::map<std::pair<int, int>, std::vector<Transition>> transition_cache_;
  std::vector<std::vector<Box>> step_boxes_;  // optional per-step filter

  int find_shape(const ShapeRecord& s) const {
    for (size_t i = 0; i < shapes_.size(); ++i)
      if (shapes_[i] == s) return static_cast<int>(i);
    throw std::logic_error("ChainEnumerator: shape not interned");
  }

  // all elements with a reduced word inside the class window
  std::vector<SignedPermutation> monotone_class(StripKind kind, Gen slot) const {
    std::vector<Gen> window;
    const int n = n_work_;
    auto dec_from = [&](Gen lo) {
      for (Gen a = n - 1; a >= lo; --a) window.push_back(a);
    };
    auto inc_from = [&](Gen lo) {
      for (Gen a = lo; a <= n - 1; ++a) window.push_back(a);
    };
    switch (kind) {
      case StripKind::BoxHorizontal:
      case StripKind::X:
      case StripKind::TypedX:
      case StripKind::TypedZ:
        dec_from(slot);
        break;
      case StripKind::BoxVertical:
      case StripKind::Y:
      case StripKind::TypedY:
        inc_from(slot);
        break;
      case StripKind::Z:
        dec_from(0);
        break;
      case StripKind::Zbar:
        inc_from(family_ == Family::B ? 1 : 0);
        break;
      case StripKind::TypedZbar:
        window.push_back(kBoxGen);
        inc_from(2);
        break;
    }
    std::set<SignedPermutation> out;
    std::function<void(size_t, const SignedPermutation&)> gen =
        [&](size_t pos, const SignedPermutation& cur) {
          out.insert(cur);
          for (size_t i = pos; i < window.size(); ++i)
            if (!cur.is_right_descent(window[i])) gen(i + 1, cur.right_mul_gen(window[i]));
        };
    gen(0, SignedPermutation::identity(family_, n_work_));
    return std::vector<SignedPermutation>(out.begin(), out.end());
  }

  bool bounds_ok(const StepSpec& step, size_t a, size_t b) const {
    if (flavor_ != Flavor::Bitableau && flavor_ != Flavor::KTritableau &&
        flavor_ != Flavor::TypedKTritableau)
      return true;
    if (step.sym == Symbol::Kind::Bar || step.sym == Symbol::Kind::Plain) {
      if (flavor_ == Flavor::Bitableau) {
        // unmarked entries, bounded above by lambda_r + m - r per row
        const int m = lambda_.k;
        for (const Box& box : skew_boxes(shapes_[a], shapes_[b]))
          if (step.sym_index > lambda_.part(box.row) + m - box.row) return false;
      }
      return true;  // z entries of the tritableaux are unbounded
    }
    const int p = step.sym_index;
    const int k = lambda_.k;
    for (const Box& box : skew_boxes(shapes_[a], shapes_[b])) {
      if (flavor_ == Flavor::Bitableau) {
        // marked entries, bounded below by (mu_r + m + 1 - r)'
        if (p > mu_.part(box.row) + lambda_.k + 1 - box.row) return false;
        continue;
      }
      const bool typed = flavor_ == Flavor::TypedKTritableau;
      if (step.sym == Symbol::Kind::Prime) {
        if (box.row <= mu_.k_length() && p > mu_.part(box.row) - k + (typed ? 1 : 0))
          return false;
        if (box.col <= k) {
          int wv = welem_[mu_id_](k + 1 - box.col);
          if (p > (typed ? std::abs(wv) : wv)) return false;
        }
      } else {  // DPrime
        if (box.row <= lambda_.k_length() && p > lambda_.part(box.row) - k - (typed ? 0 : 1))
          return false;
        if (box.col <= k) {
          int wv = welem_[lambda_id_](k + 1 - box.col) - 1;
          if (p > (typed ? std::abs(wv) : wv)) return false;
        }
      }
    }
    return true;
  }

  bool pair_extremal(size_t a, size_t b) const {
    return shapes_[a].k_length() != shapes_[b].k_length() ||
           shapes_[a].type != shapes_[b].type;
  }

  void emit_chain(const std::function<void(TableauChain&&)>& emit) {
    const int N = static_cast<int>(steps_.size());
    TableauChain chain{flavor_, family_, lambda_, mu_, params_, {}, {}};
    chain.lambda_chain.reserve(N);
    chain.nu_chain.reserve(N);
    for (int s = 0; s < N; ++s) {
      chain.lambda_chain.push_back(shapes_[lam_stack_[s]]);
      chain.nu_chain.push_back(shapes_[nu_stack_[s]]);
    }
    emit(std::move(chain));
  }

  // valid moves of step i out of lambda^(i-1) = shapes_[s]; memoized
  const std::vector<Transition>& transitions(int i, int s) {
    auto key = std::make_pair(i, s);
    auto hit = transition_cache_.find(key);
    if (hit != transition_cache_.end()) return hit->second;
    const int N = static_cast<int>(steps_.size());
    const StepSpec& step = steps_[i - 1];
    const SignedPermutation& base = skew_elem_[s];
    std::vector<Transition> moves;
    for (const SignedPermutation& sigma :
         class_elems_.at({static_cast<int>(step.kind), step.slot})) {
      SignedPermutation t = SignedPermutation::hecke_product(sigma, base);
      auto it = skew_to_shape_.find(t);
      if (it == skew_to_shape_.end()) continue;  // partial product is not skew
      const int a = it->second;
      if (i == N && a != lambda_id_) continue;
      if (!contains_[a][s] || !compatible_[a][s]) continue;
      if (!compatible_[lambda_id_][a]) continue;  // must still reach lambda
      // nu^(i-1): reduced division sigma = w_{lambda^i / nu^(i-1)}
      SignedPermutation wnu = sigma.inverse().mul(welem_[a]);
      if (sigma.length() + wnu.length() != welem_[a].length()) continue;
      auto nu_it = elem_to_shape_.find(wnu);
      if (nu_it == elem_to_shape_.end()) continue;
      const int prev_nu = nu_it->second;
      if (!compatible_[prev_nu][mu_id_]) continue;
      if (i == 1 && prev_nu != mu_id_) continue;  // sigma_1 divides down to mu exactly
      if (family_ == Family::D && shapes_[a].type + shapes_[prev_nu].type == 3) continue;
      if (step.need_nonextremal && pair_extremal(a, prev_nu)) continue;
      if (!bounds_ok(step, a, prev_nu)) continue;
      moves.push_back({a, prev_nu, sigma.length()});
    }
    std::sort(moves.begin(), moves.end(), [this](const Transition& x, const Transition& y) {
      if (x.lam != y.lam) return shapes_[x.lam] < shapes_[y.lam];
      return shapes_[x.nu] < shapes_[y.nu];
    });
    return transition_cache_.emplace(key, std::move(moves)).first->second;
  }

  void dfs(const std::function<void(TableauChain&&)>& emit, int i, int lam_prev) {
    const int N = static_cast<int>(steps_.size());
    if (i > N) {
      emit_chain(emit);
      return;
    }
    for (const Transition& t : transitions(i, lam_prev)) {
      if (!step_boxes_.empty() &&
          skew_boxes(shapes_[t.lam], shapes_[t.nu]) != step_boxes_[i - 1])
        continue;
      if (i > 1) nu_stack_[i - 2] = t.nu;
      lam_stack_[i - 1] = t.lam;
      if (i == N) nu_stack_[N - 1] = lambda_id_;
      dfs(emit, i + 1, t.lam);
    }
  }

  void dfs_barred(const std::function<void(TableauChain&&)>& emit, int i, int lam_prev) {
    const int N = static_cast<int>(steps_.size());
    if (i > N) {
      emit_chain(emit);
      return;
    }
    const StepSpec& step = steps_[i - 1];
    for (size_t a = 0; a < shapes_.size(); ++a) {
      if (i == N && static_cast<int>(a) != lambda_id_) continue;
      if (!contains_[a][lam_prev] || !compatible_[a][lam_prev]) continue;
      if (!compatible_[lambda_id_][a]) continue;
      if (family_ == Family::D && shapes_[a].type + shapes_[lam_prev].type == 3) continue;
      SignedPermutation sig = welem_[a].mul(welem_[lam_prev].inverse());
      bool ok = false;
      switch (step.kind) {
        case StripKind::Z:
          ok = sig.is_decreasing_down_to(0);
          break;
        case StripKind::Zbar:
          ok = family_ == Family::B ? sig.is_increasing_up_from(1)
                                    : sig.is_increasing_up_from(0);
          break;
        case StripKind::TypedZ:
          ok = sig.is_decreasing_down_to(1);
          break;
        case StripKind::TypedZbar:
          ok = sig.is_increasing_up_from(kBoxGen);
          break;
        default:
          ok = false;
      }
      if (!ok) continue;
      lam_stack_[i - 1] = static_cast<int>(a);
      nu_stack_[i - 1] = static_cast<int>(a);
      dfs_barred(emit, i + 1, static_cast<int>(a));
    }
  }
};

std::vector<int> chain_sort_key(const TableauChain& chain) {
  std::vector<int> key;
  auto push_shape = [&key](const ShapeRecord& s) {
    for (int p : s.parts) key.push_back(p);
    key.push_back(-1);
    key.push_back(s.type);
  };
  for (const ShapeRecord& s : chain.lambda_chain) push_shape(s);
  key.push_back(-2);
  for (const ShapeRecord& s : chain.nu_chain) push_shape(s);
  return key;
}

}  // namespace

int TableauChain::beta_size() const {
  int total = 0;
  for (int i = 1; i <= steps(); ++i) total += lam(i).size() - nu(i - 1).size();
  return total;
}

Monomial TableauChain::weight() const {
  const std::vector<StepSpec> specs = step_specs(flavor, family, params);
  Monomial m;
  for (int i = 1; i <= steps(); ++i) {
    int count = lam(i).size() - nu(i - 1).size();
    if (count > 0) m = m.times(Monomial::var(specs[i - 1].var, count));
  }
  return m;
}

Filling TableauChain::filling() const {
  const std::vector<StepSpec> specs = step_specs(flavor, family, params);
  Filling f;
  for (int i = 1; i <= steps(); ++i) {
    Symbol sym{specs[i - 1].sym, specs[i - 1].sym_index};
    if (family == Family::D && lam(i).type == 2) {
      if (sym.kind == Symbol::Kind::Bar) sym.kind = Symbol::Kind::BarCirc;
      if (sym.kind == Symbol::Kind::Plain && specs[i - 1].var.cls == VarClass::Z)
        sym.kind = Symbol::Kind::PlainCirc;
    }
    for (const Box& b : skew_boxes(lam(i), nu(i - 1))) f.cells[b].push_back(sym);
  }
  for (auto& [b, syms] : f.cells) std::sort(syms.begin(), syms.end());
  return f;
}

std::string Filling::render(const ShapeRecord& lambda, const ShapeRecord& mu) const {
  std::string out;
  for (int r = 1; r <= lambda.rows(); ++r) {
    if (r > 1) out += "\n";
    for (int c = 1; c <= lambda.part(r); ++c) {
      if (c > 1) out += " ";
      if (c <= mu.part(r)) {
        out += ".";
        continue;
      }
      auto it = cells.find(Box{r, c});
      out += "{";
      if (it != cells.end()) {
        for (size_t i = 0; i < it->second.size(); ++i) {
          if (i) out += ",";
          out += it->second[i].str();
        }
      }
      out += "}";
    }
  }
  return out;
}

std::vector<TableauChain> enumerate_tableaux(Flavor flavor, const ShapeRecord& lambda,
                                             const ShapeRecord& mu,
                                             const EnumParams& params) {
  ChainEnumerator en(flavor, lambda, mu, params);
  std::vector<TableauChain> out;
  en.run([&out](TableauChain&& chain) { out.push_back(std::move(chain)); });
  std::stable_sort(out.begin(), out.end(), [](const TableauChain& a, const TableauChain& b) {
    return chain_sort_key(a) < chain_sort_key(b);
  });
  return out;
}

Poly theorem_rhs(Flavor flavor, const ShapeRecord& lambda, const ShapeRecord& mu,
                 const EnumParams& params) {
  ChainEnumerator en(flavor, lambda, mu, params);
  return en.weighted_sum();
}

std::vector<SignedPermutation> hecke_correspondence(const TableauChain& chain) {
  const int n = std::max({min_window(chain.lambda), min_window(chain.mu), chain.params.n,
                          chain.family == Family::D ? 2 : 1});
  std::vector<SignedPermutation> sigma;
  sigma.reserve(chain.steps());
  for (int i = 1; i <= chain.steps(); ++i)
    sigma.push_back(skew_element(chain.lam(i), chain.nu(i - 1), n));
  SignedPermutation acc = SignedPermutation::identity(chain.family, n);
  for (int i = chain.steps(); i >= 1; --i)
    acc = SignedPermutation::hecke_product(acc, sigma[i - 1]);
  if (acc != skew_element(chain.lambda, chain.mu, n))
    throw std::logic_error("hecke_correspondence: factors do not recompose");
  return sigma;
}

Poly skew_stable_grothendieck_A(const ShapeRecord& lambda, const ShapeRecord& mu, int nx,
                                int ny) {
  EnumParams params;
  params.nx = nx;
  params.ny = ny;
  return theorem_rhs(Flavor::StableA, lambda, mu, params);
}

Poly mixed_stanley_rhs(const ShapeRecord& lambda, const ShapeRecord& mu, int nx, int ny,
                       int nz) {
  EnumParams params;
  params.nx = nx;
  params.ny = ny;
  params.nz = nz;
  return theorem_rhs(Flavor::MixedTri, lambda, mu, params);
}

BitableauDirect enumerate_bitableaux_direct(const ShapeRecord& lambda, const ShapeRecord& mu,
                                            int n) {
  if (lambda.family != Family::A)
    throw std::invalid_argument("enumerate_bitableaux_direct: family A only");
  const int m = lambda.k;
  const std::vector<Box> boxes = skew_boxes(lambda, mu);
  BitableauDirect out;
  if (boxes.empty()) {
    out.count = 1;
    out.sum = Poly::one();
    return out;
  }
  // alphabet indices: 0..n-2 are the marked (n-1)' < ... < 1', then the
  // unmarked 1 < ... < n-1
  const int total_syms = 2 * (n - 1);
  auto is_marked = [&](int idx) { return idx < n - 1; };
  auto var_of = [&](int idx) {
    return is_marked(idx) ? VarId::x(n - 1 - idx) : VarId::y(idx - (n - 1) + 1);
  };
  std::map<Box, unsigned> chosen;
  const int skew_size = static_cast<int>(boxes.size());

  std::function<void(size_t, Monomial, int)> rec = [&](size_t at, Monomial weight,
                                                       int entries) {
    if (at == boxes.size()) {
      ++out.count;
      out.sum += Poly::term(
          weight.times(Monomial::var(VarId::beta(), entries - skew_size)), BigInt(1));
      return;
    }
    const Box& b = boxes[at];
    int lo = std::max(0, (n - 1) - (mu.part(b.row) + m + 1 - b.row));
    int hi = std::min(total_syms - 1, (n - 1) + lambda.part(b.row) + m - b.row - 1);
    auto find_neighbor = [&](int dr, int dc) -> std::optional<unsigned> {
      auto it = chosen.find(Box{b.row + dr, b.col + dc});
      if (it == chosen.end()) return std::nullopt;
      return it->second;
    };
    std::optional<unsigned> left =
        lambda.has_box(b.row, b.col - 1) && b.col - 1 > mu.part(b.row)
            ? find_neighbor(0, -1)
            : std::nullopt;
    std::optional<unsigned> up = lambda.has_box(b.row - 1, b.col) &&
                                         (b.row == 1 || b.col > mu.part(b.row - 1))
                                     ? find_neighbor(-1, 0)
                                     : std::nullopt;
    if (lo > hi) return;
    const int width = hi - lo + 1;
    for (unsigned mask = 1; mask < (1u << width); ++mask) {
      int min_idx = lo + __builtin_ctz(mask);
      int max_idx = lo + 31 - __builtin_clz(mask);
      if (left) {
        int lmax = 31 - __builtin_clz(*left);
        if (lmax > min_idx) continue;
        if (lmax == min_idx && !is_marked(min_idx)) continue;  // unmarked strict in rows
      }
      if (up) {
        int umax = 31 - __builtin_clz(*up);
        if (umax > min_idx) continue;
        if (umax == min_idx && is_marked(min_idx)) continue;  // marked strict in columns
      }
      Monomial w = weight;
      int count = 0;
      for (int idx = lo; idx <= hi; ++idx)
        if (mask & (1u << (idx - lo))) {
          w = w.times(Monomial::var(var_of(idx)));
          ++count;
        }
      chosen[b] = mask << lo;
      rec(at + 1, std::move(w), entries + count);
    }
    chosen.erase(b);
  };
  rec(0, Monomial(), 0);
  return out;
}

TableauChain chain_from_filling(Flavor flavor, const ShapeRecord& lambda,
                                const ShapeRecord& mu, const EnumParams& params,
                                const Filling& filling) {
  ChainEnumerator en(flavor, lambda, mu, params);
  // the boxes of each step are visible in the filling (circles match the
  // plain symbol of the step); the DFS only explores chains matching them
  const std::vector<StepSpec> specs = step_specs(flavor, lambda.family, params);
  std::vector<std::vector<Box>> boxes(specs.size());
  for (size_t i = 0; i < specs.size(); ++i) {
    for (const auto& [box, syms] : filling.cells)
      for (const Symbol& s : syms) {
        Symbol::Kind base = s.kind == Symbol::Kind::BarCirc
                                ? Symbol::Kind::Bar
                                : (s.kind == Symbol::Kind::PlainCirc ? Symbol::Kind::Plain
                                                                     : s.kind);
        if (base == specs[i].sym && s.index == specs[i].sym_index) boxes[i].push_back(box);
      }
  }
  en.set_step_boxes(std::move(boxes));
  std::vector<TableauChain> matches;
  en.run([&](TableauChain&& chain) {
    if (chain.filling().cells == filling.cells) matches.push_back(std::move(chain));
  });
  if (matches.size() != 1)
    throw std::invalid_argument("chain_from_filling: filling matched " +
                                std::to_string(matches.size()) + " chains");
  return matches[0];
}

}  // namespace grothkit
