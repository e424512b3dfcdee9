#include "grothkit/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace grothkit {

std::string family_name(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::C:
      return "C";
    case Family::D:
      return "D";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  return std::nullopt;
}

std::string Word::str() const {
  std::string out;
  for (Gen a : letters) {
    if (!out.empty()) out += ",";
    out += a == kBoxGen ? "B" : std::to_string(a);
  }
  return out;
}

Word Word::parse(std::string_view s) {
  Word w;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (tok == "B" || tok == "b") {
      w.letters.push_back(kBoxGen);
    } else {
      int v = 0;
      bool any = false;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("Word::parse: bad token");
        v = v * 10 + (c - '0');
        any = true;
      }
      if (!any) throw std::invalid_argument("Word::parse: empty token");
      w.letters.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

SignedPermutation SignedPermutation::identity(Family f, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return from_window(f, std::move(w));
}

SignedPermutation SignedPermutation::from_window(Family f, std::vector<int> window) {
  std::vector<bool> seen(window.size(), false);
  int negatives = 0;
  for (int v : window) {
    int a = v < 0 ? -v : v;
    if (v == 0 || a > static_cast<int>(window.size()) || seen[a - 1])
      throw std::invalid_argument("SignedPermutation: window is not a signed permutation");
    seen[a - 1] = true;
    if (v < 0) ++negatives;
  }
  if (f == Family::A && negatives > 0)
    throw std::invalid_argument("SignedPermutation: family A window must be positive");
  if (f == Family::D && negatives % 2 != 0)
    throw std::invalid_argument("SignedPermutation: family D needs an even number of signs");
  SignedPermutation p;
  p.family_ = f;
  p.window_ = std::move(window);
  return p;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

bool SignedPermutation::is_permutation() const {
  for (int v : window_)
    if (v < 0) return false;
  return true;
}

std::vector<Gen> SignedPermutation::valid_gens(Family f, int n) {
  std::vector<Gen> gens;
  if (f == Family::D) gens.push_back(kBoxGen);
  if (f == Family::B || f == Family::C) gens.push_back(0);
  for (Gen i = 1; i < n; ++i) gens.push_back(i);
  return gens;
}

std::vector<Gen> SignedPermutation::valid_gens() const { return valid_gens(family_, size()); }

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 1; i <= size(); ++i) {
    int v = window_[i - 1];
    if (v > 0)
      inv[v - 1] = i;
    else
      inv[-v - 1] = -i;
  }
  SignedPermutation p;
  p.family_ = family_;
  p.window_ = std::move(inv);
  return p;
}

SignedPermutation SignedPermutation::mul(const SignedPermutation& o) const {
  if (family_ != o.family_ || size() != o.size())
    throw std::invalid_argument("SignedPermutation::mul: mismatched groups");
  std::vector<int> w(size());
  for (int i = 1; i <= size(); ++i) {
    int v = o.window_[i - 1];
    w[i - 1] = v > 0 ? window_[v - 1] : -window_[-v - 1];
  }
  SignedPermutation p;
  p.family_ = family_;
  p.window_ = std::move(w);
  return p;
}

namespace {

void check_gen(Family f, int n, Gen a) {
  bool ok = (a >= 1 && a <= n - 1) || (a == 0 && (f == Family::B || f == Family::C)) ||
            (a == kBoxGen && f == Family::D);
  if (!ok) throw std::invalid_argument("invalid generator for this family/rank");
}

}  // namespace

SignedPermutation SignedPermutation::left_mul_gen(Gen a) const {
  check_gen(family_, size(), a);
  SignedPermutation p = *this;
  if (a >= 1) {
    for (int& v : p.window_) {
      if (v == a)
        v = a + 1;
      else if (v == a + 1)
        v = a;
      else if (v == -a)
        v = -(a + 1);
      else if (v == -(a + 1))
        v = -a;
    }
  } else if (a == 0) {
    for (int& v : p.window_) {
      if (v == 1 || v == -1) v = -v;
    }
  } else {  // box: (1,2) -> (-2,-1)
    for (int& v : p.window_) {
      if (v == 1)
        v = -2;
      else if (v == 2)
        v = -1;
      else if (v == -1)
        v = 2;
      else if (v == -2)
        v = 1;
    }
  }
  return p;
}

SignedPermutation SignedPermutation::right_mul_gen(Gen a) const {
  check_gen(family_, size(), a);
  SignedPermutation p = *this;
  if (a >= 1) {
    std::swap(p.window_[a - 1], p.window_[a]);
  } else if (a == 0) {
    p.window_[0] = -p.window_[0];
  } else {
    int w1 = p.window_[0], w2 = p.window_[1];
    p.window_[0] = -w2;
    p.window_[1] = -w1;
  }
  return p;
}

bool SignedPermutation::is_right_descent(Gen a) const {
  if (a >= 1) return window_[a - 1] > window_[a];
  if (a == 0) return window_[0] < 0;
  return window_[0] + window_[1] < 0;  // box
}

bool SignedPermutation::is_left_descent(Gen a) const {
  // signed position of a value v: p when w(p) = v, -p when w(p) = -v
  auto pos = [&](int v) {
    for (int i = 1; i <= size(); ++i) {
      if (window_[i - 1] == v) return i;
      if (window_[i - 1] == -v) return -i;
    }
    return 0;
  };
  if (a >= 1) return pos(a) > pos(a + 1);
  if (a == 0) return pos(1) < 0;
  return pos(1) + pos(2) < 0;
}

std::vector<Gen> SignedPermutation::right_descents() const {
  std::vector<Gen> out;
  for (Gen a : valid_gens())
    if (is_right_descent(a)) out.push_back(a);
  return out;
}

std::vector<Gen> SignedPermutation::left_descents() const {
  std::vector<Gen> out;
  for (Gen a : valid_gens())
    if (is_left_descent(a)) out.push_back(a);
  return out;
}

int SignedPermutation::length() const {
  SignedPermutation w = *this;
  int len = 0;
  const std::vector<Gen> gens = valid_gens();
  for (;;) {
    Gen found = size() + 1;
    for (Gen a : gens) {
      if (w.is_right_descent(a)) {
        found = a;
        break;
      }
    }
    if (found == size() + 1) break;
    w = w.right_mul_gen(found);
    ++len;
  }
  if (!w.is_identity())
    throw std::logic_error("length: descent elimination did not reach the identity");
  return len;
}

Word SignedPermutation::canonical_word() const {
  Word word;
  SignedPermutation w = *this;
  const std::vector<Gen> gens = valid_gens();
  for (;;) {
    Gen found = size() + 1;
    for (Gen a : gens) {
      if (w.is_left_descent(a)) {
        found = a;
        break;
      }
    }
    if (found == size() + 1) break;
    word.letters.push_back(found);
    w = w.left_mul_gen(found);
  }
  return word;
}

namespace {

void reduced_words_rec(const SignedPermutation& w,
                       std::map<std::vector<int>, std::vector<Word>>& memo,
                       std::vector<Word>& out) {
  auto it = memo.find(w.window());
  if (it != memo.end()) {
    out = it->second;
    return;
  }
  std::vector<Word> words;
  if (w.is_identity()) {
    words.push_back(Word{});
  } else {
    for (Gen a : w.left_descents()) {
      std::vector<Word> sub;
      reduced_words_rec(w.left_mul_gen(a), memo, sub);
      for (auto& sw : sub) {
        Word full;
        full.letters.reserve(sw.letters.size() + 1);
        full.letters.push_back(a);
        full.letters.insert(full.letters.end(), sw.letters.begin(), sw.letters.end());
        words.push_back(std::move(full));
      }
    }
  }
  memo[w.window()] = words;
  out = std::move(words);
}

}  // namespace

std::vector<Word> SignedPermutation::reduced_words() const {
  std::map<std::vector<int>, std::vector<Word>> memo;
  std::vector<Word> out;
  reduced_words_rec(*this, memo, out);
  return out;
}

SignedPermutation SignedPermutation::hecke_product(const SignedPermutation& u,
                                                   const SignedPermutation& v) {
  if (u.family_ != v.family_ || u.size() != v.size())
    throw std::invalid_argument("hecke_product: mismatched groups");
  SignedPermutation w = u;
  for (Gen a : v.canonical_word().letters) {
    if (!w.is_right_descent(a)) w = w.right_mul_gen(a);
  }
  return w;
}

namespace {

// letters permitted for the monotone-word searches; box mode (D, p = box)
// means {box} union [2, n-1], never the letter 1
bool letter_allowed_dec(Gen a, Gen lo, bool boxmode) {
  if (boxmode) return a == kBoxGen || a >= 2;
  return a >= lo;
}

bool dec_rec(const SignedPermutation& w, Gen lo, Gen hi, bool boxmode) {
  if (w.is_identity()) return true;
  for (Gen a : w.left_descents()) {
    if (a > hi || !letter_allowed_dec(a, lo, boxmode)) continue;
    if (a == kBoxGen) {
      if (w.left_mul_gen(a).is_identity()) return true;
    } else if (dec_rec(w.left_mul_gen(a), lo, a - 1, boxmode)) {
      return true;
    }
  }
  return false;
}

bool inc_rec(const SignedPermutation& w, Gen lo, bool boxmode) {
  if (w.is_identity()) return true;
  for (Gen a : w.left_descents()) {
    if (boxmode) {
      if (a == kBoxGen) {
        if (inc_rec(w.left_mul_gen(a), 2, false)) return true;
      } else if (a >= 2 && inc_rec(w.left_mul_gen(a), a + 1, false)) {
        return true;
      }
    } else if (a != kBoxGen && a >= lo && inc_rec(w.left_mul_gen(a), a + 1, false)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool SignedPermutation::is_decreasing_down_to(Gen p) const {
  if (p == kBoxGen) {
    if (family_ != Family::D) throw std::invalid_argument("box bound needs family D");
    return dec_rec(*this, 0, size() - 1, true);
  }
  return dec_rec(*this, p, size() - 1, false);
}

bool SignedPermutation::is_increasing_up_from(Gen p) const {
  if (p == kBoxGen) {
    if (family_ != Family::D) throw std::invalid_argument("box bound needs family D");
    return inc_rec(*this, 2, true);
  }
  return inc_rec(*this, p, false);
}

long long SignedPermutation::count_omega_embeddings(const std::vector<Gen>& omega,
                                                     long long limit) const {
  const int target_len = length();
  long long count = 0;
  // pick an increasing set of positions whose letters stay reduced and
  // multiply to *this
  auto dfs = [&](auto&& self, size_t pos, const SignedPermutation& cur, int len) -> void {
    if (count >= limit) return;
    if (len == target_len) {
      if (cur == *this) ++count;
      return;
    }
    if (static_cast<int>(omega.size() - pos) < target_len - len) return;
    for (size_t i = pos; i < omega.size(); ++i) {
      if (!cur.is_right_descent(omega[i]))
        self(self, i + 1, cur.right_mul_gen(omega[i]), len + 1);
    }
  };
  if (target_len == 0) return is_identity() ? 1 : 0;
  dfs(dfs, 0, identity(family_, size()), 0);
  return count;
}

namespace {

std::vector<Gen> omega_window(Family f, int n, bool doubled_zero) {
  std::vector<Gen> omega;
  if (f == Family::D) {
    for (Gen a = n - 1; a >= 1; --a) omega.push_back(a);
    omega.push_back(kBoxGen);
    for (Gen a = 2; a <= n - 1; ++a) omega.push_back(a);
  } else {
    for (Gen a = n - 1; a >= 0; --a) omega.push_back(a);
    if (doubled_zero) omega.push_back(0);
    for (Gen a = 1; a <= n - 1; ++a) omega.push_back(a);
  }
  return omega;
}

int log2_exact(long long v, const char* what) {
  if (v <= 0) throw std::logic_error(std::string(what) + ": count is not positive");
  int e = 0;
  while ((v & 1) == 0) {
    v >>= 1;
    ++e;
  }
  if (v != 1) throw std::logic_error(std::string(what) + ": count is not a power of two");
  return e;
}

}  // namespace

bool SignedPermutation::is_unimodal() const {
  if (family_ == Family::A)
    throw std::invalid_argument("is_unimodal: defined for families B/C/D");
  return count_omega_embeddings(omega_window(family_, size(), false), 1) > 0;
}

int SignedPermutation::n_count() const {
  if (family_ != Family::B && family_ != Family::C)
    throw std::invalid_argument("n_count: families B/C only");
  return log2_exact(count_omega_embeddings(omega_window(family_, size(), true)), "n_count");
}

int SignedPermutation::n_prime_count() const {
  if (family_ != Family::D) throw std::invalid_argument("n_prime_count: family D only");
  return log2_exact(count_omega_embeddings(omega_window(family_, size(), false)),
                    "n_prime_count");
}

SignedPermutation SignedPermutation::embedded(int m) const {
  if (m < size()) throw std::invalid_argument("embedded: target rank too small");
  std::vector<int> w = window_;
  for (int v = size() + 1; v <= m; ++v) w.push_back(v);
  return from_window(family_, std::move(w));
}

SignedPermutation SignedPermutation::from_word(Family f, int n, const Word& word) {
  SignedPermutation w = identity(f, n);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    w = w.left_mul_gen(*it);
  return w;
}

std::string SignedPermutation::str() const {
  std::string out;
  for (int v : window_) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

SignedPermutation SignedPermutation::parse(Family f, std::string_view s) {
  std::vector<int> window;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok(s.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("window parse: bad token");
    window.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_window(f, std::move(window));
}

std::vector<SignedPermutation> all_elements(Family f, int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  std::vector<int> perm = base;
  do {
    if (f == Family::A) {
      out.push_back(SignedPermutation::from_window(f, perm));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (f == Family::D && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> w = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      out.push_back(SignedPermutation::from_window(f, std::move(w)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grothkit
