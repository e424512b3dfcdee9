#ifndef GROTHKIT_WEYL_HPP
#define GROTHKIT_WEYL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grothkit {

enum class Family { A, B, C, D };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Simple-reflection index. -1 encodes the type D generator s_box; 0 is the
/// sign change of types B/C; i >= 1 are the transpositions s_i. The natural
/// int order (box < 1 < 2 < ...) is the order used for words and descents.
using Gen = int;
constexpr Gen kBoxGen = -1;

struct Word {
  std::vector<Gen> letters;

  std::string str() const;  // "2,B,1"
  static Word parse(std::string_view s);

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

/// Element of S_n (family A), W_n (B/C) or the even subgroup W~_n (D),
/// written in one-line window notation. Immutable after construction.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(Family f, int n);
  static SignedPermutation from_window(Family f, std::vector<int> window);

  Family family() const { return family_; }
  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// Signed value at position i (1-based).
  int operator()(int i) const { return window_[i - 1]; }

  bool is_identity() const;
  /// True when no window entry is negative (the element lies in S_n).
  bool is_permutation() const;

  std::vector<Gen> valid_gens() const;
  static std::vector<Gen> valid_gens(Family f, int n);

  SignedPermutation inverse() const;
  SignedPermutation mul(const SignedPermutation& o) const;  // (uv)(j) = u(v(j))
  SignedPermutation left_mul_gen(Gen a) const;              // s_a * w, acting on values
  SignedPermutation right_mul_gen(Gen a) const;             // w * s_a, acting on positions

  bool is_right_descent(Gen a) const;  // l(w s_a) < l(w)
  bool is_left_descent(Gen a) const;   // l(s_a w) < l(w)
  std::vector<Gen> right_descents() const;
  std::vector<Gen> left_descents() const;

  /// Coxeter length in the element's family, by greedy descent elimination.
  int length() const;

  /// Some reduced word, the one obtained by repeatedly peeling the smallest
  /// left descent; the full set comes from reduced_words().
  Word canonical_word() const;
  std::vector<Word> reduced_words() const;

  /// Hecke (Demazure) product: s_i <> w = s_i w when the length rises,
  /// w otherwise, extended associatively.
  static SignedPermutation hecke_product(const SignedPermutation& u,
                                         const SignedPermutation& v);

  /// True when w has a reduced word a_1...a_r with a_1 > ... > a_r >= p.
  /// In family D, p = kBoxGen asks for a subword of (n-1,...,2,box).
  bool is_decreasing_down_to(Gen p) const;
  /// Mirror: reduced word with p <= a_1 < ... < a_r; p = kBoxGen asks for a
  /// subword of (box,2,...,n-1).
  bool is_increasing_up_from(Gen p) const;

  bool is_unimodal() const;
  /// log2 of the number of reduced-word embeddings into the doubled window
  /// (n-1,...,1,0,0,1,...,n-1); families B/C, unimodal w only.
  int n_count() const;
  /// log2 of the embedding count into (n-1,...,2,1,box,2,...,n-1); family D.
  int n_prime_count() const;

  /// Same element inside the larger group, fixing n+1, ..., m.
  SignedPermutation embedded(int m) const;

  static SignedPermutation from_word(Family f, int n, const Word& word);

  std::string str() const;  // "2,-3,1"
  static SignedPermutation parse(Family f, std::string_view s);

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.family_ == b.family_ && a.window_ == b.window_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.family_ != b.family_) return a.family_ < b.family_;
    return a.window_ < b.window_;
  }

 private:
  Family family_ = Family::A;
  std::vector<int> window_;

  long long count_omega_embeddings(const std::vector<Gen>& omega,
                                   long long limit = 1LL << 62) const;
};

/// Every element of the family's rank-n group, sorted.
std::vector<SignedPermutation> all_elements(Family f, int n);

}  // namespace grothkit

#endif
