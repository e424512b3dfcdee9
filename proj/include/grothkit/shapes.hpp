#ifndef GROTHKIT_SHAPES_HPP
#define GROTHKIT_SHAPES_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grothkit/weyl.hpp"

namespace grothkit {

/// Thrown when an operation requires a compatible pair and the given shapes
/// do not form one. The CLI maps it to its own exit status.
struct IncompatiblePairError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Box in row r >= 1, column c >= 1 of a Young diagram. Row 0 appears only
/// inside the R/A-set computations, never in a skew diagram.
struct Box {
  int row;
  int col;
  friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator<(const Box& a, const Box& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  }
};

/// A (typed) k-strict partition with its family tag. In family A the field k
/// plays the role of m. type is meaningful only in family D, where it is
/// positive exactly when some part equals k.
struct ShapeRecord {
  Family family = Family::A;
  int k = 0;
  std::vector<int> parts;  // weakly decreasing, no trailing zeros
  int type = 0;

  static ShapeRecord make(Family f, int k, std::vector<int> parts, int type = 0);

  int size() const;          // number of boxes
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const;     // 1-based, 0 past the end
  int k_length() const;      // number of parts greater than k
  int epsilon() const { return k_length() + type; }
  bool empty() const { return parts.empty(); }
  bool has_box(int r, int c) const { return r >= 1 && c >= 1 && part(r) >= c; }
  bool contains(const ShapeRecord& o) const;  // boxwise, ignores type

  bool same_parts(const ShapeRecord& o) const { return parts == o.parts; }

  std::string str() const;  // "k=1;type=1;parts=3,1"
  static ShapeRecord parse(Family f, std::string_view s);

  friend bool operator==(const ShapeRecord& a, const ShapeRecord& b) {
    return a.family == b.family && a.k == b.k && a.parts == b.parts && a.type == b.type;
  }
  friend bool operator!=(const ShapeRecord& a, const ShapeRecord& b) { return !(a == b); }
  friend bool operator<(const ShapeRecord& a, const ShapeRecord& b) {
    if (a.parts != b.parts) return a.parts < b.parts;
    return a.type < b.type;
  }
};

bool is_k_strict(const std::vector<int>& parts, int k);
/// Family-aware validity: partition shape, k-strictness for B/C/D, length
/// bound and positivity for A, and the type rule for D.
bool is_valid_shape(const ShapeRecord& s);

/// Boxes of the skew diagram lambda/mu, row-major.
std::vector<Box> skew_boxes(const ShapeRecord& lambda, const ShapeRecord& mu);

/// Smallest window size whose group contains w_lambda.
int min_window(const ShapeRecord& s);

bool is_grassmannian(const SignedPermutation& w, int k);

/// The unique (typed) k-Grassmannian element of the given shape in rank n.
/// Construction inverts the displayed shape formula and asserts the
/// roundtrip. Throws when n is too small.
SignedPermutation grassmannian_element(const ShapeRecord& s, int n);

/// Inverse of the above; checks that w is k-Grassmannian.
ShapeRecord shape_of_grassmannian(const SignedPermutation& w, int k);

/// Compatibility is the operational reduced-factorization condition:
/// mu inside lambda and l(w_lambda w_mu^-1) = |lambda| - |mu|.
bool is_compatible(const ShapeRecord& lambda, const ShapeRecord& mu);
bool is_compatible_triple(const ShapeRecord& mu, const ShapeRecord& nu,
                          const ShapeRecord& lambda);

/// w_{lambda/mu} = w_lambda w_mu^-1 in rank n; throws when the pair is not
/// compatible.
SignedPermutation skew_element(const ShapeRecord& lambda, const ShapeRecord& mu, int n);
SignedPermutation skew_element(const ShapeRecord& lambda, const ShapeRecord& mu);

/// Every strip/rook predicate for a nested pair, word-based flags alongside
/// their independent box-based characterizations.
struct StripFlags {
  bool contained = false;
  bool compatible = false;

  // box-based, any family
  bool horizontal = false;  // no two boxes in a column
  bool vertical = false;    // no two boxes in a row
  bool rook = false;
  bool k_rook = false;

  // word-based (families B/C/D); zbar follows the family B rule when asked
  bool k_horizontal_word = false;  // w_{lambda/mu} unimodal
  bool z = false;                  // decreasing down to 0
  bool zbar = false;               // increasing up from 0 (B: up from 1)
  bool x = false;                  // decreasing down to 1
  bool y = false;                  // increasing up from 1

  // word-based (family D)
  bool typed_x = false;     // decreasing down to 1 (= typed z)
  bool typed_y = false;     // increasing up from 1
  bool typed_zbar = false;  // increasing up from box
  bool extremal = false;

  // box-based characterizations, for the equivalence sweeps
  bool k_horizontal_box = false;
  bool z_box = false;
  bool zbar_box = false;
  bool x_box = false;
  bool y_box = false;
  bool typed_x_box = false;
  bool typed_y_box = false;
  bool typed_zbar_box = false;
};

StripFlags strip_class(const ShapeRecord& lambda, const ShapeRecord& mu);

/// n(lambda/mu): components of the A-set avoiding column k+1 (families B/C).
int n_of_strip(const ShapeRecord& lambda, const ShapeRecord& mu);
/// n'(lambda/mu): one less than the component count of the A-set (family D).
int n_prime_of_strip(const ShapeRecord& lambda, const ShapeRecord& mu);

/// Boxes b of lambda/mu with s_i w_{lambda/mu} = w_{(lambda minus b)/mu} for
/// some generator; computed from the word side.
std::vector<Box> removable_boxes(const ShapeRecord& lambda, const ShapeRecord& mu);

/// Box characterization of a removable box of lambda itself (families B/C/D):
/// lambda minus b is k-strict and, for a left box, b is not related to two
/// bottom right boxes of lambda.
bool is_removable_box_of_shape(const ShapeRecord& lambda, const Box& b);

/// All valid shapes contained in the given bound (typed variants included in
/// family D), sorted.
std::vector<ShapeRecord> shapes_inside(Family f, int k, const std::vector<int>& bound);

}  // namespace grothkit

#endif
