#pragma once

// Partitions, words and (possibly skew) column-strict tableaux.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkostka {

using Letter = int;
using Word = std::vector<Letter>;

/// Raised for malformed input (bad shapes, unparsable text, violated preconditions).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency assertion fails (an identity that must hold did not).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closed interval [lo, hi] of letters. Empty when hi < lo.
struct Interval {
  Letter lo = 1;
  Letter hi = 0;

  [[nodiscard]] bool contains(Letter x) const noexcept { return lo <= x && x <= hi; }
  [[nodiscard]] int size() const noexcept { return hi < lo ? 0 : hi - lo + 1; }
  [[nodiscard]] bool empty() const noexcept { return hi < lo; }
  auto operator<=>(const Interval&) const = default;
};

/// 1-based (row, column) position.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Zero parts are dropped; throws InvalidInput unless the rest is weakly decreasing.
  Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const noexcept;  // |p|
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  /// parts()[i] for i < length(), 0 beyond.
  [[nodiscard]] int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }
  [[nodiscard]] bool contains(const Partition& inner) const noexcept;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

[[nodiscard]] Partition conjugate(const Partition& p);

/// True iff q dominates p (prefix sums of q are >= those of p). Sizes must agree;
/// partitions of different size are incomparable and yield false.
[[nodiscard]] bool dominance_leq(const Partition& p, const Partition& q);

/// All partitions of n in reverse lexicographic order ((n) first).
[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// Sum over i of (i-1) * p_i.
[[nodiscard]] int n_partition(const Partition& p);

/// Column-strict filling of a skew shape outer/inner, stored row-major, top row first.
/// rows[i] holds the entries of row i+1 starting at column inner[i]+1.
class Tableau {
 public:
  Tableau() = default;
  /// Straight-shape tableau; throws InvalidInput if not column-strict of partition shape.
  explicit Tableau(std::vector<std::vector<Letter>> rows);
  /// Skew tableau; throws InvalidInput if not column-strict of shape outer/inner.
  static Tableau skew(Partition inner, std::vector<std::vector<Letter>> rows);

  /// Builds without validation. For internal use by algorithms that maintain the invariants.
  static Tableau unchecked(Partition inner, std::vector<std::vector<Letter>> rows);

  [[nodiscard]] const std::vector<std::vector<Letter>>& rows() const noexcept { return rows_; }
  [[nodiscard]] const Partition& inner() const noexcept { return inner_; }
  [[nodiscard]] Partition outer() const;
  /// Outer shape; only meaningful for straight tableaux.
  [[nodiscard]] Partition shape() const { return outer(); }
  [[nodiscard]] bool is_straight() const noexcept { return inner_.empty(); }
  [[nodiscard]] int num_cells() const noexcept;
  [[nodiscard]] int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int num_cols() const;
  [[nodiscard]] bool empty() const noexcept { return num_cells() == 0; }

  /// Entry at a 1-based cell; throws std::out_of_range when the cell is not in the shape.
  [[nodiscard]] Letter at(Cell c) const;
  [[nodiscard]] bool has_cell(Cell c) const noexcept;

  /// Content vector of length n (letters must lie in [1, n]).
  [[nodiscard]] std::vector<int> content(int n) const;
  [[nodiscard]] Letter max_letter() const noexcept;
  [[nodiscard]] bool is_standard() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  void normalize();
  void validate() const;

  Partition inner_;
  std::vector<std::vector<Letter>> rows_;
};

/// Rows bottom-to-top, each left-to-right.
[[nodiscard]] Word row_word(const Tableau& t);
/// Columns left-to-right, each bottom-to-top.
[[nodiscard]] Word col_word(const Tableau& t);

/// Subword of letters in b, positions kept in order.
[[nodiscard]] Word restrict(const Word& w, Interval b);
/// Sub-filling of the cells whose letters lie in b (skew in general).
[[nodiscard]] Tableau restrict(const Tableau& t, Interval b);

/// Tableau obtained by splitting a word into rows of the given lengths (bottom row first).
/// Returns false if the result is not column-strict.
[[nodiscard]] bool word_fits_shape(const Word& w, const Partition& shape, Tableau* out = nullptr);

/// Content vector of length n.
[[nodiscard]] std::vector<int> word_content(const Word& w, int n);

/// Transposed shape of a straight tableau, reading columns as rows. Only for standard tableaux.
[[nodiscard]] Tableau transpose_standard(const Tableau& q);

// Text and JSON representations.

/// One row per line, space-separated integers; skew rows are written with leading '.' markers.
[[nodiscard]] std::string to_text(const Tableau& t);
/// Inverse of to_text. Rows may also be separated by '/', e.g. "1 1 2/3". Throws InvalidInput on malformed input.
[[nodiscard]] Tableau tableau_from_text(std::string_view text);

/// {"shape": [...], "inner": [...], "rows": [[...], ...]}
[[nodiscard]] std::string to_json(const Tableau& t);
[[nodiscard]] Tableau tableau_from_json(std::string_view text);

/// Accepts either representation (JSON when the first non-space character is '{').
[[nodiscard]] Tableau parse_tableau(std::string_view text);

/// "5,4,3" style.
[[nodiscard]] Partition parse_partition(std::string_view text);
[[nodiscard]] Word parse_word(std::string_view text);
[[nodiscard]] std::string to_string(const Partition& p);
[[nodiscard]] std::string to_string(const Word& w);

struct TableauHash {
  std::size_t operator()(const Tableau& t) const noexcept;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace gkostka
