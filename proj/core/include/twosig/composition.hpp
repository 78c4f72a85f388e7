#ifndef TWOSIG_COMPOSITION_HPP
#define TWOSIG_COMPOSITION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosig/monoid.hpp"

namespace twosig {

/// Dense rows x cols matrix of monoid elements with no structural invariant.
/// Words of rows or columns in the one-parameter quasi-shuffle use this type,
/// since their lines may be entirely epsilon.
struct MonoidMatrix {
  std::size_t d = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MonoidElement> cells;  // row-major

  MonoidMatrix() = default;
  MonoidMatrix(std::size_t d, std::size_t rows, std::size_t cols);

  const MonoidElement& at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  MonoidElement& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }

  MonoidMatrix transposed() const;
  std::string to_string() const;

  friend bool operator==(const MonoidMatrix&, const MonoidMatrix&) = default;
  friend std::strong_ordering operator<=>(const MonoidMatrix& a, const MonoidMatrix& b);
};

/// A matrix of monoid elements without epsilon rows or columns.
/// The empty composition (ec) is the unique 0 x 0 composition.
class MatrixComposition {
 public:
  /// ec over one letter.
  MatrixComposition() = default;

  /// Validating constructor; throws InvariantViolation on epsilon lines.
  explicit MatrixComposition(MonoidMatrix m);

  static MatrixComposition empty(std::size_t d);

  /// Parses rows separated by ';' with cells separated by ',' or blanks.
  /// Cells use the MonoidElement text form: for d = 1 an exponent ("0" is
  /// epsilon), otherwise "e" or letters such as "1*2". Surrounding brackets
  /// are optional: "[[1,e],[e,2]]" and "1 e; e 2" are the same composition.
  /// An empty string is ec.
  static MatrixComposition parse(std::string_view text, std::size_t d);

  std::size_t d() const { return m_.d; }
  std::size_t rows() const { return m_.rows; }
  std::size_t cols() const { return m_.cols; }
  bool is_empty() const { return m_.rows == 0; }
  const MonoidElement& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  const MonoidMatrix& matrix() const { return m_; }

  unsigned weight() const { return weight_; }
  std::string to_string() const { return m_.to_string(); }

  MatrixComposition transposed() const { return MatrixComposition(m_.transposed()); }

  friend bool operator==(const MatrixComposition& a, const MatrixComposition& b) { return a.m_ == b.m_; }
  /// Canonical order: (d, weight, rows, cols, row-major entries).
  friend std::strong_ordering operator<=>(const MatrixComposition& a, const MatrixComposition& b);

 private:
  MonoidMatrix m_;
  unsigned weight_ = 0;
};

/// True iff no row and no column of m is entirely epsilon.
bool has_no_epsilon_lines(const MonoidMatrix& m);

/// Block matrix with a top-left, b bottom-right and epsilon elsewhere.
MatrixComposition diag(const MatrixComposition& a, const MatrixComposition& b);
MatrixComposition diag(const std::vector<MatrixComposition>& blocks, std::size_t d);

/// The unique list of connected compositions whose diag is a; empty for ec.
std::vector<MatrixComposition> connected_factorization(const MatrixComposition& a);
bool is_connected(const MatrixComposition& a);

enum class ChainAxis : int { Diagonal = 0, Row = 1, Column = 2 };

/// Chaining: Diagonal is diag; Row places b to the right of a with the last
/// row of a and the first row of b on a common row; Column places b below a
/// with the last column of a and the first column of b on a common column.
MatrixComposition chain(ChainAxis axis, const MatrixComposition& a, const MatrixComposition& b);

/// lambda_0 followed by (axis, lambda) steps; all lambdas are non-epsilon.
struct ChainedComposition {
  MonoidElement head;
  std::vector<std::pair<ChainAxis, MonoidElement>> steps;

  friend bool operator==(const ChainedComposition&, const ChainedComposition&) = default;
};

/// Left fold of chain over the steps, starting from the 1 x 1 composition [head].
MatrixComposition materialize(const ChainedComposition& c);

/// Recognizes compositions whose non-epsilon cells form a monotone lattice path
/// from the top-left to the bottom-right corner; nullopt otherwise (and for ec).
std::optional<ChainedComposition> parse_chained(const MatrixComposition& a);

/// Every composition over d letters of weight exactly w, in canonical order.
std::vector<MatrixComposition> enumerate_compositions(std::size_t d, unsigned w);

/// ec followed by all compositions of weight 1..max_weight, in canonical order.
std::vector<MatrixComposition> compositions_up_to(std::size_t d, unsigned max_weight);

/// Thread-safe memoized compositions_up_to; the reference stays valid for the
/// lifetime of the program.
const std::vector<MatrixComposition>& compositions_up_to_cached(std::size_t d, unsigned max_weight);

/// Every monoid element over d letters of weight exactly w, lexicographically.
std::vector<MonoidElement> enumerate_monoid(std::size_t d, unsigned w);

}  // namespace twosig

#endif  // TWOSIG_COMPOSITION_HPP
