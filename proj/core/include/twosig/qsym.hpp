#ifndef TWOSIG_QSYM_HPP
#define TWOSIG_QSYM_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "twosig/composition.hpp"
#include "twosig/grid.hpp"
#include "twosig/scalar.hpp"

namespace twosig {

/// Polynomial in the variables x_{i,j}, 1 <= i <= rows, 1 <= j <= cols, with
/// integer coefficients. Monomials are dense exponent matrices (row-major).
class TruncatedPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  TruncatedPolynomial(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static TruncatedPolynomial constant(std::size_t rows, std::size_t cols, const Integer& c);
  /// The single variable x_{i,j} (1-based).
  static TruncatedPolynomial variable(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  void add(const Exponents& e, const Integer& c);

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
  friend TruncatedPolynomial operator*(const Integer& s, TruncatedPolynomial a);
  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

  /// Deterministic text such as "3·x11^2·x22 + x12"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_shape(const TruncatedPolynomial& o) const;

  std::size_t rows_;
  std::size_t cols_;
  std::map<Exponents, Integer> terms_;
};

/// Monomial quasisymmetric function of a (over one letter) in the variables
/// of a rows x cols truncation.
TruncatedPolynomial monomial_expand(const MatrixComposition& a, std::size_t rows, std::size_t cols);

/// Substitutes x_{i,j} = Z_{i,j} (zero outside the support).
Integer substitute(const TruncatedPolynomial& f, const EvZeroGrid<Integer>& z);

/// Evaluation of the monomial function at Z, which is the signature coefficient.
Integer monomial_eval(const MatrixComposition& a, const EvZeroGrid<Integer>& z);

/// Sets the variables on line k of the axis to zero and renumbers later lines
/// down by one; the truncation shrinks by one along the axis.
TruncatedPolynomial formal_zero_insert(int axis, std::size_t k, const TruncatedPolynomial& f);

/// M_a M_b equals the sum of M_c over the quasi-shuffle a ⧢ b, as polynomials.
bool qsym_product_check(const MatrixComposition& a, const MatrixComposition& b, std::size_t rows, std::size_t cols);

/// Evaluating M_a on the block variables X ⊘ Y equals the deconcatenation sum.
bool qsym_coproduct_check(const MatrixComposition& a, const EvZeroGrid<Integer>& x, const EvZeroGrid<Integer>& y);

/// Rank of the coefficient matrix of the given polynomials over the rationals.
std::size_t polynomial_rank(const std::vector<TruncatedPolynomial>& polys);

}  // namespace twosig

#endif  // TWOSIG_QSYM_HPP
