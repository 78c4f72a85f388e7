#include "twosig/qsym.hpp"

#include <set>

#include "twosig/algebra.hpp"
#include "twosig/signature.hpp"

namespace twosig {
namespace {

void require_one_letter(const MatrixComposition& a) {
  if (!a.is_empty() && a.d() != 1) throw DimensionMismatch("quasisymmetric functions are over one letter");
}

std::string variable_name(std::size_t i, std::size_t j) {
  if (i < 10 && j < 10) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

TruncatedPolynomial TruncatedPolynomial::constant(std::size_t rows, std::size_t cols, const Integer& c) {
  TruncatedPolynomial p(rows, cols);
  p.add(Exponents(rows * cols, 0), c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > rows || j > cols) throw DimensionMismatch("variable outside the truncation");
  TruncatedPolynomial p(rows, cols);
  Exponents e(rows * cols, 0);
  e[(i - 1) * cols + (j - 1)] = 1;
  p.add(e, Integer(1));
  return p;
}

void TruncatedPolynomial::add(const Exponents& e, const Integer& c) {
  if (e.size() != rows_ * cols_) throw DimensionMismatch("exponent matrix outside the truncation");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedPolynomial::check_shape(const TruncatedPolynomial& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("polynomials over different truncations");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add(e, Integer(-c));
  return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.check_shape(b);
  TruncatedPolynomial out(a.rows_, a.cols_);
  TruncatedPolynomial::Exponents e(a.rows_ * a.cols_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add(e, ca * cb);
    }
  }
  return out;
}

TruncatedPolynomial operator*(const Integer& s, TruncatedPolynomial a) {
  if (s == 0) {
    a.terms_.clear();
  } else {
    for (auto& [e, c] : a.terms_) c *= s;
  }
  return a;
}

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        unsigned p = e[i * cols_ + j];
        if (p == 0) continue;
        if (!mono.empty()) mono += "·";
        mono += variable_name(i + 1, j + 1);
        if (p > 1) mono += "^" + std::to_string(p);
      }
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "·";
      out += mono;
    }
    first = false;
  }
  return out;
}

TruncatedPolynomial monomial_expand(const MatrixComposition& a, std::size_t rows, std::size_t cols) {
  require_one_letter(a);
  if (a.is_empty()) return TruncatedPolynomial::constant(rows, cols, Integer(1));
  TruncatedPolynomial out(rows, cols);
  const std::size_t m = a.rows(), n = a.cols();
  if (m > rows || n > cols) return out;
  TruncatedPolynomial::Exponents e(rows * cols, 0);
  auto iota = detail::first_combination(m);
  do {
    auto kappa = detail::first_combination(n);
    do {
      std::fill(e.begin(), e.end(), 0U);
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < n; ++t) e[iota[s] * cols + kappa[t]] = a.at(s, t)[0];
      }
      out.add(e, Integer(1));
    } while (detail::next_combination(kappa, cols));
  } while (detail::next_combination(iota, rows));
  return out;
}

Integer substitute(const TruncatedPolynomial& f, const EvZeroGrid<Integer>& z) {
  if (z.d() != 1) throw DimensionMismatch("substitution needs a single-channel grid");
  Integer total = 0;
  for (const auto& [e, c] : f.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < f.rows() && term != 0; ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) {
        unsigned p = e[i * f.cols() + j];
        if (p != 0) term *= twosig::pow(z.value(i + 1, j + 1), p);
      }
    }
    total += term;
  }
  return total;
}

Integer monomial_eval(const MatrixComposition& a, const EvZeroGrid<Integer>& z) {
  require_one_letter(a);
  return ss_coeff_naive(z, a, full_window(z));
}

TruncatedPolynomial formal_zero_insert(int axis, std::size_t k, const TruncatedPolynomial& f) {
  if (axis != 1 && axis != 2) throw DimensionMismatch("zero insertion axis must be 1 or 2");
  const std::size_t rows = f.rows(), cols = f.cols();
  const std::size_t line_count = axis == 1 ? rows : cols;
  if (k == 0 || k > line_count) throw DimensionMismatch("zero insertion position outside the truncation");
  const std::size_t out_rows = axis == 1 ? rows - 1 : rows;
  const std::size_t out_cols = axis == 2 ? cols - 1 : cols;
  TruncatedPolynomial out(out_rows, out_cols);
  TruncatedPolynomial::Exponents e(out_rows * out_cols);
  for (const auto& [src, c] : f.terms()) {
    bool vanishes = false;
    std::fill(e.begin(), e.end(), 0U);
    for (std::size_t i = 0; i < rows && !vanishes; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        unsigned p = src[i * cols + j];
        if (p == 0) continue;
        std::size_t line = axis == 1 ? i : j;
        if (line + 1 == k) {
          vanishes = true;
          break;
        }
        std::size_t ii = (axis == 1 && line + 1 > k) ? i - 1 : i;
        std::size_t jj = (axis == 2 && line + 1 > k) ? j - 1 : j;
        e[ii * out_cols + jj] = p;
      }
    }
    if (!vanishes) out.add(e, c);
  }
  return out;
}

bool qsym_product_check(const MatrixComposition& a, const MatrixComposition& b, std::size_t rows, std::size_t cols) {
  require_one_letter(a);
  require_one_letter(b);
  TruncatedPolynomial lhs = monomial_expand(a, rows, cols) * monomial_expand(b, rows, cols);
  TruncatedPolynomial rhs(rows, cols);
  for (const auto& [c, coeff] : qshuffle(a, b)) rhs += coeff * monomial_expand(c, rows, cols);
  return lhs == rhs;
}

bool qsym_coproduct_check(const MatrixComposition& a, const EvZeroGrid<Integer>& x, const EvZeroGrid<Integer>& y) {
  require_one_letter(a);
  const auto joined = diag_concat(x, y);
  Integer split_sum = 0;
  for (const auto& [b, c] : diag_splits(a)) split_sum += monomial_eval(b, x) * monomial_eval(c, y);
  return monomial_eval(a, joined) == split_sum;
}

std::size_t polynomial_rank(const std::vector<TruncatedPolynomial>& polys) {
  std::set<TruncatedPolynomial::Exponents> monomials;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) monomials.insert(e);
  }
  std::vector<TruncatedPolynomial::Exponents> columns(monomials.begin(), monomials.end());
  std::vector<std::vector<Rational>> m(polys.size(), std::vector<Rational>(columns.size()));
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      auto it = polys[r].terms().find(columns[c]);
      if (it != polys[r].terms().end()) m[r][c] = Rational(it->second);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size() && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < columns.size(); ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace twosig
