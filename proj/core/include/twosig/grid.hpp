#ifndef TWOSIG_GRID_HPP
#define TWOSIG_GRID_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twosig/errors.hpp"
#include "twosig/scalar.hpp"

namespace twosig {

/// Dense scalar matrix, 0-based. Holds signature coefficient matrices and the
/// per-letter power tables used by the fast evaluation paths.
template <Semiring T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, zero<T>()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Axis convention for cumulative sums and shifts: 1 runs along the row index
/// i, 2 along the column index j, 0 along both.
template <Semiring T>
Matrix<T> cumsum(int axis, const Matrix<T>& x) {
  Matrix<T> out = x;
  if (axis == 1 || axis == 0) {
    for (std::size_t i = 1; i < out.rows(); ++i) {
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += out(i - 1, j);
    }
  }
  if (axis == 2 || axis == 0) {
    for (std::size_t i = 0; i < out.rows(); ++i) {
      for (std::size_t j = 1; j < out.cols(); ++j) out(i, j) += out(i, j - 1);
    }
  }
  return out;
}

/// Shift by one position along the axis, filling the first line with zeros.
template <Semiring T>
Matrix<T> shift_zero(int axis, const Matrix<T>& x) {
  const std::size_t di = (axis == 1 || axis == 0) ? 1 : 0;
  const std::size_t dj = (axis == 2 || axis == 0) ? 1 : 0;
  Matrix<T> out(x.rows(), x.cols());
  for (std::size_t i = di; i < x.rows(); ++i) {
    for (std::size_t j = dj; j < x.cols(); ++j) out(i, j) = x(i - di, j - dj);
  }
  return out;
}

namespace detail {

/// rows x cols window of K^d vectors, flat and row-major.
template <Semiring T>
struct Window {
  std::size_t d = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Window() = default;
  Window(std::size_t d_, std::size_t rows_, std::size_t cols_)
      : d(d_), rows(rows_), cols(cols_), data(d_ * rows_ * cols_, zero<T>()) {}

  std::span<const T> cell(std::size_t i, std::size_t j) const { return {data.data() + (i * cols + j) * d, d}; }
  std::span<T> cell(std::size_t i, std::size_t j) { return {data.data() + (i * cols + j) * d, d}; }

  bool row_equals(std::size_t i, std::span<const T> v) const {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!std::equal(v.begin(), v.end(), cell(i, j).begin())) return false;
    }
    return true;
  }
  bool col_equals(std::size_t j, std::span<const T> v) const {
    for (std::size_t i = 0; i < rows; ++i) {
      if (!std::equal(v.begin(), v.end(), cell(i, j).begin())) return false;
    }
    return true;
  }
  bool rows_equal(std::size_t a, std::size_t b) const {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!std::equal(cell(a, j).begin(), cell(a, j).end(), cell(b, j).begin())) return false;
    }
    return true;
  }
  bool cols_equal(std::size_t a, std::size_t b) const {
    for (std::size_t i = 0; i < rows; ++i) {
      if (!std::equal(cell(i, a).begin(), cell(i, a).end(), cell(i, b).begin())) return false;
    }
    return true;
  }

  Window cropped(std::size_t r, std::size_t c) const {
    Window out(d, r, c);
    for (std::size_t i = 0; i < std::min(r, rows); ++i) {
      for (std::size_t j = 0; j < std::min(c, cols); ++j) std::ranges::copy(cell(i, j), out.cell(i, j).begin());
    }
    return out;
  }

  Window select(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const {
    Window out(d, row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
      for (std::size_t j = 0; j < col_ids.size(); ++j) {
        std::ranges::copy(cell(row_ids[i], col_ids[j]), out.cell(i, j).begin());
      }
    }
    return out;
  }

  friend bool operator==(const Window&, const Window&) = default;
};

inline void check_channels(std::size_t d) {
  if (d == 0) throw DimensionMismatch("grid needs at least one channel");
}

template <Semiring T>
std::string window_to_string(const Window<T>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.rows; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < w.cols; ++j) {
      if (j) out += ',';
      auto c = w.cell(i, j);
      for (std::size_t k = 0; k < w.d; ++k) {
        if (k) out += ':';
        out += format_scalar(c[k]);
      }
    }
    out += ']';
  }
  return out + "]";
}

template <Semiring T>
Window<T> window_from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Window<T> w(1, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged grid rows");
    std::size_t j = 0;
    for (long long v : row) w.cell(i, j++)[0] = from_int<T>(v);
    ++i;
  }
  return w;
}

}  // namespace detail

/// Function N^2 -> K^d of finite support, stored as its support window.
/// Canonical: the last stored row and column each contain a nonzero vector,
/// or the grid is the 1 x 1 zero grid.
template <Semiring T>
class EvZeroGrid {
 public:
  using scalar_type = T;

  /// The all-zero grid over one channel.
  EvZeroGrid() : EvZeroGrid(1, 1, 1, {zero<T>()}) {}

  /// data is row-major with d consecutive channel values per cell.
  EvZeroGrid(std::size_t d, std::size_t rows, std::size_t cols, std::vector<T> data) {
    detail::check_channels(d);
    if (data.size() != d * rows * cols) throw DimensionMismatch("grid data size differs from d*rows*cols");
    w_.d = d;
    w_.rows = rows;
    w_.cols = cols;
    w_.data = std::move(data);
    canonicalize();
  }

  static EvZeroGrid zeros(std::size_t d) { return EvZeroGrid(d, 1, 1, std::vector<T>(d, zero<T>())); }

  /// Single-channel grid from integer literals.
  static EvZeroGrid from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    auto w = detail::window_from_rows<T>(rows);
    return EvZeroGrid(1, w.rows, w.cols, std::move(w.data));
  }

  std::size_t d() const { return w_.d; }
  std::size_t rows() const { return w_.rows; }
  std::size_t cols() const { return w_.cols; }
  std::pair<std::size_t, std::size_t> size() const { return {w_.rows, w_.cols}; }
  const std::vector<T>& data() const { return w_.data; }

  /// 0-based access to a stored cell.
  std::span<const T> cell(std::size_t i, std::size_t j) const { return w_.cell(i, j); }

  /// 1-based access with the zero extension.
  T value(std::size_t i, std::size_t j, std::size_t channel = 0) const {
    if (i == 0 || j == 0 || i > w_.rows || j > w_.cols) return zero<T>();
    return w_.cell(i - 1, j - 1)[channel];
  }

  bool is_zero() const {
    return std::all_of(w_.data.begin(), w_.data.end(), [](const T& x) { return twosig::is_zero(x); });
  }

  std::string to_string() const { return detail::window_to_string(w_); }

  const detail::Window<T>& window() const { return w_; }

  friend bool operator==(const EvZeroGrid&, const EvZeroGrid&) = default;

 private:
  void canonicalize() {
    auto nonzero = [&](std::size_t i, std::size_t j) {
      auto v = w_.cell(i, j);
      return std::any_of(v.begin(), v.end(), [](const T& x) { return !twosig::is_zero(x); });
    };
    std::size_t r = 0, c = 0;
    for (std::size_t i = 0; i < w_.rows; ++i) {
      for (std::size_t j = 0; j < w_.cols; ++j) {
        if (nonzero(i, j)) {
          r = std::max(r, i + 1);
          c = std::max(c, j + 1);
        }
      }
    }
    if (r == 0 || c == 0) {
      w_ = detail::Window<T>(w_.d, 1, 1);
    } else if (r != w_.rows || c != w_.cols) {
      w_ = w_.cropped(r, c);
    }
  }

  detail::Window<T> w_;
};

/// Eventually constant function N^2 -> K^d. The stored window's last row and
/// last column consist of the limit vector, and the value at (i, j) outside
/// the window is the value at (min(i, rows), min(j, cols)), i.e. the limit.
/// Canonical: no second-to-last row or column equals the limit throughout,
/// so canonical shapes are 1 x 1 (constant grids) or at least 2 x 2.
template <Semiring T>
class EvConstGrid {
 public:
  using scalar_type = T;

  /// The constant-zero grid over one channel.
  EvConstGrid() : EvConstGrid(1, 1, 1, {zero<T>()}) {}

  /// Throws InvariantViolation unless the last stored row and column are
  /// constant and equal to the bottom-right vector.
  EvConstGrid(std::size_t d, std::size_t rows, std::size_t cols, std::vector<T> data) {
    detail::check_channels(d);
    if (rows == 0 || cols == 0) throw DimensionMismatch("eventually constant grid needs a non-empty window");
    if (data.size() != d * rows * cols) throw DimensionMismatch("grid data size differs from d*rows*cols");
    w_.d = d;
    w_.rows = rows;
    w_.cols = cols;
    w_.data = std::move(data);
    auto lim = limit_vector();
    if (!w_.row_equals(rows - 1, lim) || !w_.col_equals(cols - 1, lim)) {
      throw InvariantViolation("last row and last column of an eventually constant grid must equal its limit");
    }
    canonicalize();
  }

  /// Appends one row and one column filled with the limit vector.
  static EvConstGrid padded(std::size_t d, std::size_t rows, std::size_t cols, const std::vector<T>& data,
                            const std::vector<T>& limit) {
    if (limit.size() != d) throw DimensionMismatch("limit vector length differs from d");
    if (data.size() != d * rows * cols) throw DimensionMismatch("grid data size differs from d*rows*cols");
    detail::Window<T> w(d, rows + 1, cols + 1);
    for (std::size_t i = 0; i <= rows; ++i) {
      for (std::size_t j = 0; j <= cols; ++j) {
        auto dst = w.cell(i, j);
        if (i < rows && j < cols) {
          std::copy_n(data.begin() + static_cast<std::ptrdiff_t>((i * cols + j) * d), d, dst.begin());
        } else {
          std::ranges::copy(limit, dst.begin());
        }
      }
    }
    return EvConstGrid(d, rows + 1, cols + 1, std::move(w.data));
  }

  static EvConstGrid constant(const std::vector<T>& c) { return EvConstGrid(c.size(), 1, 1, c); }

  /// Single-channel grid from integer literals (border must already be constant).
  static EvConstGrid from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    auto w = detail::window_from_rows<T>(rows);
    return EvConstGrid(1, w.rows, w.cols, std::move(w.data));
  }

  /// The eventually-zero grid Z viewed as an eventually constant grid.
  static EvConstGrid from_ev_zero(const EvZeroGrid<T>& z) {
    return padded(z.d(), z.rows(), z.cols(), z.data(), std::vector<T>(z.d(), zero<T>()));
  }

  std::size_t d() const { return w_.d; }
  std::size_t rows() const { return w_.rows; }
  std::size_t cols() const { return w_.cols; }
  const std::vector<T>& data() const { return w_.data; }

  /// Largest m with X_{m,.} != X_{m+1,.} (and likewise for columns), at least 1.
  std::pair<std::size_t, std::size_t> size() const {
    return {std::max<std::size_t>(1, w_.rows - 1), std::max<std::size_t>(1, w_.cols - 1)};
  }

  std::vector<T> limit_vector() const {
    auto c = w_.cell(w_.rows - 1, w_.cols - 1);
    return std::vector<T>(c.begin(), c.end());
  }

  std::span<const T> cell(std::size_t i, std::size_t j) const { return w_.cell(i, j); }

  /// 1-based access with the clamp extension.
  T value(std::size_t i, std::size_t j, std::size_t channel = 0) const {
    i = std::clamp<std::size_t>(i, 1, w_.rows);
    j = std::clamp<std::size_t>(j, 1, w_.cols);
    return w_.cell(i - 1, j - 1)[channel];
  }

  bool is_constant() const { return w_.rows == 1 && w_.cols == 1; }

  std::string to_string() const { return detail::window_to_string(w_); }

  const detail::Window<T>& window() const { return w_; }

  friend bool operator==(const EvConstGrid&, const EvConstGrid&) = default;

 private:
  void canonicalize() {
    auto lim = limit_vector();
    std::size_t r = w_.rows, c = w_.cols;
    while (r > 1 && w_.row_equals(r - 2, lim)) --r;
    while (c > 1 && w_.col_equals(c - 2, lim)) --c;
    if (r != w_.rows || c != w_.cols) w_ = w_.cropped(r, c);
  }

  detail::Window<T> w_;
};

template <Semiring T>
void check_same_channels(const EvZeroGrid<T>& a, const EvZeroGrid<T>& b) {
  if (a.d() != b.d()) throw DimensionMismatch("grids with different numbers of channels");
}

/// Duplicates row (axis 1) or column (axis 2) k, shifting later lines;
/// the identity when line k already belongs to the constant part.
template <Semiring T>
EvConstGrid<T> warp(int axis, std::size_t k, const EvConstGrid<T>& x) {
  if (k == 0) throw DimensionMismatch("warp position is 1-based");
  if (axis != 1 && axis != 2) throw DimensionMismatch("warp axis must be 1 or 2");
  const auto& w = x.window();
  std::vector<std::size_t> rows(w.rows), cols(w.cols);
  for (std::size_t i = 0; i < w.rows; ++i) rows[i] = i;
  for (std::size_t j = 0; j < w.cols; ++j) cols[j] = j;
  auto& ids = axis == 1 ? rows : cols;
  if (k >= ids.size()) return x;
  ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(k), k - 1);
  auto out = w.select(rows, cols);
  return EvConstGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Inserts a zero row (axis 1) or column (axis 2) at position k.
template <Semiring T>
EvZeroGrid<T> zero_insert(int axis, std::size_t k, const EvZeroGrid<T>& z) {
  if (k == 0) throw DimensionMismatch("zero insertion position is 1-based");
  if (axis != 1 && axis != 2) throw DimensionMismatch("zero insertion axis must be 1 or 2");
  const auto& w = z.window();
  const std::size_t rows = w.rows + (axis == 1 ? 1 : 0);
  const std::size_t cols = w.cols + (axis == 2 ? 1 : 0);
  if ((axis == 1 && k > w.rows) || (axis == 2 && k > w.cols)) return z;
  detail::Window<T> out(w.d, rows, cols);
  for (std::size_t i = 0; i < w.rows; ++i) {
    for (std::size_t j = 0; j < w.cols; ++j) {
      std::size_t ii = (axis == 1 && i + 1 >= k) ? i + 1 : i;
      std::size_t jj = (axis == 2 && j + 1 >= k) ? j + 1 : j;
      std::ranges::copy(w.cell(i, j), out.cell(ii, jj).begin());
    }
  }
  return EvZeroGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Two-parameter forward difference.
template <Ring T>
EvZeroGrid<T> delta(const EvConstGrid<T>& x) {
  const auto [r, c] = x.size();
  detail::Window<T> out(x.d(), r, c);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= c; ++j) {
      auto dst = out.cell(i - 1, j - 1);
      for (std::size_t k = 0; k < x.d(); ++k) {
        dst[k] = x.value(i + 1, j + 1, k) - x.value(i + 1, j, k) - x.value(i, j + 1, k) + x.value(i, j, k);
      }
    }
  }
  return EvZeroGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Suffix sums: (varsigma Z)_{i,j} = sum over s >= i, t >= j of Z_{s,t}.
template <Semiring T>
EvZeroGrid<T> varsigma(const EvZeroGrid<T>& z) {
  detail::Window<T> out = z.window();
  for (std::size_t i = out.rows - 1; i-- > 0;) {
    for (std::size_t j = 0; j < out.cols; ++j) {
      for (std::size_t k = 0; k < out.d; ++k) out.cell(i, j)[k] += out.cell(i + 1, j)[k];
    }
  }
  for (std::size_t i = 0; i < out.rows; ++i) {
    for (std::size_t j = out.cols - 1; j-- > 0;) {
      for (std::size_t k = 0; k < out.d; ++k) out.cell(i, j)[k] += out.cell(i, j + 1)[k];
    }
  }
  return EvZeroGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Removes every all-zero row and column.
template <Semiring T>
EvZeroGrid<T> nf_zero(const EvZeroGrid<T>& z) {
  const auto& w = z.window();
  std::vector<T> zero_vec(w.d, zero<T>());
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < w.rows; ++i) {
    if (!w.row_equals(i, zero_vec)) rows.push_back(i);
  }
  for (std::size_t j = 0; j < w.cols; ++j) {
    if (!w.col_equals(j, zero_vec)) cols.push_back(j);
  }
  if (rows.empty() || cols.empty()) return EvZeroGrid<T>::zeros(w.d);
  auto out = w.select(rows, cols);
  return EvZeroGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Removes every row equal to its successor and every column equal to its successor.
template <Semiring T>
EvConstGrid<T> nf_warp(const EvConstGrid<T>& x) {
  const auto& w = x.window();
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < w.rows; ++i) {
    if (i + 1 == w.rows || !w.rows_equal(i, i + 1)) rows.push_back(i);
  }
  for (std::size_t j = 0; j < w.cols; ++j) {
    if (j + 1 == w.cols || !w.cols_equal(j, j + 1)) cols.push_back(j);
  }
  auto out = w.select(rows, cols);
  return EvConstGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Normal form modulo constants: varsigma(delta(X)), i.e. X minus its limit.
template <Ring T>
EvZeroGrid<T> nf_const(const EvConstGrid<T>& x) {
  return varsigma(delta(x));
}

/// Normal form modulo constants and warping.
template <Ring T>
EvZeroGrid<T> nf_sim(const EvConstGrid<T>& x) {
  return nf_const(nf_warp(x));
}

/// Diagonal concatenation: A plus B shifted by size(A).
template <Semiring T>
EvZeroGrid<T> diag_concat(const EvZeroGrid<T>& a, const EvZeroGrid<T>& b) {
  check_same_channels(a, b);
  const auto [ra, ca] = a.size();
  detail::Window<T> out(a.d(), ra + b.rows(), ca + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) std::ranges::copy(a.cell(i, j), out.cell(i, j).begin());
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto dst = out.cell(ra + i, ca + j);
      auto src = b.cell(i, j);
      for (std::size_t k = 0; k < a.d(); ++k) dst[k] += src[k];
    }
  }
  return EvZeroGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// Concatenation along the diagonal for eventually constant grids:
/// nf_const(X) plus Y with its first row and column repeated size(X) more times.
template <Ring T>
EvConstGrid<T> box_concat(const EvConstGrid<T>& x, const EvConstGrid<T>& y) {
  if (x.d() != y.d()) throw DimensionMismatch("grids with different numbers of channels");
  const auto [p, q] = x.size();
  const auto nx = nf_const(x);
  const std::size_t rows = y.rows() + p, cols = y.cols() + q;
  detail::Window<T> out(x.d(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t yi = i < p ? 0 : i - p;
      const std::size_t yj = j < q ? 0 : j - q;
      auto dst = out.cell(i, j);
      std::ranges::copy(y.cell(yi, yj), dst.begin());
      if (i < nx.rows() && j < nx.cols()) {
        auto src = nx.cell(i, j);
        for (std::size_t k = 0; k < x.d(); ++k) dst[k] += src[k];
      }
    }
  }
  return EvConstGrid<T>(out.d, out.rows, out.cols, std::move(out.data));
}

/// X + c, with c added to every value (including the limit).
template <Semiring T>
EvConstGrid<T> add_constant(const EvConstGrid<T>& x, const std::vector<T>& c) {
  if (c.size() != x.d()) throw DimensionMismatch("constant length differs from d");
  auto w = x.window();
  for (std::size_t i = 0; i < w.rows; ++i) {
    for (std::size_t j = 0; j < w.cols; ++j) {
      auto dst = w.cell(i, j);
      for (std::size_t k = 0; k < w.d; ++k) dst[k] += c[k];
    }
  }
  return EvConstGrid<T>(w.d, w.rows, w.cols, std::move(w.data));
}

}  // namespace twosig

#endif  // TWOSIG_GRID_HPP
