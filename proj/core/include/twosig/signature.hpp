#ifndef TWOSIG_SIGNATURE_HPP
#define TWOSIG_SIGNATURE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "twosig/algebra.hpp"
#include "twosig/composition.hpp"
#include "twosig/grid.hpp"
#include "twosig/parallel.hpp"
#include "twosig/scalar.hpp"

namespace twosig {

/// Index box (lower, upper]: chains satisfy lower < i_1 < ... <= upper per axis.
struct SignatureWindow {
  std::array<std::size_t, 2> lower{0, 0};
  std::array<std::size_t, 2> upper{0, 0};
};

template <Semiring T>
SignatureWindow full_window(const EvZeroGrid<T>& z) {
  return {{0, 0}, {z.rows(), z.cols()}};
}

/// Budget for brute-force evaluation, in summed products. Reads TWOSIG_GUARD
/// when set, otherwise 10^7.
std::uint64_t default_guard();

/// n choose k, saturating at the maximum of uint64.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

enum class Strategy {
  Auto,           // best applicable strategy below
  Naive,          // sum over all chain pairs
  RowDP,          // enumerate row chains, dynamic programming over columns
  Chained,        // linear-time recursion for chained compositions
  TwoByTwo,       // cubic path for 2 x 2 compositions
  BooleanMatmul,  // Boolean semiring, 2 x 2 composition with four equal entries
};

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

namespace detail {

struct Region {
  std::size_t r0 = 0, c0 = 0;  // 0-based offsets of the first admissible index
  std::size_t rows = 0, cols = 0;
};

template <Semiring T>
Region region_of(const EvZeroGrid<T>& z, const SignatureWindow& w) {
  if (w.lower[0] > w.upper[0] || w.lower[1] > w.upper[1]) {
    throw DimensionMismatch("signature window with lower bound above upper bound");
  }
  Region r;
  r.r0 = w.lower[0];
  r.c0 = w.lower[1];
  const std::size_t top = std::min(w.upper[0], z.rows());
  const std::size_t right = std::min(w.upper[1], z.cols());
  r.rows = top > r.r0 ? top - r.r0 : 0;
  r.cols = right > r.c0 ? right - r.c0 : 0;
  return r;
}

/// Z^{(lambda)} evaluated over a region, memoized per monoid element.
template <Semiring T>
class PowerCache {
 public:
  PowerCache(const EvZeroGrid<T>& z, Region region) : z_(z), region_(region) {}

  const Matrix<T>& get(const MonoidElement& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    if (m.d() != z_.d()) throw DimensionMismatch("composition and grid have different numbers of channels");
    Matrix<T> p(region_.rows, region_.cols);
    for (std::size_t i = 0; i < region_.rows; ++i) {
      for (std::size_t j = 0; j < region_.cols; ++j) p(i, j) = evaluate(z_.cell(region_.r0 + i, region_.c0 + j), m);
    }
    return cache_.emplace(m, std::move(p)).first->second;
  }

 private:
  const EvZeroGrid<T>& z_;
  Region region_;
  std::map<MonoidElement, Matrix<T>> cache_;
};

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t p = k; p-- > 0;) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (std::size_t q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

inline void check_guard(std::uint64_t work, std::uint64_t guard, const char* what) {
  if (work > guard) {
    throw GuardExceeded(std::string(what) + ": " + std::to_string(work) + " products exceed the guard of " +
                        std::to_string(guard));
  }
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

template <Semiring T>
void check_channels(const EvZeroGrid<T>& z, const MatrixComposition& a) {
  if (!a.is_empty() && a.d() != z.d()) {
    throw DimensionMismatch("composition and grid have different numbers of channels");
  }
}

}  // namespace detail

/// Brute-force sum over all pairs of strictly increasing index chains.
template <Semiring T>
T ss_coeff_naive(const EvZeroGrid<T>& z, const MatrixComposition& a, const SignatureWindow& window,
                 std::uint64_t guard = default_guard()) {
  detail::check_channels(z, a);
  if (a.is_empty()) return one<T>();
  const auto region = detail::region_of(z, window);
  const std::size_t m = a.rows(), n = a.cols();
  if (m > region.rows || n > region.cols) return zero<T>();
  detail::check_guard(detail::saturating_mul(binomial(region.rows, m), binomial(region.cols, n)), guard,
                      "naive signature evaluation");
  detail::PowerCache<T> powers(z, region);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, const Matrix<T>*>> cells;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!a.at(s, t).is_epsilon()) cells.push_back({{s, t}, &powers.get(a.at(s, t))});
    }
  }
  T total = zero<T>();
  auto rows = detail::first_combination(m);
  do {
    auto cols = detail::first_combination(n);
    do {
      T prod = one<T>();
      for (const auto& [st, p] : cells) prod *= (*p)(rows[st.first], cols[st.second]);
      total += prod;
    } while (detail::next_combination(cols, region.cols));
  } while (detail::next_combination(rows, region.rows));
  return total;
}

/// Enumerates chains along the axis with fewer of them and runs a prefix-sum
/// recursion along the other axis.
template <Semiring T>
T ss_coeff_row_dp(const EvZeroGrid<T>& z, const MatrixComposition& a, const SignatureWindow& window,
                  std::uint64_t guard = default_guard()) {
  detail::check_channels(z, a);
  if (a.is_empty()) return one<T>();
  const auto region = detail::region_of(z, window);
  const std::size_t m = a.rows(), n = a.cols();
  if (m > region.rows || n > region.cols) return zero<T>();
  const std::uint64_t row_chains = binomial(region.rows, m);
  const std::uint64_t col_chains = binomial(region.cols, n);
  const bool by_rows = row_chains <= col_chains;
  // The enumerated axis has k_len indices chosen from k_range; the swept axis
  // has sweep_len indices chosen from sweep_range.
  const std::size_t k_len = by_rows ? m : n, sweep_len = by_rows ? n : m;
  const std::size_t k_range = by_rows ? region.rows : region.cols, sweep_range = by_rows ? region.cols : region.rows;
  detail::check_guard(
      detail::saturating_mul(std::min(row_chains, col_chains), (m + 1) * (n + 1) * sweep_range), guard,
      "row-enumeration signature evaluation");
  detail::PowerCache<T> powers(z, region);
  // tables[e][s]: power table of the entry at enumerated index e, swept index s.
  std::vector<std::vector<const Matrix<T>*>> tables(k_len, std::vector<const Matrix<T>*>(sweep_len, nullptr));
  for (std::size_t e = 0; e < k_len; ++e) {
    for (std::size_t s = 0; s < sweep_len; ++s) {
      const auto& mono = by_rows ? a.at(e, s) : a.at(s, e);
      if (!mono.is_epsilon()) tables[e][s] = &powers.get(mono);
    }
  }
  auto at = [&](const Matrix<T>* p, std::size_t enumerated, std::size_t swept) -> const T& {
    return by_rows ? (*p)(enumerated, swept) : (*p)(swept, enumerated);
  };
  T total = zero<T>();
  std::vector<T> g(sweep_range), next(sweep_range);
  auto chain = detail::first_combination(k_len);
  do {
    for (std::size_t s = 0; s < sweep_len; ++s) {
      T prefix = zero<T>();
      for (std::size_t x = 0; x < sweep_range; ++x) {
        T f = one<T>();
        for (std::size_t e = 0; e < k_len; ++e) {
          if (tables[e][s]) f *= at(tables[e][s], chain[e], x);
        }
        if (s == 0) {
          next[x] = f;
        } else {
          next[x] = f * prefix;
          prefix += g[x];
        }
      }
      std::swap(g, next);
    }
    for (const T& v : g) total += v;
  } while (detail::next_combination(chain, k_range));
  return total;
}

/// Full coefficient matrix of a chained composition: entry (i, j) is the
/// coefficient over the window (lower, lower + (i + 1, j + 1)].
template <Semiring T>
Matrix<T> ss_matrix_chained(const EvZeroGrid<T>& z, const ChainedComposition& c, const SignatureWindow& window) {
  if (c.head.d() != z.d()) throw DimensionMismatch("composition and grid have different numbers of channels");
  const auto region = detail::region_of(z, window);
  detail::PowerCache<T> powers(z, region);
  Matrix<T> e = powers.get(c.head);
  for (const auto& [axis, lambda] : c.steps) {
    Matrix<T> prev;
    switch (axis) {
      case ChainAxis::Diagonal:
        prev = shift_zero(0, cumsum(0, e));
        break;
      case ChainAxis::Row:  // same row, next column
        prev = shift_zero(2, cumsum(2, e));
        break;
      case ChainAxis::Column:  // same column, next row
        prev = shift_zero(1, cumsum(1, e));
        break;
    }
    const auto& p = powers.get(lambda);
    for (std::size_t i = 0; i < region.rows; ++i) {
      for (std::size_t j = 0; j < region.cols; ++j) prev(i, j) *= p(i, j);
    }
    e = std::move(prev);
  }
  return cumsum(0, e);
}

template <Semiring T>
Matrix<T> ss_matrix_chained(const EvZeroGrid<T>& z, const ChainedComposition& c) {
  return ss_matrix_chained(z, c, full_window(z));
}

/// Full coefficient matrix of a 2 x 2 composition in O(rows^2 * cols).
template <Semiring T>
Matrix<T> ss_2x2(const EvZeroGrid<T>& z, const MatrixComposition& a, const SignatureWindow& window) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("ss_2x2 needs a 2 x 2 composition");
  detail::check_channels(z, a);
  const auto region = detail::region_of(z, window);
  detail::PowerCache<T> powers(z, region);
  const auto& p11 = powers.get(a.at(0, 0));
  const auto& p12 = powers.get(a.at(0, 1));
  const auto& p21 = powers.get(a.at(1, 0));
  const auto& p22 = powers.get(a.at(1, 1));
  const std::size_t rows = region.rows, cols = region.cols;
  Matrix<T> t(rows, cols);
  for (std::size_t i2 = 1; i2 < rows; ++i2) {
    for (std::size_t i1 = 0; i1 < i2; ++i1) {
      T prefix = zero<T>();
      for (std::size_t k = 0; k < cols; ++k) {
        if (k > 0) t(i2, k) += p12(i1, k) * p22(i2, k) * prefix;
        prefix += p11(i1, k) * p21(i2, k);
      }
    }
  }
  return cumsum(0, t);
}

template <Semiring T>
Matrix<T> ss_2x2(const EvZeroGrid<T>& z, const MatrixComposition& a) {
  return ss_2x2(z, a, full_window(z));
}

/// Coefficient of [[l,l],[l,l]] over the Boolean semiring: true iff two rows
/// of the 0/1 matrix Z^{(l)} share two columns, read off the Gram matrix Z Z^T.
/// l defaults to the first letter.
bool ss_bool_allones_2x2(const EvZeroGrid<Boolean>& z, const SignatureWindow& window,
                         std::optional<MonoidElement> letter = std::nullopt);
bool ss_bool_allones_2x2(const EvZeroGrid<Boolean>& z);

/// True iff a is 2 x 2 with four equal entries.
bool is_uniform_2x2(const MatrixComposition& a);

/// The strategy Auto resolves to for a over scalar T.
template <Semiring T>
Strategy select_strategy(const MatrixComposition& a) {
  if (a.is_empty()) return Strategy::Naive;
  if (parse_chained(a)) return Strategy::Chained;
  if constexpr (std::is_same_v<T, Boolean>) {
    if (is_uniform_2x2(a)) return Strategy::BooleanMatmul;
  }
  if (a.rows() == 2 && a.cols() == 2) return Strategy::TwoByTwo;
  return Strategy::RowDP;
}

/// Signature coefficient <SS_{lower;upper}(Z), a> by the requested strategy.
template <Semiring T>
T ss_coeff(const EvZeroGrid<T>& z, const MatrixComposition& a, const SignatureWindow& window,
           Strategy strategy = Strategy::Auto, std::uint64_t guard = default_guard()) {
  detail::check_channels(z, a);
  if (a.is_empty()) return one<T>();
  if (strategy == Strategy::Auto) strategy = select_strategy<T>(a);
  auto corner = [&](const Matrix<T>& m) {
    if (m.rows() == 0 || m.cols() == 0) return zero<T>();
    return m(m.rows() - 1, m.cols() - 1);
  };
  switch (strategy) {
    case Strategy::Naive:
      return ss_coeff_naive(z, a, window, guard);
    case Strategy::RowDP:
      return ss_coeff_row_dp(z, a, window, guard);
    case Strategy::Chained: {
      auto c = parse_chained(a);
      if (!c) throw DimensionMismatch("composition is not chained: " + a.to_string());
      return corner(ss_matrix_chained(z, *c, window));
    }
    case Strategy::TwoByTwo:
      return corner(ss_2x2(z, a, window));
    case Strategy::BooleanMatmul:
      if constexpr (std::is_same_v<T, Boolean>) {
        if (!is_uniform_2x2(a)) throw DimensionMismatch("Boolean path needs a 2 x 2 composition with equal entries");
        return Boolean(ss_bool_allones_2x2(z, window, a.at(0, 0)));
      } else {
        throw DimensionMismatch("Boolean path needs the Boolean semiring");
      }
    case Strategy::Auto:
      break;
  }
  throw DimensionMismatch("unknown strategy");
}

template <Semiring T>
T ss_coeff(const EvZeroGrid<T>& z, const MatrixComposition& a, Strategy strategy = Strategy::Auto) {
  return ss_coeff(z, a, full_window(z), strategy);
}

/// Signature coefficients of every composition up to a weight bound; ec maps
/// to one and zero coefficients are not stored.
template <Semiring T>
class TruncatedSignature {
 public:
  TruncatedSignature(std::size_t d, unsigned max_weight) : d_(d), max_weight_(max_weight) {
    coeffs_.emplace(MatrixComposition::empty(d), one<T>());
  }

  std::size_t d() const { return d_; }
  unsigned max_weight() const { return max_weight_; }

  T value(const MatrixComposition& a) const {
    if (a.weight() > max_weight_) {
      throw DimensionMismatch("composition weight exceeds the truncation of the signature");
    }
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? zero<T>() : it->second;
  }

  void set(const MatrixComposition& a, const T& v) {
    if (a.weight() > max_weight_) throw DimensionMismatch("composition weight exceeds the truncation");
    if (is_zero(v)) {
      coeffs_.erase(a);
    } else {
      coeffs_[a] = v;
    }
  }

  const std::map<MatrixComposition, T>& coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSignature&, const TruncatedSignature&) = default;

 private:
  std::size_t d_;
  unsigned max_weight_;
  std::map<MatrixComposition, T> coeffs_;
};

template <Semiring T>
TruncatedSignature<T> ss_truncated(const EvZeroGrid<T>& z, unsigned max_weight, unsigned threads = 1) {
  const auto& comps = compositions_up_to_cached(z.d(), max_weight);
  std::vector<T> values(comps.size(), zero<T>());
  const auto window = full_window(z);
  parallel_for(
      comps.size(), [&](std::size_t i) { values[i] = ss_coeff(z, comps[i], window); }, threads);
  TruncatedSignature<T> out(z.d(), max_weight);
  for (std::size_t i = 0; i < comps.size(); ++i) out.set(comps[i], values[i]);
  return out;
}

/// Product dual to diag deconcatenation, truncated at the smaller weight bound.
template <Semiring T>
TruncatedSignature<T> concat_product(const TruncatedSignature<T>& f, const TruncatedSignature<T>& g) {
  if (f.d() != g.d()) throw DimensionMismatch("signatures over different numbers of channels");
  const unsigned w = std::min(f.max_weight(), g.max_weight());
  std::map<MatrixComposition, T> acc;
  for (const auto& [b, vb] : f.coefficients()) {
    for (const auto& [c, vc] : g.coefficients()) {
      if (b.weight() + c.weight() > w) continue;
      const T prod = vb * vc;
      auto [it, inserted] = acc.try_emplace(diag(b, c), prod);
      if (!inserted) it->second += prod;
    }
  }
  TruncatedSignature<T> out(f.d(), w);
  for (const auto& [a, v] : acc) out.set(a, v);
  return out;
}

/// The warping invariant <SS(delta X), a>.
template <Ring T>
T psi(const EvConstGrid<T>& x, const MatrixComposition& a, Strategy strategy = Strategy::Auto) {
  return ss_coeff(delta(x), a, strategy);
}

/// <SS(A ⊘ B), a> assembled from the diag splits of a.
template <Semiring T>
T ss_via_chen(const EvZeroGrid<T>& a_grid, const EvZeroGrid<T>& b_grid, const MatrixComposition& a) {
  check_same_channels(a_grid, b_grid);
  T total = zero<T>();
  for (const auto& [b, c] : diag_splits(a)) total += ss_coeff(a_grid, b) * ss_coeff(b_grid, c);
  return total;
}

/// X ~ Y (equal up to constants and warping), decided by normal forms.
template <Ring T>
bool equivalent(const EvConstGrid<T>& x, const EvConstGrid<T>& y) {
  return nf_sim(x) == nf_sim(y);
}

namespace detail {

/// Entry (s, t) is letter j where channel j is nonzero, else the first nonzero
/// channel, else epsilon. nullopt for the zero grid.
template <Semiring T>
std::optional<MatrixComposition> witness_pattern(const EvZeroGrid<T>& x, std::size_t j) {
  if (x.is_zero()) return std::nullopt;
  MonoidMatrix m(x.d(), x.rows(), x.cols());
  for (std::size_t s = 0; s < x.rows(); ++s) {
    for (std::size_t t = 0; t < x.cols(); ++t) {
      auto v = x.cell(s, t);
      if (!is_zero(v[j])) {
        m.at(s, t) = MonoidElement::letter(x.d(), j + 1);
        continue;
      }
      for (std::size_t i = 0; i < x.d(); ++i) {
        if (!is_zero(v[i])) {
          m.at(s, t) = MonoidElement::letter(x.d(), i + 1);
          break;
        }
      }
    }
  }
  return MatrixComposition(std::move(m));
}

}  // namespace detail

/// A composition whose signature coefficients differ on X and Y, built from
/// the zero-insertion normal forms as in the separation argument; nullopt
/// when none of the candidates separates (which happens iff the normal forms agree).
template <Domain T>
std::optional<MatrixComposition> separating_witness(const EvZeroGrid<T>& x, const EvZeroGrid<T>& y) {
  check_same_channels(x, y);
  const auto nx = nf_zero(x), ny = nf_zero(y);
  std::vector<MatrixComposition> candidates;
  for (std::size_t j = 0; j < x.d(); ++j) {
    if (auto a = detail::witness_pattern(nx, j)) candidates.push_back(*a);
    if (auto a = detail::witness_pattern(ny, j)) candidates.push_back(*a);
  }
  for (const auto* g : {&nx, &ny}) {
    for (std::size_t j = 0; j < x.d(); ++j) {
      auto base = detail::witness_pattern(*g, j);
      if (!base) continue;
      for (std::size_t s = 0; s < g->rows(); ++s) {
        for (std::size_t t = 0; t < g->cols(); ++t) {
          if (is_zero(g->cell(s, t)[j])) continue;
          MonoidMatrix m = base->matrix();
          m.at(s, t) = star(m.at(s, t), MonoidElement::letter(x.d(), j + 1));
          candidates.emplace_back(std::move(m));
        }
      }
    }
  }
  for (const auto& a : candidates) {
    if (ss_coeff(x, a) != ss_coeff(y, a)) return a;
  }
  return std::nullopt;
}

}  // namespace twosig

#endif  // TWOSIG_SIGNATURE_HPP
