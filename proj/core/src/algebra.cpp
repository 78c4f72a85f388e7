#include "twosig/algebra.hpp"

#include <bit>
#include <cstdint>
#include <functional>

namespace twosig {
namespace {

std::string coeff_prefix(const Integer& c, bool first) {
  std::string out;
  if (c < 0) {
    out = first ? "-" : " - ";
  } else if (!first) {
    out = " + ";
  }
  Integer mag = c < 0 ? Integer(-c) : c;
  if (mag != 1) out += mag.str() + "·";
  return out;
}

std::string composition_text(const MatrixComposition& a) { return a.is_empty() ? "ec" : a.to_string(); }

// Row words: letters are rows of equal length.
WordLinComb row_qshuffle(const MonoidMatrix& u, const MonoidMatrix& v) {
  if (u.cols != v.cols && u.rows != 0 && v.rows != 0) {
    throw DimensionMismatch("one-parameter quasi-shuffle: letters of different lengths");
  }
  if (u.d != v.d) throw DimensionMismatch("one-parameter quasi-shuffle: different numbers of letters");
  const std::size_t len = u.rows != 0 ? u.cols : v.cols;
  const std::size_t d = u.d;
  WordLinComb out;
  std::vector<MonoidElement> word;  // rows emitted so far, flattened
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == u.rows && j == v.rows) {
      MonoidMatrix m(d, word.size() / (len == 0 ? 1 : len), len);
      m.cells = word;
      out.add(m, Integer(1));
      return;
    }
    auto emit = [&](auto&& make_cell, std::size_t ni, std::size_t nj) {
      for (std::size_t c = 0; c < len; ++c) word.push_back(make_cell(c));
      rec(ni, nj);
      word.resize(word.size() - len);
    };
    if (i < u.rows) emit([&](std::size_t c) { return u.at(i, c); }, i + 1, j);
    if (j < v.rows) emit([&](std::size_t c) { return v.at(j, c); }, i, j + 1);
    if (i < u.rows && j < v.rows) emit([&](std::size_t c) { return star(u.at(i, c), v.at(j, c)); }, i + 1, j + 1);
  };
  rec(0, 0);
  return out;
}

MonoidMatrix row_block(const MonoidMatrix& m, std::size_t r0, std::size_t r1) {
  MonoidMatrix out(m.d, r1 - r0, m.cols);
  std::copy(m.cells.begin() + static_cast<std::ptrdiff_t>(r0 * m.cols),
            m.cells.begin() + static_cast<std::ptrdiff_t>(r1 * m.cols), out.cells.begin());
  return out;
}

// All pairs of strictly increasing maps [m] -> [j], [s] -> [j] whose images cover [j],
// given as image bitmasks.
std::vector<std::pair<std::uint32_t, std::uint32_t>> surjection_pairs(std::size_t m, std::size_t s, std::size_t j) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint32_t full = (j == 32) ? ~0U : ((1U << j) - 1U);
  for (std::uint32_t s1 = 0; s1 <= full; ++s1) {
    if (static_cast<std::size_t>(std::popcount(s1)) != m) continue;
    for (std::uint32_t s2 = 0; s2 <= full; ++s2) {
      if (static_cast<std::size_t>(std::popcount(s2)) != s) continue;
      if ((s1 | s2) != full) continue;
      out.emplace_back(s1, s2);
    }
  }
  return out;
}

std::vector<std::size_t> mask_positions(std::uint32_t mask) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
    if (mask & 1U) pos.push_back(i);
  }
  return pos;
}

}  // namespace

std::string to_string(const CompLinComb& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : x) {
    out += coeff_prefix(c, first) + composition_text(a);
    first = false;
  }
  return out;
}

std::string to_string(const TensorLinComb& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    out += coeff_prefix(c, first) + composition_text(k.first) + "⊗" + composition_text(k.second);
    first = false;
  }
  return out;
}

WordLinComb one_param_qshuffle(LineAxis axis, const MonoidMatrix& u, const MonoidMatrix& v) {
  if (axis == LineAxis::Rows) return row_qshuffle(u, v);
  WordLinComb out;
  for (const auto& [w, c] : row_qshuffle(u.transposed(), v.transposed())) out.add(w.transposed(), c);
  return out;
}

CompLinComb qshuffle(const MatrixComposition& a, const MatrixComposition& b) {
  if (a.d() != b.d()) throw DimensionMismatch("qshuffle: compositions over different numbers of letters");
  if (a.is_empty()) return CompLinComb(b);
  if (b.is_empty()) return CompLinComb(a);
  const std::size_t m = a.rows(), s = b.rows();
  MonoidMatrix pa(a.d(), m + s, a.cols());
  MonoidMatrix pb(a.d(), m + s, b.cols());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) pa.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) pb.at(m + i, j) = b.at(i, j);
  }
  CompLinComb out;
  for (const auto& [w, cw] : one_param_qshuffle(LineAxis::Cols, pa, pb)) {
    MonoidMatrix top = row_block(w, 0, m);
    MonoidMatrix bottom = row_block(w, m, m + s);
    for (const auto& [r, cr] : row_qshuffle(top, bottom)) out.add(MatrixComposition(r), cw * cr);
  }
  return out;
}

CompLinComb qshuffle(const CompLinComb& x, const CompLinComb& y) {
  CompLinComb out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      Integer c = ca * cb;
      for (const auto& [t, ct] : qshuffle(a, b)) out.add(t, c * ct);
    }
  }
  return out;
}

CompLinComb qshuffle_direct(const MatrixComposition& a, const MatrixComposition& b, std::size_t max_lines) {
  if (a.d() != b.d()) throw DimensionMismatch("qshuffle_direct: compositions over different numbers of letters");
  const std::size_t m = a.rows(), n = a.cols(), s = b.rows(), t = b.cols();
  if (m + s > max_lines || n + t > max_lines) {
    throw GuardExceeded("qshuffle_direct: operands exceed " + std::to_string(max_lines) + " rows or columns");
  }
  if (a.is_empty()) return CompLinComb(b);
  if (b.is_empty()) return CompLinComb(a);
  CompLinComb out;
  for (std::size_t j = std::max(m, s); j <= m + s; ++j) {
    auto row_pairs = surjection_pairs(m, s, j);
    for (std::size_t k = std::max(n, t); k <= n + t; ++k) {
      auto col_pairs = surjection_pairs(n, t, k);
      for (const auto& [p1, p2] : row_pairs) {
        auto ra = mask_positions(p1), rb = mask_positions(p2);
        for (const auto& [q1, q2] : col_pairs) {
          auto ca = mask_positions(q1), cb = mask_positions(q2);
          MonoidMatrix c(a.d(), j, k);
          for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t jj = 0; jj < n; ++jj) c.at(ra[i], ca[jj]) = star(c.at(ra[i], ca[jj]), a.at(i, jj));
          }
          for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t jj = 0; jj < t; ++jj) c.at(rb[i], cb[jj]) = star(c.at(rb[i], cb[jj]), b.at(i, jj));
          }
          out.add(MatrixComposition(std::move(c)), Integer(1));
        }
      }
    }
  }
  return out;
}

std::vector<TensorKey> diag_splits(const MatrixComposition& a) {
  auto blocks = connected_factorization(a);
  std::vector<TensorKey> out;
  for (std::size_t i = 0; i <= blocks.size(); ++i) {
    std::vector<MatrixComposition> left(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<MatrixComposition> right(blocks.begin() + static_cast<std::ptrdiff_t>(i), blocks.end());
    out.emplace_back(diag(left, a.d()), diag(right, a.d()));
  }
  return out;
}

TensorLinComb coproduct(const MatrixComposition& a) {
  TensorLinComb out;
  for (auto& split : diag_splits(a)) out.add(split, Integer(1));
  return out;
}

TensorLinComb coproduct(const CompLinComb& x) {
  TensorLinComb out;
  for (const auto& [a, c] : x) {
    for (auto& split : diag_splits(a)) out.add(split, c);
  }
  return out;
}

Integer counit(const MatrixComposition& a) { return a.is_empty() ? Integer(1) : Integer(0); }

Integer counit(const CompLinComb& x) {
  Integer sum = 0;
  for (const auto& [a, c] : x) {
    if (a.is_empty()) sum += c;
  }
  return sum;
}

CompLinComb antipode(const MatrixComposition& a) {
  if (a.is_empty()) return CompLinComb(a);
  auto blocks = connected_factorization(a);
  const std::size_t k = blocks.size();
  CompLinComb out;
  // Integer compositions (i_1, ..., i_l) of k group consecutive blocks; each group
  // is diag'ed and the groups are quasi-shuffled together with sign (-1)^l.
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t used) {
    if (used == k) {
      CompLinComb product(MatrixComposition::empty(a.d()));
      std::size_t start = 0;
      for (std::size_t len : parts) {
        std::vector<MatrixComposition> group(blocks.begin() + static_cast<std::ptrdiff_t>(start),
                                             blocks.begin() + static_cast<std::ptrdiff_t>(start + len));
        product = qshuffle(product, CompLinComb(diag(group, a.d())));
        start += len;
      }
      out += Integer(parts.size() % 2 == 0 ? 1 : -1) * product;
      return;
    }
    for (std::size_t len = 1; used + len <= k; ++len) {
      parts.push_back(len);
      rec(used + len);
      parts.pop_back();
    }
  };
  rec(0);
  return out;
}

CompLinComb antipode(const CompLinComb& x) {
  CompLinComb out;
  for (const auto& [a, c] : x) out += c * antipode(a);
  return out;
}

CompLinComb concat_product(const CompLinComb& f, const CompLinComb& g) {
  CompLinComb out;
  for (const auto& [b, cb] : f) {
    for (const auto& [c, cc] : g) out.add(diag(b, c), cb * cc);
  }
  return out;
}

TensorLinComb tensor(const CompLinComb& x, const CompLinComb& y) {
  TensorLinComb out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

TensorLinComb flip(const TensorLinComb& t) {
  TensorLinComb out;
  for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
  return out;
}

CompLinComb multiply(const TensorLinComb& t) {
  CompLinComb out;
  for (const auto& [k, c] : t) {
    for (const auto& [p, cp] : qshuffle(k.first, k.second)) out.add(p, c * cp);
  }
  return out;
}

}  // namespace twosig
