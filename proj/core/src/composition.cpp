#include "twosig/composition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace twosig {

MonoidMatrix::MonoidMatrix(std::size_t d_, std::size_t rows_, std::size_t cols_)
    : d(d_), rows(rows_), cols(cols_), cells(rows_ * cols_, MonoidElement(d_)) {}

MonoidMatrix MonoidMatrix::transposed() const {
  MonoidMatrix t(d, cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

std::string MonoidMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += ',';
      out += at(i, j).to_string();
    }
    out += ']';
  }
  return out + "]";
}

std::strong_ordering operator<=>(const MonoidMatrix& a, const MonoidMatrix& b) {
  if (auto c = a.d <=> b.d; c != 0) return c;
  if (auto c = a.rows <=> b.rows; c != 0) return c;
  if (auto c = a.cols <=> b.cols; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end());
}

bool has_no_epsilon_lines(const MonoidMatrix& m) {
  std::vector<bool> row_hit(m.rows, false), col_hit(m.cols, false);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (!m.at(i, j).is_epsilon()) row_hit[i] = col_hit[j] = true;
    }
  }
  return std::all_of(row_hit.begin(), row_hit.end(), [](bool b) { return b; }) &&
         std::all_of(col_hit.begin(), col_hit.end(), [](bool b) { return b; });
}

MatrixComposition::MatrixComposition(MonoidMatrix m) : m_(std::move(m)) {
  if ((m_.rows == 0) != (m_.cols == 0)) throw InvariantViolation("composition with exactly one zero dimension");
  if (m_.cells.size() != m_.rows * m_.cols) throw InvariantViolation("composition cell count differs from shape");
  for (const auto& c : m_.cells) {
    if (c.d() != m_.d) throw DimensionMismatch("composition entries over different numbers of letters");
    weight_ += c.weight();
  }
  if (!has_no_epsilon_lines(m_)) {
    throw InvariantViolation("composition has an epsilon row or column: " + m_.to_string());
  }
}

MatrixComposition MatrixComposition::empty(std::size_t d) {
  MonoidMatrix m(d, 0, 0);
  (void)MonoidElement(d);  // validates d
  return MatrixComposition(std::move(m));
}

MatrixComposition MatrixComposition::parse(std::string_view text, std::size_t d) {
  std::string s;
  for (char c : text) {
    if (c == '[' || c == ']') continue;
    s += c;
  }
  std::vector<std::vector<std::string>> rows;
  bool nested = text.find("[[") != std::string_view::npos;
  auto split_cells = [](std::string_view row) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : row) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) cells.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) cells.push_back(cur);
    return cells;
  };
  if (nested) {
    std::size_t depth = 0;
    std::string cur;
    for (char c : text) {
      if (c == '[') {
        ++depth;
        if (depth == 2) cur.clear();
      } else if (c == ']') {
        if (depth == 2) rows.push_back(split_cells(cur));
        if (depth == 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
        --depth;
      } else if (depth == 2) {
        cur += c;
      }
    }
  } else {
    // Bare or singly bracketed text: rows are separated by ';'.
    std::size_t start = 0;
    while (start <= s.size()) {
      auto pos = s.find(';', start);
      std::string_view row(s.data() + start, (pos == std::string::npos ? s.size() : pos) - start);
      auto cells = split_cells(row);
      if (!cells.empty() || pos != std::string::npos) rows.push_back(std::move(cells));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  }
  if (rows.empty()) return empty(d);
  MonoidMatrix m(d, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw ParseError("ragged composition rows in '" + std::string(text) + "'");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = parse_monoid(rows[i][j], d);
  }
  return MatrixComposition(std::move(m));
}

std::strong_ordering operator<=>(const MatrixComposition& a, const MatrixComposition& b) {
  if (auto c = a.d() <=> b.d(); c != 0) return c;
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.m_ <=> b.m_;
}

namespace {

void check_same_d(const MatrixComposition& a, const MatrixComposition& b) {
  if (a.d() != b.d()) throw DimensionMismatch("compositions over different numbers of letters");
}

// Places b with its top-left cell at (row0, col0) of a grown copy of a.
MatrixComposition place(const MatrixComposition& a, const MatrixComposition& b, std::size_t rows, std::size_t cols,
                        std::size_t row0, std::size_t col0) {
  MonoidMatrix m(a.d(), rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(row0 + i, col0 + j) = b.at(i, j);
  }
  return MatrixComposition(std::move(m));
}

}  // namespace

MatrixComposition diag(const MatrixComposition& a, const MatrixComposition& b) {
  check_same_d(a, b);
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return place(a, b, a.rows() + b.rows(), a.cols() + b.cols(), a.rows(), a.cols());
}

MatrixComposition diag(const std::vector<MatrixComposition>& blocks, std::size_t d) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    if (b.d() != d) throw DimensionMismatch("diag: block over a different number of letters");
    rows += b.rows();
    cols += b.cols();
  }
  if (rows == 0) return MatrixComposition::empty(d);
  MonoidMatrix m(d, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return MatrixComposition(std::move(m));
}

std::vector<MatrixComposition> connected_factorization(const MatrixComposition& a) {
  std::vector<MatrixComposition> blocks;
  std::size_t r0 = 0, c0 = 0;
  while (r0 < a.rows()) {
    // Grow the rectangle [r0, re) x [c0, ce) until no non-epsilon cell of its
    // rows lies right of it and none of its columns lies below it.
    std::size_t re = r0 + 1, ce = c0 + 1;
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t i = r0; i < re; ++i) {
        for (std::size_t j = ce; j < a.cols(); ++j) {
          if (!a.at(i, j).is_epsilon()) {
            ce = j + 1;
            grown = true;
          }
        }
      }
      for (std::size_t j = c0; j < ce; ++j) {
        for (std::size_t i = re; i < a.rows(); ++i) {
          if (!a.at(i, j).is_epsilon()) {
            re = i + 1;
            grown = true;
          }
        }
      }
    }
    MonoidMatrix block(a.d(), re - r0, ce - c0);
    for (std::size_t i = r0; i < re; ++i) {
      for (std::size_t j = c0; j < ce; ++j) block.at(i - r0, j - c0) = a.at(i, j);
    }
    blocks.emplace_back(std::move(block));
    r0 = re;
    c0 = ce;
  }
  return blocks;
}

bool is_connected(const MatrixComposition& a) {
  return !a.is_empty() && connected_factorization(a).size() == 1;
}

MatrixComposition chain(ChainAxis axis, const MatrixComposition& a, const MatrixComposition& b) {
  check_same_d(a, b);
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  switch (axis) {
    case ChainAxis::Diagonal:
      return diag(a, b);
    case ChainAxis::Row:
      return place(a, b, a.rows() + b.rows() - 1, a.cols() + b.cols(), a.rows() - 1, a.cols());
    case ChainAxis::Column:
      return place(a, b, a.rows() + b.rows(), a.cols() + b.cols() - 1, a.rows(), a.cols() - 1);
  }
  throw InvariantViolation("unknown chain axis");
}

MatrixComposition materialize(const ChainedComposition& c) {
  if (c.head.is_epsilon()) throw InvariantViolation("chained composition with epsilon head");
  MonoidMatrix m(c.head.d(), 1, 1);
  m.at(0, 0) = c.head;
  MatrixComposition result(std::move(m));
  for (const auto& [axis, lambda] : c.steps) {
    if (lambda.is_epsilon()) throw InvariantViolation("chained composition with epsilon step");
    MonoidMatrix cell(lambda.d(), 1, 1);
    cell.at(0, 0) = lambda;
    result = chain(axis, result, MatrixComposition(std::move(cell)));
  }
  return result;
}

std::optional<ChainedComposition> parse_chained(const MatrixComposition& a) {
  if (a.is_empty()) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> path;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.at(i, j).is_epsilon()) path.emplace_back(i, j);
    }
  }
  if (path.front() != std::pair<std::size_t, std::size_t>{0, 0}) return std::nullopt;
  if (path.back() != std::pair<std::size_t, std::size_t>{a.rows() - 1, a.cols() - 1}) return std::nullopt;
  ChainedComposition c{a.at(0, 0), {}};
  for (std::size_t t = 1; t < path.size(); ++t) {
    auto [pi, pj] = path[t - 1];
    auto [i, j] = path[t];
    ChainAxis axis;
    if (i == pi + 1 && j == pj + 1) {
      axis = ChainAxis::Diagonal;
    } else if (i == pi && j == pj + 1) {
      axis = ChainAxis::Row;
    } else if (i == pi + 1 && j == pj) {
      axis = ChainAxis::Column;
    } else {
      return std::nullopt;
    }
    c.steps.emplace_back(axis, a.at(i, j));
  }
  return c;
}

std::vector<MonoidElement> enumerate_monoid(std::size_t d, unsigned w) {
  std::vector<MonoidElement> out;
  std::vector<unsigned> e(d, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t j, unsigned left) {
    if (j + 1 == d) {
      e[j] = left;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[j] = k;
      rec(j + 1, left - k);
    }
  };
  rec(0, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatrixComposition> enumerate_compositions(std::size_t d, unsigned w) {
  std::vector<MatrixComposition> out;
  if (w == 0) {
    out.push_back(MatrixComposition::empty(d));
    return out;
  }
  std::vector<std::vector<MonoidElement>> by_weight(w + 1);
  for (unsigned k = 0; k <= w; ++k) by_weight[k] = enumerate_monoid(d, k);

  for (std::size_t r = 1; r <= w; ++r) {
    for (std::size_t c = 1; c <= w; ++c) {
      if (std::max(r, c) > w) continue;
      MonoidMatrix m(d, r, c);
      std::vector<unsigned> col_weight(c, 0);
      std::function<void(std::size_t, unsigned, unsigned)> fill = [&](std::size_t slot, unsigned left,
                                                                       unsigned row_weight) {
        std::size_t i = slot / c, j = slot % c;
        if (slot == r * c) {
          if (left != 0) return;
          for (unsigned cw : col_weight) {
            if (cw == 0) return;
          }
          out.emplace_back(m);
          return;
        }
        if (j == 0) row_weight = 0;
        // Each remaining row needs weight at least one.
        std::size_t rows_after = r - i - 1;
        for (unsigned k = 0; k <= left; ++k) {
          if (j + 1 == c && row_weight + k == 0) continue;
          if (left - k < rows_after) break;
          for (const auto& mono : by_weight[k]) {
            m.at(i, j) = mono;
            col_weight[j] += k;
            fill(slot + 1, left - k, row_weight + k);
            col_weight[j] -= k;
          }
        }
        m.at(i, j) = MonoidElement(d);
      };
      fill(0, w, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatrixComposition> compositions_up_to(std::size_t d, unsigned max_weight) {
  std::vector<MatrixComposition> out;
  for (unsigned w = 0; w <= max_weight; ++w) {
    auto part = enumerate_compositions(d, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

const std::vector<MatrixComposition>& compositions_up_to_cached(std::size_t d, unsigned max_weight) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<std::vector<MatrixComposition>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{d, max_weight}];
  if (!slot) slot = std::make_unique<std::vector<MatrixComposition>>(compositions_up_to(d, max_weight));
  return *slot;
}

}  // namespace twosig
