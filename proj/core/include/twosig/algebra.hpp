#ifndef TWOSIG_ALGEBRA_HPP
#define TWOSIG_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twosig/composition.hpp"
#include "twosig/scalar.hpp"

namespace twosig {

/// Finitely supported map Key -> Integer that never stores a zero coefficient.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Integer>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, Integer c = Integer(1)) { add(k, std::move(c)); }

  void add(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, Integer(-c));
    return *this;
  }
  LinComb& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Integer& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

using CompLinComb = LinComb<MatrixComposition>;
using TensorKey = std::pair<MatrixComposition, MatrixComposition>;
using TensorLinComb = LinComb<TensorKey>;
using WordLinComb = LinComb<MonoidMatrix>;

/// "c1·a1 + c2·a2 + ..." in canonical order; "0" when empty.
std::string to_string(const CompLinComb& x);
std::string to_string(const TensorLinComb& x);

enum class LineAxis { Rows, Cols };

/// Classical quasi-shuffle of two words whose letters are the rows (or the
/// columns) of u and v; merged letters are combined cellwise with star.
WordLinComb one_param_qshuffle(LineAxis axis, const MonoidMatrix& u, const MonoidMatrix& v);

/// Two-parameter quasi-shuffle: a column quasi-shuffle of the padded operands
/// followed by a row quasi-shuffle of each result's two row blocks.
CompLinComb qshuffle(const MatrixComposition& a, const MatrixComposition& b);
CompLinComb qshuffle(const CompLinComb& x, const CompLinComb& y);

/// Same product by enumerating all pairs of row and column surjection
/// matrices; refuses operands with more than max_lines total rows or columns.
CompLinComb qshuffle_direct(const MatrixComposition& a, const MatrixComposition& b, std::size_t max_lines = 8);

/// Deconcatenation along the connected factorization.
TensorLinComb coproduct(const MatrixComposition& a);
TensorLinComb coproduct(const CompLinComb& x);

/// Coefficient of ec (compositions over any number of letters).
Integer counit(const CompLinComb& x);
Integer counit(const MatrixComposition& a);

CompLinComb antipode(const MatrixComposition& a);
CompLinComb antipode(const CompLinComb& x);

/// Dual product: <F·G, a> = sum over diag(b, c) = a of <F, b><G, c>.
CompLinComb concat_product(const CompLinComb& f, const CompLinComb& g);

/// x ⊗ y.
TensorLinComb tensor(const CompLinComb& x, const CompLinComb& y);

/// Swaps the two tensor factors.
TensorLinComb flip(const TensorLinComb& t);

/// Applies the quasi-shuffle to each tensor term.
CompLinComb multiply(const TensorLinComb& t);

/// The diag splits of a: the pairs (b, c) with diag(b, c) = a, from (ec, a) to (a, ec).
std::vector<TensorKey> diag_splits(const MatrixComposition& a);

}  // namespace twosig

#endif  // TWOSIG_ALGEBRA_HPP
