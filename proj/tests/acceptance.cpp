// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hopf_oracles.hpp"
#include "test_util.hpp"
#include "twosig/algebra.hpp"
#include "twosig/grid.hpp"
#include "twosig/qsym.hpp"
#include "twosig/signature.hpp"

namespace {

using namespace twosig;
using testing::comp;
using Z = EvZeroGrid<Integer>;
using C = EvConstGrid<Integer>;

constexpr std::uint64_t kNoGuard = std::numeric_limits<std::uint64_t>::max();

struct Outcome {
  bool pass = true;
  std::string detail;
};

#define REQUIRE(cond, msg)            \
  do {                                \
    if (!(cond)) return {false, msg}; \
  } while (0)

CompLinComb ones(std::initializer_list<const char*> texts, std::size_t d) {
  CompLinComb out;
  for (const char* t : texts) out.add(comp(t, d), Integer(1));
  return out;
}

int random_axis(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(1, 2)(rng); }

std::size_t random_pos(std::mt19937_64& rng, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(1, hi)(rng);
}

SignatureWindow random_window(std::mt19937_64& rng, const Z& z) {
  SignatureWindow w;
  for (int a = 0; a < 2; ++a) {
    const std::size_t n = a == 0 ? z.rows() : z.cols();
    w.lower[a] = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    w.upper[a] = std::uniform_int_distribution<std::size_t>(w.lower[a], n + 1)(rng);
  }
  return w;
}

Outcome worked_examples() {
  auto small = ones({"[[1,e],[e,2]]", "[[e,1],[2,e]]", "[[2,e],[e,1]]", "[[e,2],[1,e]]", "[1;2]", "[2;1]", "[1 2]",
                     "[2 1]", "[1*2]"},
                    2);
  REQUIRE(qshuffle(comp("1", 2), comp("2", 2)) == small, "[1]⧢[2] differs from the 9 listed terms");
  auto column = ones({"[[1,e],[e,2],[e,3]]", "[[1,2],[e,3]]", "[[e,2],[1,e],[e,3]]", "[[e,2],[1,3]]",
                      "[[e,2],[e,3],[1,e]]", "[1;2;3]", "[1*2;3]", "[2;1;3]", "[2;1*3]", "[2;3;1]",
                      "[[e,1],[2,e],[3,e]]", "[[2,1],[3,e]]", "[[2,e],[e,1],[3,e]]", "[[2,e],[3,1]]",
                      "[[2,e],[3,e],[e,1]]"},
                     3);
  REQUIRE(qshuffle(comp("1", 3), comp("[2;3]", 3)) == column, "[1]⧢[2;3] differs from the 15 listed terms");
  CompLinComb square;
  square.add(comp("2"), Integer(1));
  for (const char* t : {"[1;1]", "[1 1]", "[[1,0],[0,1]]", "[[0,1],[1,0]]"}) square.add(comp(t), Integer(2));
  REQUIRE(qshuffle(comp("1"), comp("1")) == square, "[1]⧢[1] differs from the five-term identity");
  return {true, "9, 15 and 5 terms"};
}

Outcome oracle_equivalence() {
  std::size_t pairs = 0;
  for (std::size_t d : {1, 2}) {
    const auto& all = compositions_up_to_cached(d, 4);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (a.weight() + b.weight() > 4) continue;
        REQUIRE(qshuffle(a, b) == qshuffle_direct(a, b), "mismatch at " + a.to_string() + " ⧢ " + b.to_string());
        ++pairs;
      }
    }
  }
  return {true, std::to_string(pairs) + " ordered pairs"};
}

Outcome quasi_shuffle_identity() {
  std::mt19937_64 rng(301);
  struct Pair {
    MatrixComposition a, b;
    CompLinComb product;
  };
  std::vector<Pair> exhaustive[3];
  std::vector<MatrixComposition> upto3[3];
  for (std::size_t d : {1, 2}) {
    upto3[d] = compositions_up_to(d, 3);
    for (const auto& a : upto3[d]) {
      for (const auto& b : upto3[d]) {
        if (a.weight() + b.weight() <= 4) exhaustive[d].push_back({a, b, qshuffle(a, b)});
      }
    }
  }
  std::size_t checks = 0;
  for (int n = 0; n < 200; ++n) {
    const std::size_t d = 1 + n % 2;
    auto z = testing::random_ev_zero<Integer>(rng, d, 4, 4, -3, 3);
    const auto w = random_window(rng, z);
    std::map<MatrixComposition, Integer> memo;
    auto ss = [&](const MatrixComposition& c) -> const Integer& {
      auto it = memo.find(c);
      if (it == memo.end()) it = memo.emplace(c, ss_coeff(z, c, w)).first;
      return it->second;
    };
    auto check = [&](const MatrixComposition& a, const MatrixComposition& b, const CompLinComb& prod) {
      Integer rhs = 0;
      for (const auto& [c, k] : prod) rhs += k * ss(c);
      ++checks;
      return Integer(ss(a) * ss(b)) == rhs;
    };
    for (const auto& p : exhaustive[d]) {
      REQUIRE(check(p.a, p.b, p.product), "identity fails for " + p.a.to_string() + ", " + p.b.to_string());
    }
    // Pairs of two weight-three compositions are sampled.
    std::uniform_int_distribution<std::size_t> pick(0, upto3[d].size() - 1);
    for (int k = 0; k < 10; ++k) {
      const auto& a = upto3[d][pick(rng)];
      const auto& b = upto3[d][pick(rng)];
      REQUIRE(check(a, b, qshuffle(a, b)), "identity fails for " + a.to_string() + ", " + b.to_string());
    }
  }
  return {true, std::to_string(checks) + " products on 200 grids"};
}

Outcome chen_identity() {
  std::mt19937_64 rng(401);
  for (int n = 0; n < 100; ++n) {
    const std::size_t d = 1 + n % 2;
    auto a = testing::random_ev_zero<Integer>(rng, d, 3, 3, -3, 3);
    auto b = testing::random_ev_zero<Integer>(rng, d, 3, 3, -3, 3);
    REQUIRE(ss_truncated(diag_concat(a, b), 4, 0) == concat_product(ss_truncated(a, 4, 0), ss_truncated(b, 4, 0)),
            "SS(A⊘B) != SS(A)·SS(B) for " + a.to_string() + ", " + b.to_string());
    auto x = testing::random_ev_const<Integer>(rng, d, 3, 3, -3, 3);
    auto y = testing::random_ev_const<Integer>(rng, d, 3, 3, -3, 3);
    REQUIRE(ss_truncated(delta(box_concat(x, y)), 4, 0) ==
                concat_product(ss_truncated(delta(x), 4, 0), ss_truncated(delta(y), 4, 0)),
            "SS(δ(X⧄Y)) != SS(δX)·SS(δY) for " + x.to_string() + ", " + y.to_string());
  }
  return {true, "100 pairs of each kind, W=4"};
}

Outcome hopf_axioms() {
  std::size_t count = 0;
  for (std::size_t d : {1, 2}) {
    const auto& all = compositions_up_to_cached(d, 3);
    for (const auto& a : all) {
      REQUIRE(testing::coassociative(a), "coassociativity fails at " + a.to_string());
      REQUIRE(testing::counit_laws(a), "counit law fails at " + a.to_string());
      REQUIRE(testing::antipode_axiom(a), "antipode axiom fails at " + a.to_string());
      ++count;
      for (const auto& b : all) {
        if (a.weight() + b.weight() > 4) continue;
        REQUIRE(testing::bialgebra(a, b), "bialgebra law fails at " + a.to_string() + ", " + b.to_string());
      }
    }
  }
  return {true, std::to_string(count) + " compositions"};
}

Outcome invariance() {
  std::mt19937_64 rng(601);
  for (int n = 0; n < 100; ++n) {
    const std::size_t d = 1 + n % 2;
    const auto& comps = compositions_up_to_cached(d, 3);
    auto x = testing::random_ev_const<Integer>(rng, d, 4, 4, -3, 3);
    auto y = x;
    for (int k = 0; k < 10; ++k) {
      const int axis = random_axis(rng);
      const auto [r, c] = y.size();
      y = warp(axis, random_pos(rng, (axis == 1 ? r : c) + 2), y);
    }
    std::vector<Integer> shift(d);
    for (auto& s : shift) s = Integer(std::uniform_int_distribution<int>(-5, 5)(rng));
    y = add_constant(y, shift);
    auto z = testing::random_ev_zero<Integer>(rng, d, 4, 4, -3, 3);
    auto z2 = z;
    for (int k = 0; k < 10; ++k) {
      const int axis = random_axis(rng);
      const auto [r, c] = z2.size();
      z2 = zero_insert(axis, random_pos(rng, (axis == 1 ? r : c) + 2), z2);
    }
    const auto dx = delta(x), dy = delta(y);
    for (const auto& a : comps) {
      REQUIRE(ss_coeff(dx, a) == ss_coeff(dy, a), "Ψ_a changes under warping for a=" + a.to_string());
      REQUIRE(ss_coeff(z, a) == ss_coeff(z2, a), "SS changes under zero insertion for a=" + a.to_string());
    }
  }
  return {true, "100 grids for each operation"};
}

Outcome separation() {
  std::mt19937_64 rng(701);
  int pairs = 0;
  while (pairs < 100) {
    const std::size_t d = 1 + pairs % 2;
    auto x = nf_zero(testing::random_ev_zero<Integer>(rng, d, 3, 3, 0, 2));
    auto y = nf_zero(testing::random_ev_zero<Integer>(rng, d, 3, 3, 0, 2));
    if (x == y) continue;
    auto w = separating_witness(x, y);
    REQUIRE(w.has_value(), "no witness for " + x.to_string() + " vs " + y.to_string());
    REQUIRE(ss_coeff(x, *w) != ss_coeff(y, *w), "witness does not separate");
    ++pairs;
  }
  return {true, "100 distinct pairs separated"};
}

Outcome normal_form_calculus() {
  std::mt19937_64 rng(801);
  auto rand_zero = [&] { return testing::random_ev_zero<Integer>(rng, 1 + rng() % 2, 4, 4, -3, 3); };
  auto rand_const = [&] {
    auto x = testing::random_ev_const<Integer>(rng, 1 + rng() % 2, 4, 4, -3, 3);
    for (int k = 0; k < 3; ++k) x = warp(random_axis(rng), random_pos(rng, 4), x);
    return x;
  };
  for (int n = 0; n < 1000; ++n) {
    auto z = rand_zero();
    REQUIRE(delta(C::from_ev_zero(varsigma(z))) == z, "δ∘ς != id on " + z.to_string());
  }
  for (int n = 0; n < 1000; ++n) {
    auto z = rand_zero();
    REQUIRE(varsigma(delta(C::from_ev_zero(z))) == z, "ς∘δ != id on " + z.to_string());
  }
  for (int n = 0; n < 1000; ++n) {
    auto x = rand_const();
    REQUIRE(delta(nf_warp(x)) == nf_zero(delta(x)), "δ∘NF_warp != NF_zero∘δ on " + x.to_string());
  }
  for (int n = 0; n < 1000; ++n) {
    auto z = rand_zero();
    const int a = random_axis(rng);
    const std::size_t j = random_pos(rng, 5), k = j + random_pos(rng, 5);
    REQUIRE(zero_insert(a, k, zero_insert(a, j, z)) == zero_insert(a, j, zero_insert(a, k - 1, z)),
            "zero insertions do not reindex on " + z.to_string());
  }
  for (int n = 0; n < 1000; ++n) {
    auto x = rand_const();
    const int a = random_axis(rng);
    const std::size_t j = random_pos(rng, 5), k = j + random_pos(rng, 5);
    REQUIRE(warp(a, k, warp(a, j, x)) == warp(a, j, warp(a, k - 1, x)), "warps do not reindex on " + x.to_string());
  }
  for (int n = 0; n < 1000; ++n) {
    auto x = rand_const();
    auto z = rand_zero();
    const int a = random_axis(rng);
    const std::size_t k = random_pos(rng, 6);
    REQUIRE(delta(warp(a, k, x)) == zero_insert(a, k, delta(x)), "δ∘W != Z∘δ on " + x.to_string());
    REQUIRE(C::from_ev_zero(varsigma(zero_insert(a, k, z))) == warp(a, k, C::from_ev_zero(varsigma(z))),
            "ς∘Z != W∘ς on " + z.to_string());
  }
  return {true, "1000 cases per law"};
}

Outcome displayed_numerics() {
  REQUIRE(ss_coeff(Z::from_rows({{2, 1}, {3, 1}}), comp("1")) == 7, "<SS,[1]> != 7");
  REQUIRE(ss_coeff(Z::from_rows({{1, 2}, {0, 7}, {3, 1}}), comp("[[1,2],[0,1]]")) == 32, "<SS,[[1,2],[0,1]]> != 32");
  auto x = C::from_rows({{7, 3, 2, 2}, {5, 3, 2, 2}, {2, 2, 2, 2}});
  REQUIRE(delta(x) == Z::from_rows({{2, 0}, {2, 1}}), "δX differs");
  REQUIRE(varsigma(delta(x)) == Z::from_rows({{5, 1}, {3, 1}}), "ς∘δ differs from the normal form grid");
  REQUIRE(psi(x, comp("1")) == 5, "Ψ_[1] != 5");
  REQUIRE(diag_concat(Z::from_rows({{2, 7}, {2, 5}}), Z::from_rows({{2, 2}, {1, 4}})) ==
              Z::from_rows({{2, 7, 0, 0}, {2, 5, 0, 0}, {0, 0, 2, 2}, {0, 0, 1, 4}}),
          "⊘ display differs");
  REQUIRE(box_concat(C::from_rows({{2, 7, 2}, {2, 5, 2}, {2, 2, 2}}), C::from_rows({{2, 2, 0}, {1, 4, 0}, {0, 0, 0}})) ==
              C::from_rows({{2, 7, 2, 2, 0}, {2, 5, 2, 2, 0}, {2, 2, 2, 2, 0}, {1, 1, 1, 4, 0}, {0, 0, 0, 0, 0}}),
          "⧄ display differs");
  return {true, "7, 32, 5 and both concatenation displays"};
}

/// Quartic scan over row pairs and column pairs.
bool allones_brute_force(const EvZeroGrid<Boolean>& z) {
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t k = i + 1; k < z.rows(); ++k) {
      for (std::size_t j = 0; j < z.cols(); ++j) {
        for (std::size_t l = j + 1; l < z.cols(); ++l) {
          if (z.cell(i, j)[0].value && z.cell(i, l)[0].value && z.cell(k, j)[0].value && z.cell(k, l)[0].value) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

Outcome fast_paths() {
  std::mt19937_64 rng(1001);
  std::vector<MatrixComposition> chained, two_by_two;
  for (std::size_t d : {1, 2}) {
    for (const auto& a : compositions_up_to(d, 4)) {
      if (parse_chained(a)) chained.push_back(a);
      if (a.rows() == 2 && a.cols() == 2) two_by_two.push_back(a);
    }
  }
  std::size_t instances = 0;
  for (int n = 0; n < 400; ++n) {
    const auto& pool = n % 2 == 0 ? chained : two_by_two;
    const auto& a = pool[rng() % pool.size()];
    auto z = testing::random_ev_zero<Integer>(rng, a.d(), 6, 6, -3, 3);
    const auto w = random_window(rng, z);
    const Integer ref = ss_coeff_naive(z, a, w, kNoGuard);
    const Strategy s = n % 2 == 0 ? Strategy::Chained : Strategy::TwoByTwo;
    REQUIRE(ss_coeff(z, a, w, s) == ref, std::string(strategy_name(s)) + " differs from naive at " + a.to_string());
    REQUIRE(ss_coeff(z, a, w, Strategy::RowDP) == ref, "rowdp differs from naive at " + a.to_string());
    ++instances;
  }
  auto ones = comp("[[1,1],[1,1]]");
  for (int n = 0; n < 200; ++n) {
    auto z = testing::random_ev_zero<Boolean>(rng, 1, 30, 30, 0, 1);
    std::vector<Boolean> data(z.data());
    const int density = 2 + n % 12;
    for (auto& v : data) v = Boolean(rng() % static_cast<unsigned>(density * 8) < 8);
    EvZeroGrid<Boolean> g(1, z.rows(), z.cols(), data);
    const bool ref = allones_brute_force(g);
    REQUIRE(ss_coeff(g, ones, Strategy::BooleanMatmul).value == ref, "Boolean path differs from brute force");
    REQUIRE(ss_coeff_naive(g, ones, full_window(g), kNoGuard).value == ref, "naive differs from brute force");
    ++instances;
  }
  auto big = testing::random_ev_zero<Integer>(rng, 2, 64, 64, -3, 3);
  while (big.rows() < 64 || big.cols() < 64) big = testing::random_ev_zero<Integer>(rng, 2, 64, 64, -3, 3);
  auto six = comp("[[1,2,e],[e,1,e],[e,2*1,1]]", 2);
  REQUIRE(six.weight() == 6 && parse_chained(six), "benchmark composition is not a weight-6 chain");
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = ss_matrix_chained(big, *parse_chained(six));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  REQUIRE(m.rows() == 64 && m.cols() == 64, "chained result has the wrong shape");
  REQUIRE(secs < 1.0, "chained DP on 64x64 took " + std::to_string(secs) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu instances; 64x64 weight-6 chain in %.3f s", instances, secs);
  return {true, buf};
}

Outcome qsym_oracle() {
  std::mt19937_64 rng(1101);
  const auto& comps = compositions_up_to_cached(1, 3);
  for (int n = 0; n < 20; ++n) {
    auto z = testing::random_ev_zero<Integer>(rng, 1, 4, 4, -3, 3);
    for (const auto& a : comps) {
      REQUIRE(monomial_eval(a, z) == ss_coeff_naive(z, a, full_window(z), kNoGuard),
              "monomial evaluation differs at " + a.to_string());
    }
  }
  std::size_t products = 0;
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      if (b < a) continue;
      REQUIRE(qsym_product_check(a, b, 4, 4), "product identity fails at " + a.to_string() + ", " + b.to_string());
      ++products;
    }
  }
  for (const auto& a : comps) {
    const auto full = monomial_expand(a, 4, 4);
    for (std::size_t k = 1; k <= 4; ++k) {
      REQUIRE(formal_zero_insert(1, k, full) == monomial_expand(a, 3, 4), "row insertion changes " + a.to_string());
      REQUIRE(formal_zero_insert(2, k, full) == monomial_expand(a, 4, 3), "column insertion changes " + a.to_string());
    }
  }
  std::vector<TruncatedPolynomial> basis;
  for (const auto& a : compositions_up_to(1, 2)) basis.push_back(monomial_expand(a, 4, 4));
  REQUIRE(polynomial_rank(basis) == basis.size(), "monomial functions of weight <= 2 are dependent");
  return {true, std::to_string(products) + " products, rank " + std::to_string(basis.size())};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;
  };
  const std::vector<Criterion> criteria = {
      {"quasi-shuffle worked examples", worked_examples, 1.0},
      {"recursive quasi-shuffle equals surjection oracle", oracle_equivalence, 60.0},
      {"quasi-shuffle identity on random grids", quasi_shuffle_identity, 0},
      {"Chen identities", chen_identity, 0},
      {"Hopf algebra axioms", hopf_axioms, 0},
      {"warping and zero-insertion invariance", invariance, 0},
      {"separation by witness compositions", separation, 0},
      {"normal-form calculus laws", normal_form_calculus, 0},
      {"displayed numerics", displayed_numerics, 0},
      {"fast evaluation paths", fast_paths, 0},
      {"quasisymmetric function oracle", qsym_oracle, 0},
  };
  int failures = 0;
  int index = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.pass && c.time_limit > 0 && secs >= c.time_limit) {
      out = {false, "took longer than " + std::to_string(c.time_limit) + " s"};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2d %-50s %8.2f s  %s\n", out.pass ? "PASS" : "FAIL", index, c.name, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
