#include "twosig/signature.hpp"

#include <cstdlib>

namespace twosig {

std::uint64_t default_guard() {
  if (const char* env = std::getenv("TWOSIG_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 10'000'000ULL;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
    result = result * factor / i;
  }
  return result;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Naive: return "naive";
    case Strategy::RowDP: return "rowdp";
    case Strategy::Chained: return "chained";
    case Strategy::TwoByTwo: return "2x2";
    case Strategy::BooleanMatmul: return "boolean";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::Auto, Strategy::Naive, Strategy::RowDP, Strategy::Chained, Strategy::TwoByTwo,
                     Strategy::BooleanMatmul}) {
    if (strategy_name(s) == name) return s;
  }
  throw ParseError("unknown strategy '" + std::string(name) + "'");
}

bool is_uniform_2x2(const MatrixComposition& a) {
  return a.rows() == 2 && a.cols() == 2 && a.at(0, 0) == a.at(0, 1) && a.at(0, 0) == a.at(1, 0) &&
         a.at(0, 0) == a.at(1, 1);
}

bool ss_bool_allones_2x2(const EvZeroGrid<Boolean>& z, const SignatureWindow& window,
                         std::optional<MonoidElement> letter) {
  const MonoidElement lambda = letter ? *letter : MonoidElement::letter(z.d(), 1);
  if (lambda.is_epsilon()) throw InvariantViolation("Boolean path needs a non-epsilon entry");
  const auto region = detail::region_of(z, window);
  detail::PowerCache<Boolean> powers(z, region);
  const auto& p = powers.get(lambda);
  const std::size_t rows = region.rows, cols = region.cols;
  std::vector<std::uint32_t> b(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b[i * cols + j] = p(i, j).value ? 1U : 0U;
  }
  // Off-diagonal Gram entries count the columns two rows have in common.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = i + 1; k < rows; ++k) {
      std::uint32_t common = 0;
      for (std::size_t j = 0; j < cols; ++j) common += b[i * cols + j] * b[k * cols + j];
      if (common >= 2) return true;
    }
  }
  return false;
}

bool ss_bool_allones_2x2(const EvZeroGrid<Boolean>& z) { return ss_bool_allones_2x2(z, full_window(z)); }

}  // namespace twosig
