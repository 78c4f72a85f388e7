#ifndef TWOSIG_IO_HPP
#define TWOSIG_IO_HPP

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosig/algebra.hpp"
#include "twosig/composition.hpp"
#include "twosig/grid.hpp"
#include "twosig/signature.hpp"

namespace twosig::io {

/// Key order follows insertion, which keeps serialized output byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const MonoidElement& m);
MonoidElement monoid_from_json(const Json& j, std::size_t d);

/// {"d": d, "rows": m, "cols": n, "entries": [[[e...], ...], ...]}
Json to_json(const MatrixComposition& a);
MatrixComposition composition_from_json(const Json& j);

/// {"terms": [{"coeff": "c", "composition": {...}}, ...]} in canonical order.
Json to_json(const CompLinComb& x);
CompLinComb lincomb_from_json(const Json& j);

/// {"terms": [{"coeff": "c", "left": {...}, "right": {...}}, ...]}
Json to_json(const TensorLinComb& x);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

/// Grid cells as text, before conversion to a scalar type.
struct RawGrid {
  std::size_t d = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> values;  // row-major, d per cell
};

/// CSV (one text row per grid row, cells separated by commas, channels by
/// colons; blank lines and '#' comments ignored) or ASCII PGM ("P2").
/// When d is given, every cell must have exactly d channels.
RawGrid parse_grid_text(std::string_view text, std::optional<std::size_t> d = std::nullopt);

template <Semiring T>
std::vector<T> grid_values(const RawGrid& g) {
  std::vector<T> out;
  out.reserve(g.values.size());
  for (const auto& v : g.values) out.push_back(parse_scalar<T>(v));
  return out;
}

template <Semiring T>
std::string to_csv(const detail::Window<T>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rows; ++i) {
    for (std::size_t j = 0; j < w.cols; ++j) {
      if (j) out += ',';
      auto c = w.cell(i, j);
      for (std::size_t k = 0; k < w.d; ++k) {
        if (k) out += ':';
        out += format_scalar(c[k]);
      }
    }
    out += '\n';
  }
  return out;
}

/// Grid as a JSON array of rows; cells are strings (colon-joined when d > 1).
template <Semiring T>
Json grid_to_json(const detail::Window<T>& w) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < w.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < w.cols; ++j) {
      std::string cell;
      auto c = w.cell(i, j);
      for (std::size_t k = 0; k < w.d; ++k) {
        if (k) cell += ':';
        cell += format_scalar(c[k]);
      }
      row.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"W": W, "coeffs": [{"composition": {...}, "value": "c"}, ...]}, zeros omitted.
template <Semiring T>
Json to_json(const TruncatedSignature<T>& s) {
  Json coeffs = Json::array();
  for (const auto& [a, v] : s.coefficients()) {
    Json entry;
    entry["composition"] = to_json(a);
    entry["value"] = format_scalar(v);
    coeffs.push_back(std::move(entry));
  }
  Json out;
  out["W"] = s.max_weight();
  out["coeffs"] = std::move(coeffs);
  return out;
}

}  // namespace twosig::io

#endif  // TWOSIG_IO_HPP
