#include "twosig/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace twosig::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class F>
auto json_guard(F&& f, const char* what) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

RawGrid parse_pgm(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 4 || tokens[0] != "P2") throw ParseError("PGM input must be ASCII 'P2'");
  auto number = [](const std::string& t) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(t, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad PGM number '" + t + "'");
    }
    if (pos != t.size()) throw ParseError("bad PGM number '" + t + "'");
    return v;
  };
  const std::size_t width = number(tokens[1]), height = number(tokens[2]);
  const unsigned long maxval = number(tokens[3]);
  if (maxval == 0 || maxval > 65535) throw ParseError("PGM maxval must lie in 1..65535");
  if (tokens.size() != 4 + width * height) throw ParseError("PGM pixel count differs from width*height");
  RawGrid g;
  g.d = 1;
  g.rows = height;
  g.cols = width;
  for (std::size_t k = 4; k < tokens.size(); ++k) {
    if (number(tokens[k]) > maxval) throw ParseError("PGM pixel exceeds maxval");
    g.values.push_back(tokens[k]);
  }
  if (g.rows == 0 || g.cols == 0) throw ParseError("empty PGM image");
  return g;
}

}  // namespace

Json to_json(const MonoidElement& m) {
  Json out = Json::array();
  for (std::size_t j = 0; j < m.d(); ++j) out.push_back(m[j]);
  return out;
}

MonoidElement monoid_from_json(const Json& j, std::size_t d) {
  return json_guard(
      [&] {
        if (!j.is_array() || j.size() != d) throw ParseError("monoid element must be an array of " + std::to_string(d) + " exponents");
        std::vector<unsigned> e;
        for (const auto& x : j) {
          if (!x.is_number_unsigned()) throw ParseError("monoid exponents must be nonnegative integers");
          e.push_back(x.get<unsigned>());
        }
        return MonoidElement(std::span<const unsigned>(e));
      },
      "monoid element");
}

Json to_json(const MatrixComposition& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a.at(i, j)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["d"] = a.d();
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["entries"] = std::move(entries);
  return out;
}

MatrixComposition composition_from_json(const Json& j) {
  return json_guard(
      [&] {
        if (!j.is_object()) throw ParseError("composition must be a JSON object");
        const auto d = j.at("d").get<std::size_t>();
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows) throw ParseError("composition entries differ from rows");
        MonoidMatrix m(d, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          if (!entries[i].is_array() || entries[i].size() != cols) {
            throw ParseError("composition row " + std::to_string(i) + " differs from cols");
          }
          for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = monoid_from_json(entries[i][c], d);
        }
        (void)MonoidElement(d);
        return MatrixComposition(std::move(m));
      },
      "composition");
}

Json to_json(const CompLinComb& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x) {
    Json t;
    t["coeff"] = c.str();
    t["composition"] = to_json(a);
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

CompLinComb lincomb_from_json(const Json& j) {
  return json_guard(
      [&] {
        CompLinComb out;
        for (const auto& t : j.at("terms")) {
          out.add(composition_from_json(t.at("composition")), parse_scalar<Integer>(t.at("coeff").get<std::string>()));
        }
        return out;
      },
      "linear combination");
}

Json to_json(const TensorLinComb& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x) {
    Json t;
    t["coeff"] = c.str();
    t["left"] = to_json(k.first);
    t["right"] = to_json(k.second);
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RawGrid parse_grid_text(std::string_view text, std::optional<std::size_t> d) {
  if (trim(text).substr(0, 2) == "P2") {
    RawGrid g = parse_pgm(text);
    if (d && *d != 1) throw DimensionMismatch("PGM input has one channel");
    return g;
  }
  RawGrid g;
  bool first_cell = true;
  for (std::string_view line : split(text, '\n')) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (g.rows == 0) {
      g.cols = cells.size();
    } else if (cells.size() != g.cols) {
      throw ParseError("ragged CSV grid: row " + std::to_string(g.rows + 1) + " has " + std::to_string(cells.size()) +
                       " cells, expected " + std::to_string(g.cols));
    }
    for (std::string_view cell : cells) {
      auto channels = split(trim(cell), ':');
      if (first_cell) {
        g.d = channels.size();
        first_cell = false;
      }
      if (channels.size() != g.d) throw ParseError("CSV cells with different numbers of channels");
      for (auto c : channels) {
        c = trim(c);
        if (c.empty()) throw ParseError("empty CSV cell");
        g.values.emplace_back(c);
      }
    }
    ++g.rows;
  }
  if (g.rows == 0) throw ParseError("empty grid");
  if (d && *d != g.d) {
    throw DimensionMismatch("grid has " + std::to_string(g.d) + " channels, expected " + std::to_string(*d));
  }
  return g;
}

}  // namespace twosig::io
