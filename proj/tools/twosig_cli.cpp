#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twosig/algebra.hpp"
#include "twosig/features.hpp"
#include "twosig/grid.hpp"
#include "twosig/io.hpp"
#include "twosig/signature.hpp"

namespace {

using namespace twosig;

enum ExitCode { kOk = 0, kInternal = 1, kParse = 2, kGuard = 3, kInvariant = 4 };

struct GridOptions {
  std::string scalar = "int";
  std::optional<std::size_t> d;
  std::optional<std::string> pad;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

template <Semiring T>
EvZeroGrid<T> load_zero(const std::string& path, const GridOptions& opts) {
  const auto raw = io::parse_grid_text(io::read_file(path), opts.d);
  return EvZeroGrid<T>(raw.d, raw.rows, raw.cols, io::grid_values<T>(raw));
}

/// Reads an eventually constant grid. Without --pad the file must already end
/// in a constant last row and column; with --pad V a border of V is appended.
template <Semiring T>
EvConstGrid<T> load_const(const std::string& path, const GridOptions& opts) {
  const auto raw = io::parse_grid_text(io::read_file(path), opts.d);
  auto values = io::grid_values<T>(raw);
  if (opts.pad) {
    std::vector<T> limit;
    std::stringstream ss(*opts.pad);
    std::string part;
    while (std::getline(ss, part, ':')) limit.push_back(parse_scalar<T>(part));
    if (limit.size() == 1 && raw.d > 1) limit.assign(raw.d, limit.front());
    if (limit.size() != raw.d) throw DimensionMismatch("--pad needs 1 or d values separated by ':'");
    return EvConstGrid<T>::padded(raw.d, raw.rows, raw.cols, values, limit);
  }
  try {
    return EvConstGrid<T>(raw.d, raw.rows, raw.cols, std::move(values));
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(std::string(e.what()) + " (" + path +
                             "); pass --pad V to append a constant border of V");
  }
}

MatrixComposition load_composition(const std::string& path) {
  return io::composition_from_json(io::parse_json(io::read_file(path)));
}

/// Runs body<T> for the scalar named on the command line.
template <class Body>
int with_ring_scalar(const std::string& name, Body&& body) {
  if (name == "int") return body.template operator()<Integer>();
  if (name == "rational") return body.template operator()<Rational>();
  throw ParseError("unknown scalar '" + name + "' (expected int or rational)");
}

struct FeaturesArgs {
  std::string input;
  unsigned max_weight = 2;
  std::string output;
  bool verify = false;
  bool timing = false;
  unsigned threads = 0;
  GridOptions grid;
};

int cmd_features(const FeaturesArgs& args) {
  return with_ring_scalar(args.grid.scalar, [&]<Ring T>() {
    const auto x = load_const<T>(args.input, args.grid);
    FeatureOptions opts;
    opts.input = args.input;
    opts.threads = args.threads;
    const auto report = compute_features(x, args.max_weight, opts);
    auto json = report_to_json(report, args.timing);
    bool invariant = true;
    if (args.verify) {
      invariant = verify_invariance(x, args.max_weight, 0);
      json["invariance_check"] = invariant ? "passed" : "failed";
    }
    write_output(dump(json), args.output);
    if (!invariant) return static_cast<int>(kInternal);
    return static_cast<int>(report.any_guard_exceeded() ? kGuard : kOk);
  });
}

struct SignatureArgs {
  std::string input;
  std::string composition;
  std::optional<unsigned> max_weight;
  std::string strategy = "auto";
  std::string output;
  GridOptions grid;
};

template <Semiring T>
int signature_for(const SignatureArgs& args) {
  const auto z = load_zero<T>(args.input, args.grid);
  io::Json out;
  out["input"] = args.input;
  out["scalar"] = std::string(ScalarTraits<T>::name);
  if (args.max_weight) {
    out["signature"] = io::to_json(ss_truncated(z, *args.max_weight, 0));
  } else {
    const auto a = load_composition(args.composition);
    const auto strategy = parse_strategy(args.strategy);
    out["composition"] = io::to_json(a);
    out["value"] = format_scalar(ss_coeff(z, a, full_window(z), strategy));
  }
  write_output(dump(out), args.output);
  return kOk;
}

int cmd_signature(const SignatureArgs& args) {
  if (args.max_weight.has_value() == !args.composition.empty()) {
    throw ParseError("signature needs exactly one of --composition and --max-weight");
  }
  if (args.grid.scalar == "bool") return signature_for<Boolean>(args);
  return with_ring_scalar(args.grid.scalar, [&]<Ring T>() { return signature_for<T>(args); });
}

int cmd_algebra(const std::string& op, const std::vector<std::string>& inputs, bool direct,
                const std::string& output) {
  std::vector<MatrixComposition> comps;
  for (const auto& p : inputs) comps.push_back(load_composition(p));
  io::Json out;
  if (op == "qshuffle") {
    if (comps[0].d() != comps[1].d()) throw DimensionMismatch("compositions over different numbers of letters");
    out = io::to_json(direct ? qshuffle_direct(comps[0], comps[1]) : qshuffle(comps[0], comps[1]));
  } else if (op == "coproduct") {
    out = io::to_json(coproduct(comps[0]));
  } else {
    out = io::to_json(antipode(comps[0]));
  }
  write_output(dump(out), output);
  return kOk;
}

struct PairArgs {
  std::string x, y;
  std::string kind;
  std::string format = "json";
  std::string output;
  GridOptions grid;
};

template <Semiring T>
std::string render(const detail::Window<T>& w, const std::string& format) {
  if (format == "csv") return io::to_csv(w);
  if (format == "json") return dump(io::grid_to_json(w));
  throw ParseError("unknown format '" + format + "' (expected json or csv)");
}

int cmd_equiv(const PairArgs& args) {
  return with_ring_scalar(args.grid.scalar, [&]<Ring T>() {
    const auto x = load_const<T>(args.x, args.grid);
    const auto y = load_const<T>(args.y, args.grid);
    if (x.d() != y.d()) throw DimensionMismatch("grids with different numbers of channels");
    const auto nx = nf_sim(x), ny = nf_sim(y);
    io::Json out;
    out["equivalent"] = nx == ny;
    out["nf_x"] = io::grid_to_json(nx.window());
    out["nf_y"] = io::grid_to_json(ny.window());
    write_output(dump(out), args.output);
    return static_cast<int>(kOk);
  });
}

int cmd_normalform(const PairArgs& args) {
  return with_ring_scalar(args.grid.scalar, [&]<Ring T>() {
    std::string text;
    if (args.kind == "zero") {
      text = render(nf_zero(load_zero<T>(args.x, args.grid)).window(), args.format);
    } else {
      const auto x = load_const<T>(args.x, args.grid);
      if (args.kind == "warp") {
        text = render(nf_warp(x).window(), args.format);
      } else if (args.kind == "const") {
        text = render(nf_const(x).window(), args.format);
      } else if (args.kind == "sim") {
        text = render(nf_sim(x).window(), args.format);
      } else if (args.kind == "delta") {
        text = render(delta(x).window(), args.format);
      } else {
        throw ParseError("unknown normal form '" + args.kind + "'");
      }
    }
    write_output(text, args.output);
    return static_cast<int>(kOk);
  });
}

int cmd_concat(const PairArgs& args) {
  return with_ring_scalar(args.grid.scalar, [&]<Ring T>() {
    std::string text;
    if (args.kind == "diag") {
      text = render(diag_concat(load_zero<T>(args.x, args.grid), load_zero<T>(args.y, args.grid)).window(),
                    args.format);
    } else if (args.kind == "box") {
      text = render(box_concat(load_const<T>(args.x, args.grid), load_const<T>(args.y, args.grid)).window(),
                    args.format);
    } else {
      throw ParseError("unknown concatenation '" + args.kind + "' (expected diag or box)");
    }
    write_output(text, args.output);
    return static_cast<int>(kOk);
  });
}

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::vector<std::string> strategies{"naive", "rowdp", "chained", "2x2", "boolean"};
  std::uint64_t seed = 1;
};

template <Semiring T>
EvZeroGrid<T> bench_grid(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> vd(lo, hi);
  std::vector<T> data(n * n);
  for (auto& v : data) v = from_int<T>(vd(rng));
  return EvZeroGrid<T>(1, n, n, std::move(data));
}

template <Semiring T>
std::pair<std::optional<T>, double> timed(const EvZeroGrid<T>& z, const MatrixComposition& a, Strategy s) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<T> value;
  try {
    value = ss_coeff(z, a, full_window(z), s);
  } catch (const GuardExceeded&) {
  }
  return {value, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

int cmd_bench(const BenchArgs& args) {
  // One composition every integer strategy applies to, and one for the Boolean path.
  const auto corner = MatrixComposition::parse("[[1,1],[e,1]]", 1);
  const auto square = MatrixComposition::parse("[[1,1],[1,1]]", 1);
  std::vector<Strategy> strategies;
  for (const auto& s : args.strategies) strategies.push_back(parse_strategy(s));
  std::mt19937_64 rng(args.seed);

  // Agreement check on small instances before any timing.
  for (int k = 0; k < 20; ++k) {
    const auto z = bench_grid<Integer>(rng, 6, -3, 3);
    const auto ref = ss_coeff_naive(z, corner, full_window(z));
    for (Strategy s : strategies) {
      if (s == Strategy::BooleanMatmul) continue;
      if (ss_coeff(z, corner, full_window(z), s) != ref) {
        std::cerr << "strategy " << strategy_name(s) << " disagrees with naive\n";
        return kInternal;
      }
    }
    const auto b = bench_grid<Boolean>(rng, 6, 0, 1);
    if (ss_coeff(b, square, Strategy::BooleanMatmul) != ss_coeff_naive(b, square, full_window(b))) {
      std::cerr << "Boolean path disagrees with naive\n";
      return kInternal;
    }
  }

  std::cout << "size,strategy,composition,seconds\n";
  for (std::size_t n : args.sizes) {
    const auto z = bench_grid<Integer>(rng, n, -3, 3);
    const auto b = bench_grid<Boolean>(rng, n, 0, 1);
    for (Strategy s : strategies) {
      double secs = 0;
      bool ok = true;
      std::string comp;
      if (s == Strategy::BooleanMatmul) {
        auto [v, t] = timed(b, square, s);
        ok = v.has_value();
        secs = t;
        comp = square.to_string();
      } else {
        auto [v, t] = timed(z, corner, s);
        ok = v.has_value();
        secs = t;
        comp = corner.to_string();
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", secs);
      std::cout << n << ',' << strategy_name(s) << ",\"" << comp << "\"," << (ok ? buf : "guard") << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-parameter iterated-sums signatures: features, algebra and normal forms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "twosig 0.1.0");

  auto add_grid_options = [](CLI::App* cmd, GridOptions& g, bool pad) {
    cmd->add_option("--scalar", g.scalar, "Scalar type: int or rational")->capture_default_str();
    cmd->add_option("--d", g.d, "Expected number of channels per cell");
    if (pad) cmd->add_option("--pad", g.pad, "Append a constant border with this value (or v1:v2:... per channel)");
  };

  FeaturesArgs fa;
  auto* features = app.add_subcommand("features", "Warping invariants of a grid for all compositions up to a weight");
  features->add_option("input", fa.input, "Grid file (CSV or ASCII PGM)")->required();
  features->add_option("--max-weight,-W", fa.max_weight, "Largest composition weight")->capture_default_str();
  features->add_option("--output,-o", fa.output, "Output file (default stdout)");
  features->add_flag("--verify-invariance", fa.verify, "Recompute on a randomly warped and shifted copy");
  features->add_flag("--timing", fa.timing, "Include per-strategy timing (output is then not reproducible)");
  features->add_option("--threads", fa.threads, "Worker threads, 0 for all cores")->capture_default_str();
  add_grid_options(features, fa.grid, true);

  SignatureArgs sa;
  auto* signature = app.add_subcommand("signature", "Signature coefficients of an eventually zero grid");
  signature->add_option("input", sa.input, "Grid file (CSV or ASCII PGM)")->required();
  signature->add_option("--composition,-c", sa.composition, "Composition JSON file");
  signature->add_option("--max-weight,-W", sa.max_weight, "All coefficients up to this weight");
  signature->add_option("--strategy", sa.strategy, "auto, naive, rowdp, chained, 2x2 or boolean")
      ->capture_default_str();
  signature->add_option("--output,-o", sa.output, "Output file (default stdout)");
  add_grid_options(signature, sa.grid, false);
  signature->get_option("--scalar")->description("Scalar type: int, rational or bool");

  std::vector<std::string> qs_inputs(2), single_input(1);
  bool direct = false;
  std::string alg_output;
  auto* qsh = app.add_subcommand("qshuffle", "Quasi-shuffle product of two compositions");
  qsh->add_option("a", qs_inputs[0], "Composition JSON file")->required();
  qsh->add_option("b", qs_inputs[1], "Composition JSON file")->required();
  qsh->add_flag("--direct", direct, "Use the surjection enumeration instead of the recursion");
  qsh->add_option("--output,-o", alg_output, "Output file (default stdout)");
  auto* cop = app.add_subcommand("coproduct", "Deconcatenation coproduct of a composition");
  cop->add_option("a", single_input[0], "Composition JSON file")->required();
  cop->add_option("--output,-o", alg_output, "Output file (default stdout)");
  auto* ant = app.add_subcommand("antipode", "Antipode of a composition");
  ant->add_option("a", single_input[0], "Composition JSON file")->required();
  ant->add_option("--output,-o", alg_output, "Output file (default stdout)");

  PairArgs ea;
  auto* equiv = app.add_subcommand("equiv", "Decide equality up to warping and constants");
  equiv->add_option("x", ea.x, "Grid file")->required();
  equiv->add_option("y", ea.y, "Grid file")->required();
  equiv->add_option("--output,-o", ea.output, "Output file (default stdout)");
  add_grid_options(equiv, ea.grid, true);

  PairArgs na;
  na.kind = "sim";
  auto* normal = app.add_subcommand("normalform", "Normal form of a grid");
  normal->add_option("input", na.x, "Grid file")->required();
  normal->add_option("--kind", na.kind, "zero, warp, const, sim or delta")->capture_default_str();
  normal->add_option("--format", na.format, "json or csv")->capture_default_str();
  normal->add_option("--output,-o", na.output, "Output file (default stdout)");
  add_grid_options(normal, na.grid, true);

  PairArgs ca;
  ca.kind = "diag";
  auto* concat = app.add_subcommand("concat", "Concatenate two grids along the diagonal");
  concat->add_option("a", ca.x, "Grid file")->required();
  concat->add_option("b", ca.y, "Grid file")->required();
  concat->add_option("--kind", ca.kind, "diag (eventually zero) or box (eventually constant)")->capture_default_str();
  concat->add_option("--format", ca.format, "json or csv")->capture_default_str();
  concat->add_option("--output,-o", ca.output, "Output file (default stdout)");
  add_grid_options(concat, ca.grid, true);

  BenchArgs ba;
  std::string sizes = "8,16,32,64";
  std::string strategies = "naive,rowdp,chained,2x2,boolean";
  auto* bench = app.add_subcommand("bench", "Time evaluation strategies on random grids (CSV)");
  bench->add_option("--sizes", sizes, "Comma-separated grid sizes; empty for an empty table")->capture_default_str();
  bench->add_option("--strategies", strategies, "Comma-separated strategy names")->capture_default_str();
  bench->add_option("--seed", ba.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*features) return cmd_features(fa);
    if (*signature) return cmd_signature(sa);
    if (*qsh) return cmd_algebra("qshuffle", qs_inputs, direct, alg_output);
    if (*cop) return cmd_algebra("coproduct", single_input, false, alg_output);
    if (*ant) return cmd_algebra("antipode", single_input, false, alg_output);
    if (*equiv) return cmd_equiv(ea);
    if (*normal) return cmd_normalform(na);
    if (*concat) return cmd_concat(ca);
    if (*bench) {
      auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) {
          if (!part.empty()) out.push_back(part);
        }
        return out;
      };
      for (const auto& s : split(sizes)) {
        std::size_t pos = 0;
        unsigned long n = 0;
        try {
          n = std::stoul(s, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != s.size() || n == 0) throw ParseError("bad size '" + s + "'");
        ba.sizes.push_back(n);
      }
      ba.strategies = split(strategies);
      return cmd_bench(ba);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
