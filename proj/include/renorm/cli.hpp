#pragma once

// Batch front end: loads JSON fixtures, dispatches module operations and
// emits deterministic verification reports. Exit codes: 0 all checks pass,
// 1 some check failed, 2 input or structural error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "renorm/circuit.hpp"
#include "renorm/dickson.hpp"
#include "renorm/domination.hpp"
#include "renorm/errors.hpp"
#include "renorm/fuzz.hpp"
#include "renorm/gridwidth.hpp"
#include "renorm/hubbard.hpp"
#include "renorm/hyperbolic.hpp"
#include "renorm/json_io.hpp"
#include "renorm/report.hpp"
#include "renorm/tcg.hpp"
#include "renorm/wad.hpp"

namespace renorm::cli {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 20060805ull;
  int jobs = 1;
  std::string out;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* root = std::getenv("RENORM_FIXTURES")) {
    fs::path alt = fs::path(root) / path;
    if (fs::exists(alt)) return alt.string();
  }
  return path;
}

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Parses with line/column diagnostics on failure.
inline Json parse_input(const std::string& path, Report& report) {
  std::string resolved = resolve_input(path);
  std::string bytes = read_file(resolved);
  report.inputs.push_back({path, fnv1a_digest(bytes)});
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_col(bytes, e.byte > 0 ? e.byte - 1 : 0);
    throw StructuralError("parse error in '" + path + "' at line " + std::to_string(line) +
                          ", column " + std::to_string(col) + ": " + e.what());
  }
}

inline Check make_check(const std::string& name, const std::string& law, double expected,
                        double actual, double tol, bool pass, std::string note = "") {
  return Check{name, law, expected, actual, tol, pass, std::move(note)};
}

inline Check value_check(const std::string& name, const std::string& law, double value,
                         std::string note = "") {
  return Check{name, law, value, value, 0.0, true, std::move(note)};
}

// Runs `fn` over the files, with up to `jobs` in flight; results keep input
// order so reports stay deterministic.
inline std::vector<std::vector<Check>> map_files(
    const std::vector<std::string>& files, int jobs,
    const std::function<std::vector<Check>(const std::string&, Report&)>& fn, Report& report) {
  std::vector<std::vector<Check>> out(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) out[i] = fn(files[i], report);
    return out;
  }
  // Parse inputs up front (digest order), then evaluate in parallel.
  std::vector<Report> subreports(files.size());
  std::vector<std::future<std::vector<Check>>> futures(files.size());
  std::size_t next = 0;
  auto launch = [&](std::size_t i) {
    futures[i] = std::async(std::launch::async,
                            [&fn, &files, &subreports, i] { return fn(files[i], subreports[i]); });
  };
  std::size_t in_flight = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    launch(i);
    if (++in_flight >= static_cast<std::size_t>(jobs)) {
      futures[next].wait();
      ++next;
      --in_flight;
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) out[i] = futures[i].get();
  for (auto& sub : subreports)
    for (auto& in : sub.inputs) report.inputs.push_back(std::move(in));
  return out;
}

// ---------------------------------------------------------------------------
// Per-subcommand check builders.

inline std::vector<Check> run_circuit_solve(const std::string& path, Report& report,
                                            const Options& opt) {
  Circuit c = circuit_from_json(parse_input(path, report));
  Equilibrium eq = equilibrium(c, {opt.tol, 2000});
  double w = boundary_current(c, eq, c.battery().first);
  double w_b = -boundary_current(c, eq, c.battery().second);
  double e = energy(c, eq);
  double cap = std::min(c.local_conductance(c.battery().first),
                        c.local_conductance(c.battery().second));
  double umin = 0.0, umax = 1.0;
  for (int v = 0; v < c.size(); ++v) {
    umin = std::min(umin, eq.potential[v]);
    umax = std::max(umax, eq.potential[v]);
  }
  std::vector<Check> checks;
  checks.push_back(value_check("total-conductance", "total-conductance", w, path));
  checks.push_back(make_check("current-conservation", "equilibrium", 0.0, eq.residual, opt.tol,
                              eq.residual <= opt.tol));
  checks.push_back(make_check("pole-antisymmetry", "equilibrium-current", w, w_b, opt.tol,
                              std::abs(w - w_b) <= opt.tol * std::max(1.0, std::abs(w))));
  checks.push_back(make_check("energy-equals-conductance", "energy-identity", w, e, opt.tol,
                              std::abs(w - e) <= opt.tol * std::max(1.0, std::abs(w))));
  checks.push_back(make_check("pole-local-conductance", "local-conductance-bound", cap, w,
                              opt.tol, w <= cap + opt.tol * std::max(1.0, cap)));
  checks.push_back(make_check("maximum-principle", "maximum-principle", 0.0,
                              std::max(-umin, umax - 1.0), opt.tol,
                              umin >= -opt.tol && umax <= 1.0 + opt.tol));
  return checks;
}

inline std::vector<Check> run_circuit_laws(const Options& opt, int count) {
  std::vector<Check> checks;
  for (const LawResult& r : circuit_law_fuzz(opt.seed, count))
    checks.push_back(make_check(r.name, r.law, 0.0, r.worst, opt.tol, r.worst <= opt.tol,
                                std::to_string(r.cases) + " cases"));
  return checks;
}

inline std::vector<Check> run_tcg_bound(const std::string& path, Report& report,
                                        const Options& opt) {
  Circuit c = circuit_from_json(parse_input(path, report));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : c.edges()) pairs.push_back({c.id(e.u), c.id(e.v)});
  TcgStructure s = TcgStructure::from_graph(c.vertex_ids(), pairs);
  TcgBoundResult b = tcg_bound(c, s);
  double w = total_conductance(c);
  std::string chain;
  for (const auto& v : b.chain) chain += (chain.empty() ? "" : " ") + v;
  std::vector<Check> checks;
  checks.push_back(value_check("chain", "chain-order", static_cast<double>(b.chain.size() - 1),
                               chain));
  checks.push_back(make_check("conductance-below-chain-bound", "chain-bound", b.bound, w, opt.tol,
                              w <= b.bound + opt.tol * std::max(1.0, b.bound)));
  checks.push_back(make_check("chain-bound-below-max-over-d", "chain-bound", b.max_over_d,
                              b.bound, opt.tol,
                              b.bound <= b.max_over_d + opt.tol * std::max(1.0, b.max_over_d)));
  return checks;
}

inline std::vector<Check> run_wad_check(const std::string& path, Report& report,
                                        const Options& opt) {
  Json j = parse_input(path, report);
  WadData x = wad_data_from_json(j.at("X"));
  WadData y = wad_data_from_json(j.at("Y"));
  DominationCertificate cert = certificate_from_json(j.at("certificate"));
  DominationReport rep = verify_domination(x, y, cert, opt.tol);
  std::vector<Check> checks;
  for (char clause : {'a', 'b', 'c', 'd', 'e'}) {
    std::string detail;
    for (const auto& v : rep.violations)
      if (v.clause == clause) detail += (detail.empty() ? "" : "; ") + v.detail;
    checks.push_back(make_check(std::string("clause-") + clause, "domination-certificate", 0.0,
                                rep.violated(clause) ? 1.0 : 0.0, 0.0, !rep.violated(clause),
                                detail));
  }
  return checks;
}

inline std::vector<Check> run_wad_strip(const std::string& path, Report& report,
                                        const Options& opt) {
  Json j = parse_input(path, report);
  Wad x{wad_data_from_json(j.at("X"))};
  // B lives on X's surface; rebind it onto the same arc system.
  Wad b{WadData{x.system(), wad_data_from_json(j.at("B")).weights}};
  Wad y{wad_data_from_json(j.at("Y"))};
  DominationCertificate cert = certificate_from_json(j.at("certificate"));
  std::vector<Check> checks;
  DominationReport pre = verify_domination(add(x, b), y, cert, opt.tol);
  checks.push_back(make_check("input-certificate", "domination-certificate", 1.0,
                              pre.pass ? 1.0 : 0.0, 0.0, pre.pass));
  if (pre.pass) {
    StripBufferResult res = strip_buffer(x, b, y, cert, opt.tol);
    DominationReport post = verify_domination(x, res.y_prime, res.cert, opt.tol);
    std::string weights;
    for (const auto& [arc, w] : res.y_prime.weights())
      weights += (weights.empty() ? "" : ", ") + arc + "=" + std::to_string(w);
    checks.push_back(make_check("stripped-certificate", "buffer-strip", 1.0,
                                post.pass ? 1.0 : 0.0, 0.0, post.pass,
                                "||B||_1 = " + std::to_string(norm1(b)) + "; Y' = {" + weights +
                                    "}"));
  }
  return checks;
}

inline std::vector<Check> run_dickson(const std::string& path, Report& report) {
  Json j = parse_input(path, report);
  std::vector<LatticePoint> points;
  for (const auto& p : j.at("points")) points.push_back(p.get<LatticePoint>());
  std::vector<LatticePoint> basis = dickson_basis(points);  // cross-checks internally
  std::string listing;
  for (const auto& p : basis) {
    listing += listing.empty() ? "" : " ";
    listing += "(";
    for (std::size_t i = 0; i < p.size(); ++i)
      listing += (i ? "," : "") + std::to_string(p[i]);
    listing += ")";
  }
  return {make_check("minimal-elements", "finite-basis", static_cast<double>(basis.size()),
                     static_cast<double>(basis.size()), 0.0, true, listing)};
}

inline std::vector<Check> run_hubbard_validate(const std::string& path, Report& report) {
  DiskedTreeModel m = model_from_json(parse_input(path, report));
  ModelValidation v = validate_model(m);
  std::vector<Check> checks;
  if (v.valid) {
    checks.push_back(make_check("model-axioms", "model-validation", 0.0, 0.0, 0.0, true));
  } else {
    for (const auto& issue : v.issues)
      checks.push_back(
          make_check(issue.axiom, "model-validation", 0.0, 1.0, 0.0, false, issue.detail));
  }
  return checks;
}

inline std::vector<Check> run_hubbard_matrix(const std::string& path, Report& report, int k) {
  DiskedTreeModel m = model_from_json(parse_input(path, report));
  IntMatrix sym = transition_matrix(m, k);
  IntMatrix pow = matrix_power(transition_matrix(m, 1), k);
  std::string listing;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    listing += i ? "; " : "";
    listing += m.edges[i].id + ": [";
    for (std::size_t j = 0; j < sym.size(); ++j)
      listing += (j ? "," : "") + std::to_string(sym[i][j]);
    listing += "]";
  }
  return {make_check("symbolic-matches-power", "transition-matrix", 0.0,
                     sym == pow ? 0.0 : 1.0, 0.0, sym == pow, "k=" + std::to_string(k)),
          value_check("matrix", "transition-matrix", static_cast<double>(k), listing)};
}

inline std::vector<Check> run_hubbard_expansion(const std::string& path, Report& report) {
  DiskedTreeModel m = model_from_json(parse_input(path, report));
  ExpansionReport rep = expansion_check(m);
  std::vector<Check> checks;
  for (const auto& row : rep.rows)
    checks.push_back(make_check("row-sum:" + row.edge, "expansion", 2.0,
                                static_cast<double>(row.row_sum), 0.0, row.ok));
  return checks;
}

inline std::vector<Check> run_hubbard_subdivide(const std::string& path, Report& report, int r) {
  DiskedTreeModel m = model_from_json(parse_input(path, report));
  LevelData data = subdivide(m, r);
  std::vector<Check> checks;
  double min_len = std::pow(2.0, r), min_new = std::pow(2.0, r - 1);
  for (const auto& chain : data.chains) {
    double len = static_cast<double>(chain.segment_images.size());
    int news = 0;
    for (const auto& d : chain.disks) news += d.is_new ? 1 : 0;
    checks.push_back(
        make_check("chain-length:" + chain.edge, "big-distance", min_len, len, 0.0, len >= min_len));
    if (r >= 1)
      checks.push_back(make_check("new-disks:" + chain.edge, "good-disks", min_new,
                                  static_cast<double>(news), 0.0, news >= min_new));
  }
  return checks;
}

inline std::vector<Check> run_hubbard_yz(const std::string& path, Report& report, int r,
                                         const std::string& wad_path, const Options& opt) {
  DiskedTreeModel m = model_from_json(parse_input(path, report));
  Wad y = wad_path.empty() ? [&] {
    std::map<std::string, double> w;
    for (const auto& e : m.edges) w[e.id] = 1.0;
    return Wad(tree_arc_system(m), std::move(w));
  }()
                           : aligned_wad_from_json(m, parse_input(wad_path, report));
  std::vector<Check> checks;
  double max_local = 0.0;
  for (const auto& d : m.disks)
    max_local = std::max(max_local, aligned_local_conductance(m, y.data(), d.id));
  double cap = std::pow(2.0, -(r - 2)) * max_local;
  for (const auto& e : m.edges) {
    double bound = yz_bound(m, y, r, e.id);
    double direct = substituted_chain_conductance(m, y, r, e.id);
    checks.push_back(make_check("direct-below-bound:" + e.id, "subdivided-chain-bound", bound,
                                direct, opt.tol, direct <= bound + opt.tol));
    checks.push_back(make_check("bound-below-cap:" + e.id, "subdivided-chain-bound", cap, bound,
                                opt.tol, bound <= cap + opt.tol));
  }
  return checks;
}

inline std::vector<Check> run_hubbard_constants(int p, int n, const Options& opt) {
  EntropyConstants c = entropy_constants(p, n);
  std::vector<Check> checks;
  checks.push_back(value_check("q", "weight-shift-recursion", c.q_n,
                               "p=" + std::to_string(p) + ", n=" + std::to_string(n)));
  // Minimality: q_{k+1} = 3p (q_k + 2) exactly along the sequence.
  double q_prev = entropy_q(p, n > 0 ? n - 1 : 0);
  bool minimal = n == 0 ? c.q_n == 0.0 : c.q_n == 3.0 * p * (q_prev + 2.0);
  checks.push_back(make_check("recursion-minimal", "weight-shift-recursion",
                              n == 0 ? 0.0 : 3.0 * p * (q_prev + 2.0), c.q_n, 0.0, minimal));
  checks.push_back(value_check("loss-factor", "horizontal-weight-loss", c.loss_factor,
                               "stated value " + std::to_string(c.loss_factor_stated) +
                                   " (the estimate itself yields 3/8)"));
  double lhs = c.loss_factor * c.threshold_m + 3.0 * p * c.q_10p;
  checks.push_back(make_check("threshold-inequality", "horizontal-weight-loss",
                              c.threshold_m / 2.0, lhs, opt.tol,
                              lhs <= c.threshold_m / 2.0 + opt.tol * c.threshold_m,
                              "M = " + std::to_string(c.threshold_m)));
  return checks;
}

inline std::vector<Check> run_hex(double a, double b, double c, const Options& opt) {
  double side = hexagon_side(a, b, c);
  // Residual of the defining identity, evaluated backwards and scaled by the
  // largest participating term.
  double big = std::cosh(side) * std::sinh(a) * std::sinh(b);
  double scale = std::max({big, std::cosh(a) * std::cosh(b), std::cosh(c)});
  double rel = std::abs(big - std::cosh(a) * std::cosh(b) - std::cosh(c)) / scale;
  std::vector<Check> checks;
  checks.push_back(value_check("side", "hexagon-identity", side));
  checks.push_back(make_check("identity-residual", "hexagon-identity", 0.0, rel, opt.tol,
                              rel <= std::max(opt.tol, 1e-10)));
  double swapped = hexagon_side(b, a, c);
  checks.push_back(make_check("symmetry", "hexagon-identity", side, swapped, 0.0,
                              side == swapped));
  return checks;
}

inline std::vector<Check> run_pants(double a, double b, double c, bool self, const Options& opt) {
  std::vector<Check> checks;
  if (self) {
    double len = pants_self_transversal(a, b);
    checks.push_back(value_check("self-transversal", "pants-transversal", len,
                                 "principal -2 log a = " + std::to_string(-2.0 * std::log(a))));
  } else {
    double len = pants_transversal(a, b, c);
    checks.push_back(value_check("transversal", "pants-transversal", len,
                                 "principal -log a - log b = " +
                                     std::to_string(-std::log(a) - std::log(b))));
    double swapped = pants_transversal(b, a, c);
    checks.push_back(
        make_check("symmetry", "pants-transversal", len, swapped, 0.0, len == swapped));
  }
  (void)opt;
  return checks;
}

inline std::vector<Check> run_strip_width(double d, double T, double res, const Options& opt) {
  StripWidthResult r = strip_width_check(d, T, res, {opt.tol, 2000});
  std::vector<Check> checks;
  checks.push_back(value_check("estimate", "strip-width", r.estimate,
                               "grid " + std::to_string(r.cols) + "x" + std::to_string(r.rows)));
  checks.push_back(value_check("principal", "strip-width", r.principal,
                               "-(2/pi) log d at d=" + std::to_string(d)));
  checks.push_back(value_check("effective-d", "strip-width", r.effective_d));
  return checks;
}

inline std::vector<Check> run_grid_width(const std::string& path, Report& report, bool annulus,
                                         const Options& opt) {
  Json j = parse_input(path, report);
  std::vector<Check> checks;
  if (annulus) {
    GridAnnulus a = annulus_from_json(j);
    double w = annulus_width(a, {opt.tol, 2000});
    checks.push_back(value_check("annulus-width", "grid-width", w));
    double exact = static_cast<double>(a.m) / a.n;
    checks.push_back(make_check("uniform-exactness", "grid-width", exact, w, 1e-12,
                                std::abs(w - exact) <= 1e-12 * std::max(1.0, exact)));
  } else {
    GridQuad q = quad_from_json(j);
    double w = grid_width(q, {opt.tol, 2000});
    checks.push_back(value_check("quad-width", "grid-width", w));
    bool uniform = q.obstacles.empty() && q.lo_begin == 0 && q.lo_end < 0 && q.hi_begin == 0 &&
                   q.hi_end < 0;
    if (uniform) {
      double exact = static_cast<double>(q.m) / q.n;
      checks.push_back(make_check("uniform-exactness", "grid-width", exact, w, 1e-12,
                                  std::abs(w - exact) <= 1e-12 * std::max(1.0, exact)));
    }
  }
  return checks;
}

inline std::vector<Check> run_converge(const std::string& path, Report& report,
                                       const std::vector<int>& resolutions,
                                       const std::string& csv_path, const Options& opt) {
  Json j = parse_input(path, report);
  std::string kind = j.at("kind").get<std::string>();
  std::vector<ConvergenceRow> table;
  bool exact_expected = false;
  double exact = 0.0;
  if (kind == "rectangle") {
    RectangleTarget t;
    t.aspect = j.at("aspect").get<double>();
    if (j.contains("notch")) {
      t.notch_fx = j.at("notch").at(0).get<double>();
      t.notch_fy = j.at("notch").at(1).get<double>();
    }
    table = convergence_check(t, resolutions, {opt.tol, 2000});
    exact_expected = t.notch_fx >= 1.0 && t.notch_fy >= 1.0;
    exact = t.aspect;
  } else if (kind == "annulus") {
    AnnulusTarget t;
    t.modulus = j.at("modulus").get<double>();
    table = convergence_check(t, resolutions, {opt.tol, 2000});
  } else {
    throw StructuralError("converge: unknown target kind '" + kind + "'");
  }
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    csv << "resolution,estimate,delta\n";
    for (const auto& row : table) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", row.resolution, row.estimate, row.delta);
      csv << buf;
    }
  }
  std::vector<Check> checks;
  for (const auto& row : table) {
    if (exact_expected)
      checks.push_back(make_check("estimate@" + std::to_string(row.resolution), "grid-width",
                                  exact, row.estimate, 1e-12,
                                  std::abs(row.estimate - exact) <= 1e-12 * std::max(1.0, exact),
                                  "delta " + std::to_string(row.delta)));
    else
      checks.push_back(value_check("estimate@" + std::to_string(row.resolution), "grid-width",
                                   row.estimate, "delta " + std::to_string(row.delta)));
  }
  return checks;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"renorm: verification toolkit for circuits, weighted arc diagrams,"
               " disked-tree substitution dynamics and grid extremal width"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "absolute/relative tolerance for checks");
  app.add_option("--seed", opt.seed, "seed for the fuzz suites");
  app.add_option("--jobs", opt.jobs, "parallel fixtures in multi-file runs");
  app.add_option("--out", opt.out, "write the JSON report here instead of stdout");

  std::vector<std::string> files;
  int count = 500, k_iter = 2, depth_r = 2, p = 2, n_index = 1;
  double hex_a = 1, hex_b = 1, hex_c = 1, strip_d = 0.25, strip_T = 10, strip_res = 128;
  bool pants_self = false, annulus = false;
  std::string wad_path, csv_path;
  std::vector<int> resolutions{32, 64, 128};

  // Global options (--tol, --seed, ...) may follow the subcommand.
  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* c_solve = sub("circuit-solve", "solve circuits, verify the equilibrium laws");
  c_solve->add_option("files", files)->required();
  auto* c_laws = sub("circuit-laws", "seeded fuzz of the composition laws");
  c_laws->add_option("--count", count, "random circuits per law");
  auto* c_tcg = sub("tcg-bound", "chain bound on trees of complete graphs");
  c_tcg->add_option("files", files)->required();
  auto* c_wad = sub("wad-check", "verify a domination certificate");
  c_wad->add_option("files", files)->required();
  auto* c_strip = sub("wad-strip", "strip a buffer and re-verify");
  c_strip->add_option("files", files)->required();
  auto* c_dickson = sub("dickson", "minimal elements of a lattice set");
  c_dickson->add_option("files", files)->required();
  auto* c_hval = sub("hubbard-validate", "model axioms");
  c_hval->add_option("files", files)->required();
  auto* c_hmat = sub("hubbard-matrix", "transition matrix of an iterate");
  c_hmat->add_option("files", files)->required();
  c_hmat->add_option("--k", k_iter, "iterate");
  auto* c_hexp = sub("hubbard-expansion", "row sums of M^p");
  c_hexp->add_option("files", files)->required();
  auto* c_hsub = sub("hubbard-subdivide", "subdivision chains at level r*p");
  c_hsub->add_option("files", files)->required();
  c_hsub->add_option("--r", depth_r, "depth");
  auto* c_hyz = sub("hubbard-yz", "pullback weight bound along chains");
  c_hyz->add_option("files", files)->required();
  c_hyz->add_option("--r", depth_r, "depth");
  c_hyz->add_option("--wad", wad_path, "aligned weights file");
  auto* c_hconst = sub("hubbard-constants", "entropy-argument constants");
  c_hconst->add_option("--p", p, "period");
  c_hconst->add_option("--n", n_index, "index into the q sequence");
  auto* c_hex = sub("hex", "right-angled hexagon side");
  c_hex->add_option("--a", hex_a)->required();
  c_hex->add_option("--b", hex_b)->required();
  c_hex->add_option("--c", hex_c)->required();
  auto* c_pants = sub("pants", "pair-of-pants transversal length");
  c_pants->add_option("--a", hex_a)->required();
  c_pants->add_option("--b", hex_b)->required();
  c_pants->add_option("--c", hex_c);
  c_pants->add_flag("--self", pants_self, "transversal returning to cuff a in P(a,b,b)");
  auto* c_sw = sub("strip-width", "grid width of the truncated strip quadrilateral");
  c_sw->add_option("--d", strip_d)->required();
  c_sw->add_option("--T", strip_T, "truncation");
  c_sw->add_option("--res", strip_res, "cells per unit");
  auto* c_gw = sub("grid-width", "extremal width of a grid quad or annulus");
  c_gw->add_option("files", files)->required();
  c_gw->add_flag("--annulus", annulus, "treat inputs as periodic annuli");
  auto* c_conv = sub("converge", "grid estimates across resolutions");
  c_conv->add_option("files", files)->required();
  c_conv->add_option("--resolutions", resolutions, "increasing cell resolutions");
  c_conv->add_option("--csv", csv_path, "write the table as CSV here");

  try {
    std::vector<char*> argv;
    std::string prog = "renorm";
    argv.push_back(prog.data());
    for (auto& a : args) argv.push_back(a.data());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  report.tolerance = opt.tol;
  int exit_code = 0;
  try {
    auto per_file = [&](const std::function<std::vector<Check>(const std::string&, Report&)>& fn) {
      auto blocks = map_files(files, opt.jobs, fn, report);
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (auto& c : blocks[i]) {
          if (files.size() > 1) c.name = files[i] + ":" + c.name;
          report.checks.push_back(std::move(c));
        }
    };
    if (*c_solve) {
      report.command = "circuit-solve";
      per_file([&](const std::string& f, Report& r) { return run_circuit_solve(f, r, opt); });
    } else if (*c_laws) {
      report.command = "circuit-laws";
      report.seed = opt.seed;
      report.checks = run_circuit_laws(opt, count);
    } else if (*c_tcg) {
      report.command = "tcg-bound";
      per_file([&](const std::string& f, Report& r) { return run_tcg_bound(f, r, opt); });
    } else if (*c_wad) {
      report.command = "wad-check";
      per_file([&](const std::string& f, Report& r) { return run_wad_check(f, r, opt); });
    } else if (*c_strip) {
      report.command = "wad-strip";
      per_file([&](const std::string& f, Report& r) { return run_wad_strip(f, r, opt); });
    } else if (*c_dickson) {
      report.command = "dickson";
      per_file([&](const std::string& f, Report& r) { return run_dickson(f, r); });
    } else if (*c_hval) {
      report.command = "hubbard-validate";
      per_file([&](const std::string& f, Report& r) { return run_hubbard_validate(f, r); });
    } else if (*c_hmat) {
      report.command = "hubbard-matrix";
      per_file([&](const std::string& f, Report& r) { return run_hubbard_matrix(f, r, k_iter); });
    } else if (*c_hexp) {
      report.command = "hubbard-expansion";
      per_file([&](const std::string& f, Report& r) { return run_hubbard_expansion(f, r); });
    } else if (*c_hsub) {
      report.command = "hubbard-subdivide";
      per_file(
          [&](const std::string& f, Report& r) { return run_hubbard_subdivide(f, r, depth_r); });
    } else if (*c_hyz) {
      report.command = "hubbard-yz";
      per_file([&](const std::string& f, Report& r) {
        return run_hubbard_yz(f, r, depth_r, wad_path, opt);
      });
    } else if (*c_hconst) {
      report.command = "hubbard-constants";
      report.checks = run_hubbard_constants(p, n_index, opt);
    } else if (*c_hex) {
      report.command = "hex";
      report.checks = run_hex(hex_a, hex_b, hex_c, opt);
    } else if (*c_pants) {
      report.command = "pants";
      report.checks = run_pants(hex_a, hex_b, hex_c, pants_self, opt);
    } else if (*c_sw) {
      report.command = "strip-width";
      report.checks = run_strip_width(strip_d, strip_T, strip_res, opt);
    } else if (*c_gw) {
      report.command = "grid-width";
      per_file([&](const std::string& f, Report& r) { return run_grid_width(f, r, annulus, opt); });
    } else if (*c_conv) {
      report.command = "converge";
      per_file([&](const std::string& f, Report& r) {
        return run_converge(f, r, resolutions, csv_path, opt);
      });
    }
    exit_code = report.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    report.error = e.what();
    exit_code = 2;
  }

  if (opt.out.empty()) {
    write_report(out, report);
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    write_report(f, report);
  }
  return exit_code;
}

}  // namespace renorm::cli
