// bregcheb: command-line front end for right Bregman farthest distances and
// Chebyshev centers.  Exit codes: 0 success, 1 reproduction failure,
// 2 usage or domain error, 3 solver non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bregcheb/closed_form.hpp"
#include "bregcheb/io.hpp"
#include "bregcheb/render.hpp"
#include "bregcheb/repro.hpp"

namespace {

using namespace bregcheb;
using nlohmann::json;

constexpr int kExitRepro = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

std::vector<double> parse_reals(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse number '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidInput("cannot parse number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty numeric list");
  return out;
}

Point parse_point(const std::string& text) {
  const auto v = parse_reals(text, ',');
  Point p(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) p[static_cast<Eigen::Index>(i)] = v[i];
  if (!p.allFinite()) throw InvalidInput("point coordinates must be finite");
  return p;
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) pts.push_back(parse_point(item));
  return pts;
}

Eigen::MatrixXd parse_matrix(const std::string& text) {
  const auto rows = parse_points(text);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != A.cols()) throw InvalidInput("ragged matrix literal");
    A.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  }
  return A;
}

struct Globals {
  std::string gen = "energy";
  std::string matrix;
  std::optional<double> tol;
  unsigned long seed = 20090317;
  std::string out;
};

struct SetSpec {
  std::string points;
  std::optional<double> segment;
  int samples = kDefaultSegmentSamples;
  std::string json_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--points", points, "finite set, e.g. 1,2;3,4");
    cmd->add_option("--segment", segment, "segment from (1,a) to (a,1)");
    cmd->add_option("--samples", samples, "odd number of segment samples");
    cmd->add_option("--set", json_file, "compact set as a JSON file");
  }
};

LegendreFunction make_generator(const Globals& g, int dimension) {
  const Kind kind = kind_from_string(g.gen);
  if (kind == Kind::Quadratic) {
    if (g.matrix.empty()) return LegendreFunction::quadratic(Eigen::MatrixXd::Identity(dimension, dimension));
    const auto A = parse_matrix(g.matrix);
    if (A.rows() != dimension) throw InvalidInput("matrix size does not match point dimension");
    return LegendreFunction::quadratic(A);
  }
  return LegendreFunction::make(kind, dimension);
}

int set_dimension(const SetSpec& s) {
  if (s.segment) return 2;
  if (!s.points.empty()) return static_cast<int>(parse_points(s.points).front().size());
  if (!s.json_file.empty()) {
    std::ifstream in(s.json_file);
    if (!in) throw InvalidInput("cannot read " + s.json_file);
    return io::compact_set_from_json(json::parse(in)).dimension();
  }
  throw InvalidInput("give --points, --segment or --set");
}

CompactSet make_set(const SetSpec& s, const LegendreFunction& F) {
  if (s.segment) return make_segment(F, *s.segment, s.samples);
  CompactSet C = [&] {
    if (!s.points.empty()) return CompactSet::finite(parse_points(s.points));
    std::ifstream in(s.json_file);
    if (!in) throw InvalidInput("cannot read " + s.json_file);
    return io::compact_set_from_json(json::parse(in));
  }();
  validate(C, F);
  return C;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + g.out);
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

SolverOptions solver_options(const Globals& g, int max_iter) {
  SolverOptions opt;
  opt.max_iter = max_iter;
  if (g.tol) opt.tol = *g.tol;
  return opt;
}

closed_form::Generator closed_form_generator(const std::string& gen) {
  if (gen == "energy") return closed_form::Generator::Euclidean;
  if (gen == "negentropy") return closed_form::Generator::KL;
  if (gen == "neglog") return closed_form::Generator::IS;
  throw InvalidInput("closed forms exist for energy, negentropy and neglog only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right Bregman farthest distances and Chebyshev centers"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--gen", g.gen, "energy | quad | negentropy | neglog")
      ->check(CLI::IsMember({"energy", "quad", "quadratic", "negentropy", "neglog"}));
  app.add_option("--matrix", g.matrix, "SPD matrix for quad, rows separated by ';'");
  app.add_option("--tol", g.tol, "solver tolerance / reproduction tolerance override");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_option("--out", g.out, "output file (default: stdout)");

  std::string x_text, y_text;
  auto* dist = app.add_subcommand("dist", "Bregman distance D(x, y)");
  dist->add_option("--x", x_text)->required();
  dist->add_option("--y", y_text)->required();

  SetSpec far_set;
  auto* far = app.add_subcommand("farthest", "farthest distance and farthest points of x");
  far_set.add_to(far);
  far->add_option("--x", x_text)->required();

  SetSpec center_set;
  std::string solver = "fixed";
  std::string x0_text;
  int max_iter = 20000;
  auto* center_cmd = app.add_subcommand("center", "Chebyshev center with certificate");
  center_set.add_to(center_cmd);
  center_cmd->add_option("--solver", solver)->check(CLI::IsMember({"fixed", "subgrad", "both"}));
  center_cmd->add_option("--x0", x0_text, "start point (default: dual average)");
  center_cmd->add_option("--max-iter", max_iter);

  double oracle_a = 4.0;
  auto* oracle = app.add_subcommand("oracle", "closed-form results for the segment (1,a)-(a,1)");
  oracle->add_option("--a", oracle_a)->required();

  double cm_a = 4.0;
  std::string region_text;
  int cm_res = 200;
  int cm_samples = 257;
  bool ppm = false;
  auto* colormap = app.add_subcommand("colormap", "F_C over a planar grid as CSV or PPM");
  colormap->add_option("--segment", cm_a)->required();
  colormap->add_option("--region", region_text, "x0,y0,x1,y1");
  colormap->add_option("--res", cm_res);
  colormap->add_option("--samples", cm_samples);
  colormap->add_flag("--ppm", ppm, "write binary PPM instead of CSV");

  std::string sphere_center;
  double radius = 1.0;
  int rays = 360;
  auto* sphere = app.add_subcommand("sphere", "samples of {y : D(z, y) = r} as CSV");
  sphere->add_option("--center", sphere_center)->required();
  sphere->add_option("--radius", radius)->required();
  sphere->add_option("--res", rays);

  int sweep = 1000;
  auto* repro = app.add_subcommand("repro", "reproduce the segment results, PASS/FAIL table");
  repro->add_option("--sweep", sweep, "random tuples for the identity sweep (0 disables)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist) {
      const Point x = parse_point(x_text);
      const Point y = parse_point(y_text);
      const auto F = make_generator(g, static_cast<int>(x.size()));
      emit_json(g, json{{"distance", io::real(distance(F, x, y))}});
    } else if (*far) {
      const auto F = make_generator(g, set_dimension(far_set));
      const auto C = make_set(far_set, F);
      emit_json(g, io::to_json(farthest(F, C, parse_point(x_text))));
    } else if (*center_cmd) {
      const auto F = make_generator(g, set_dimension(center_set));
      const EnumeratedSet S(F, make_set(center_set, F));
      const Point x0 = x0_text.empty() ? default_start(F, S) : parse_point(x0_text);
      const auto opt = solver_options(g, max_iter);
      bool stalled = false;
      auto run = [&](SolverKind kind) {
        try {
          return kind == SolverKind::FixedPoint ? solve_fixed_point(F, S, x0, opt)
                                                : solve_subgradient(F, S, x0, opt);
        } catch (const NonConvergence& e) {
          stalled = true;
          std::cerr << "warning: " << e.what() << "\n";
          return e.best();
        }
      };
      json doc;
      if (solver == "both") {
        const auto a = run(SolverKind::FixedPoint);
        const auto b = run(SolverKind::Subgradient);
        doc = json{{"fixed", io::to_json(a)},
                   {"subgrad", io::to_json(b)},
                   {"disagreement", io::real((a.center - b.center).norm())}};
      } else {
        doc = io::to_json(run(solver == "fixed" ? SolverKind::FixedPoint : SolverKind::Subgradient));
      }
      emit_json(g, doc);
      if (stalled) return kExitNonConvergence;
    } else if (*oracle) {
      using namespace closed_form;
      const auto gen = closed_form_generator(g.gen);
      json doc{{"generator", std::string(to_string(gen))}, {"a", oracle_a},
               {"center", io::point(center(gen, oracle_a))}};
      if (gen == Generator::IS) {
        const auto is = center_is(oracle_a);
        const auto mu = mu_coefficients(oracle_a);
        doc["g"] = g_of(oracle_a);
        doc["h"] = h_of(oracle_a);
        doc["k"] = k_of(oracle_a);
        doc["harmonic_branch"] = is.harmonic_branch;
        doc["farthest_lambdas"] = is.lambdas;
        doc["mu"] = json{{"mu0", mu.mu0}, {"mu_half", mu.mu_half}, {"mu1", mu.mu1}};
        doc["threshold_a"] = threshold_a(g.tol.value_or(1e-12));
      } else {
        doc["farthest_lambdas"] = farthest_structure(gen, oracle_a, center(gen, oracle_a)).lambdas;
      }
      emit_json(g, doc);
    } else if (*colormap) {
      if (g.out.empty()) throw InvalidInput("colormap needs --out");
      const auto F = make_generator(g, 2);
      const EnumeratedSet S(F, make_segment(F, cm_a, cm_samples));
      render::Region region = render::default_region(cm_a);
      if (!region_text.empty()) {
        const auto r = parse_reals(region_text, ',');
        if (r.size() != 4) throw InvalidInput("--region takes x0,y0,x1,y1");
        region = {r[0], r[1], r[2], r[3]};
      }
      const auto grid = render::colormap_grid(F, S, region, cm_res);
      emit(g, ppm ? render::grid_ppm(grid) : render::grid_csv(grid));
    } else if (*sphere) {
      const Point z = parse_point(sphere_center);
      const auto F = make_generator(g, static_cast<int>(z.size()));
      emit(g, render::sphere_csv(render::sphere(F, z, radius, rays)));
    } else if (*repro) {
      repro::Options opt;
      opt.tol_override = g.tol;
      auto checks = repro::run(opt);
      if (sweep > 0) {
        auto extra = repro::identity_sweep(g.seed, sweep, opt.tol_override);
        checks.insert(checks.end(), extra.begin(), extra.end());
      }
      bool ok = true;
      std::string table;
      for (const auto& c : checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s  %-52s  measured=%-12.4g  tol=%.3g\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
        table += line;
        ok = ok && c.pass;
      }
      table += ok ? "all checks passed\n" : "some checks FAILED\n";
      emit(g, table);
      return ok ? 0 : kExitRepro;
    }
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
