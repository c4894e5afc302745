// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bregcheb/center.hpp"
#include "bregcheb/closed_form.hpp"
#include "bregcheb/render.hpp"
#include "bregcheb/sampling.hpp"

using namespace bregcheb;
namespace cf = bregcheb::closed_form;

namespace {

constexpr double kAs[] = {4.0, 8.0, 16.0, 32.0};
constexpr unsigned long kSeed = 20090317;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double max_diff(const Point& a, const Point& b) { return (a - b).lpNorm<Eigen::Infinity>(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v + 0.0);  // no "-0"
  return buf;
}

CenterCertificate run_solver(SolverKind kind, const LegendreFunction& F, const EnumeratedSet& S) {
  try {
    return kind == SolverKind::FixedPoint ? solve_fixed_point(F, S, default_start(F, S))
                                          : solve_subgradient(F, S, default_start(F, S));
  } catch (const NonConvergence& e) {
    return e.best();
  }
}

const SolverKind kSolvers[] = {SolverKind::FixedPoint, SolverKind::Subgradient};

std::string tag(const char* gen, double a, SolverKind s) {
  return std::string(gen) + " a=" + fmt(a) + " " + std::string(to_string(s));
}

Outcome euclidean_center() {
  Outcome o;
  double worst = 0.0;
  const auto F = cf::legendre(cf::Generator::Euclidean);
  for (double a : kAs) {
    const EnumeratedSet S(F, make_segment(F, a, kDefaultSegmentSamples));
    for (auto s : kSolvers) {
      const auto c = run_solver(s, F, S);
      const double err = max_diff(c.center, Point::Constant(2, 0.5 * (1.0 + a)));
      worst = std::max(worst, err);
      o.require(err <= 1e-5, tag("energy", a, s) + " center error " + fmt(err));
      o.require(c.membership_gap <= 1e-6, tag("energy", a, s) + " gap " + fmt(c.membership_gap));
      o.require(c.weights.size() == 2 && std::abs(c.weights[0] - 0.5) <= 1e-6 &&
                    std::abs(c.weights[1] - 0.5) <= 1e-6,
                tag("energy", a, s) + " weights differ from (1/2, 1/2)");
    }
  }
  if (o.pass) o.detail = "max center error " + fmt(worst);
  return o;
}

Outcome kl_center() {
  Outcome o;
  double worst = 0.0, recon = 0.0;
  const auto F = cf::legendre(cf::Generator::KL);
  for (double a : kAs) {
    const EnumeratedSet S(F, make_segment(F, a, kDefaultSegmentSamples));
    const Point expected = Point::Constant(2, std::sqrt(a));
    for (auto s : kSolvers) {
      const double err = max_diff(run_solver(s, F, S).center, expected);
      worst = std::max(worst, err);
      o.require(err <= 1e-5, tag("negentropy", a, s) + " center error " + fmt(err));
    }
    const Point r = grad_f_star(F, Point(0.5 * grad_f(F, cf::c0(a)) + 0.5 * grad_f(F, cf::c1(a))));
    recon = std::max(recon, max_diff(r, expected));
    o.require(max_diff(r, expected) <= 1e-9, "reconstruction at a=" + fmt(a));
  }
  if (o.pass) o.detail = "max center error " + fmt(worst) + ", reconstruction " + fmt(recon);
  return o;
}

Outcome is_dichotomy() {
  Outcome o;
  double worst = 0.0;
  const auto F = cf::legendre(cf::Generator::IS);
  for (double a : kAs) {
    const EnumeratedSet S(F, make_segment(F, a, kDefaultSegmentSamples));
    const bool harmonic = a < 17.0;
    const double target = harmonic ? cf::h_of(a) : cf::g_of(a);
    for (auto s : kSolvers) {
      const auto c = run_solver(s, F, S);
      const double err = max_diff(c.center, Point::Constant(2, target));
      worst = std::max(worst, err);
      o.require(err <= 1e-4, tag("neglog", a, s) + " center error " + fmt(err));
      if (harmonic) {
        o.require(c.farthest.size() == 2, tag("neglog", a, s) + " |Q| = " + std::to_string(c.farthest.size()));
      } else {
        double near_half = kInf;
        for (const auto& q : c.farthest) near_half = std::min(near_half, max_diff(q, cf::c_half(a)));
        o.require(near_half <= 1e-3, tag("neglog", a, s) + " no farthest point near the midpoint");
      }
    }
  }
  const double at = cf::threshold_a();
  o.require(std::abs(at - 17.63) <= 0.005, "threshold " + fmt(at));
  o.require(std::abs(cf::k_of(at)) <= 1e-8, "k(threshold) " + fmt(cf::k_of(at)));
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "max center error %.3g, threshold %.10f, k(threshold) %.2g", worst, at,
                  cf::k_of(at));
    o.detail = buf;
  }
  return o;
}

Outcome mu_reconstruction() {
  Outcome o;
  double worst = 0.0;
  for (double a : {4.0, 32.0}) {
    const auto mu = cf::mu_coefficients(a);
    for (double m : {mu.mu0, mu.mu_half, mu.mu1}) o.require(m >= 0.0 && m <= 1.0, "mu outside [0,1] at a=" + fmt(a));
    o.require(std::abs(mu.mu0 + mu.mu_half + mu.mu1 - 1.0) <= 1e-12, "mu sum at a=" + fmt(a));
    const double err = max_diff(cf::reconstruct(cf::Generator::IS, a, mu), cf::center_is(a).center);
    worst = std::max(worst, err);
    o.require(err <= 1e-9, "reconstruction at a=" + fmt(a) + " error " + fmt(err));
  }
  if (o.pass) o.detail = "max reconstruction error " + fmt(worst);
  return o;
}

Outcome identity_suites() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  for (const auto& F : sampling::all_generators(3, rng)) {
    const std::string name(to_string(F.kind()));
    for (int i = 0; i < 1000; ++i) {
      const Point x = sampling::interior_point(F, rng), y = sampling::interior_point(F, rng);
      const Point z = sampling::interior_point(F, rng), w = sampling::interior_point(F, rng);
      const double three = std::abs(three_point_residual(F, x, y, z)) / (1.0 + distance(F, x, z));
      const double four =
          std::abs(four_point_residual(F, x, y, z, w)) / (1.0 + distance(F, y, z) + distance(F, x, w));
      const Point gx = grad_f(F, x);
      const double round = (grad_f_star(F, gx) - x).norm();
      const double fy = std::abs(eval_f(F, x) + eval_f_star(F, gx) - x.dot(gx));
      worst = std::max({worst, three, four, round, fy});
      o.require(three <= 1e-9 && four <= 1e-9 && round <= 1e-9 && fy <= 1e-9,
                name + " residual " + fmt(std::max({three, four, round, fy})));
    }
  }
  if (o.pass) o.detail = "max residual " + fmt(worst) + " over 4 x 1000 tuples";
  return o;
}

std::vector<Point> random_points(const LegendreFunction& F, int n, std::mt19937_64& rng) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(sampling::interior_point(F, rng));
  return pts;
}

Outcome derivative_checks() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst_grad = 0.0, worst_dir = 0.0;
  for (const auto& F : sampling::all_generators(2, rng)) {
    const std::string name(to_string(F.kind()));
    const EnumeratedSet S(F, CompactSet::finite(random_points(F, 5, rng)));
    int checked = 0;
    while (checked < 100) {
      const Point x = sampling::interior_point(F, rng);
      auto d = distances_to(F, S, x);
      std::sort(d.begin(), d.end());
      if (d[d.size() - 1] - d[d.size() - 2] < 1e-3) continue;  // keep away from kinks
      ++checked;
      const auto v = subdifferential(F, S, x);
      o.require(v.size() == 1, name + " expected a single farthest point");
      Point fd(2);
      for (int j = 0; j < 2; ++j) {
        Point p = x, m = x;
        p[j] += 1e-6;
        m[j] -= 1e-6;
        fd[j] = (farthest_value(F, S, p) - farthest_value(F, S, m)) / 2e-6;
      }
      const double err = (fd - v.front()).lpNorm<Eigen::Infinity>();
      worst_grad = std::max(worst_grad, err);
      o.require(err <= 1e-4, name + " gradient mismatch " + fmt(err));
    }
    // Directional derivatives at random points and at tied points on the segment diagonal.
    const EnumeratedSet seg(F, make_segment(F, 4.0, 257));
    for (int i = 0; i < 100; ++i) {
      const bool tied = i % 2 == 0 && F.kind() != Kind::Quadratic;
      const Point x = tied ? Point::Constant(2, 2.5 + 3.0 * i / 100.0) : sampling::interior_point(F, rng);
      Point h = Point::NullaryExpr(2, [&] { return normal(rng); });
      h.normalize();
      const double t = 1e-6;
      const double quotient = (farthest_value(F, seg, Point(x + t * h)) - farthest_value(F, seg, x)) / t;
      const double err = std::abs(quotient - directional_derivative(F, seg, x, h));
      worst_dir = std::max(worst_dir, err);
      o.require(err <= 1e-4, name + " directional mismatch " + fmt(err));
    }
  }
  if (o.pass) o.detail = "max gradient error " + fmt(worst_grad) + ", max directional error " + fmt(worst_dir);
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  double worst = kInf;
  for (const auto& F : sampling::all_generators(2, rng)) {
    const std::string name(to_string(F.kind()));
    std::vector<EnumeratedSet> sets;
    sets.emplace_back(F, make_segment(F, 4.0, kDefaultSegmentSamples));
    for (int k = 0; k < 5; ++k) sets.emplace_back(F, CompactSet::finite(random_points(F, 3 + k, rng)));
    for (const auto& S : sets) {
      for (int i = 0; i < 500; ++i) {
        const double w =
            monotonicity_witness(F, S, sampling::interior_point(F, rng), sampling::interior_point(F, rng));
        worst = std::min(worst, w);
        o.require(w >= -1e-9, name + " witness " + fmt(w));
      }
    }
  }
  if (o.pass) o.detail = "min witness " + fmt(worst) + " over 4 x 6 x 500 pairs";
  return o;
}

Outcome hull_blindness() {
  Outcome o;
  double worst_excess = -kInf;
  auto excess_at = [](const LegendreFunction& F, const EnumeratedSet& S, const Point& x) {
    const auto d = distances_to(F, S, x);
    return *std::max_element(d.begin() + 1, d.end() - 1) - std::max(d.front(), d.back());
  };
  for (auto gen : {cf::Generator::Euclidean, cf::Generator::KL}) {
    const auto F = cf::legendre(gen);
    for (double a : kAs) {
      const EnumeratedSet S(F, make_segment(F, a, 257));
      const auto g = render::colormap_grid(F, S, render::default_region(a), 100);
      for (int j = 0; j < g.res; ++j)
        for (int i = 0; i < g.res; ++i) {
          const double e = excess_at(F, S, Point{{g.x(i), g.y(j)}});
          worst_excess = std::max(worst_excess, e);
          o.require(e <= 1e-10, std::string(cf::to_string(gen)) + " interior sample exceeds endpoints by " + fmt(e));
        }
    }
  }
  const auto L = cf::legendre(cf::Generator::IS);
  const EnumeratedSet S(L, make_segment(L, 32.0, kDefaultSegmentSamples));
  const auto g = render::colormap_grid(L, S, render::default_region(32.0), 100);
  int strict = 0;
  for (int j = 0; j < g.res; ++j)
    for (int i = 0; i < g.res; ++i) {
      const Point x{{g.x(i), g.y(j)}};
      if (in_interior(L, x) && excess_at(L, S, x) > 1e-10) ++strict;
    }
  o.require(strict > 0, "no Itakura-Saito grid point sees an interior sample");
  const auto far = farthest(L, S, cf::center_is(32.0).center);
  bool half_farthest = false;
  for (const auto& q : far.argmax) half_farthest = half_farthest || max_diff(q, cf::c_half(32.0)) <= 1e-3;
  o.require(half_farthest, "midpoint not farthest from the Itakura-Saito center");
  if (o.pass)
    o.detail = "convex cases max excess " + fmt(worst_excess) + "; Itakura-Saito strict grid points " +
               std::to_string(strict) + ", midpoint farthest from center";
  return o;
}

Outcome multivalued_at_centers() {
  Outcome o;
  int count = 0;
  auto check = [&](const std::string& name, const CenterCertificate& c) {
    ++count;
    o.require(c.membership_gap <= kTolerances.gap, name + " not certified, gap " + fmt(c.membership_gap));
    o.require(c.farthest.size() >= 2, name + " certified center with a single farthest point");
  };
  for (auto gen : {cf::Generator::Euclidean, cf::Generator::KL, cf::Generator::IS}) {
    const auto F = cf::legendre(gen);
    for (double a : kAs) {
      const EnumeratedSet S(F, make_segment(F, a, kDefaultSegmentSamples));
      for (auto s : kSolvers) check(tag(std::string(cf::to_string(gen)).c_str(), a, s), run_solver(s, F, S));
    }
  }
  std::mt19937_64 rng(kSeed + 9);
  for (int J : {2, 3}) {
    for (const auto& F : sampling::all_generators(J, rng)) {
      for (int k = 0; k < 10; ++k) {
        const EnumeratedSet S(F, CompactSet::finite(random_points(F, 2 + k, rng)));
        for (auto s : kSolvers)
          check(std::string(to_string(F.kind())) + " random set " + std::to_string(k), run_solver(s, F, S));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " certified centers, all with |Q| >= 2";
  return o;
}

Outcome projection_inequality() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 10);
  double worst = kInf;
  for (const auto& F : sampling::all_generators(2, rng)) {
    const std::string name(to_string(F.kind()));
    for (int trial = 0; trial < 50; ++trial) {
      const auto pts = random_points(F, 2 + trial % 6, rng);
      const Point x = sampling::interior_point(F, rng);
      const auto y = dual_hull_projection(F, CompactSet::finite(pts), x).point;
      for (const auto& c : pts) {
        const double slack = distance(F, x, c) - distance(F, x, y) - distance(F, y, c);
        worst = std::min(worst, slack);
        o.require(slack >= -1e-8, name + " slack " + fmt(slack));
      }
    }
  }
  if (o.pass) o.detail = "min slack " + fmt(worst) + " over 4 x 50 instances";
  return o;
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(BREGCHEB_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  for (const std::string fmt_flag : {"", " --ppm"}) {
    const auto a = dir / "bregcheb_acceptance_a";
    const auto b = dir / "bregcheb_acceptance_b";
    const std::string flags = " colormap --segment 32 --res 120" + fmt_flag;
    o.require(run_cli("--gen neglog --out " + a.string() + flags) == 0, "colormap run failed");
    o.require(run_cli("--gen neglog --out " + b.string() + flags) == 0, "colormap run failed");
    const auto first = slurp(a);
    o.require(!first.empty() && first == slurp(b), "colormap output differs between runs" + fmt_flag);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
  const int repro = run_cli("repro");
  o.require(repro == 0, "repro exited with " + std::to_string(repro));
  if (o.pass) o.detail = "CSV and PPM byte-identical, repro exit 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Euclidean center", euclidean_center},
      {"KL center", kl_center},
      {"Itakura-Saito dichotomy", is_dichotomy},
      {"mu reconstruction", mu_reconstruction},
      {"identity suites", identity_suites},
      {"subdifferential and directional derivative", derivative_checks},
      {"monotonicity", monotonicity},
      {"hull blindness and IS counterexample", hull_blindness},
      {"multivalued farthest map at centers", multivalued_at_centers},
      {"dual hull projection inequality", projection_inequality},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2zu  %-44s  %s  (%.2fs)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
