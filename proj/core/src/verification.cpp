#include "qet/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "qet/analysis.hpp"
#include "qet/closed_form.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/numeric.hpp"
#include "qet/protocol.hpp"

namespace qet {

namespace {

const double kRatios[] = {0.1, 1.0, 10.0};

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

class Runner {
 public:
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      std::tie(ok, detail) = body();
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back({name, ok, detail, seconds});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Runner runner;
  const unsigned n_max = std::min(options.n_max, options.oracle_cap);
  ProtocolOptions protocol;
  protocol.oracle_cap = options.oracle_cap;
  protocol.threads = options.threads;

  // Oracle grid plus the quantities the same runs expose.
  double worst_in = 0.0, worst_out = 0.0, worst_accounting = 0.0, worst_probability = 0.0;
  double lowest_trace = std::numeric_limits<double>::infinity();
  double worst_neutral = 0.0;
  std::size_t grid_points = 0;
  runner.run("oracle_closed_form_grid", [&]() -> std::pair<bool, std::string> {
    for (unsigned n = 3; n <= n_max; ++n) {
      for (unsigned m = 1; m < n; ++m) {
        for (double ratio : kRatios) {
          const auto params = params_from_ratio(n, ratio);
          const auto part = Partition::trailing(params, m);
          const auto report = extracted_energy(params, part, optimal_theta(params, part).theta, protocol);
          worst_in = std::max(worst_in, relative_error(report.e_in, input_energy(params, part)));
          worst_out = std::max(worst_out, relative_error(report.e_out, max_output_energy(params, part)));
          worst_accounting = std::max(worst_accounting, std::abs(report.e_out - report.e_out_via_trace));
          lowest_trace = std::min(lowest_trace, report.trace_rho_h);
          double p_sum = 0.0;
          for (const auto& b : report.branches) p_sum += b.probability;
          worst_probability = std::max(worst_probability, std::abs(p_sum - 1.0));
          const auto neutral = post_measurement_averages(report.branches, params, part);
          for (double v : neutral.output_local) worst_neutral = std::max(worst_neutral, std::abs(v));
          worst_neutral = std::max(worst_neutral, std::abs(neutral.interaction));
          ++grid_points;
        }
      }
    }
    return {worst_in <= 1e-10 && worst_out <= 1e-10,
            std::to_string(grid_points) + " points; max rel err e_in " + sci(worst_in) + ", e_out " + sci(worst_out)};
  });
  runner.run("double_accounting", [&]() -> std::pair<bool, std::string> {
    return {worst_accounting <= 1e-10, "max |e_out - (e_in - Tr[rho H])| = " + sci(worst_accounting)};
  });
  runner.run("branch_probabilities", [&]() -> std::pair<bool, std::string> {
    return {worst_probability <= 1e-12, "max |sum p - 1| = " + sci(worst_probability)};
  });
  runner.run("passivity", [&]() -> std::pair<bool, std::string> {
    return {lowest_trace >= -1e-10, "min Tr[rho H] = " + sci(lowest_trace)};
  });
  runner.run("measurement_neutrality", [&]() -> std::pair<bool, std::string> {
    return {worst_neutral <= 1e-12, "max |<H_out>|, |<V>| after measurement = " + sci(worst_neutral)};
  });

  runner.run("ground_state_dense", [&]() -> std::pair<bool, std::string> {
    double worst_energy = 0.0;
    double worst_overlap = 0.0;
    const unsigned top = std::min(options.ground_state_n_max, options.oracle_cap);
    for (unsigned n = 2; n <= top; ++n) {
      for (double ratio : kRatios) {
        const auto params = params_from_ratio(n, ratio);
        const auto gs = exact_ground_state(params, GroundStateMethod::Dense, options.oracle_cap);
        worst_energy = std::max(worst_energy, std::abs(gs.energy));
        worst_overlap = std::max(worst_overlap, 1.0 - overlap(gs.state, analytic_ground_state(params)));
      }
    }
    return {worst_energy <= 1e-10 && worst_overlap <= 1e-10,
            "N=2.." + std::to_string(top) + "; max |lambda_min| " + sci(worst_energy) + ", max 1-overlap " +
                sci(worst_overlap)};
  });

  runner.run("appendix_fixtures", [&]() -> std::pair<bool, std::string> {
    const auto report = appendix_fixture_check();
    std::size_t mismatches = 0;
    for (const auto& c : report.checks) mismatches += !c.expected_match;
    return {report.all_passed(), std::to_string(report.checks.size()) + " fixtures, " +
                                     std::to_string(mismatches) + " expected mismatches adjudicated"};
  });

  runner.run("asymptotic_efficiency", [&]() -> std::pair<bool, std::string> {
    struct Point {
      unsigned n, m;
      double ratio, expected;
    };
    const Point points[] = {{10, 1, 1e6, 0.45},  {100, 1, 1e6, 0.495}, {1000, 1, 1e6, 0.4995},
                            {2, 1, 1e6, 0.25},   {3, 2, 1e4, 1.0 / 6}, {3, 1, 1e4, 1.0 / 3}};
    double worst = 0.0;
    for (const auto& p : points) {
      const auto params = params_from_ratio(p.n, p.ratio);
      worst = std::max(worst, std::abs(efficiency(params, Partition::trailing(params, p.m)) - p.expected));
    }
    return {worst <= 1e-3, "max deviation " + sci(worst)};
  });

  runner.run("optimal_qubit_count", [&]() -> std::pair<bool, std::string> {
    const std::pair<double, double> points[] = {{10.0, 0.42}, {100.0, 0.48}, {1000.0, 0.496}};
    bool ok = true;
    std::string detail;
    for (const auto& [x, expected] : points) {
      const auto r = n_opt(x);
      ok = ok && std::abs(static_cast<double>(r.n_opt_int) - r.n_opt_real) <= 1.0 &&
           std::abs(r.eta_at_opt - expected) <= 0.005;
      detail += "x=" + sci(x) + ": N=" + std::to_string(r.n_opt_int) + " eta=" + sci(r.eta_at_opt) + "; ";
    }
    return {ok, detail};
  });

  runner.run("bell_values", [&]() -> std::pair<bool, std::string> {
    bool ok = true;
    double worst_asymptote = 0.0;
    for (unsigned n : {3u, 8u, 10u}) {
      ok = ok && bell_value_ground_state(ModelParams::zero_coupling_limit(n)).b_value == 1.0;
      double previous = 1.0;
      for (double ratio : decade_grid(-2, 4, 50)) {
        const double b = bell_value_ground_state(params_from_ratio(n, ratio)).b_value;
        ok = ok && b >= previous;
        previous = b;
      }
      worst_asymptote = std::max(worst_asymptote,
                                 std::abs(bell_value_ground_state(params_from_ratio(n, 1e8)).b_value - bell_saturation(n)));
    }
    return {ok && worst_asymptote <= 1e-6, "max asymptote deviation " + sci(worst_asymptote)};
  });

  runner.run("projector_commutes_with_interaction", [&]() -> std::pair<bool, std::string> {
    double worst = 0.0;
    for (unsigned n = 2; n <= std::min(n_max, 10u); ++n) {
      const auto params = params_from_ratio(n, 1.0);
      const auto v = interaction_term(params);
      for (unsigned j = 1; j <= n; ++j) {
        for (int alpha : {1, -1}) worst = std::max(worst, commutator_max_norm(measurement_projector(params, j, alpha), v));
      }
    }
    return {worst == 0.0, "max |[P_j, V]| = " + sci(worst)};
  });

  runner.run("partition_and_rotation_invariance", [&]() -> std::pair<bool, std::string> {
    double worst = 0.0;
    ProtocolOptions lean = protocol;
    lean.keep_branches = false;
    for (unsigned n = 3; n <= std::min(n_max, 6u); ++n) {
      for (unsigned m = 1; m < n; ++m) {
        const auto params = params_from_ratio(n, 1.0);
        const auto trailing = Partition::trailing(params, m);
        const double theta = optimal_theta(params, trailing).theta;
        const auto reference = extracted_energy(params, trailing, theta, lean);
        std::vector<std::uint64_t> leading;
        for (std::uint64_t q = 1; q <= m; ++q) leading.push_back(q);
        const auto moved = simulate_with_outputs(params, leading, theta, lean);
        worst = std::max({worst, std::abs(moved.e_in - reference.e_in), std::abs(moved.e_out - reference.e_out)});
        for (auto q : trailing.outputs()) {
          ProtocolOptions placed = lean;
          placed.rotation_qubit = q;
          worst = std::max(worst, std::abs(extracted_energy(params, trailing, theta, placed).e_out - reference.e_out));
        }
      }
    }
    return {worst <= 1e-12, "max deviation " + sci(worst)};
  });

  runner.run("theta_optimality", [&]() -> std::pair<bool, std::string> {
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_numeric = 0.0;
    for (unsigned n = 2; n <= std::min(n_max, 6u); ++n) {
      for (unsigned m = 1; m < n; ++m) {
        for (double ratio : kRatios) {
          const auto params = params_from_ratio(n, ratio);
          const auto part = Partition::trailing(params, m);
          const double best = output_energy_at_theta(params, part, optimal_theta(params, part).theta);
          for (int i = 0; i < 10000; ++i) {
            const double theta = std::numbers::pi * (i + 0.5) / 10000.0;
            worst_excess = std::max(worst_excess, output_energy_at_theta(params, part, theta) - best);
          }
          const auto numeric = optimize_theta_numeric(params, part, protocol);
          worst_numeric = std::max(worst_numeric, std::abs(numeric.theta - optimal_theta(params, part).theta));
        }
      }
    }
    return {worst_excess <= 1e-14 && worst_numeric <= 1e-7,
            "max sampled excess " + sci(worst_excess) + ", numeric theta deviation " + sci(worst_numeric)};
  });

  runner.run("sweep_thread_determinism", [&]() -> std::pair<bool, std::string> {
    auto serial = figure_dataset(FigureId::Fig2b, 1).rows;
    auto parallel = figure_dataset(FigureId::Fig2b, std::max(options.threads, 4u)).rows;
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = std::memcmp(&serial[i].e_in, &parallel[i].e_in, sizeof(double)) == 0 &&
             std::memcmp(&serial[i].e_out, &parallel[i].e_out, sizeof(double)) == 0 &&
             std::memcmp(&serial[i].eta, &parallel[i].eta, sizeof(double)) == 0;
    }
    return {same, std::to_string(serial.size()) + " rows compared bitwise"};
  });

  return runner.take();
}

}  // namespace qet
