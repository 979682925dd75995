#include "qet/analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "qet/closed_form.hpp"
#include "qet/error.hpp"
#include "qet/numeric.hpp"

namespace qet {

double bell_saturation(std::uint64_t n_qubits) {
  return std::exp2((static_cast<double>(n_qubits) - 2.0) / 2.0);
}

BellReport bell_value_ground_state(const ModelParams& params) {
  const auto n = params.n_qubits();
  if (n < 3) {
    throw Error(ErrorCode::BellUndefinedForN2, "the GHZ Bell value needs N >= 3");
  }
  // B^2 = 1 + (2^(N-2) - 1) (2k/c)^2 with (2k/c)^2 = 1 / (1 + u^2), u = Nh/(2k).
  // Each step is monotone under rounding, so B never decreases as k grows.
  const double saturation = bell_saturation(n);
  const double u = static_cast<double>(n) * params.h() / (2.0 * params.k());
  const double b = std::sqrt(1.0 + (saturation * saturation - 1.0) / (1.0 + u * u));
  return {b, b > 1.0, saturation};
}

double bell_value_ghz_angle(std::uint64_t n_qubits, double alpha) {
  if (n_qubits < 3) {
    throw Error(ErrorCode::BellUndefinedForN2, "the GHZ Bell value needs N >= 3");
  }
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 4.0)) {
    throw Error(ErrorCode::AngleOutOfRange, "GHZ angle must lie in [0, pi/4]");
  }
  return std::hypot(bell_saturation(n_qubits) * std::sin(2.0 * alpha), std::cos(2.0 * alpha));
}

NOptReport n_opt(double x, std::uint64_t n_max) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::NonPositiveRatio, "k/h must be positive and finite");
  }
  if (n_max < 2) {
    throw Error(ErrorCode::InvalidRange, "the integer scan needs n_max >= 2");
  }
  const double x2 = x * x;
  const double c_aux = std::cbrt(16.0) * std::cbrt(x2 + 4.0 * x2 * x2);
  const double root = std::sqrt(1.0 + c_aux);
  const double n_real = 0.5 + 0.5 * root + 0.5 * std::sqrt(2.0 - c_aux + (2.0 + 16.0 * x2) / root);

  auto eta = [x](std::uint64_t n) {
    return single_output_efficiency(validate_params(static_cast<std::int64_t>(n), 1.0, x));
  };
  auto clamp = [n_max](double v) {
    return static_cast<std::uint64_t>(std::min<double>(std::max(v, 2.0), static_cast<double>(n_max)));
  };
  const std::uint64_t lo = clamp(std::floor(n_real));
  const std::uint64_t hi = clamp(std::ceil(n_real));
  std::uint64_t best_n = eta(hi) > eta(lo) ? hi : lo;
  double best_eta = eta(best_n);

  std::uint64_t scan_n = 2;
  double scan_eta = eta(2);
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    const double e = eta(n);
    if (e > scan_eta) {
      scan_eta = e;
      scan_n = n;
    }
  }
  if (scan_eta > best_eta) {
    best_n = scan_n;
    best_eta = scan_eta;
  }
  return {x, n_real, best_n, best_eta, c_aux};
}

SweepRow sweep_row(std::uint64_t n, std::uint64_t m, double ratio, double h, bool with_bell) {
  const auto params = params_from_ratio(static_cast<std::int64_t>(n), ratio, h);
  const auto part = Partition::trailing(params, m);
  const double e_in = input_energy(params, part);
  const double e_out = max_output_energy(params, part);
  SweepRow row{n, m, ratio, e_in, e_out, e_out / e_in, std::nullopt};
  if (with_bell && n >= 3) row.bell = bell_value_ground_state(params).b_value;
  return row;
}

std::vector<SweepRow> efficiency_sweep(const SweepSpec& spec) {
  if (!(spec.h > 0.0) || !std::isfinite(spec.h)) {
    throw Error(ErrorCode::InvalidRange, "h must be positive and finite");
  }
  for (auto n : spec.ns) {
    if (n < 2) throw Error(ErrorCode::InvalidRange, "every N must be at least 2");
    if (spec.ms) {
      for (auto m : *spec.ms) {
        if (m < 1 || m > n - 1) {
          throw Error(ErrorCode::InvalidRange, "m = " + std::to_string(m) +
                                                   " is outside 1..N-1 for N = " + std::to_string(n));
        }
      }
    }
  }
  for (double r : spec.ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::InvalidRange, "k/h ratios must be finite and nonnegative");
    }
  }

  std::vector<std::tuple<std::uint64_t, std::uint64_t, double>> grid;
  for (auto n : spec.ns) {
    auto add_m = [&](std::uint64_t m) {
      for (double r : spec.ratios) grid.emplace_back(n, m, r);
    };
    if (spec.ms) {
      for (auto m : *spec.ms) add_m(m);
    } else {
      for (std::uint64_t m = 1; m < n; ++m) add_m(m);
    }
  }

  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), spec.threads, [&](std::size_t i) {
    const auto [n, m, r] = grid[i];
    rows[i] = sweep_row(n, m, r, spec.h, spec.with_bell);
  });
  return rows;
}

}  // namespace qet
