#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "qet/closed_form.hpp"
#include "qet/error.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/protocol.hpp"
#include "support/reference.hpp"

using namespace qet;
using namespace std::complex_literals;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qet::Error");
  return ErrorCode::InvalidRange;
}

ProtocolOptions lean() {
  ProtocolOptions o;
  o.keep_branches = false;
  return o;
}

double max_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("branch enumeration") {
  SUBCASE("two qubits") {
    const auto p = validate_params(2, 1.0, 1.0);
    const auto branches = measure_branches(p, Partition::trailing(p, 1));
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(branches[0].alpha == std::vector<int>{1});
    CHECK(branches[1].alpha == std::vector<int>{-1});
  }
  SUBCASE("three qubits, one input") {
    const auto p = validate_params(3, 1.0, 1.0);
    const auto branches = measure_branches(p, Partition::trailing(p, 2));
    CHECK(branches.size() == 2);
    double total = 0.0;
    for (const auto& b : branches) total += b.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("three qubits, two inputs") {
    const auto p = validate_params(3, 1.0, 1.0);
    const auto part = Partition::trailing(p, 1);
    const auto branches = measure_branches(p, part);
    REQUIRE(branches.size() == 4);
    CHECK(branches[1].alpha == std::vector<int>{1, -1});
    CHECK(branches[2].alpha == std::vector<int>{-1, 1});
    CHECK(branches[3].alpha_product == 1);
    const auto injected = injected_energy(branches, p, part);
    REQUIRE(injected.per_qubit.size() == 2);
    for (double e : injected.per_qubit) CHECK(e == doctest::Approx(3 / std::sqrt(13.0)).epsilon(1e-14));
    for (const auto& b : branches) {
      CHECK_FALSE(b.null_branch);
      CHECK(b.post_state.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("probabilities match the reference model") {
    for (unsigned n = 2; n <= 5; ++n) {
      for (unsigned m = 1; m < n; ++m) {
        const auto p = params_from_ratio(n, 0.7);
        const auto branches = measure_branches(p, Partition::trailing(p, m));
        std::vector<unsigned> outputs;
        for (unsigned q = n - m + 1; q <= n; ++q) outputs.push_back(q);
        const auto run = ref::protocol(ref::build_model(n, 1.0, 0.7), outputs, 0.0, outputs.front());
        const std::size_t n_in = n - m;
        for (std::size_t b = 0; b < branches.size(); ++b) {
          // Reference: bit j of its index is input j; library: bit n_in-1-j.
          std::size_t reversed = 0;
          for (std::size_t j = 0; j < n_in; ++j) reversed |= ((b >> (n_in - 1 - j)) & 1u) << j;
          CHECK(std::abs(branches[b].probability - run.probabilities[reversed]) <= 1e-14);
        }
      }
    }
  }
}

TEST_CASE("injected energy") {
  const auto p3 = validate_params(3, 1.0, 1.0);
  CHECK(extracted_energy(p3, Partition::trailing(p3, 2), 0.0, lean()).e_in ==
        doctest::Approx(3 / std::sqrt(13.0)).epsilon(1e-14));
  CHECK(extracted_energy(p3, Partition::trailing(p3, 1), 0.0, lean()).e_in ==
        doctest::Approx(6 / std::sqrt(13.0)).epsilon(1e-14));
  const auto p4 = validate_params(4, 1.0, 1.0);
  CHECK(extracted_energy(p4, Partition::trailing(p4, 1), 0.0, lean()).e_in ==
        doctest::Approx(6 / std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("conditional unitary") {
  SUBCASE("identity at theta = 0") {
    const auto p = validate_params(4, 1.0, 2.0);
    const auto part = Partition::trailing(p, 2);
    for (const auto& b : measure_branches(p, part)) {
      CHECK(max_diff(apply_conditional_unitary(b, part, 0.0), b.post_state) == 0.0);
    }
  }
  SUBCASE("quarter turn on two qubits") {
    const auto p = validate_params(2, 1.0, 1.0);
    const auto part = Partition::trailing(p, 1);
    const auto b = measure_branches(p, part)[0];
    REQUIRE(b.alpha_product == 1);
    const auto rotated = apply_conditional_unitary(b, part, std::numbers::pi / 2);
    const auto expected = apply_pauli_string(b.post_state, PauliString::parse("IY", -1i));
    CHECK(max_diff(rotated, expected) <= 1e-15);
    CHECK(rotated.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("four qubits, two outputs: cos - i a1 a2 sin Y3 X4") {
    const auto p = validate_params(4, 1.0, 1.0);
    const auto part = Partition::trailing(p, 2);
    CHECK(rotation_generator(part).to_string().find("IIYX") != std::string::npos);
    const double theta = 0.37;
    for (const auto& b : measure_branches(p, part)) {
      const double a = b.alpha[0] * b.alpha[1];
      auto expected = apply_pauli_string(b.post_state, PauliString::parse("IIYX", -1i * a * std::sin(theta)));
      expected.add_scaled(std::cos(theta), b.post_state);
      CHECK(max_diff(apply_conditional_unitary(b, part, theta), expected) <= 1e-15);
    }
  }
  SUBCASE("generator must act on an output") {
    const auto p = validate_params(4, 1.0, 1.0);
    CHECK(code_of([&] { rotation_generator(Partition::trailing(p, 2), 1); }) == ErrorCode::InvalidPartition);
  }
}

TEST_CASE("extracted energy examples") {
  SUBCASE("theta = 0 extracts nothing") {
    for (unsigned n : {2u, 3u, 6u}) {
      const auto p = params_from_ratio(n, 1.3);
      CHECK(std::abs(extracted_energy(p, Partition::trailing(p, 1), 0.0, lean()).e_out) <= 1e-14);
    }
  }
  SUBCASE("three qubits, one input, at the optimal angle") {
    const auto p = validate_params(3, 1.0, 1.0);
    const double theta = 0.5 * std::atan2(1.0, 5.0);  // cos 2theta = 5/sqrt 26
    const auto r = extracted_energy(p, Partition::trailing(p, 2), theta, lean());
    CHECK(r.e_out == doctest::Approx(10 / std::sqrt(13.0) * (std::sqrt(26.0) / 5 - 1)).epsilon(1e-12));
  }
  SUBCASE("four qubits, two inputs") {
    const auto p = validate_params(4, 1.0, 1.0);
    const auto part = Partition::trailing(p, 2);
    const auto r = extracted_energy(p, part, optimal_theta(p, part).theta, lean());
    const double h = 1.0, k = 1.0;
    const double expected = (4 * h * h + 2 * k * k) / std::sqrt(4 * h * h + k * k) *
                            (std::sqrt(1 + (h * k) * (h * k) / ((2 * h * h + k * k) * (2 * h * h + k * k))) - 1);
    CHECK(r.e_out == doctest::Approx(expected).epsilon(1e-12));
    // The coefficients (2h^2 + 2k^2)/(4h^2 + 4k^2) give something else.
    const double other = (4 * h * h + 4 * k * k) / std::sqrt(4 * h * h + k * k) *
                         (std::sqrt(1 + (h * k) * (h * k) / ((2 * h * h + 2 * k * k) * (2 * h * h + 2 * k * k))) - 1);
    CHECK(std::abs(r.e_out - other) > 1e-3);
  }
}

TEST_CASE("oracle agrees with the reference model") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (double x : {0.2, 1.0, 4.0}) {
      const auto p = params_from_ratio(n, x, 0.8);
      const auto model = ref::build_model(n, 0.8, 0.8 * x);
      for (unsigned m = 1; m < n; ++m) {
        for (double theta : {0.1, 0.6, 1.4}) {
          const auto r = extracted_energy(p, Partition::trailing(p, m), theta, lean());
          std::vector<unsigned> outputs;
          for (unsigned q = n - m + 1; q <= n; ++q) outputs.push_back(q);
          const auto reference = ref::protocol(model, outputs, theta, outputs.front());
          CHECK(std::abs(r.e_in - reference.e_in) <= 1e-12);
          CHECK(std::abs(r.e_out - reference.e_out) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("oracle agrees with the reference model for scattered outputs") {
  const unsigned n = 5;
  const auto p = params_from_ratio(n, 2.0);
  const auto model = ref::build_model(n, 1.0, 2.0);
  const std::vector<std::vector<unsigned>> sets = {{1}, {2, 4}, {1, 3, 5}, {1, 2, 3, 5}};
  for (const auto& outputs : sets) {
    std::vector<std::uint64_t> labels(outputs.begin(), outputs.end());
    for (unsigned y : outputs) {
      ProtocolOptions o = lean();
      o.rotation_qubit = y;
      const auto r = simulate_with_outputs(p, labels, 0.45, o);
      const auto reference = ref::protocol(model, outputs, 0.45, y);
      CHECK(std::abs(r.e_in - reference.e_in) <= 1e-12);
      CHECK(std::abs(r.e_out - reference.e_out) <= 1e-12);
    }
  }
}

TEST_CASE("oracle matches closed forms") {
  for (unsigned n = 2; n <= 7; ++n) {
    for (double x : {0.1, 1.0, 10.0}) {
      const auto p = params_from_ratio(n, x);
      for (unsigned m = 1; m < n; ++m) {
        const auto part = Partition::trailing(p, m);
        const auto r = extracted_energy(p, part, optimal_theta(p, part).theta, lean());
        CHECK(std::abs(r.e_in - input_energy(p, part)) <= 1e-10 * r.e_in);
        const double closed = max_output_energy(p, part);
        CHECK(std::abs(r.e_out - closed) <= 1e-10 * closed);
        for (double theta : {0.05, 0.5, 1.0, 2.5}) {
          const double at = output_energy_at_theta(p, part, theta);
          CHECK(std::abs(extracted_energy(p, part, theta, lean()).e_out - at) <= 1e-10 * std::max(1.0, std::abs(at)));
        }
      }
    }
  }
}

TEST_CASE("ensemble properties") {
  for (unsigned n = 2; n <= 8; ++n) {
    for (double x : {0.1, 1.0, 10.0}) {
      const auto p = params_from_ratio(n, x);
      for (unsigned m = 1; m < n; ++m) {
        const auto part = Partition::trailing(p, m);
        const auto r = extracted_energy(p, part, optimal_theta(p, part).theta);
        double total = 0.0;
        for (const auto& b : r.branches) total += b.probability;
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(std::abs(r.e_out - r.e_out_via_trace) <= 1e-10);
        CHECK(r.trace_rho_h >= -1e-10);
        CHECK(r.e_out <= r.e_in);
        const auto averages = post_measurement_averages(r.branches, p, part);
        CHECK(averages.output_local.size() == m);
        for (double v : averages.output_local) CHECK(std::abs(v) <= 1e-12);
        CHECK(std::abs(averages.interaction) <= 1e-12);
      }
    }
  }
}

TEST_CASE("partition invariance") {
  const auto p4 = validate_params(4, 1.0, 1.0);
  const double t4 = optimal_theta(p4, Partition::trailing(p4, 2)).theta;
  const auto a = simulate_with_outputs(p4, {3, 4}, t4, lean());
  const auto b = simulate_with_outputs(p4, {1, 2}, t4, lean());
  CHECK(std::abs(a.e_in - b.e_in) <= 1e-12);
  CHECK(std::abs(a.e_out - b.e_out) <= 1e-12);

  const auto p3 = validate_params(3, 1.0, 1.0);
  const double t3 = optimal_theta(p3, Partition::trailing(p3, 1)).theta;
  const auto c = simulate_with_outputs(p3, {2}, t3, lean());
  const auto d = simulate_with_outputs(p3, {3}, t3, lean());
  CHECK(std::abs(c.e_in - d.e_in) <= 1e-12);
  CHECK(std::abs(c.e_out - d.e_out) <= 1e-12);
  CHECK(std::abs(c.e_out_via_trace - d.e_out_via_trace) <= 1e-12);
  CHECK(code_of([&] { simulate_with_outputs(p3, {1, 2, 3}, t3); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("rotation placement invariance") {
  for (unsigned n = 3; n <= 6; ++n) {
    const auto p = params_from_ratio(n, 2.0);
    for (unsigned m = 2; m < n; ++m) {
      const auto part = Partition::trailing(p, m);
      const double theta = optimal_theta(p, part).theta;
      const double reference = extracted_energy(p, part, theta, lean()).e_out;
      for (auto q : part.outputs()) {
        ProtocolOptions o = lean();
        o.rotation_qubit = q;
        CHECK(std::abs(extracted_energy(p, part, theta, o).e_out - reference) <= 1e-12);
      }
    }
  }
}

TEST_CASE("numeric angle optimisation") {
  const auto p3 = validate_params(3, 1.0, 1.0);
  const auto t = optimize_theta_numeric(p3, Partition::trailing(p3, 1));
  CHECK(std::abs(2 * t.theta - std::atan2(4.0, 7.0)) <= 2e-7);

  const auto p2 = validate_params(2, 1.0, 1.0);
  const auto part2 = Partition::trailing(p2, 1);
  CHECK(std::abs(optimize_theta_numeric(p2, part2).theta - optimal_theta(p2, part2).theta) <= 1e-7);

  const auto z = ModelParams::zero_coupling_limit(3);
  CHECK(optimize_theta_numeric(z, Partition::trailing(z, 1)).theta <= 1e-8);
}

TEST_CASE("thread count does not change results") {
  const auto p = params_from_ratio(9, 0.9);
  const auto part = Partition::trailing(p, 3);
  ProtocolOptions one = lean();
  ProtocolOptions many = lean();
  many.threads = 5;
  const auto a = extracted_energy(p, part, 0.3, one);
  const auto b = extracted_energy(p, part, 0.3, many);
  CHECK(std::memcmp(&a.e_out, &b.e_out, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.e_in, &b.e_in, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.trace_rho_h, &b.trace_rho_h, sizeof(double)) == 0);
}

TEST_CASE("oracle cap") {
  const auto p = validate_params(13, 1.0, 1.0);
  CHECK(code_of([&] { measure_branches(p, Partition::trailing(p, 1)); }) == ErrorCode::OracleCapExceeded);
  ProtocolOptions wide;
  wide.oracle_cap = 13;
  CHECK(measure_branches(p, Partition::trailing(p, 11), wide).size() == 4);
}

TEST_CASE("sampling demo") {
  const auto p = params_from_ratio(4, 1.5);
  const auto part = Partition::trailing(p, 1);
  const double theta = optimal_theta(p, part).theta;
  const auto a = sample_protocol(p, part, theta, 20000, 99);
  const auto b = sample_protocol(p, part, theta, 20000, 99);
  CHECK(a.branch_counts == b.branch_counts);
  CHECK(a.e_out == b.e_out);
  std::uint64_t total = 0;
  for (auto c : a.branch_counts) total += c;
  CHECK(total == 20000);
  const auto exact = extracted_energy(p, part, theta, lean());
  CHECK(std::abs(a.e_in - exact.e_in) <= 0.05 * exact.e_in);
  CHECK(std::abs(a.e_out - exact.e_out) <= 0.05 * exact.e_out);
}

TEST_CASE("no outcome is ever impossible") {
  // Each projector (1 + aX)/2 sends |0...0> and |1...1> to distinct basis
  // strings, so every branch keeps weight 2^-(N-m).
  for (std::uint64_t n = 2; n <= 8; ++n) {
    for (double r : {0.0, 1e-8, 1.0, 1e8}) {
      const auto params = params_from_ratio(static_cast<std::int64_t>(n), r);
      for (std::uint64_t m = 1; m < n; ++m) {
        for (const auto& b : measure_branches(params, Partition::trailing(params, m))) {
          CHECK_FALSE(b.null_branch);
          CHECK(std::abs(b.probability - std::exp2(-static_cast<double>(n - m))) <= 1e-15);
        }
      }
    }
  }
}
