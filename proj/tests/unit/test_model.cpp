#include <doctest.h>

#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "qet/error.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/model.hpp"

using namespace qet;

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

const std::vector<double> kCouplings = {1e-3, 0.1, 0.5, 1.0, 2.0, 7.5, 1e3, 1e6};

}  // namespace

TEST_CASE("validate_params accepts valid input unchanged") {
  const auto p = validate_params(3, 1.0, 1.0);
  CHECK(p.n_qubits() == 3);
  CHECK(p.h() == 1.0);
  CHECK(p.k() == 1.0);
  CHECK(p.ratio() == 1.0);
  CHECK(p.coupling_scale() == doctest::Approx(std::sqrt(13.0)).epsilon(1e-15));
}

TEST_CASE("validate_params rejects bad input") {
  CHECK(code_of([] { validate_params(1, 1.0, 1.0); }) == ErrorCode::TooFewQubits);
  CHECK(code_of([] { validate_params(0, 1.0, 1.0); }) == ErrorCode::TooFewQubits);
  CHECK(code_of([] { validate_params(-4, 1.0, 1.0); }) == ErrorCode::TooFewQubits);
  CHECK(code_of([] { validate_params(3, 0.0, 1.0); }) == ErrorCode::NonPositiveCoupling);
  CHECK(code_of([] { validate_params(3, 1.0, 0.0); }) == ErrorCode::NonPositiveCoupling);
  CHECK(code_of([] { validate_params(3, -1.0, 1.0); }) == ErrorCode::NonPositiveCoupling);
  CHECK(code_of([] { validate_params(3, 1.0, std::nan("")); }) == ErrorCode::NonPositiveCoupling);
  CHECK(code_of([] { validate_params(3, std::numeric_limits<double>::infinity(), 1.0); }) ==
        ErrorCode::NonPositiveCoupling);
  CHECK(code_of([] { validate_params(13, 1.0, 1.0, 12u); }) == ErrorCode::Overflow);
  CHECK(code_of([] { validate_params(10, 1e308, 1.0); }) == ErrorCode::Overflow);
  CHECK_NOTHROW(validate_params(12, 1.0, 1.0, 12u));
}

TEST_CASE("large N is allowed when no oracle is requested") {
  const auto p = validate_params(std::int64_t{1} << 40, 1.0, 1.0);
  CHECK(std::isfinite(p.coupling_scale()));
  CHECK(p.coupling_scale() == doctest::Approx(std::ldexp(1.0, 40)));
}

TEST_CASE("params_from_ratio and the zero-coupling limit") {
  const auto p = params_from_ratio(5, 2.5, 2.0);
  CHECK(p.h() == 2.0);
  CHECK(p.k() == 5.0);
  const auto z = params_from_ratio(5, 0.0);
  CHECK(z == ModelParams::zero_coupling_limit(5));
  CHECK(z.k() == 0.0);
  CHECK(code_of([] { params_from_ratio(5, -1.0); }) == ErrorCode::NonPositiveCoupling);
  CHECK(code_of([] { params_from_ratio(1, 0.0); }) == ErrorCode::TooFewQubits);
  CHECK(code_of([] { params_from_ratio(20, 0.0, 1.0, 12u); }) == ErrorCode::Overflow);
  CHECK(code_of([] { ModelParams::zero_coupling_limit(3, 0.0); }) == ErrorCode::NonPositiveCoupling);
}

TEST_CASE("trailing partition") {
  const auto p = validate_params(5, 1.0, 1.0);
  const auto part = Partition::trailing(p, 2);
  CHECK(part.n_qubits() == 5);
  CHECK(part.m_outputs() == 2);
  CHECK(part.n_inputs() == 3);
  CHECK(part.outputs() == std::vector<std::uint64_t>{4, 5});
  CHECK(part.inputs() == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(code_of([&] { Partition::trailing(p, 0); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { Partition::trailing(p, 5); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("explicit partitions cover 1..N disjointly") {
  const auto p = validate_params(6, 1.0, 1.0);
  const auto part = Partition::with_outputs(p, {5, 2});
  CHECK(part.outputs() == std::vector<std::uint64_t>{2, 5});
  CHECK(part.inputs() == std::vector<std::uint64_t>{1, 3, 4, 6});
  for (std::uint64_t q = 1; q <= 6; ++q) CHECK(part.is_output(q) == (q == 2 || q == 5));

  const auto three = validate_params(3, 1.0, 1.0);
  CHECK(code_of([&] { Partition::with_outputs(three, {1, 2, 3}); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { Partition::with_outputs(three, {}); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { Partition::with_outputs(three, {2, 2}); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { Partition::with_outputs(three, {0}); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { Partition::with_outputs(three, {4}); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("ground-state amplitudes") {
  SUBCASE("three qubits at h = k = 1") {
    const auto g = ground_state_amplitudes(validate_params(3, 1.0, 1.0));
    CHECK(g.a_all_zero == doctest::Approx(std::sqrt((1 - 3 / std::sqrt(13.0)) / 2)).epsilon(1e-14));
    CHECK(g.a_all_one == doctest::Approx(-std::sqrt((1 + 3 / std::sqrt(13.0)) / 2)).epsilon(1e-14));
    // Digits confirmed by diagonalising H.
    const auto dense = exact_ground_state(validate_params(3, 1.0, 1.0), GroundStateMethod::Dense);
    CHECK(std::abs(std::abs(dense.state[0].real()) - 0.289784) <= 1e-6);
    CHECK(std::abs(std::abs(dense.state[7].real()) - 0.957092) <= 1e-6);
  }
  SUBCASE("zero coupling collapses onto |1...1>") {
    const auto g = ground_state_amplitudes(ModelParams::zero_coupling_limit(3));
    CHECK(g.a_all_zero == 0.0);
    CHECK(g.a_all_one == -1.0);
  }
  SUBCASE("strong coupling approaches an even superposition") {
    for (std::int64_t n : {2, 3, 10, 100}) {
      const auto g = ground_state_amplitudes(params_from_ratio(n, 1e9));
      CHECK(g.a_all_zero == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
      CHECK(g.a_all_one == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-6));
    }
  }
  SUBCASE("normalisation and sign on a grid") {
    for (std::int64_t n : {2, 3, 4, 7, 12, 1000}) {
      for (double h : kCouplings) {
        for (double k : kCouplings) {
          const auto g = ground_state_amplitudes(validate_params(n, h, k));
          CHECK(std::abs(g.a_all_zero * g.a_all_zero + g.a_all_one * g.a_all_one - 1.0) <= 1e-14);
          CHECK(g.a_all_one < 0.0);
          CHECK(g.a_all_zero > 0.0);
        }
      }
    }
  }
  SUBCASE("small-coupling amplitude keeps relative precision") {
    // a0 ~ k / (N h) for k << Nh; the naive sqrt((1 - Nh/c)/2) would return 0.
    const auto g = ground_state_amplitudes(validate_params(3, 1.0, 1e-12));
    CHECK(g.a_all_zero == doctest::Approx(1e-12 / 3.0).epsilon(1e-10));
  }
}

TEST_CASE("zero-point constants") {
  CHECK(local_constant(validate_params(3, 1.0, 1.0)) == doctest::Approx(3 / std::sqrt(13.0)).epsilon(1e-15));
  CHECK(local_constant(validate_params(3, 1.0, 1.0)) == doctest::Approx(0.83205).epsilon(1e-5));
  CHECK(local_constant(ModelParams::zero_coupling_limit(2)) == 1.0);
  CHECK(local_constant(validate_params(4, 1.0, 1.0)) == doctest::Approx(2 / std::sqrt(5.0)).epsilon(1e-15));

  CHECK(interaction_constant(validate_params(3, 1.0, 1.0)) == doctest::Approx(4 / std::sqrt(13.0)).epsilon(1e-15));
  CHECK(interaction_constant(validate_params(3, 1.0, 1.0)) == doctest::Approx(1.10940).epsilon(1e-5));
  CHECK(interaction_constant(ModelParams::zero_coupling_limit(7)) == 0.0);
  CHECK(interaction_constant(validate_params(4, 1.0, 1.0)) == doctest::Approx(2 / std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("parameters are shareable across threads") {
  const auto p = validate_params(8, 1.5, 0.75);
  std::vector<double> seen(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      workers.emplace_back([&, i] { seen[i] = ground_state_amplitudes(p).a_all_zero; });
    }
  }
  for (double v : seen) CHECK(v == ground_state_amplitudes(p).a_all_zero);
}
