#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qet {

/// Pairwise (cascade) summation. The reduction tree depends only on the
/// length of the input, so results are reproducible regardless of how the
/// terms were produced.
double pairwise_sum(std::span<const double> terms);

struct GoldenSectionResult {
  double argmax;
  double value;
  int iterations;
};

/// Maximises a unimodal function on [lo, hi] until the bracket is narrower
/// than `tolerance`.
GoldenSectionResult golden_section_maximize(const std::function<double(double)>& f, double lo,
                                            double hi, double tolerance);

/// 10^(lo_exp + i / per_decade) for i = 0 .. (hi_exp - lo_exp) * per_decade.
/// Integer exponents are hit exactly.
std::vector<double> decade_grid(int lo_exp, int hi_exp, int per_decade);

/// Distinct integers round(10^(e)) on a log grid with `per_decade` points
/// per decade, clipped to [lo, hi]; both endpoints are always present.
std::vector<std::uint64_t> integer_log_grid(std::uint64_t lo, std::uint64_t hi, int per_decade);

/// Runs fn(i) for i in [0, count) on up to `threads` workers using a static
/// block split. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace qet
