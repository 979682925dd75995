#include "qet/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace qet {

double pairwise_sum(std::span<const double> terms) {
  constexpr std::size_t kLeaf = 8;
  if (terms.size() <= kLeaf) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

GoldenSectionResult golden_section_maximize(const std::function<double(double)>& f, double lo,
                                            double hi, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int iterations = 0;
  while (b - a > tolerance) {
    ++iterations;
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), iterations};
}

std::vector<double> decade_grid(int lo_exp, int hi_exp, int per_decade) {
  std::vector<double> grid;
  if (hi_exp < lo_exp || per_decade <= 0) return grid;
  const int steps = (hi_exp - lo_exp) * per_decade;
  grid.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    const int numerator = lo_exp * per_decade + i;
    if (numerator % per_decade == 0) {
      grid.push_back(std::pow(10.0, numerator / per_decade));
    } else {
      grid.push_back(std::pow(10.0, static_cast<double>(numerator) / per_decade));
    }
  }
  return grid;
}

std::vector<std::uint64_t> integer_log_grid(std::uint64_t lo, std::uint64_t hi, int per_decade) {
  std::vector<std::uint64_t> grid;
  if (hi < lo || lo == 0 || per_decade <= 0) return grid;
  grid.push_back(lo);
  const double start = std::log10(static_cast<double>(lo));
  const double stop = std::log10(static_cast<double>(hi));
  const auto first = static_cast<long>(std::ceil(start * per_decade));
  const auto last = static_cast<long>(std::floor(stop * per_decade));
  for (long i = first; i <= last; ++i) {
    const auto v = static_cast<std::uint64_t>(std::llround(std::pow(10.0, static_cast<double>(i) / per_decade)));
    if (v > grid.back() && v <= hi) grid.push_back(v);
  }
  if (grid.back() != hi) grid.push_back(hi);
  return grid;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qet
