#include <string>

#include "qet/analysis.hpp"
#include "qet/error.hpp"
#include "qet/numeric.hpp"

namespace qet {

namespace {

constexpr int kPointsPerDecade = 50;

struct FigureSpec {
  FigureId id;
  std::string_view name;
};

constexpr FigureSpec kFigures[] = {
    {FigureId::Fig2a, "fig2a"}, {FigureId::Fig2b, "fig2b"}, {FigureId::Fig3a, "fig3a"},
    {FigureId::Fig3b, "fig3b"}, {FigureId::Fig4a, "fig4a"}, {FigureId::Fig4b, "fig4b"},
    {FigureId::Fig7, "fig7"},
};

std::vector<std::uint64_t> integer_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> v;
  for (auto n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

}  // namespace

FigureId parse_figure(std::string_view name) {
  for (const auto& f : kFigures) {
    if (f.name == name) return f.id;
  }
  throw Error(ErrorCode::UnknownFigure, "unknown figure '" + std::string(name) + "'");
}

std::string_view figure_name(FigureId id) {
  for (const auto& f : kFigures) {
    if (f.id == id) return f.name;
  }
  return "unknown";
}

std::vector<FigureId> all_figures() {
  std::vector<FigureId> ids;
  for (const auto& f : kFigures) ids.push_back(f.id);
  return ids;
}

FigureDataset figure_dataset(FigureId id, unsigned threads) {
  SweepSpec spec;
  spec.threads = threads;
  std::string grid;
  switch (id) {
    case FigureId::Fig2a:
      spec.ns = {10};
      spec.ratios = {0.5, 1.0, 10.0, 100.0, 1000.0};
      grid = "n=10; m=1..9; ratio in {0.5,1,10,100,1000}";
      break;
    case FigureId::Fig2b:
      spec.ns = {100};
      spec.ratios = {0.5, 1.0, 10.0, 100.0, 1000.0};
      grid = "n=100; m=1..99; ratio in {0.5,1,10,100,1000}";
      break;
    case FigureId::Fig3a:
      spec.ns = {10, 100, 1000};
      spec.ms = std::vector<std::uint64_t>{1};
      spec.ratios = decade_grid(-1, 4, kPointsPerDecade);
      grid = "m=1; n in {10,100,1000}; ratio log grid 1e-1..1e4, 50 points per decade";
      break;
    case FigureId::Fig3b:
      spec.ns = integer_log_grid(2, 10000, kPointsPerDecade);
      spec.ms = std::vector<std::uint64_t>{1};
      spec.ratios = {10.0, 100.0, 1000.0};
      grid = "m=1; ratio in {10,100,1000}; n integer log grid 2..1e4, 50 points per decade";
      break;
    case FigureId::Fig4a: {
      spec.ns = {3, 8, 10};
      spec.ms = std::vector<std::uint64_t>{1};
      spec.ratios = {0.0};
      const auto tail = decade_grid(-2, 4, kPointsPerDecade);
      spec.ratios.insert(spec.ratios.end(), tail.begin(), tail.end());
      spec.with_bell = true;
      grid = "m=1; n in {3,8,10}; ratio 0 then log grid 1e-2..1e4, 50 points per decade";
      break;
    }
    case FigureId::Fig4b:
      spec.ns = integer_range(3, 30);
      spec.ms = std::vector<std::uint64_t>{1};
      spec.ratios = {1.0, 10.0, 100.0};
      spec.with_bell = true;
      grid = "m=1; ratio in {1,10,100}; n=3..30";
      break;
    case FigureId::Fig7:
      spec.ns = {3};
      spec.ms = std::vector<std::uint64_t>{1, 2};
      spec.ratios = decade_grid(-2, 4, kPointsPerDecade);
      grid = "n=3; m in {1,2}; ratio log grid 1e-2..1e4, 50 points per decade";
      break;
  }
  return {id, std::move(grid), efficiency_sweep(spec)};
}

}  // namespace qet
