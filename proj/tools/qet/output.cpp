#include "qet/output.hpp"

#include <ostream>

#include <fmt/format.h>

namespace qet::cli {

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

std::string sweep_csv_line(const SweepRow& row) {
  return fmt::format("{},{},{},{},{},{},{}", row.n, row.m, format_real(row.ratio), format_real(row.e_in),
                     format_real(row.e_out), format_real(row.eta), row.bell ? format_real(*row.bell) : "");
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, std::string_view comment) {
  if (!comment.empty()) os << "# " << comment << '\n';
  os << kSweepHeader << '\n';
  for (const auto& row : rows) os << sweep_csv_line(row) << '\n';
}

nlohmann::json sweep_row_json(const SweepRow& row) {
  nlohmann::json j = {{"n", row.n},         {"m", row.m},     {"ratio", row.ratio},
                      {"e_in", row.e_in},   {"e_out", row.e_out}, {"eta", row.eta}};
  j["bell"] = row.bell ? nlohmann::json(*row.bell) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json sweep_json(std::span<const SweepRow> rows) {
  auto array = nlohmann::json::array();
  for (const auto& row : rows) array.push_back(sweep_row_json(row));
  return array;
}

}  // namespace qet::cli
