#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qet/analysis.hpp"

namespace qet::cli {

/// Shortest form that still round-trips: 17 significant digits.
std::string format_real(double value);

inline constexpr std::string_view kSweepHeader = "n,m,ratio,e_in,e_out,eta,bell";

std::string sweep_csv_line(const SweepRow& row);

/// Header plus one line per row. A non-empty `comment` is written first as
/// a `# ` line.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, std::string_view comment = {});

nlohmann::json sweep_row_json(const SweepRow& row);
nlohmann::json sweep_json(std::span<const SweepRow> rows);

}  // namespace qet::cli
