#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>

namespace orlicz {

/// One line of a per-instance ratio table.
struct RatioRow {
  std::size_t instance_id = 0;
  std::size_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Header "instance_id,n,lhs,rhs,ratio" followed by one line per row.
void write_ratio_csv(std::ostream& out, std::span<const RatioRow> rows);

}  // namespace orlicz
