#include "orlicz/csv.hpp"

#include <cstdio>

namespace orlicz {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_ratio_csv(std::ostream& out, std::span<const RatioRow> rows) {
  out << "instance_id,n,lhs,rhs,ratio\n";
  for (const auto& r : rows)
    out << r.instance_id << ',' << r.n << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
        << ',' << format_double(r.ratio) << '\n';
}

}  // namespace orlicz
