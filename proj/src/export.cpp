#include "residue/export.hpp"

#include <cmath>
#include <cstdio>

namespace residue {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace residue
