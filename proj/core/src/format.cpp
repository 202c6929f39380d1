#include "rigidity/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace rigidity {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

}  // namespace rigidity
