#pragma once

#include <string>

namespace rigidity {

// 15 significant digits, "%.15g"; negative zero prints as 0.
std::string format_real(double x);

// x rounded to 15 significant digits, so that shortest round-trip JSON
// writers print at most 15 digits.
double round15(double x);

}  // namespace rigidity
