#pragma once

#include <string>

namespace negent {

/// "%.17g"; round-trips every finite double. -0 prints as 0.
std::string format_g17(double x);

/// Fixed-point with `decimals` places. Values that round to zero print
/// without a sign.
std::string format_fixed(double x, int decimals = 6);

/// format_fixed with trailing zeros (and a bare '.') dropped: 2.000000 -> "2".
std::string format_compact(double x, int decimals = 6);

}  // namespace negent
