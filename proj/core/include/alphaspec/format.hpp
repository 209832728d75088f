#pragma once

#include <string>

namespace alphaspec {

/// printf "%.{digits}g"; the default 12 digits is what every text output of
/// the library uses.
std::string format_sig(double value, int digits = 12);

/// printf "%.{decimals}f".
std::string format_fixed(double value, int decimals = 12);

}  // namespace alphaspec
