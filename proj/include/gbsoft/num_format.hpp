#pragma once

#include <string>

namespace gbsoft {

// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double x);

}  // namespace gbsoft
