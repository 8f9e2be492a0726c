#pragma once

#include <string>

namespace ewalk {

/// Locale-independent formatting at 17 significant digits, so every double
/// round-trips exactly through its text form.
std::string format_double(double value);

}  // namespace ewalk
