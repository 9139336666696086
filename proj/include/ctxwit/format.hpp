#pragma once

#include <string>

namespace ctxwit {

/// Locale-independent decimal formatting with 9 significant digits
/// (shortest general form); all emitted numbers go through this so that
/// repeated runs produce byte-identical files.
std::string fmt9(double value);

/// `value` rounded to what fmt9 prints; used for numeric JSON fields.
double round9(double value);

}  // namespace ctxwit
