#pragma once

#include "hlag/optimizer.hpp"
#include "hlag/verify.hpp"

#include <string>

namespace hlag {

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

std::string to_json(const VerificationReport& report);
/// Header label,lhs,rhs,margin,tolerance,pass and one row per check.
std::string to_csv(const VerificationReport& report);
/// Aligned table followed by the overall verdict.
std::string to_text(const VerificationReport& report);

std::string to_json(const OptResult& result);
std::string to_text(const OptResult& result);

} // namespace hlag
