#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace caystab {

/// Exact arbitrary-precision integer. Group orders (7! and far beyond) and
/// walk counts (degree^L) both outgrow 64 bits at the sizes this toolkit
/// handles, so every order and count is carried exactly.
using BigInt = boost::multiprecision::cpp_int;

} // namespace caystab
