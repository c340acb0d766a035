#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace freestar {

// Exact integers everywhere counts are involved; sphere counts near n = 900
// overflow any fixed width.
using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive BigInt, accurate to ~1e-15 relative.
double log2_approx(const BigInt& x);

}  // namespace freestar
