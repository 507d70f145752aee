#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddschur {

// Coefficients are exact; enumeration sums grow combinatorially, so no fixed width.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// (-1)^k as an int factor.
inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

// k(k+1)/2 mod 2 shows up in every twist map.
inline int triangle_sign(long long k) { return parity_sign(k * (k + 1) / 2); }

inline long long binom3(long long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

[[noreturn]] inline void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace oddschur
