#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qwoa {

// Exact arbitrary-precision integer for object counts and ranks.
// n! and C(n,k) overflow 64 bits quickly; bijectivity needs exactness.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline bool fits_size_t(const BigInt& v) {
    return v >= 0 && v <= BigInt(SIZE_MAX);
}

inline std::size_t to_size_t(const BigInt& v) {
    return static_cast<std::size_t>(v);
}

} // namespace qwoa
