#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace entrobound {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of a non-negative big integer; -inf for zero.
inline double log_of(const BigInt& x)
{
    if (x <= 0)
        return -std::numeric_limits<double>::infinity();
    const auto top = boost::multiprecision::msb(x);
    if (top < 1000)
        return std::log(x.convert_to<double>());
    const auto shift = top - 60;
    BigInt head = x >> shift;
    return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

} // namespace entrobound
