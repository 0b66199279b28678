#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "dpclab/errors.hpp"

namespace dpclab {

using BigNat = boost::multiprecision::cpp_int;

inline BigNat bignat_pow(const BigNat& base, unsigned long long exp) {
    BigNat result = 1, b = base;
    unsigned long long e = exp;
    while (e > 0) {
        if (e & 1ULL) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline size_t bit_length(const BigNat& v) {
    if (v <= 0) return 0;
    return boost::multiprecision::msb(v) + 1;
}

inline size_t floor_log2(const BigNat& v) {
    if (v < 1) throw ArgumentTooLarge("floor_log2 of a value below 1");
    return boost::multiprecision::msb(v);
}

// v as decimal, falling back to a power-of-two size note for huge values
inline std::string bignat_str(const BigNat& v, size_t max_digits = 20000) {
    std::string s = v.str();
    if (s.size() <= max_digits) return s;
    return "~2^" + std::to_string(bit_length(v)) + " (" + std::to_string(s.size()) + " digits)";
}

}  // namespace dpclab
