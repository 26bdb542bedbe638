#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sgt {

// Exact nonnegative integer. All semigroup generators, Frobenius numbers and
// lcm/gcd results live in this type; nonnegativity is maintained by the
// operations themselves.
using BigNat = boost::multiprecision::cpp_int;

struct invalid_generators : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline BigNat big_gcd(const BigNat& a, const BigNat& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigNat big_lcm(const BigNat& a, const BigNat& b) {
    return boost::multiprecision::lcm(a, b);
}

inline bool is_even(const BigNat& n) { return (n & 1) == 0; }

// Least nonnegative x with a*x = 1 (mod m). Requires gcd(a, m) = 1, m >= 1.
inline BigNat mod_inverse(BigNat a, const BigNat& m) {
    if (m == 1) return 0;
    a %= m;
    BigNat r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigNat q = r0 / r1;
        BigNat r2 = r0 - q * r1;
        BigNat t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    if (t0 < 0) t0 += m;
    return t0;
}

inline bool fits_u64(const BigNat& n) {
    return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const BigNat& n) {
    if (!fits_u64(n)) throw std::overflow_error("BigNat does not fit in 64 bits: " + n.str());
    return n.convert_to<std::uint64_t>();
}

}  // namespace sgt
