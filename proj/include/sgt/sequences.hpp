#pragma once

#include "sgt/bignat.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

// Fibonacci and Lucas values with the divisibility facts the classifiers
// rely on. Conventions: F_1 = F_2 = 1, L_1 = 1, L_2 = 3, both sequences
// following x_{n+1} = x_n + x_{n-1}.
//
// Everything here is a pure function of its arguments; values are computed
// per call (no shared cache), so concurrent use is safe.

namespace sgt {

using SeqIndex = std::uint32_t;

inline void require_index(SeqIndex n) {
    if (n < 1) throw std::domain_error("sequence index must be >= 1");
}

inline BigNat fib(SeqIndex n) {
    require_index(n);
    BigNat a = 1, b = 1;  // F_1, F_2
    for (SeqIndex i = 2; i < n; ++i) {
        BigNat c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? a : b;
}

inline BigNat lucas(SeqIndex n) {
    require_index(n);
    BigNat a = 1, b = 3;  // L_1, L_2
    for (SeqIndex i = 2; i < n; ++i) {
        BigNat c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? a : b;
}

// n = 2^exponent * odd_part
struct TwoAdicSplit {
    std::uint32_t exponent = 0;
    SeqIndex odd_part = 1;

    friend bool operator==(const TwoAdicSplit&, const TwoAdicSplit&) = default;
};

inline TwoAdicSplit two_adic_split(SeqIndex n) {
    require_index(n);
    auto e = static_cast<std::uint32_t>(std::countr_zero(n));
    return TwoAdicSplit{e, n >> e};
}

// gcd(F_m, F_n) = F_gcd(m,n)  (Lucas, 1878)
inline BigNat fib_gcd(SeqIndex m, SeqIndex n) {
    require_index(m);
    require_index(n);
    return fib(std::gcd(m, n));
}

// L_m is even iff 3 | m.
inline bool lucas_is_even(SeqIndex m) {
    require_index(m);
    return m % 3 == 0;
}

// Three-case Lucas gcd (Ribenboim; McDaniel). With m = 2^a m', n = 2^b n':
//   gcd(L_m, L_n) = L_gcd(m,n)  if a = b
//                 = 2           if a != b and 3 | gcd(m,n)
//                 = 1           otherwise
// The middle branch is the literal constant 2; no Lucas value is consulted.
inline BigNat lucas_gcd(SeqIndex m, SeqIndex n) {
    auto sm = two_adic_split(m);
    auto sn = two_adic_split(n);
    if (sm.exponent == sn.exponent) return lucas(std::gcd(m, n));
    if (std::gcd(m, n) % 3 == 0) return 2;
    return 1;
}

// gcd(L_m, L_n) = 1 iff (a = b = 0 and gcd(m',n') = 1)
//              or (a != b and 3 does not divide gcd(m,n)).
inline bool lucas_coprime(SeqIndex m, SeqIndex n) {
    auto sm = two_adic_split(m);
    auto sn = two_adic_split(n);
    if (sm.exponent == sn.exponent)
        return sm.exponent == 0 && std::gcd(sm.odd_part, sn.odd_part) == 1;
    return std::gcd(std::uint32_t{3}, std::gcd(m, n)) == 1;
}

}  // namespace sgt
