#pragma once

#include "sgt/bignat.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Generic machinery for numerical semigroups on two or three generators:
// membership, minimality, Johnson's minimal relation matrix, and the
// closed forms (Frobenius number, genus, Hilbert numerator) that hold in
// the symmetric case.

namespace sgt {

struct non_minimal_generators : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_symmetric : std::domain_error {
    using std::domain_error::domain_error;
};

struct truncation_exceeded : std::domain_error {
    using std::domain_error::domain_error;
};

// --------------------------------------------------------------------------
// generator sets

struct GenSet2 {
    BigNat d1, d2;  // 2 <= d1 < d2, gcd = 1

    static GenSet2 make(BigNat a, BigNat b) {
        if (a > b) std::swap(a, b);
        if (a < 2) throw invalid_generators("pair generators must be >= 2");
        if (a == b) throw invalid_generators("pair generators must be distinct");
        if (big_gcd(a, b) != 1) throw invalid_generators("pair generators must be coprime");
        return GenSet2{std::move(a), std::move(b)};
    }
};

struct GenSet3 {
    std::array<BigNat, 3> d;  // ascending, pairwise distinct, gcd(d1,d2,d3) = 1, d1 >= 3

    static GenSet3 make(BigNat a, BigNat b, BigNat c) {
        std::array<BigNat, 3> v{std::move(a), std::move(b), std::move(c)};
        std::sort(v.begin(), v.end());
        if (v[0] == v[1] || v[1] == v[2])
            throw invalid_generators("generators must be pairwise distinct");
        if (v[0] < 3) throw invalid_generators("smallest generator must be >= 3");
        if (big_gcd(big_gcd(v[0], v[1]), v[2]) != 1)
            throw invalid_generators("generators must be coprime overall");
        return GenSet3{std::move(v)};
    }

    const BigNat& d1() const { return d[0]; }
    const BigNat& d2() const { return d[1]; }
    const BigNat& d3() const { return d[2]; }
};

// --------------------------------------------------------------------------
// two-generator semigroup questions

// Nonnegative solution (A, B) of c = A*x + B*y, if one exists. Works for any
// positive x, y (not just coprime): divide out g = gcd(x, y), then take the
// least A >= 0 with A*(x/g) = (c/g) mod (y/g) and check A*(x/g) <= c/g.
inline std::optional<std::pair<BigNat, BigNat>>
representable2_witness(const BigNat& c, const BigNat& x, const BigNat& y) {
    if (c == 0) return std::make_pair(BigNat(0), BigNat(0));
    BigNat g = big_gcd(x, y);
    if (c % g != 0) return std::nullopt;
    BigNat cr = c / g, xr = x / g, yr = y / g;
    if (xr == 1) return std::make_pair(cr, BigNat(0));
    if (yr == 1) return std::make_pair(BigNat(0), cr);
    BigNat a = (cr % yr) * mod_inverse(xr % yr, yr) % yr;
    BigNat used = a * xr;
    if (used > cr) return std::nullopt;
    return std::make_pair(a, (cr - used) / yr);
}

inline bool representable2(const BigNat& c, const BigNat& x, const BigNat& y) {
    return representable2_witness(c, x, y).has_value();
}

inline bool membership2(const BigNat& c, const GenSet2& g) {
    return representable2(c, g.d1, g.d2);
}

inline std::optional<std::pair<BigNat, BigNat>>
membership2_witness(const BigNat& c, const GenSet2& g) {
    return representable2_witness(c, g.d1, g.d2);
}

// Sylvester: largest integer not of the form A*d1 + B*d2 for coprime d1, d2.
inline BigNat frobenius2(const GenSet2& g) {
    return g.d1 * g.d2 - g.d1 - g.d2;
}

// --------------------------------------------------------------------------
// minimality

struct Dependence {
    BigNat redundant;               // the generator that decomposes
    std::array<BigNat, 2> over;     // the other two generators
    std::pair<BigNat, BigNat> coeffs;  // redundant = coeffs.first*over[0] + coeffs.second*over[1]

    friend bool operator==(const Dependence&, const Dependence&) = default;
};

// First linear dependence among the three values, testing the largest
// generator first (the usual culprit). Values need not be sorted or coprime.
inline std::optional<Dependence> find_dependence(const std::array<BigNat, 3>& v) {
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] > v[b]; });
    for (int i : order) {
        std::array<BigNat, 2> others;
        int k = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) others[k++] = v[j];
        if (auto w = representable2_witness(v[i], others[0], others[1]))
            return Dependence{v[i], others, *w};
    }
    return std::nullopt;
}

inline bool is_minimal_genset(const std::array<BigNat, 3>& v) {
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return false;
    return !find_dependence(v).has_value();
}

// Drops redundant generators (largest first) until none is representable
// over the rest. The minimal generating set of a numerical semigroup is
// unique, so the result does not depend on removal order.
inline std::vector<BigNat> reduce_generating_set(std::vector<BigNat> v) {
    std::sort(v.begin(), v.end());
    for (;;) {
        if (v.size() <= 1) return v;
        bool removed = false;
        for (std::size_t i = v.size(); i-- > 0;) {
            bool redundant = false;
            if (v.size() == 3) {
                std::array<BigNat, 2> others;
                int k = 0;
                for (std::size_t j = 0; j < 3; ++j)
                    if (j != i) others[k++] = v[j];
                redundant = representable2(v[i], others[0], others[1]);
            } else {  // pair: redundancy means duplication or divisibility
                const BigNat& other = v[i == 0 ? 1 : 0];
                redundant = v[i] % other == 0;
            }
            if (redundant) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
        if (!removed) return v;
    }
}

// --------------------------------------------------------------------------
// Johnson's minimal relation matrix

// Entries are stored as magnitudes; the sign pattern is fixed (positive
// diagonal, negative off-diagonal). Row i encodes the minimal relation
//   a[i][i]*d[i] = a[i][j]*d[j] + a[i][k]*d[k].
struct RelationMatrix {
    std::array<BigNat, 3> d;            // generators, in caller order
    std::array<std::array<BigNat, 3>, 3> a;

    // a[i][i]*d[i] = sum of the off-diagonal terms, for each row.
    bool row_relations_hold() const {
        for (int i = 0; i < 3; ++i) {
            BigNat rhs = 0;
            for (int j = 0; j < 3; ++j)
                if (j != i) rhs += a[i][j] * d[j];
            if (a[i][i] * d[i] != rhs) return false;
        }
        return true;
    }

    bool row_gcds_are_one() const {
        for (int i = 0; i < 3; ++i)
            if (big_gcd(big_gcd(a[i][0], a[i][1]), a[i][2]) != 1) return false;
        return true;
    }

    bool has_zero_off_diagonal() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && a[i][j] == 0) return true;
        return false;
    }

    // The six identities of the generic (non-symmetric) case:
    //   a11 = a21 + a31 (and cyclic), d1 = a22*a33 - a23*a32 (and cyclic).
    // For symmetric semigroups the relation module degenerates (two of the
    // three rows become the same relation) and these need not hold.
    bool generic_identities_hold() const {
        return a[0][0] == a[1][0] + a[2][0] &&
               a[1][1] == a[0][1] + a[2][1] &&
               a[2][2] == a[0][2] + a[1][2] &&
               d[0] == a[1][1] * a[2][2] - a[1][2] * a[2][1] &&
               d[1] == a[0][0] * a[2][2] - a[0][2] * a[2][0] &&
               d[2] == a[0][0] * a[1][1] - a[0][1] * a[1][0];
    }
};

// Diagonal entry a_ii is the least v >= 2 with v*d_i representable over the
// other two generators; the off-diagonal entries of row i are the witness
// coefficients of that representation (unique for minimal generating sets).
// The search terminates no later than v = min(d_j, d_k), since d_j*d_i is
// trivially representable; computation is intended for desk-scale inputs.
inline RelationMatrix johnson_matrix(const std::array<BigNat, 3>& gens) {
    if (!is_minimal_genset(gens))
        throw non_minimal_generators("Johnson matrix requires a minimal generating set");
    RelationMatrix m;
    m.d = gens;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 2> oj{};
        int k = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) oj[k++] = j;
        BigNat limit = std::min(gens[oj[0]], gens[oj[1]]);
        for (BigNat v = 2;; ++v) {
            if (v > limit)
                throw std::logic_error("johnson_matrix: diagonal search exceeded its bound");
            auto w = representable2_witness(v * gens[i], gens[oj[0]], gens[oj[1]]);
            if (w) {
                m.a[i][i] = v;
                m.a[i][oj[0]] = w->first;
                m.a[i][oj[1]] = w->second;
                break;
            }
        }
    }
    return m;
}

// --------------------------------------------------------------------------
// symmetric closed forms

// H(z) = prod (1 - z^e) over numerator_exponents / prod (1 - z^d) over
// denominator_exponents, expanded as an exact power series.
struct HilbertForm {
    std::vector<BigNat> numerator_exponents;
    std::array<BigNat, 3> denominator_exponents;

    friend bool operator==(const HilbertForm&, const HilbertForm&) = default;
};

struct SymmetricCertificate {
    BigNat lambda;               // gcd of the designated pair
    std::array<BigNat, 2> pair;  // the two generators sharing lambda
    BigNat third;
    BigNat e1;                   // lcm(pair)
    BigNat e2;                   // third * lambda
    BigNat frobenius;            // e1 + e2 - (sum of generators)
    BigNat genus;                // (frobenius + 1) / 2

    HilbertForm hilbert() const {
        std::vector<BigNat> num{e1, e2};
        std::sort(num.begin(), num.end());
        std::array<BigNat, 3> den{pair[0], pair[1], third};
        std::sort(den.begin(), den.end());
        return HilbertForm{std::move(num), std::move(den)};
    }

    friend bool operator==(const SymmetricCertificate&, const SymmetricCertificate&) = default;
};

// A three-generator numerical semigroup is symmetric exactly when two
// generators share a factor lambda > 1 that is coprime to the third, and the
// third lies in the two-generator semigroup of the reduced pair (Herzog;
// Watanabe). In that case
//   F = lcm(p, q) + third*lambda - (p + q + third),  genus = (F + 1) / 2,
// and the Hilbert numerator is (1 - z^e1)(1 - z^e2).
inline SymmetricCertificate
symmetric_closed_forms(const BigNat& p, const BigNat& q, const BigNat& third) {
    BigNat lambda = big_gcd(p, q);
    if (lambda <= 1)
        throw not_symmetric("designated pair has gcd 1");
    if (big_gcd(third, lambda) != 1)
        throw not_symmetric("third generator shares a factor with the pair gcd");
    if (!representable2(third, p / lambda, q / lambda))
        throw not_symmetric("third generator not contained in the reduced pair semigroup");
    SymmetricCertificate c;
    c.lambda = lambda;
    c.pair = {std::min(p, q), std::max(p, q)};
    c.third = third;
    c.e1 = big_lcm(p, q);
    c.e2 = third * lambda;
    c.frobenius = c.e1 + c.e2 - (p + q + third);
    // 2*genus = conductor = frobenius + 1 in the symmetric case
    c.genus = (c.frobenius + 1) / 2;
    return c;
}

// --------------------------------------------------------------------------
// Hilbert series expansion

// Exact coefficients of the series on [0, limit]. Factors whose exponent
// exceeds the limit contribute only their constant term, so arbitrarily
// large exponents are fine. Intermediate coefficients are bounded by
// ~4*limit^2, well within int64 for desk-scale limits.
inline std::vector<std::int64_t>
hilbert_series_coefficients(const HilbertForm& h, std::uint64_t limit) {
    std::vector<std::int64_t> coef(limit + 1, 0);
    coef[0] = 1;
    for (const BigNat& e : h.numerator_exponents) {
        if (!fits_u64(e) || to_u64(e) > limit) continue;
        std::uint64_t s = to_u64(e);
        for (std::uint64_t i = limit; i >= s; --i) {
            coef[i] -= coef[i - s];
            if (i == s) break;
        }
    }
    for (const BigNat& d : h.denominator_exponents) {
        if (!fits_u64(d) || to_u64(d) > limit) continue;
        std::uint64_t s = to_u64(d);
        for (std::uint64_t i = s; i <= limit; ++i) coef[i] += coef[i - s];
    }
    return coef;
}

inline std::int64_t
hilbert_coefficient(const HilbertForm& h, const BigNat& degree, std::uint64_t limit) {
    if (!fits_u64(degree) || to_u64(degree) > limit)
        throw truncation_exceeded("degree " + degree.str() + " above truncation limit " +
                                  std::to_string(limit));
    return hilbert_series_coefficients(h, limit)[to_u64(degree)];
}

}  // namespace sgt
