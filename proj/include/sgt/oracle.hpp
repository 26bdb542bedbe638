#pragma once

#include "sgt/bignat.hpp"
#include "sgt/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

// Brute-force ground truth at desk scale, independent of every closed form:
// a membership sieve over [0, bound] from which gaps, conductor, genus and
// reflection symmetry are read off directly.

namespace sgt {

struct bound_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct oracle_infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleReport {
    std::uint64_t bound_used = 0;
    std::uint64_t frobenius = 0;
    std::uint64_t conductor = 0;   // frobenius + 1
    std::uint64_t genus = 0;       // number of gaps
    std::vector<std::uint64_t> gaps;
    bool symmetric = false;        // s in S  <=>  F - s not in S, for all s
    std::vector<std::uint8_t> members;  // membership over [0, bound_used]

    bool is_member(std::uint64_t s) const {
        return s <= bound_used && members[s] != 0;
    }
};

namespace detail {
inline std::vector<std::uint64_t> small_generators(const std::vector<BigNat>& gens,
                                                   std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (const BigNat& g : gens) {
        if (g < 2) throw invalid_generators("oracle generators must be >= 2");
        if (fits_u64(g) && to_u64(g) <= bound) out.push_back(to_u64(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace detail

// Sieve membership of S(generators) over [0, bound]: s is a member iff s = 0
// or s - g is a member for some generator g. A run of consecutive members of
// length >= d1 at the top of the range proves the conductor has been passed;
// the required run is max(64, d1), shortened to d1 alone when the bound is
// too small to afford the extra margin. If the top window still contains a
// non-member, the conductor has not been reached and bound_too_small is
// thrown.
inline OracleReport enumerate_semigroup(const std::vector<BigNat>& generators,
                                        std::uint64_t bound) {
    if (generators.size() < 2) throw invalid_generators("need at least two generators");
    BigNat g_all = generators[0];
    for (const BigNat& g : generators) g_all = big_gcd(g_all, g);
    if (g_all != 1) throw invalid_generators("oracle generators must be coprime overall");

    auto gens = detail::small_generators(generators, bound);
    if (gens.empty()) throw bound_too_small("no generator fits below the bound");

    OracleReport r;
    r.bound_used = bound;
    r.members.assign(bound + 1, 0);
    r.members[0] = 1;
    for (std::uint64_t s = gens[0]; s <= bound; ++s) {
        for (std::uint64_t g : gens) {
            if (g > s) break;
            if (r.members[s - g]) {
                r.members[s] = 1;
                break;
            }
        }
    }

    std::uint64_t d1 = gens[0];
    std::uint64_t slack = std::max<std::uint64_t>(64, d1);
    if (slack >= bound) slack = d1;  // minimal sound run for tiny bounds
    if (slack >= bound) throw bound_too_small("bound smaller than the smallest generator run");
    for (std::uint64_t s = bound - slack; s <= bound; ++s)
        if (!r.members[s])
            throw bound_too_small("non-member at " + std::to_string(s) +
                                  ": conductor not reached by bound " + std::to_string(bound));

    for (std::uint64_t s = 0; s <= bound; ++s)
        if (!r.members[s]) r.gaps.push_back(s);
    if (r.gaps.empty()) throw invalid_generators("semigroup has no gaps");
    r.frobenius = r.gaps.back();
    r.conductor = r.frobenius + 1;
    r.genus = r.gaps.size();

    r.symmetric = true;
    for (std::uint64_t s = 0; s <= r.frobenius; ++s) {
        if (r.members[s] == r.members[r.frobenius - s]) {
            r.symmetric = false;
            break;
        }
    }
    return r;
}

// Sound upper bound on the conductor: the conductor of any sub-semigroup
// S(x, y) for a coprime pair x, y bounds it from above (Sylvester + 1);
// the product of all generators is the last resort when no pair is coprime.
inline BigNat conductor_upper_bound(const std::vector<BigNat>& gens) {
    std::optional<BigNat> best;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (big_gcd(gens[i], gens[j]) == 1) {
                BigNat b = gens[i] * gens[j] - gens[i] - gens[j] + 1;
                if (!best || b < *best) best = b;
            }
    if (best) return *best;
    BigNat prod = 1;
    for (const BigNat& g : gens) prod *= g;
    return prod;
}

// Enumerate with an automatically chosen bound, trying the certificate's
// conductor prediction first (cheap when it is right), then the sound upper
// bound, then the ceiling itself. Returns nullopt when the conductor cannot
// be reached within the configured ceiling.
inline std::optional<OracleReport>
enumerate_auto(const std::vector<BigNat>& gens, std::uint64_t conductor_ceiling,
               std::optional<BigNat> conductor_hint = std::nullopt) {
    BigNat d1 = *std::min_element(gens.begin(), gens.end());
    BigNat slack = fits_u64(d1) ? BigNat(std::max<std::uint64_t>(64, to_u64(d1))) : d1;
    BigNat cap = BigNat(conductor_ceiling) + slack;

    std::vector<BigNat> candidates;
    if (conductor_hint) candidates.push_back(*conductor_hint + slack);
    candidates.push_back(conductor_upper_bound(gens) + slack);
    candidates.push_back(cap);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const BigNat& b : candidates) {
        if (b > cap) continue;
        try {
            return enumerate_semigroup(gens, to_u64(b));
        } catch (const bound_too_small&) {
            continue;
        }
    }
    return std::nullopt;
}

struct CertificateComparison {
    bool matches = false;
    std::string mismatch;  // empty when matches
    OracleReport report;
};

// Compare a symmetry certificate against the sieve: Frobenius, genus and
// reflection symmetry must match, and the Hilbert series coefficient must
// equal the membership indicator on [0, conductor + 64]. Returns nullopt
// when the conductor cannot be reached within the ceiling.
inline std::optional<CertificateComparison>
compare_certificate(const std::vector<BigNat>& gens, const SymmetricCertificate& cert,
                    std::uint64_t conductor_ceiling = 1'000'000) {
    BigNat predicted_conductor = cert.frobenius + 1;
    if (predicted_conductor > conductor_ceiling) return std::nullopt;
    auto report = enumerate_auto(gens, conductor_ceiling, predicted_conductor);
    if (!report) return std::nullopt;

    CertificateComparison out;
    out.report = std::move(*report);
    if (!out.report.symmetric)
        out.mismatch = "sieve says the semigroup is not symmetric";
    else if (BigNat(out.report.frobenius) != cert.frobenius)
        out.mismatch = "Frobenius mismatch: sieve " + std::to_string(out.report.frobenius) +
                       ", formula " + cert.frobenius.str();
    else if (BigNat(out.report.genus) != cert.genus)
        out.mismatch = "genus mismatch: sieve " + std::to_string(out.report.genus) +
                       ", formula " + cert.genus.str();
    else {
        std::uint64_t limit = out.report.conductor + 64;
        if (limit > out.report.bound_used) limit = out.report.bound_used;
        auto coef = hilbert_series_coefficients(cert.hilbert(), limit);
        for (std::uint64_t s = 0; s <= limit; ++s) {
            if (coef[s] != (out.report.is_member(s) ? 1 : 0)) {
                out.mismatch = "Hilbert coefficient mismatch at degree " + std::to_string(s);
                break;
            }
        }
    }
    out.matches = out.mismatch.empty();
    return out;
}

// Boolean form of compare_certificate; throws oracle_infeasible when the
// conductor exceeds the configured ceiling.
inline bool check_equivalence(const std::vector<BigNat>& gens,
                              const SymmetricCertificate& cert,
                              std::uint64_t conductor_ceiling = 1'000'000) {
    auto cmp = compare_certificate(gens, cert, conductor_ceiling);
    if (!cmp)
        throw oracle_infeasible("conductor " + BigNat(cert.frobenius + 1).str() +
                                " not reachable within ceiling " +
                                std::to_string(conductor_ceiling));
    return cmp->matches;
}

}  // namespace sgt
