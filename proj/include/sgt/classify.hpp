#pragma once

#include "sgt/bignat.hpp"
#include "sgt/kernel.hpp"
#include "sgt/oracle.hpp"
#include "sgt/sequences.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

// Decision procedures for the symmetry of numerical semigroups generated by
// three Fibonacci numbers, three Lucas numbers, or three raw values. The
// underlying criterion (Herzog; Watanabe): a minimal triple generates a
// symmetric semigroup iff some pair shares a factor lambda > 1 coprime to
// the third generator, with the third contained in the reduced pair
// semigroup. For Fibonacci and Lucas triples the pair gcd is resolved by
// index arithmetic alone.

namespace sgt {

enum class Family { fibonacci, lucas, raw };

enum class Status { symmetric, non_symmetric, non_minimal, two_generator, undecided };

enum class Reason {
    pair_gcd_containment,           // symmetric: the full criterion holds for some pair
    all_pairs_coprime,              // no pair of generators shares a factor
    third_not_coprime_to_pair_gcd,  // pair gcd exists but the third generator shares it
    containment_failed,             // third generator outside the reduced pair semigroup
    smallest_generator_three,       // minimal set containing 3 is never symmetric
    redundant_generator,            // not a minimal generating set
    reduces_to_two_generators,      // effective set has two elements: always symmetric
};

// Case split of the Lucas coprimality test, by 2-adic valuations of the
// pair indices (a, b) and the third index (c).
enum class LucasClause {
    none,
    equal_valuation,      // a = b != 0: need c != a and 3 not dividing gcd(k, l)
    all_odd,              // a = b = c = 0: need gcd(k, l') = 1
    odd_pair_even_third,  // a = b = 0, c != 0: need 3 not dividing gcd(k, l)
    mixed_valuation,      // a != b (pair gcd is 2): need 3 not dividing k
};

struct IndexTriple {
    Family family = Family::fibonacci;
    std::array<SeqIndex, 3> idx{};  // ascending

    static IndexTriple make(Family fam, SeqIndex a, SeqIndex b, SeqIndex c) {
        if (fam == Family::raw) throw invalid_generators("raw values are not an index triple");
        std::array<SeqIndex, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        if (v[0] == v[1] || v[1] == v[2])
            throw invalid_generators("indices must be pairwise distinct");
        SeqIndex lo = fam == Family::fibonacci ? 3 : 2;
        if (v[0] < lo)
            throw invalid_generators("smallest index must be >= " + std::to_string(lo));
        return IndexTriple{fam, v};
    }

    std::array<BigNat, 3> values() const {
        auto f = family == Family::fibonacci ? fib : lucas;
        return {f(idx[0]), f(idx[1]), f(idx[2])};
    }

    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

struct PairWitness {
    std::array<SeqIndex, 2> indices{};  // sequence indices of the pair (0 for raw)
    std::array<BigNat, 2> values;       // the pair of generators
    SeqIndex third_index = 0;
    BigNat third_value;
    BigNat lambda_value;                // gcd of the pair values
    SeqIndex lambda_index = 0;          // gcd of the pair indices (families only)
    std::optional<std::pair<BigNat, BigNat>> containment;  // third = A*(p/l) + B*(q/l)

    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct Verdict {
    Family family = Family::raw;
    std::array<SeqIndex, 3> indices{};  // ascending; zeros for raw input
    std::array<BigNat, 3> generators;   // ascending
    Status status = Status::undecided;
    Reason reason = Reason::all_pairs_coprime;
    LucasClause lucas_clause = LucasClause::none;
    std::string detail;
    std::optional<SymmetricCertificate> certificate;
    std::optional<PairWitness> pair;
    std::optional<Dependence> dependence;             // non-minimal witness
    std::optional<std::array<BigNat, 2>> reduced_pair;  // two-generator witness

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// --------------------------------------------------------------------------
// screening: minimality and reduction

namespace detail {

inline Verdict base_verdict(Family fam, const std::array<SeqIndex, 3>& idx,
                            std::array<BigNat, 3> gens) {
    Verdict v;
    v.family = fam;
    v.indices = idx;
    v.generators = std::move(gens);
    std::sort(v.generators.begin(), v.generators.end());
    return v;
}

// Handles every non-minimal generating set. The two-generator downgrade is
// reported when the reduced set is a valid coprime pair AND either the
// family route demands it (smallest generator 2 or 3 by index) or the
// redundancy is a duplication/divisibility, the degenerate shape the
// two-generator criterion explicitly absorbs. Every other dependence is
// plain non-minimality.
inline std::optional<Verdict> screen_minimality(Verdict v, bool force_two_generator_route) {
    auto dep = find_dependence(v.generators);
    if (!dep) return std::nullopt;

    Verdict out = std::move(v);
    out.dependence = dep;

    auto reduced = reduce_generating_set(
        {out.generators[0], out.generators[1], out.generators[2]});
    bool valid_pair = reduced.size() == 2 && reduced[0] >= 2 &&
                      big_gcd(reduced[0], reduced[1]) == 1;
    bool divisibility = false;
    for (int i = 0; i < 3 && !divisibility; ++i)
        for (int j = 0; j < 3 && !divisibility; ++j)
            if (i != j && out.generators[j] % out.generators[i] == 0) divisibility = true;

    if (valid_pair && (force_two_generator_route || divisibility)) {
        out.status = Status::two_generator;
        out.reason = Reason::reduces_to_two_generators;
        out.reduced_pair = std::array<BigNat, 2>{reduced[0], reduced[1]};
        auto g2 = GenSet2::make(reduced[0], reduced[1]);
        out.detail = dep->redundant.str() + " = " + dep->coeffs.first.str() + "*" +
                     dep->over[0].str() + " + " + dep->coeffs.second.str() + "*" +
                     dep->over[1].str() + "; generating set reduces to {" + reduced[0].str() +
                     ", " + reduced[1].str() +
                     "}, a two-generator semigroup (always symmetric, Frobenius " +
                     frobenius2(g2).str() + ")";
    } else {
        out.status = Status::non_minimal;
        out.reason = Reason::redundant_generator;
        out.detail = dep->redundant.str() + " = " + dep->coeffs.first.str() + "*" +
                     dep->over[0].str() + " + " + dep->coeffs.second.str() + "*" +
                     dep->over[1].str() + "; not a minimal generating set";
    }
    return out;
}

// Minimal set whose smallest generator is 3: the two defining conditions
// (3 does not divide d2, d3 outside S(3, d2)) follow from minimality, and
// such a semigroup is never symmetric.
inline std::optional<Verdict> screen_smallest_three(Verdict v) {
    const auto& g = v.generators;
    if (g[0] != 3) return std::nullopt;
    if (g[1] % 3 == 0 || representable2(g[2], 3, g[1])) return std::nullopt;
    Verdict out = std::move(v);
    out.status = Status::non_symmetric;
    out.reason = Reason::smallest_generator_three;
    out.detail = "smallest generator is 3, 3 does not divide " + g[1].str() + ", and " +
                 g[2].str() + " is not in S(3, " + g[1].str() +
                 "): never symmetric";
    return out;
}

struct PairCandidate {
    int third_pos;          // position of the third generator in the sorted triple
    std::array<int, 2> pair_pos;
};

// The three pair choices, ordered for deterministic reporting: largest pair
// gcd first, ties broken by the lexicographically smallest pair.
template <typename GcdOf>
inline std::array<PairCandidate, 3> ordered_pairs(GcdOf&& gcd_of) {
    std::array<PairCandidate, 3> cands{PairCandidate{2, {0, 1}}, PairCandidate{1, {0, 2}},
                                       PairCandidate{0, {1, 2}}};
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const PairCandidate& a, const PairCandidate& b) {
                         auto ga = gcd_of(a), gb = gcd_of(b);
                         if (ga != gb) return ga > gb;
                         return a.pair_pos < b.pair_pos;
                     });
    return cands;
}

inline PairWitness make_pair_witness(const Verdict& v, const PairCandidate& c) {
    PairWitness w;
    w.values = {v.generators[c.pair_pos[0]], v.generators[c.pair_pos[1]]};
    w.third_value = v.generators[c.third_pos];
    w.lambda_value = big_gcd(w.values[0], w.values[1]);
    if (v.family != Family::raw) {
        w.indices = {v.indices[c.pair_pos[0]], v.indices[c.pair_pos[1]]};
        w.third_index = v.indices[c.third_pos];
        w.lambda_index = std::gcd(w.indices[0], w.indices[1]);
    }
    return w;
}

inline Verdict finish_symmetric(Verdict v, PairWitness w, LucasClause clause) {
    auto cert = symmetric_closed_forms(w.values[0], w.values[1], w.third_value);
    w.containment =
        representable2_witness(w.third_value, w.values[0] / cert.lambda, w.values[1] / cert.lambda);
    v.status = Status::symmetric;
    v.reason = Reason::pair_gcd_containment;
    v.lucas_clause = clause;
    v.detail = "pair (" + w.values[0].str() + ", " + w.values[1].str() + ") has gcd " +
               cert.lambda.str() + " coprime to " + w.third_value.str() + ", and " +
               w.third_value.str() + " = " + w.containment->first.str() + "*" +
               BigNat(w.values[0] / cert.lambda).str() + " + " + w.containment->second.str() + "*" +
               BigNat(w.values[1] / cert.lambda).str() + " lies in the reduced pair semigroup";
    v.pair = std::move(w);
    v.certificate = std::move(cert);
    return v;
}

inline Verdict finish_non_symmetric(Verdict v, int best_stage, PairWitness w,
                                    LucasClause clause) {
    v.status = Status::non_symmetric;
    v.lucas_clause = clause;
    switch (best_stage) {
        case 0:
            v.reason = Reason::all_pairs_coprime;
            v.detail = "no pair of generators shares a factor > 1";
            break;
        case 1:
            v.reason = Reason::third_not_coprime_to_pair_gcd;
            v.detail = "pair (" + w.values[0].str() + ", " + w.values[1].str() + ") has gcd " +
                       w.lambda_value.str() + " but the third generator " + w.third_value.str() +
                       " fails the coprimality clause";
            break;
        default:
            v.reason = Reason::containment_failed;
            v.detail = "third generator " + w.third_value.str() + " is not in S(" +
                       BigNat(w.values[0] / w.lambda_value).str() + ", " +
                       BigNat(w.values[1] / w.lambda_value).str() + "), the reduced pair semigroup";
            break;
    }
    if (best_stage > 0) v.pair = std::move(w);
    return v;
}

}  // namespace detail

// --------------------------------------------------------------------------
// generic triples

// Minimal triple with smallest generator 3 is never symmetric; returns the
// verdict when the rule applies, nullopt otherwise.
inline std::optional<Verdict> check_smallest_generator_three(const GenSet3& g) {
    auto v = detail::base_verdict(Family::raw, {}, g.d);
    return detail::screen_smallest_three(std::move(v));
}

// Value-level classification of an arbitrary generator triple.
inline Verdict classify_generic(const GenSet3& g) {
    auto base = detail::base_verdict(Family::raw, {}, g.d);
    if (auto v = detail::screen_minimality(base, false)) return *v;
    if (auto v = detail::screen_smallest_three(base)) return *v;

    const auto& gens = base.generators;
    auto pairs = detail::ordered_pairs([&](const detail::PairCandidate& c) {
        return big_gcd(gens[c.pair_pos[0]], gens[c.pair_pos[1]]);
    });

    int best_stage = -1;
    PairWitness best_witness;
    for (const auto& c : pairs) {
        auto w = detail::make_pair_witness(base, c);
        int stage;
        if (w.lambda_value <= 1)
            stage = 0;
        else if (big_gcd(w.third_value, w.lambda_value) != 1)
            stage = 1;
        else if (!representable2(w.third_value, w.values[0] / w.lambda_value,
                                 w.values[1] / w.lambda_value))
            stage = 2;
        else
            return detail::finish_symmetric(std::move(base), std::move(w), LucasClause::none);
        if (stage > best_stage) {
            best_stage = stage;
            best_witness = std::move(w);
        }
    }
    return detail::finish_non_symmetric(std::move(base), best_stage, std::move(best_witness),
                                        LucasClause::none);
}

// Entry point for raw generator values (any order). Non-minimal sets are
// classified via reduction; minimal sets must be coprime overall.
inline Verdict classify_raw(const std::array<BigNat, 3>& values) {
    for (const BigNat& v : values)
        if (v < 2) throw invalid_generators("generators must be >= 2");
    auto base = detail::base_verdict(Family::raw, {}, values);
    if (auto v = detail::screen_minimality(base, false)) return *v;
    return classify_generic(GenSet3::make(values[0], values[1], values[2]));
}

// --------------------------------------------------------------------------
// Fibonacci triples

// Symmetry test for a minimal Fibonacci triple with all indices >= 5: some
// index pair must satisfy lambda = gcd(pair) >= 3 with gcd(lambda, third)
// in {1, 2} (tested as F_gcd = 1), and F_third must lie in the pair
// semigroup reduced by F_lambda.
inline Verdict classify_fibonacci(const IndexTriple& t) {
    auto base = detail::base_verdict(Family::fibonacci, t.idx, t.values());
    if (auto v = detail::screen_minimality(base, t.idx[0] == 3)) return *v;
    if (auto v = detail::screen_smallest_three(base)) return *v;
    // A minimal triple cannot contain the value 2, and a minimal triple
    // containing 3 (index 4) is fully handled above.

    auto pairs = detail::ordered_pairs([&](const detail::PairCandidate& c) {
        return std::gcd(base.indices[c.pair_pos[0]], base.indices[c.pair_pos[1]]);
    });

    int best_stage = -1;
    PairWitness best_witness;
    for (const auto& c : pairs) {
        auto w = detail::make_pair_witness(base, c);
        int stage;
        if (w.lambda_index < 3)
            stage = 0;
        else if (fib(std::gcd(w.lambda_index, w.third_index)) != 1)
            stage = 1;
        else if (!representable2(w.third_value, w.values[0] / w.lambda_value,
                                 w.values[1] / w.lambda_value))
            stage = 2;
        else
            return detail::finish_symmetric(std::move(base), std::move(w), LucasClause::none);
        if (stage > best_stage) {
            best_stage = stage;
            best_witness = std::move(w);
        }
    }
    return detail::finish_non_symmetric(std::move(base), best_stage, std::move(best_witness),
                                        LucasClause::none);
}

// Sufficient condition only: some index pair has lambda = gcd >= 3 with
// gcd(lambda, third) in {1, 2} and F_third * F_lambda > lcm(F_i, F_j) -
// F_i - F_j. True implies a symmetric verdict; Example triples show the
// converse fails. Non-minimal triples are outside the criterion's scope.
inline bool fibonacci_sufficient_inequality(const IndexTriple& t) {
    auto vals = t.values();
    if (!is_minimal_genset(vals)) return false;
    for (int third = 0; third < 3; ++third) {
        int i = third == 0 ? 1 : 0, j = third == 2 ? 1 : 2;
        SeqIndex lam = std::gcd(t.idx[i], t.idx[j]);
        if (lam < 3) continue;
        if (fib(std::gcd(lam, t.idx[third])) != 1) continue;
        BigNat lcm_pair = big_lcm(vals[i], vals[j]);
        if (vals[third] * fib(lam) > lcm_pair - vals[i] - vals[j]) return true;
    }
    return false;
}

// --------------------------------------------------------------------------
// Lucas triples

struct LucasCaseData {
    TwoAdicSplit k, m, n;   // third index and the pair indices
    SeqIndex l = 0;         // gcd of the pair indices
    std::uint32_t d = 0;    // min of the pair valuations
    SeqIndex l_prime = 0;   // odd part of l = gcd of the odd parts
};

inline LucasCaseData lucas_case_data(SeqIndex third, SeqIndex m, SeqIndex n) {
    LucasCaseData c;
    c.k = two_adic_split(third);
    c.m = two_adic_split(m);
    c.n = two_adic_split(n);
    c.l = std::gcd(m, n);
    c.d = std::min(c.m.exponent, c.n.exponent);
    c.l_prime = two_adic_split(c.l).odd_part;
    return c;
}

namespace detail {

// gcd(L_k, eta) = 1, resolved purely on indices; also names the clause.
inline std::pair<bool, LucasClause> lucas_coprime_clause(const LucasCaseData& c,
                                                         SeqIndex third) {
    if (c.m.exponent == c.n.exponent) {
        if (c.m.exponent != 0)
            return {c.k.exponent != c.m.exponent && std::gcd(third, c.l) % 3 != 0,
                    LucasClause::equal_valuation};
        if (c.k.exponent == 0)
            return {std::gcd(c.k.odd_part, c.l_prime) == 1, LucasClause::all_odd};
        return {std::gcd(third, c.l) % 3 != 0, LucasClause::odd_pair_even_third};
    }
    return {third % 3 != 0, LucasClause::mixed_valuation};
}

}  // namespace detail

// Symmetry test for a minimal Lucas triple with all indices >= 3: some index
// pair must have eta = gcd(L_m, L_n) > 1 (three-case Lucas gcd), the third
// must pass the valuation clause making gcd(L_k, eta) = 1, and L_k must lie
// in S(L_m / eta, L_n / eta).
inline Verdict classify_lucas(const IndexTriple& t) {
    auto base = detail::base_verdict(Family::lucas, t.idx, t.values());
    if (auto v = detail::screen_minimality(base, t.idx[0] == 2)) return *v;
    if (auto v = detail::screen_smallest_three(base)) return *v;
    // Index 2 gives the generator 3; a minimal triple containing it is
    // resolved above. All remaining indices are >= 3.

    auto pairs = detail::ordered_pairs([&](const detail::PairCandidate& c) {
        return lucas_gcd(base.indices[c.pair_pos[0]], base.indices[c.pair_pos[1]]);
    });

    int best_stage = -1;
    PairWitness best_witness;
    LucasClause best_clause = LucasClause::none;
    for (const auto& c : pairs) {
        auto w = detail::make_pair_witness(base, c);
        BigNat eta = lucas_gcd(w.indices[0], w.indices[1]);
        auto cd = lucas_case_data(w.third_index, w.indices[0], w.indices[1]);
        auto [coprime_ok, clause] = detail::lucas_coprime_clause(cd, w.third_index);
        int stage;
        if (eta <= 1)
            stage = 0;
        else if (!coprime_ok)
            stage = 1;
        else if (!representable2(w.third_value, w.values[0] / eta, w.values[1] / eta))
            stage = 2;
        else
            return detail::finish_symmetric(std::move(base), std::move(w), clause);
        if (stage > best_stage) {
            best_stage = stage;
            best_witness = std::move(w);
            best_clause = stage == 0 ? LucasClause::none : clause;
        }
    }
    return detail::finish_non_symmetric(std::move(base), best_stage, std::move(best_witness),
                                        best_clause);
}

// Sufficient condition only, for all-odd index triples: some pair must have
// g = gcd(pair) > 1 with gcd(g, third) = 1, and L_third * L_g >
// L_i * L_j / L_g - L_i - L_j. True implies a symmetric verdict.
inline bool lucas_sufficient_inequality(const IndexTriple& t) {
    for (SeqIndex i : t.idx)
        if (i % 2 == 0) return false;
    auto vals = t.values();
    if (!is_minimal_genset(vals)) return false;
    for (int third = 0; third < 3; ++third) {
        int i = third == 0 ? 1 : 0, j = third == 2 ? 1 : 2;
        SeqIndex g = std::gcd(t.idx[i], t.idx[j]);
        if (g <= 1) continue;
        if (std::gcd(g, t.idx[third]) != 1) continue;
        BigNat lg = lucas(g);
        if (vals[third] * lg > vals[i] * vals[j] / lg - vals[i] - vals[j]) return true;
    }
    return false;
}

inline Verdict classify_triple(const IndexTriple& t) {
    return t.family == Family::fibonacci ? classify_fibonacci(t) : classify_lucas(t);
}

// --------------------------------------------------------------------------
// oracle cross-checking and sweeps

enum class OracleOutcome { confirmed, mismatch, infeasible, skipped, not_applicable };

struct OracleAttachment {
    OracleOutcome outcome = OracleOutcome::skipped;
    std::optional<std::uint64_t> frobenius, genus, conductor;
    std::optional<bool> symmetric;
    std::string note;

    friend bool operator==(const OracleAttachment&, const OracleAttachment&) = default;
};

struct AnalyzedTriple {
    Verdict verdict;
    OracleAttachment oracle;
};

// Sieve cross-check of a verdict. Symmetric verdicts must reproduce the
// certificate exactly (including Hilbert coefficients up to the conductor
// + 64); non-symmetric verdicts must show 2*genus > conductor and a failed
// reflection test.
inline OracleAttachment cross_check(const Verdict& v, std::uint64_t conductor_ceiling,
                                    bool enabled = true) {
    OracleAttachment out;
    if (!enabled) {
        out.outcome = OracleOutcome::skipped;
        return out;
    }
    if (v.status != Status::symmetric && v.status != Status::non_symmetric) {
        out.outcome = OracleOutcome::not_applicable;
        return out;
    }
    std::vector<BigNat> gens(v.generators.begin(), v.generators.end());
    BigNat overall = big_gcd(big_gcd(gens[0], gens[1]), gens[2]);
    if (overall != 1) {
        out.outcome = OracleOutcome::not_applicable;
        out.note = "generators share the factor " + overall.str();
        return out;
    }

    if (v.status == Status::symmetric) {
        auto cmp = compare_certificate(gens, *v.certificate, conductor_ceiling);
        if (!cmp) {
            out.outcome = OracleOutcome::infeasible;
            out.note = "conductor " + BigNat(v.certificate->frobenius + 1).str() + " beyond ceiling";
            return out;
        }
        out.outcome = cmp->matches ? OracleOutcome::confirmed : OracleOutcome::mismatch;
        out.note = cmp->mismatch;
        out.frobenius = cmp->report.frobenius;
        out.genus = cmp->report.genus;
        out.conductor = cmp->report.conductor;
        out.symmetric = cmp->report.symmetric;
        return out;
    }

    auto report = enumerate_auto(gens, conductor_ceiling);
    if (!report) {
        out.outcome = OracleOutcome::infeasible;
        out.note = "no sound sieve bound within ceiling";
        return out;
    }
    out.frobenius = report->frobenius;
    out.genus = report->genus;
    out.conductor = report->conductor;
    out.symmetric = report->symmetric;
    bool strict = 2 * report->genus > report->conductor;
    if (!report->symmetric && strict) {
        out.outcome = OracleOutcome::confirmed;
    } else {
        out.outcome = OracleOutcome::mismatch;
        out.note = report->symmetric ? "sieve says the semigroup is symmetric"
                                     : "2*genus does not exceed the conductor";
    }
    return out;
}

struct SweepOptions {
    std::uint64_t conductor_ceiling = 1'000'000;
    bool with_oracle = true;
    unsigned jobs = 1;
};

inline AnalyzedTriple analyze_triple(const IndexTriple& t, const SweepOptions& opt = {}) {
    AnalyzedTriple row;
    row.verdict = classify_triple(t);
    row.oracle = cross_check(row.verdict, opt.conductor_ceiling, opt.with_oracle);
    return row;
}

inline AnalyzedTriple analyze_raw(const std::array<BigNat, 3>& values,
                                  const SweepOptions& opt = {}) {
    AnalyzedTriple row;
    row.verdict = classify_raw(values);
    row.oracle = cross_check(row.verdict, opt.conductor_ceiling, opt.with_oracle);
    return row;
}

// Classify every ascending index triple up to max_index, cross-checking
// against the sieve where feasible. Rows are computed with bounded
// parallelism but returned in ascending lexicographic index order.
inline std::vector<AnalyzedTriple> sweep(Family fam, SeqIndex max_index,
                                         const SweepOptions& opt = {}) {
    if (fam == Family::raw) throw invalid_generators("sweep needs fibonacci or lucas");
    SeqIndex lo = fam == Family::fibonacci ? 3 : 2;
    std::vector<IndexTriple> triples;
    for (SeqIndex a = lo; a + 2 <= max_index; ++a)
        for (SeqIndex b = a + 1; b + 1 <= max_index; ++b)
            for (SeqIndex c = b + 1; c <= max_index; ++c)
                triples.push_back(IndexTriple{fam, {a, b, c}});

    std::vector<AnalyzedTriple> rows(triples.size());
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || triples.size() < 2) {
        for (std::size_t i = 0; i < triples.size(); ++i) rows[i] = analyze_triple(triples[i], opt);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= triples.size() || failed.load()) return;
                try {
                    rows[i] = analyze_triple(triples[i], opt);
                } catch (const std::exception& e) {
                    if (!failed.exchange(true)) error = e.what();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (failed.load()) throw std::runtime_error("sweep worker failed: " + error);
    return rows;
}

}  // namespace sgt
