#include "sgt/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sgt;

namespace {

IndexTriple fibt(SeqIndex a, SeqIndex b, SeqIndex c) {
    return IndexTriple::make(Family::fibonacci, a, b, c);
}
IndexTriple luct(SeqIndex a, SeqIndex b, SeqIndex c) {
    return IndexTriple::make(Family::lucas, a, b, c);
}

}  // namespace

TEST_CASE("generic classification of the worked symmetric example") {
    auto v = classify_generic(GenSet3::make(8, 21, 34));
    REQUIRE(v.status == Status::symmetric);
    REQUIRE(v.reason == Reason::pair_gcd_containment);
    REQUIRE(v.pair->values == std::array<BigNat, 2>{8, 34});
    REQUIRE(v.pair->lambda_value == 2);
    REQUIRE(v.certificate->frobenius == 115);
    REQUIRE(v.certificate->genus == 58);
}

TEST_CASE("generic classification: no pair shares a factor") {
    auto v = classify_generic(GenSet3::make(3, 5, 7));
    REQUIRE(v.status == Status::non_symmetric);
    // the smallest-generator-3 rule fires before the pair scan
    REQUIRE(v.reason == Reason::smallest_generator_three);
}

TEST_CASE("raw classification handles degenerate inputs") {
    SECTION("redundant generator, remaining pair not coprime") {
        auto v = classify_raw({BigNat(4), BigNat(6), BigNat(10)});
        REQUIRE(v.status == Status::non_minimal);
        REQUIRE(v.reason == Reason::redundant_generator);
        REQUIRE(v.dependence->redundant == 10);
        REQUIRE(v.dependence->coeffs.first * v.dependence->over[0] +
                    v.dependence->coeffs.second * v.dependence->over[1] ==
                10);
    }
    SECTION("divisibility degeneracy reduces to a two-generator semigroup") {
        auto v = classify_raw({BigNat(2), BigNat(5), BigNat(8)});  // 8 = 4*2
        REQUIRE(v.status == Status::two_generator);
        REQUIRE(*v.reduced_pair == std::array<BigNat, 2>{2, 5});

        auto w = classify_raw({BigNat(4), BigNat(7), BigNat(4)});  // duplicate
        REQUIRE(w.status == Status::two_generator);
        REQUIRE(*w.reduced_pair == std::array<BigNat, 2>{4, 7});
    }
    SECTION("a general dependence is plain non-minimality") {
        // 21 = 8*2 + 1*5 but no generator divides another
        auto v = classify_raw({BigNat(2), BigNat(5), BigNat(21)});
        REQUIRE(v.status == Status::non_minimal);
    }
    SECTION("minimal but not coprime overall is rejected") {
        REQUIRE_THROWS_AS(classify_raw({BigNat(6), BigNat(10), BigNat(14)}),
                          invalid_generators);
    }
    SECTION("generators below 2 are rejected") {
        REQUIRE_THROWS_AS(classify_raw({BigNat(1), BigNat(5), BigNat(7)}), invalid_generators);
    }
}

TEST_CASE("raw classification of symmetric triples with several valid pairs") {
    // all three pairs share a factor; the largest pair gcd (5) is reported
    auto v = classify_raw({BigNat(6), BigNat(10), BigNat(15)});
    REQUIRE(v.status == Status::symmetric);
    REQUIRE(v.pair->values == std::array<BigNat, 2>{10, 15});
    REQUIRE(v.pair->lambda_value == 5);
    REQUIRE(v.certificate->frobenius == 29);
    REQUIRE(v.certificate->genus == 15);
    REQUIRE(cross_check(v, 100'000).outcome == OracleOutcome::confirmed);
}

TEST_CASE("smallest-generator-3 rule") {
    SECTION("fires on (3, 5, 7)") {
        auto v = check_smallest_generator_three(GenSet3::make(3, 5, 7));
        REQUIRE(v.has_value());
        REQUIRE(v->status == Status::non_symmetric);
        REQUIRE(cross_check(*v, 1000).outcome == OracleOutcome::confirmed);
    }
    SECTION("fires on (3, 4, 5): 5 is a gap of S(3, 4)") {
        auto v = check_smallest_generator_three(GenSet3::make(3, 4, 5));
        REQUIRE(v.has_value());
        REQUIRE(v->status == Status::non_symmetric);
        REQUIRE(cross_check(*v, 1000).outcome == OracleOutcome::confirmed);
    }
    SECTION("does not apply when one requirement is broken") {
        REQUIRE(!check_smallest_generator_three(GenSet3::make(3, 6, 7)).has_value());   // 3 | 6
        REQUIRE(!check_smallest_generator_three(GenSet3::make(3, 7, 10)).has_value());  // 10 = 3+7
    }
    SECTION("agrees with the oracle for every applicable pair below 60") {
        for (int d2 = 4; d2 <= 60; ++d2) {
            if (d2 % 3 == 0) continue;
            for (int d3 = d2 + 1; d3 <= 60; ++d3) {
                if (big_gcd(big_gcd(BigNat(3), BigNat(d2)), BigNat(d3)) != 1) continue;
                if (representable2(d3, 3, d2)) continue;
                auto r = enumerate_auto({3, BigNat(d2), BigNat(d3)}, 10'000);
                REQUIRE(r.has_value());
                REQUIRE(!r->symmetric);
            }
        }
    }
}

TEST_CASE("fibonacci worked example (6, 8, 9)") {
    auto v = classify_fibonacci(fibt(6, 8, 9));
    REQUIRE(v.status == Status::symmetric);
    REQUIRE(v.pair->indices == std::array<SeqIndex, 2>{6, 9});
    REQUIRE(v.pair->lambda_index == 3);
    REQUIRE(v.pair->lambda_value == 2);
    REQUIRE(v.pair->containment == std::make_pair(BigNat(1), BigNat(1)));  // 21 = 4 + 17
    REQUIRE(v.certificate->e1 == 136);
    REQUIRE(v.certificate->e2 == 42);
    REQUIRE(v.certificate->frobenius == 115);
    REQUIRE(v.certificate->genus == 58);
    REQUIRE(cross_check(v, 1'000'000).outcome == OracleOutcome::confirmed);
}

TEST_CASE("fibonacci routing for small indices") {
    SECTION("index 3 gives the generator 2: always reduces") {
        auto v = classify_fibonacci(fibt(3, 6, 7));  // values 2, 8, 13
        REQUIRE(v.status == Status::two_generator);
        REQUIRE(*v.reduced_pair == std::array<BigNat, 2>{2, 13});

        auto w = classify_fibonacci(fibt(3, 6, 9));  // values 2, 8, 34: all even
        REQUIRE(w.status == Status::non_minimal);
    }
    SECTION("index 4 gives the generator 3: never symmetric when minimal") {
        auto v = classify_fibonacci(fibt(4, 6, 7));  // values 3, 8, 13
        REQUIRE(v.status == Status::non_symmetric);
        REQUIRE(v.reason == Reason::smallest_generator_three);
        auto oc = cross_check(v, 10'000);
        REQUIRE(oc.outcome == OracleOutcome::confirmed);
        REQUIRE(*oc.frobenius == 10);
        REQUIRE(*oc.genus == 6);
    }
}

TEST_CASE("consecutive fibonacci indices are non-minimal") {
    auto v = classify_fibonacci(fibt(5, 6, 7));  // 13 = 5 + 8
    REQUIRE(v.status == Status::non_minimal);
    REQUIRE(v.dependence->redundant == 13);
}

TEST_CASE("fibonacci triple with every index pair coprime-ish is non-symmetric") {
    auto v = classify_fibonacci(fibt(5, 7, 9));  // all index gcds below 3
    REQUIRE(v.status == Status::non_symmetric);
    REQUIRE(v.reason == Reason::all_pairs_coprime);
    auto oc = cross_check(v, 10'000);
    REQUIRE(oc.outcome == OracleOutcome::confirmed);
    REQUIRE(*oc.frobenius == 42);
    REQUIRE(*oc.genus == 22);
}

TEST_CASE("fibonacci containment failure is reported with the failing pair") {
    // (7, 9, 12): pair (9, 12) has lambda 3 and gcd(3, 7) = 1, but
    // F_7 = 13 is not in S(17, 72); values (13, 34, 144) are minimal.
    auto v = classify_fibonacci(fibt(7, 9, 12));
    REQUIRE(v.status == Status::non_symmetric);
    REQUIRE(v.reason == Reason::containment_failed);
    REQUIRE(v.pair->indices == std::array<SeqIndex, 2>{9, 12});
    auto oc = cross_check(v, 10'000);
    REQUIRE(oc.outcome == OracleOutcome::confirmed);
    REQUIRE(*oc.frobenius == 343);
    REQUIRE(*oc.genus == 176);
}

TEST_CASE("fibonacci triple that scales a smaller one is non-minimal") {
    // F_12 = 144 = 18 * 8, so (6, 9, 12) is not a minimal generating set
    // in the first place and never reaches the gcd clauses
    auto v = classify_fibonacci(fibt(6, 9, 12));
    REQUIRE(v.status == Status::non_minimal);
}

TEST_CASE("fibonacci sufficient inequality") {
    SECTION("worked example fails the inequality yet is symmetric") {
        REQUIRE(!fibonacci_sufficient_inequality(fibt(6, 8, 9)));  // 42 < 94
        REQUIRE(classify_fibonacci(fibt(6, 8, 9)).status == Status::symmetric);
    }
    SECTION("(6, 9, 10) passes and must be symmetric") {
        REQUIRE(fibonacci_sufficient_inequality(fibt(6, 9, 10)));  // 110 > 94
        auto v = classify_fibonacci(fibt(6, 9, 10));
        REQUIRE(v.status == Status::symmetric);
        REQUIRE(v.certificate->frobenius == 149);
        REQUIRE(v.certificate->genus == 75);
        REQUIRE(cross_check(v, 10'000).outcome == OracleOutcome::confirmed);
    }
    SECTION("precondition failures report false") {
        REQUIRE(!fibonacci_sufficient_inequality(fibt(6, 9, 12)));  // non-minimal
        REQUIRE(!fibonacci_sufficient_inequality(fibt(5, 7, 9)));   // no usable pair
    }
}

TEST_CASE("lucas worked example (9, 15, 17)") {
    auto v = classify_lucas(luct(9, 15, 17));
    REQUIRE(v.status == Status::symmetric);
    REQUIRE(v.lucas_clause == LucasClause::all_odd);
    REQUIRE(v.pair->indices == std::array<SeqIndex, 2>{9, 15});
    REQUIRE(v.pair->lambda_value == 4);  // eta = L_3
    REQUIRE(v.pair->containment == std::make_pair(BigNat(170), BigNat(1)));
    REQUIRE(v.certificate->e1 == 25916);
    REQUIRE(v.certificate->e2 == 14284);
    REQUIRE(v.certificate->frobenius == 35189);
    REQUIRE(v.certificate->genus == 17595);
    REQUIRE(cross_check(v, 1'000'000).outcome == OracleOutcome::confirmed);
}

TEST_CASE("lucas routing for index 2") {
    SECTION("minimal: never symmetric") {
        auto v = classify_lucas(luct(2, 4, 5));  // values 3, 7, 11
        REQUIRE(v.status == Status::non_symmetric);
        REQUIRE(v.reason == Reason::smallest_generator_three);
        auto oc = cross_check(v, 1000);
        REQUIRE(oc.outcome == OracleOutcome::confirmed);
        REQUIRE(*oc.frobenius == 8);
        REQUIRE(*oc.genus == 5);
    }
    SECTION("non-minimal: reduces") {
        auto v = classify_lucas(luct(2, 3, 4));  // 7 = 3 + 4
        REQUIRE(v.status == Status::two_generator);
    }
}

TEST_CASE("lucas clause coverage") {
    SECTION("equal nonzero valuations, clause holds: (6, 8, 10)") {
        auto v = classify_lucas(luct(6, 8, 10));  // pair (6,10), eta = L_2 = 3
        REQUIRE(v.status == Status::symmetric);
        REQUIRE(v.lucas_clause == LucasClause::equal_valuation);
        REQUIRE(v.pair->indices == std::array<SeqIndex, 2>{6, 10});
        REQUIRE(v.pair->lambda_value == 3);
        REQUIRE(v.certificate->frobenius == 691);
        REQUIRE(v.certificate->genus == 346);
        REQUIRE(cross_check(v, 10'000).outcome == OracleOutcome::confirmed);
    }
    SECTION("equal nonzero valuations: (10, 14, 20)") {
        auto v = classify_lucas(luct(10, 14, 20));
        REQUIRE(v.status == Status::symmetric);
        REQUIRE(v.lucas_clause == LucasClause::equal_valuation);
        REQUIRE(v.certificate->frobenius == 63851);
        REQUIRE(v.certificate->genus == 31926);
        REQUIRE(cross_check(v, 1'000'000).outcome == OracleOutcome::confirmed);
    }
    SECTION("odd pair with even third: (9, 15, 20)") {
        auto v = classify_lucas(luct(9, 15, 20));
        REQUIRE(v.status == Status::symmetric);
        REQUIRE(v.lucas_clause == LucasClause::odd_pair_even_third);
        REQUIRE(v.certificate->frobenius == 69857);
        REQUIRE(v.certificate->genus == 34929);
        REQUIRE(cross_check(v, 1'000'000).outcome == OracleOutcome::confirmed);
    }
    SECTION("mixed valuations: (3, 5, 6)") {
        auto v = classify_lucas(luct(3, 5, 6));  // pair (3,6), eta = 2, third 5
        REQUIRE(v.status == Status::symmetric);
        REQUIRE(v.lucas_clause == LucasClause::mixed_valuation);
        REQUIRE(v.pair->lambda_value == 2);
        auto oc = cross_check(v, 1000);
        REQUIRE(oc.outcome == OracleOutcome::confirmed);
        REQUIRE(*oc.frobenius == 25);
        REQUIRE(*oc.genus == 13);
    }
    SECTION("containment failure: (7, 9, 15)") {
        auto v = classify_lucas(luct(7, 9, 15));  // L_7 = 29 not in S(19, 341)
        REQUIRE(v.status == Status::non_symmetric);
        REQUIRE(v.reason == Reason::containment_failed);
        auto oc = cross_check(v, 10'000);
        REQUIRE(oc.outcome == OracleOutcome::confirmed);
        REQUIRE(*oc.frobenius == 1867);
        REQUIRE(*oc.genus == 986);
    }
    SECTION("all indices divisible by 3 give even values: non-minimal") {
        auto v = classify_lucas(luct(3, 6, 9));  // values 4, 18, 76; 76 = 19*4
        REQUIRE(v.status == Status::non_minimal);
    }
}

TEST_CASE("lucas index coprimality clause agrees with the value gcd") {
    // the index-level clause must equal gcd(L_k, eta) = 1 on the values
    for (SeqIndex k = 3; k <= 20; ++k)
        for (SeqIndex m = 3; m <= 20; ++m)
            for (SeqIndex n = m + 1; n <= 20; ++n) {
                if (k == m || k == n) continue;
                BigNat eta = lucas_gcd(m, n);
                if (eta <= 1) continue;
                auto cd = lucas_case_data(k, m, n);
                auto [ok, clause] = sgt::detail::lucas_coprime_clause(cd, k);
                REQUIRE(ok == (big_gcd(lucas(k), eta) == 1));
                REQUIRE(clause != LucasClause::none);
            }
}

TEST_CASE("lucas sufficient inequality") {
    SECTION("worked example fails the inequality yet is symmetric") {
        REQUIRE(!lucas_sufficient_inequality(luct(9, 15, 17)));  // 14284 < 24476
        REQUIRE(classify_lucas(luct(9, 15, 17)).status == Status::symmetric);
    }
    SECTION("(9, 15, 19) passes and must be symmetric") {
        REQUIRE(lucas_sufficient_inequality(luct(9, 15, 19)));  // 37396 > 24476
        auto v = classify_lucas(luct(9, 15, 19));
        REQUIRE(v.status == Status::symmetric);
        REQUIRE(v.certificate->frobenius == 52523);
        REQUIRE(v.certificate->genus == 26262);
        REQUIRE(cross_check(v, 1'000'000).outcome == OracleOutcome::confirmed);
    }
    SECTION("even index fails the precondition") {
        REQUIRE(!lucas_sufficient_inequality(luct(6, 9, 15)));
    }
}

TEST_CASE("all-odd lucas triples: verdict equals bare containment") {
    // For all-odd triples where some pair has odd gcd > 1 and the overall
    // index gcd is 1, symmetry is equivalent to containment for such a pair.
    for (SeqIndex k = 3; k <= 17; k += 2)
        for (SeqIndex m = k + 2; m <= 17; m += 2)
            for (SeqIndex n = m + 2; n <= 17; n += 2) {
                auto t = luct(k, m, n);
                auto vals = t.values();
                if (!is_minimal_genset(vals)) continue;
                bool any_pair = false, any_containment = false;
                std::array<std::array<int, 3>, 3> combos{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
                for (auto [i, j, third] : combos) {
                    SeqIndex g = std::gcd(t.idx[i], t.idx[j]);
                    if (g <= 1 || std::gcd(g, t.idx[third]) != 1) continue;
                    any_pair = true;
                    BigNat lg = lucas(g);
                    if (representable2(vals[third], vals[i] / lg, vals[j] / lg))
                        any_containment = true;
                }
                if (!any_pair) continue;
                REQUIRE((classify_lucas(t).status == Status::symmetric) == any_containment);
            }
}

TEST_CASE("verdicts are invariant under index order") {
    auto a = classify_fibonacci(IndexTriple::make(Family::fibonacci, 9, 6, 8));
    auto b = classify_fibonacci(IndexTriple::make(Family::fibonacci, 8, 9, 6));
    auto c = classify_fibonacci(fibt(6, 8, 9));
    REQUIRE(a == b);
    REQUIRE(b == c);
}

TEST_CASE("index triple validation") {
    REQUIRE_THROWS_AS(IndexTriple::make(Family::fibonacci, 2, 5, 7), invalid_generators);
    REQUIRE_THROWS_AS(IndexTriple::make(Family::lucas, 1, 5, 7), invalid_generators);
    REQUIRE_THROWS_AS(IndexTriple::make(Family::lucas, 5, 5, 7), invalid_generators);
    REQUIRE_NOTHROW(IndexTriple::make(Family::lucas, 2, 5, 7));
}

TEST_CASE("formula-only confidence for oracle-infeasible symmetric triples") {
    auto v = classify_lucas(luct(9, 15, 35));
    REQUIRE(v.status == Status::symmetric);
    REQUIRE(v.certificate->frobenius == BigNat("61924193"));
    auto oc = cross_check(v, 1'000'000);
    REQUIRE(oc.outcome == OracleOutcome::infeasible);
}

TEST_CASE("sweep yields ordered rows and matches the single-triple path") {
    SweepOptions opt;
    opt.conductor_ceiling = 100'000;
    auto rows = sweep(Family::fibonacci, 9, opt);
    REQUIRE(rows.size() == 35);  // C(7, 3) index triples from {3..9}
    int symmetric = 0;
    for (const auto& row : rows) {
        if (row.verdict.status == Status::symmetric) {
            ++symmetric;
            REQUIRE(row.verdict.indices == std::array<SeqIndex, 3>{6, 8, 9});
            REQUIRE(row.oracle.outcome == OracleOutcome::confirmed);
        }
        REQUIRE(row.oracle.outcome != OracleOutcome::mismatch);
    }
    REQUIRE(symmetric == 1);

    SECTION("parallel sweep produces identical rows") {
        auto par = sweep(Family::fibonacci, 9, {100'000, true, 4});
        REQUIRE(par.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            REQUIRE(par[i].verdict == rows[i].verdict);
            REQUIRE(par[i].oracle == rows[i].oracle);
        }
    }
}

TEST_CASE("lucas sweep to 8 has only oracle-confirmed symmetric rows") {
    auto rows = sweep(Family::lucas, 8, {100'000, true, 2});
    int symmetric = 0;
    for (const auto& row : rows) {
        REQUIRE(row.oracle.outcome != OracleOutcome::mismatch);
        if (row.verdict.status == Status::symmetric) {
            ++symmetric;
            REQUIRE(row.oracle.outcome == OracleOutcome::confirmed);
        }
    }
    REQUIRE(symmetric == 3);  // (3,5,6), (3,6,7), (3,6,8)
}

TEST_CASE("sweeps at tiny ceilings have no symmetric verdicts with min index >= 5") {
    for (Family fam : {Family::fibonacci, Family::lucas}) {
        auto rows = sweep(fam, 5, {100'000, true, 1});
        for (const auto& row : rows)
            if (row.verdict.indices[0] >= 5)
                REQUIRE(row.verdict.status != Status::symmetric);
    }
}
