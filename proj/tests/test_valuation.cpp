#include <doctest.h>

#include <random>

#include "runlat/valuation.hpp"

using namespace runlat;

namespace {

SpaceAnalysis analyze(int c, int n, Ordering o) {
    return analyze_space(make_scale(c), n, o);
}

}  // namespace

TEST_CASE("constant-weight valuation is the degree sum on repl-rank") {
    const auto a = analyze(2, 3, Ordering::ReplRank);
    const Valuation v =
        valuation_from_weights(*a.tables, a.verdict, WeightAssignment::constant(1));
    for (int x = 0; x < a.space->size(); ++x) {
        Rational degree_sum = 0;
        for (int d : a.space->at(x).degrees) degree_sum += d;
        CHECK(v.value(x) == degree_sum);
    }
    CHECK(v.value(a.poset->bottom()) == 0);
    const auto check = check_valuation(*a.tables, v.values());
    CHECK(check.is_valuation);
    CHECK(check.is_isotone);
    CHECK(check.is_positive);
}

TEST_CASE("valuation_from_weights validates its inputs") {
    const auto swap = analyze(2, 2, Ordering::SwapReplRank);
    CHECK_THROWS_AS(
        valuation_from_weights(*swap.tables, swap.verdict, WeightAssignment::constant(1)),
        UsageError);

    const auto a = analyze(1, 2, Ordering::ReplRank);
    CHECK_THROWS_AS(WeightAssignment::constant(0), UsageError);
    CHECK_THROWS_AS(
        valuation_from_weights(*a.tables, a.verdict, WeightAssignment::of({{1, Rational(1)}})),
        UsageError);  // missing weights
    std::map<int, Rational> bad;
    for (int j : a.verdict.join_irreducibles) bad.emplace(j, Rational(-1));
    CHECK_THROWS_AS(valuation_from_weights(*a.tables, a.verdict, WeightAssignment::of(bad)),
                    UsageError);
}

TEST_CASE("check_valuation flags the degenerate constant map") {
    const auto a = analyze(1, 3, Ordering::ReplRank);
    const std::vector<Rational> zeros(static_cast<std::size_t>(a.space->size()), Rational(0));
    const auto check = check_valuation(*a.tables, zeros);
    CHECK(check.is_valuation);
    CHECK(check.is_isotone);
    CHECK(!check.is_positive);
    REQUIRE(check.positive_witness.has_value());
    CHECK(check.positive_witness->first == 0);
}

TEST_CASE("distance examples") {
    {
        const auto a = analyze(1, 2, Ordering::ReplRank);
        const Valuation v =
            valuation_from_weights(*a.tables, a.verdict, WeightAssignment::constant(1));
        const int x = a.space->index_of(parse_run_literal("01", make_scale(1), RunKind::RankBased));
        const int y = a.space->index_of(parse_run_literal("10", make_scale(1), RunKind::RankBased));
        CHECK(v.distance(x, y) == 2);
        CHECK(v.distance(x, x) == 0);
        CHECK(shortest_path_distance(*a.tables, v.values(), x, y) == 2);
    }
    {
        const auto chain = analyze(2, 3, Ordering::ProjReplRank);
        const Valuation v =
            valuation_from_weights(*chain.tables, chain.verdict, WeightAssignment::constant(1));
        for (int x = 0; x < chain.space->size(); ++x)
            CHECK(v.distance(chain.poset->bottom(), x) == v.value(x));
    }
}

TEST_CASE("distance equals both closed forms and the shortest path") {
    for (const auto& [c, n, o] : std::vector<std::tuple<int, int, Ordering>>{
             {2, 3, Ordering::ReplRank}, {2, 4, Ordering::ReplSet}, {1, 4, Ordering::SwapReplRank}}) {
        const auto a = analyze(c, n, o);
        const Valuation v =
            valuation_from_weights(*a.tables, a.verdict, WeightAssignment::constant(Rational(1, 2)));
        for (int x = 0; x < a.space->size(); ++x)
            for (int y = 0; y < a.space->size(); ++y) {
                const Rational d = v.distance(x, y);
                // valuation law route
                CHECK(d == v.value(x) + v.value(y) -
                               2 * v.value(a.tables->meet(x, y)));
                // k * |J_x symmetric-difference J_y| route
                const auto jx = irreducibles_below(*a.tables, x);
                const auto jy = irreducibles_below(*a.tables, y);
                std::vector<int> sym;
                for (int j : jx)
                    if (std::find(jy.begin(), jy.end(), j) == jy.end()) sym.push_back(j);
                for (int j : jy)
                    if (std::find(jx.begin(), jx.end(), j) == jx.end()) sym.push_back(j);
                CHECK(d == Rational(1, 2) * Rational(sym.size()));
                CHECK(shortest_path_distance(*a.tables, v.values(), x, y) == d);
            }
    }
}

TEST_CASE("chain closed forms match enumeration indices") {
    const RelevanceScale c2 = make_scale(2);
    CHECK(chain_closed_form_set(parse_run_literal("2110", c2, RunKind::SetBased), c2, 1) == 7);
    CHECK(chain_closed_form_set(parse_run_literal("0000", c2, RunKind::SetBased), c2, 1) == 0);
    CHECK(chain_closed_form_set(parse_run_literal("2211", c2, RunKind::SetBased), c2, 1) == 11);

    const RelevanceScale c1 = make_scale(1);
    CHECK(chain_closed_form_rank(parse_run_literal("0011", c1, RunKind::RankBased), c1, 1) == 3);
    CHECK(chain_closed_form_rank(parse_run_literal("1000", c1, RunKind::RankBased), c1, 1) == 8);
    CHECK(chain_closed_form_rank(parse_run_literal("1021", c2, RunKind::RankBased), c2, 1) == 34);

    CHECK_THROWS_AS(chain_closed_form_set(parse_run_literal("10", c1, RunKind::RankBased), c1, 1),
                    UsageError);
    CHECK_THROWS_AS(chain_closed_form_rank(parse_run_literal("10", c1, RunKind::SetBased), c1, 1),
                    UsageError);

    // k scales linearly
    CHECK(chain_closed_form_set(parse_run_literal("2110", c2, RunKind::SetBased), c2,
                                Rational(1, 4)) == Rational(7, 4));
}

TEST_CASE("replacement closed form equals |J_x|") {
    const RelevanceScale c2 = make_scale(2);
    CHECK(replacement_closed_form(parse_run_literal("2110", c2, RunKind::SetBased), 1) == 4);
    CHECK(replacement_closed_form(parse_run_literal("000", c2, RunKind::RankBased), 1) == 0);
    CHECK(replacement_closed_form(parse_run_literal("1021", c2, RunKind::RankBased), 1) == 4);

    const auto a = analyze(2, 3, Ordering::ReplRank);
    for (int x = 0; x < a.space->size(); ++x)
        CHECK(replacement_closed_form(a.space->at(x), 1) ==
              Rational(irreducibles_below(*a.tables, x).size()));
}

TEST_CASE("metric axioms hold on a larger space with sampled triples") {
    // 243 elements: pair properties exhaustive, triples sampled
    const auto a = analyze_space(make_scale(2), 5, Ordering::ReplRank);
    REQUIRE(a.verdict.is_distributive);
    std::mt19937_64 rng(7);
    std::map<int, Rational> weights;
    for (int j : a.verdict.join_irreducibles)
        weights.emplace(j, Rational(1 + static_cast<int>(rng() % 64), 16));
    const Valuation v = valuation_from_weights(*a.tables, a.verdict, WeightAssignment::of(weights));

    const int n = a.space->size();
    std::vector<long long> sv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const Rational scaled = v.value(x) * 16;
        REQUIRE(boost::multiprecision::denominator(scaled) == 1);
        sv[static_cast<std::size_t>(x)] =
            boost::multiprecision::numerator(scaled).convert_to<long long>();
    }
    auto d = [&](int x, int y) {
        return sv[static_cast<std::size_t>(a.tables->join(x, y))] -
               sv[static_cast<std::size_t>(a.tables->meet(x, y))];
    };
    bool identity = true, symmetry = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            identity = identity && ((d(x, y) == 0) == (x == y));
            symmetry = symmetry && d(x, y) == d(y, x);
        }
    CHECK(identity);
    CHECK(symmetry);
    bool triangle = true, contraction = true;
    for (int trial = 0; trial < 10000; ++trial) {
        const int x = static_cast<int>(rng() % n);
        const int y = static_cast<int>(rng() % n);
        const int z = static_cast<int>(rng() % n);
        triangle = triangle && d(x, z) <= d(x, y) + d(y, z);
        contraction = contraction &&
                      d(a.tables->join(z, x), a.tables->join(z, y)) +
                              d(a.tables->meet(z, x), a.tables->meet(z, y)) <=
                          d(x, y);
    }
    CHECK(triangle);
    CHECK(contraction);
    for (int trial = 0; trial < 50; ++trial) {
        const int x = static_cast<int>(rng() % n);
        const int y = static_cast<int>(rng() % n);
        CHECK(shortest_path_distance(*a.tables, v.values(), x, y) == v.distance(x, y));
    }
}

TEST_CASE("check_valuation witnesses do not depend on the worker count") {
    const auto a = analyze_space(make_scale(1), 4, Ordering::ProjReplRank);
    std::vector<Rational> values;
    for (const JudgedRun& run : a.space->elements()) {
        Rational total = 0;
        for (int d : run.degrees) total += d;
        values.push_back(total);  // gain count: isotone fails on the chain
    }
    const auto one = check_valuation(*a.tables, values, 1);
    const auto four = check_valuation(*a.tables, values, 4);
    CHECK(one.isotone_witness == four.isotone_witness);
    CHECK(one.positive_witness == four.positive_witness);
    CHECK(one.law_witness == four.law_witness);
    CHECK(one.law_pairs_checked == four.law_pairs_checked);
    REQUIRE(one.isotone_witness.has_value());
    CHECK(run_literal(a.space->at(one.isotone_witness->first)) == "0011");
    CHECK(run_literal(a.space->at(one.isotone_witness->second)) == "0100");
}
