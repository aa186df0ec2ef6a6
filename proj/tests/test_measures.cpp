#include <doctest.h>

#include <cmath>

#include "runlat/measures.hpp"

using namespace runlat;

namespace {

JudgedRun rank_lit(const std::string& text, const RelevanceScale& scale) {
    return parse_run_literal(text, scale, RunKind::RankBased);
}

JudgedRun set_lit(const std::string& text, const RelevanceScale& scale) {
    return parse_run_literal(text, scale, RunKind::SetBased);
}

}  // namespace

TEST_CASE("measure evaluation examples") {
    const RelevanceScale c2 = make_scale(2);
    const RelevanceScale c1 = make_scale(1);
    const MeasureSpec gp2 = MeasureSpec::gp(c2);

    CHECK(eval_exact(gp2, set_lit("2000", c2)) == Rational(1, 4));
    CHECK(eval_exact(gp2, set_lit("1110", c2)) == Rational(3, 8));
    CHECK(eval_exact(gp2, set_lit("0000", c2)) == 0);

    const MeasureSpec dcg2 = MeasureSpec::dcg(c1, 2);
    CHECK(std::abs(eval_float(dcg2, rank_lit("0100", c1)) - 1.0) < 1e-3);
    CHECK(std::abs(eval_float(dcg2, rank_lit("0011", c1)) - 1.1309) < 1e-3);

    const MeasureSpec rbp = MeasureSpec::grbp(c1, Rational(1, 2));
    CHECK(eval_exact(rbp, rank_lit("1010", c1)) == Rational(5, 8));

    // gr is (n / rb) * gp for every run
    const MeasureSpec gr = MeasureSpec::gr(c2, Rational(8));
    const RunSpace space(c2, 4, RunKind::RankBased);
    for (const JudgedRun& run : space.elements())
        CHECK(eval_exact(gr, run) == Rational(4, 8) * eval_exact(MeasureSpec::gp(c2), run));
}

TEST_CASE("measure parameter validation") {
    const RelevanceScale c1 = make_scale(1);
    CHECK_THROWS_AS(MeasureSpec::grbp(c1, Rational(1)), UsageError);
    CHECK_THROWS_AS(MeasureSpec::grbp(c1, Rational(0)), UsageError);
    CHECK_THROWS_AS(MeasureSpec::dcg(c1, 1), UsageError);
    CHECK_THROWS_AS(MeasureSpec::gr(c1, Rational(0)), UsageError);
    // rank-only measures reject set-based runs
    CHECK_THROWS_AS(eval_float(MeasureSpec::dcg(c1, 2), set_lit("10", c1)), UsageError);
    CHECK_THROWS_AS(eval_exact(MeasureSpec::grbp(c1, Rational(1, 2)), set_lit("10", c1)),
                    UsageError);
    CHECK_THROWS_AS(eval_exact(MeasureSpec::dcg(c1, 2), rank_lit("10", c1)), UsageError);
    // gp accepts both kinds
    CHECK(eval_exact(MeasureSpec::gp(c1), set_lit("10", c1)) == Rational(1, 2));
    CHECK(eval_exact(MeasureSpec::gp(c1), rank_lit("01", c1)) == Rational(1, 2));
}

TEST_CASE("classification reproduces the known verdicts") {
    const RelevanceScale c2 = make_scale(2);
    const RelevanceScale c1 = make_scale(1);
    {
        const auto report = classify(MeasureSpec::gp(c2), Ordering::ReplRank, 3);
        CHECK(report.is_valuation);
        CHECK(report.is_isotone);
        CHECK(report.is_positive);
        CHECK(report.space_is_lattice);
    }
    {
        const auto report = classify(MeasureSpec::gp(c1), Ordering::ProjReplRank, 4);
        CHECK(report.is_valuation);  // chains make everything a valuation
        CHECK(!report.is_isotone);
        CHECK(report.isotone_witness ==
              std::pair<std::string, std::string>{"0011", "0100"});
    }
    {
        const auto report = classify(MeasureSpec::dcg(c1, 2), Ordering::SwapReplRank, 4);
        CHECK(report.is_valuation);
        CHECK(report.is_isotone);
        CHECK(!report.is_positive);
    }
    {
        const auto report = classify(MeasureSpec::gp(c2), Ordering::ProjReplSet, 4);
        CHECK(report.is_valuation);
        CHECK(!report.is_isotone);
        CHECK(report.isotone_witness ==
              std::pair<std::string, std::string>{"1110", "2000"});
    }
    {
        // non-lattice space: the law runs over the pairs with both bounds
        const auto report = classify(MeasureSpec::gp(c2), Ordering::SwapReplRank, 3);
        CHECK(!report.space_is_lattice);
        CHECK(report.is_valuation);
        CHECK(report.is_isotone);
        CHECK(!report.is_positive);
        CHECK(report.law_pairs_skipped > 0);
        CHECK(report.note.has_value());
    }
}

TEST_CASE("rbp thresholds") {
    CHECK(rbp_threshold(make_scale(1)) == Rational(1, 2));
    CHECK(rbp_threshold(make_scale(2)) == Rational(1, 3));
    CHECK(rbp_threshold(make_scale(2, std::vector<Rational>{0, 3, 4})) == Rational(1, 5));

    const auto table = verify_rbp_threshold(make_scale(1), 4, {Rational(2, 5), Rational(3, 5)});
    CHECK(table[0].second);
    CHECK(!table[1].second);
}

TEST_CASE("find_counterexample returns canonical-first witnesses") {
    const RelevanceScale c2 = make_scale(2);
    const RelevanceScale c1 = make_scale(1);
    {
        const auto hit = find_counterexample(MeasureSpec::gp(c2), Ordering::ProjReplSet, 4,
                                             MeasureProperty::Isotone);
        REQUIRE(hit.has_value());
        CHECK(run_literal(hit->first) == "1110");
        CHECK(run_literal(hit->second) == "2000");
    }
    CHECK(!find_counterexample(MeasureSpec::gp(c2), Ordering::ReplSet, 3,
                               MeasureProperty::Isotone)
               .has_value());
    {
        const auto hit = find_counterexample(MeasureSpec::gp(c1), Ordering::SwapReplRank, 3,
                                             MeasureProperty::Positive);
        REQUIRE(hit.has_value());
        CHECK(run_literal(hit->first) == "001");
        CHECK(run_literal(hit->second) == "010");
    }
    CHECK(!find_counterexample(MeasureSpec::gp(c2), Ordering::ReplRank, 3,
                               MeasureProperty::ValuationLaw)
               .has_value());
}

TEST_CASE("find_counterexample with a user-supplied score table") {
    const SpaceAnalysis analysis = analyze_space(make_scale(1), 2, Ordering::ProjReplRank);
    const std::vector<Rational> constant(4, Rational(1, 3));
    CHECK(!find_counterexample(analysis, constant, MeasureProperty::Isotone).has_value());
    CHECK(!find_counterexample(analysis, constant, MeasureProperty::ValuationLaw).has_value());
    const auto hit = find_counterexample(analysis, constant, MeasureProperty::Positive);
    REQUIRE(hit.has_value());
    CHECK(run_literal(hit->first) == "00");
    CHECK(run_literal(hit->second) == "01");
    CHECK_THROWS_AS(
        find_counterexample(analysis, std::vector<Rational>(3, Rational(0)),
                            MeasureProperty::Positive),
        UsageError);
}

TEST_CASE("grbp is strictly isotone on swap prefix dominance") {
    // prefix gain sums are weighted positively by rank, so strict dominance
    // forces a strict grbp increase; pinned here as a regression oracle
    const RelevanceScale c2 = make_scale(2);
    const auto report = classify(MeasureSpec::grbp(c2, Rational(1, 2)), Ordering::SwapReplRank, 3);
    CHECK(report.is_valuation);
    CHECK(report.is_isotone);
    CHECK(report.is_positive);
}

TEST_CASE("swap witness runs share their gp value") {
    const RelevanceScale c1 = make_scale(1);
    const MeasureSpec gp = MeasureSpec::gp(c1);
    CHECK(eval_exact(gp, rank_lit("101", c1)) == Rational(2, 3));
    CHECK(eval_exact(gp, rank_lit("110", c1)) == Rational(2, 3));
    CHECK(leq(Ordering::SwapReplRank, rank_lit("101", c1), rank_lit("110", c1), c1));
}
