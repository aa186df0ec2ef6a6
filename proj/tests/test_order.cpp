#include <doctest.h>

#include <algorithm>

#include "runlat/order.hpp"
#include "runlat/poset.hpp"

using namespace runlat;

namespace {

JudgedRun lit(const std::string& text, const RelevanceScale& scale, Ordering ordering) {
    return parse_run_literal(text, scale, run_kind(ordering));
}

}  // namespace

TEST_CASE("ordering names round-trip") {
    for (Ordering o : kAllOrderings) CHECK(ordering_from_name(ordering_name(o)) == o);
    CHECK(!ordering_from_name("nope").has_value());
    CHECK(run_kind(Ordering::ReplSet) == RunKind::SetBased);
    CHECK(run_kind(Ordering::SwapReplRank) == RunKind::RankBased);
}

TEST_CASE("leq examples") {
    const RelevanceScale c2 = make_scale(2);
    const RelevanceScale c1 = make_scale(1);

    // more documents at the top degree wins
    CHECK(leq(Ordering::ProjReplSet, lit("1110", c2, Ordering::ProjReplSet),
              lit("2000", c2, Ordering::ProjReplSet), c2));
    CHECK(!leq(Ordering::ProjReplSet, lit("2000", c2, Ordering::ProjReplSet),
               lit("1110", c2, Ordering::ProjReplSet), c2));

    // first differing rank decides
    CHECK(leq(Ordering::ProjReplRank, lit("0011", c1, Ordering::ProjReplRank),
              lit("1000", c1, Ordering::ProjReplRank), c1));

    // prefix dominance
    CHECK(leq(Ordering::SwapReplRank, lit("101", c1, Ordering::SwapReplRank),
              lit("110", c1, Ordering::SwapReplRank), c1));
    CHECK(!leq(Ordering::SwapReplRank, lit("110", c1, Ordering::SwapReplRank),
               lit("101", c1, Ordering::SwapReplRank), c1));

    for (Ordering o : kAllOrderings) {
        const RelevanceScale& scale = c2;
        const JudgedRun r = lit("210", scale, o);
        CHECK(leq(o, r, r, scale));  // reflexive
    }

    CHECK_THROWS_AS(leq(Ordering::ReplSet, lit("10", c1, Ordering::ReplRank),
                        lit("10", c1, Ordering::ReplRank), c1),
                    UsageError);
}

TEST_CASE("poset axioms hold on every space with at most 3^7 rank runs") {
    // reflexivity, antisymmetry, transitivity via the bit matrix
    for (int c = 1; c <= 9; ++c)
        for (int n = 1; RunSpace::count(c, n, RunKind::RankBased) <= 2187; ++n)
            for (Ordering o : kAllOrderings) {
                auto space = std::make_shared<RunSpace>(make_scale(c), n, run_kind(o));
                const FinitePoset poset(space, o);
                const int size = poset.size();
                const int words = poset.up().words();
                bool reflexive = true, antisymmetric = true, transitive = true;
                for (int i = 0; i < size; ++i) {
                    reflexive = reflexive && poset.leq(i, i);
                    for (int j = 0; j < size; ++j) {
                        if (i != j && poset.leq(i, j) && poset.leq(j, i)) antisymmetric = false;
                        // transitivity: up(j) subset of up(i) whenever i <= j
                        if (!poset.leq(i, j)) continue;
                        const auto* ri = poset.up().row(i);
                        const auto* rj = poset.up().row(j);
                        for (int w = 0; w < words; ++w)
                            if (rj[w] & ~ri[w]) transitive = false;
                    }
                }
                CHECK(reflexive);
                CHECK(antisymmetric);
                CHECK(transitive);
            }
}

TEST_CASE("projection orderings are total, the others are not") {
    for (Ordering o : {Ordering::ProjReplSet, Ordering::ProjReplRank}) {
        auto space = std::make_shared<RunSpace>(make_scale(2), 4, run_kind(o));
        CHECK(FinitePoset(space, o).is_total());
    }
    for (Ordering o : {Ordering::ReplSet, Ordering::ReplRank, Ordering::SwapReplRank}) {
        auto space = std::make_shared<RunSpace>(make_scale(2), 2, run_kind(o));
        CHECK(!FinitePoset(space, o).is_total());
    }
}

TEST_CASE("repl-rank order implies swap-repl-rank order") {
    for (const auto& [c, n] : std::vector<std::pair<int, int>>{{2, 4}, {1, 6}}) {
        const RelevanceScale scale = make_scale(c);
        const RunSpace space(scale, n, RunKind::RankBased);
        for (const JudgedRun& r : space.elements())
            for (const JudgedRun& s : space.elements())
                if (leq(Ordering::ReplRank, r, s, scale))
                    CHECK(leq(Ordering::SwapReplRank, r, s, scale));
    }
}

TEST_CASE("repl-set order is repl-rank on canonical forms") {
    const RelevanceScale scale = make_scale(2);
    const RunSpace space(scale, 4, RunKind::SetBased);
    for (const JudgedRun& r : space.elements())
        for (const JudgedRun& s : space.elements()) {
            const JudgedRun rr{RunKind::RankBased, r.degrees};
            const JudgedRun ss{RunKind::RankBased, s.degrees};
            CHECK(leq(Ordering::ReplSet, r, s, scale) ==
                  leq(Ordering::ReplRank, rr, ss, scale));
        }
}

TEST_CASE("proj-repl-set order equals lexicographic order on canonical forms") {
    const RelevanceScale scale = make_scale(3);
    const RunSpace space(scale, 4, RunKind::SetBased);
    for (const JudgedRun& r : space.elements())
        for (const JudgedRun& s : space.elements())
            CHECK(leq(Ordering::ProjReplSet, r, s, scale) == (r.degrees <= s.degrees));
}

TEST_CASE("closed-form meet/join examples") {
    const RelevanceScale c2 = make_scale(2);
    {
        const auto mj = closed_form_meet_join(Ordering::ReplRank, lit("102", c2, Ordering::ReplRank),
                                              lit("011", c2, Ordering::ReplRank), c2);
        REQUIRE(mj.has_value());
        CHECK(run_literal(mj->meet) == "001");
        CHECK(run_literal(mj->join) == "112");
    }
    {
        const auto mj = closed_form_meet_join(Ordering::ReplSet, lit("210", c2, Ordering::ReplSet),
                                              lit("111", c2, Ordering::ReplSet), c2);
        REQUIRE(mj.has_value());
        CHECK(run_literal(mj->meet) == "110");
        CHECK(run_literal(mj->join) == "211");
    }
    {
        const RelevanceScale c1 = make_scale(1);
        const auto mj = closed_form_meet_join(Ordering::ProjReplRank,
                                              lit("0011", c1, Ordering::ProjReplRank),
                                              lit("1000", c1, Ordering::ProjReplRank), c1);
        REQUIRE(mj.has_value());
        CHECK(run_literal(mj->meet) == "0011");
        CHECK(run_literal(mj->join) == "1000");
    }
    CHECK(!closed_form_meet_join(Ordering::SwapReplRank, lit("01", make_scale(1), Ordering::SwapReplRank),
                                 lit("10", make_scale(1), Ordering::SwapReplRank), make_scale(1))
               .has_value());
}

TEST_CASE("closed-form meet/join agrees with brute force everywhere") {
    for (const auto& [c, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 4}, {1, 6}})
        for (Ordering o : {Ordering::ProjReplSet, Ordering::ReplSet, Ordering::ProjReplRank,
                           Ordering::ReplRank}) {
            const RelevanceScale scale = make_scale(c);
            auto space = std::make_shared<RunSpace>(scale, n, run_kind(o));
            const FinitePoset poset(space, o);
            const LatticeTables tables(poset);
            REQUIRE(tables.complete());
            for (int i = 0; i < space->size(); ++i)
                for (int j = 0; j < space->size(); ++j) {
                    const auto mj = closed_form_meet_join(o, space->at(i), space->at(j), scale);
                    REQUIRE(mj.has_value());
                    CHECK(space->index_of(mj->meet) == tables.meet(i, j));
                    CHECK(space->index_of(mj->join) == tables.join(i, j));
                }
        }
}

TEST_CASE("cover examples") {
    const RelevanceScale c2 = make_scale(2);
    CHECK(cover(Ordering::ReplRank, lit("010", c2, Ordering::ReplRank),
                lit("020", c2, Ordering::ReplRank), c2));
    CHECK(!cover(Ordering::ReplRank, lit("010", c2, Ordering::ReplRank),
                 lit("120", c2, Ordering::ReplRank), c2));
    CHECK(cover(Ordering::ProjReplSet, lit("1111", c2, Ordering::ProjReplSet),
                lit("2000", c2, Ordering::ProjReplSet), c2));
    const RelevanceScale c1 = make_scale(1);
    CHECK(cover(Ordering::SwapReplRank, lit("001", c1, Ordering::SwapReplRank),
                lit("010", c1, Ordering::SwapReplRank), c1));
    CHECK(!cover(Ordering::SwapReplRank, lit("001", c1, Ordering::SwapReplRank),
                 lit("100", c1, Ordering::SwapReplRank), c1));
}

TEST_CASE("cover agrees with the transitive reduction") {
    for (const auto& [c, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}})
        for (Ordering o : kAllOrderings) {
            const RelevanceScale scale = make_scale(c);
            auto space = std::make_shared<RunSpace>(scale, n, run_kind(o));
            const FinitePoset poset(space, o);
            for (int i = 0; i < space->size(); ++i) {
                const auto& covers = poset.upper_covers()[static_cast<std::size_t>(i)];
                for (int j = 0; j < space->size(); ++j) {
                    const bool in_reduction =
                        std::find(covers.begin(), covers.end(), j) != covers.end();
                    CHECK(cover(o, space->at(i), space->at(j), scale) == in_reduction);
                }
            }
        }
}
