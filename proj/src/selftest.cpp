#include "runlat/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>

namespace runlat {

namespace {

// Acceptance sweep: every c <= 2, N <= 4 space plus the binary N = 5, 6 ones.
const std::vector<std::pair<int, int>>& sweep() {
    static const std::vector<std::pair<int, int>> spaces = {
        {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {1, 5}, {1, 6},
    };
    return spaces;
}

struct AnalysisCache {
    std::size_t budget;
    int workers;
    std::map<std::tuple<Ordering, int, int>, SpaceAnalysis> cache;

    const SpaceAnalysis& get(Ordering ordering, int c, int n) {
        const auto key = std::make_tuple(ordering, c, n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, analyze_space(RelevanceScale::indicator(c), n, ordering,
                                                  budget, workers))
                     .first;
        return it->second;
    }
};

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T, typename U>
    void expect_eq(const T& got, const U& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream msg;
            msg << what << ": got " << got << ", expected " << want;
            failures.push_back(msg.str());
        }
    }
};

std::string space_tag(Ordering ordering, int c, int n) {
    return ordering_name(ordering) + " c=" + std::to_string(c) + " n=" + std::to_string(n);
}

std::string pair_text(const RunSpace& space, int a, int b) {
    return "(" + run_literal(space.at(a)) + "," + run_literal(space.at(b)) + ")";
}

// --- criterion 1: chains, distributive lattices, swap lattice + pentagon ---
CriterionResult criterion_structure(AnalysisCache& cache) {
    Checker check;
    int spaces = 0;
    for (const auto& [c, n] : sweep()) {
        for (Ordering o : {Ordering::ProjReplSet, Ordering::ProjReplRank}) {
            const auto& a = cache.get(o, c, n);
            ++spaces;
            check.expect(a.poset->is_total(), space_tag(o, c, n) + ": expected a total order");
            check.expect(a.verdict.is_lattice, space_tag(o, c, n) + ": expected a lattice");
        }
        for (Ordering o : {Ordering::ReplSet, Ordering::ReplRank}) {
            const auto& a = cache.get(o, c, n);
            ++spaces;
            check.expect(a.verdict.is_lattice && a.verdict.is_distributive,
                         space_tag(o, c, n) + ": expected a distributive lattice");
        }
        const auto& a = cache.get(Ordering::SwapReplRank, c, n);
        ++spaces;
        if (!a.verdict.is_lattice) {
            const auto& f = *a.verdict.lattice_failure;
            check.expect(false, space_tag(Ordering::SwapReplRank, c, n) +
                                    ": expected a lattice, but " +
                                    pair_text(*a.space, f.a, f.b) + " has no " +
                                    (f.missing_join ? "join" : "meet"));
        }
    }
    bool pentagon = false;
    std::string pentagon_where;
    for (const auto& [n, c] : std::vector<std::pair<int, int>>{{3, 2}, {4, 1}, {4, 2}}) {
        const auto& a = cache.get(Ordering::SwapReplRank, c, n);
        if (a.verdict.n5_witness) {
            pentagon = true;
            pentagon_where = space_tag(Ordering::SwapReplRank, c, n);
        }
    }
    check.expect(pentagon,
                 "expected a pentagon witness on swap-repl-rank for one of (n=3,c=2), (n=4,c=1), "
                 "(n=4,c=2); none of these spaces contains one (the binary spaces are "
                 "distributive lattices, the c=2 spaces are not lattices)");
    return {1, "structure-verdicts", check.failures.empty(), false,
            std::to_string(spaces) + " spaces checked", check.failures};
}

// --- criterion 2: join-irreducible counts and shapes ---
CriterionResult criterion_irreducibles(AnalysisCache& cache) {
    Checker check;
    for (const auto& [c, n] : sweep()) {
        for (Ordering o : {Ordering::ProjReplSet, Ordering::ProjReplRank}) {
            const auto& a = cache.get(o, c, n);
            check.expect_eq(static_cast<int>(a.verdict.join_irreducibles.size()),
                            a.space->size() - 1,
                            space_tag(o, c, n) + ": chain join-irreducible count");
        }
        for (Ordering o : {Ordering::ReplSet, Ordering::ReplRank}) {
            const auto& a = cache.get(o, c, n);
            const auto& ji = a.verdict.join_irreducibles;
            check.expect_eq(static_cast<int>(ji.size()), n * c,
                            space_tag(o, c, n) + ": join-irreducible count");
            for (int j : ji) {
                const JudgedRun& run = a.space->at(j);
                bool good_shape = false;
                if (o == Ordering::ReplRank) {
                    // one-hot: a single non-zero position
                    int nonzero = 0;
                    for (int d : run.degrees) nonzero += d != 0;
                    good_shape = nonzero == 1;
                } else {
                    // canonical prefix a_m ... a_m followed by a_0
                    int t = 0;
                    while (t < run.length() && run[t] != 0) ++t;
                    good_shape = t >= 1;
                    for (int i = 1; i < t && good_shape; ++i) good_shape = run[i] == run[0];
                    for (int i = t; i < run.length() && good_shape; ++i) good_shape = run[i] == 0;
                }
                check.expect(good_shape, space_tag(o, c, n) + ": join-irreducible " +
                                             run_literal(run) + " has unexpected shape");
            }
        }
    }
    return {2, "join-irreducible-counts", check.failures.empty(), false,
            "repl orderings have n*c join-irreducibles, chains all but bottom", check.failures};
}

// --- criterion 3: closed forms against enumeration / |J_x| oracles ---
CriterionResult criterion_closed_forms(AnalysisCache& cache) {
    Checker check;
    for (int c = 1; c <= 2; ++c)
        for (int n = 1; n <= 5; ++n) {
            const RelevanceScale scale = RelevanceScale::indicator(c);
            const RunSpace space(scale, n, RunKind::SetBased);
            for (int i = 0; i < space.size(); ++i)
                check.expect(chain_closed_form_set(space.at(i), scale, 1) == i,
                             "set chain closed form mismatch at c=" + std::to_string(c) +
                                 " n=" + std::to_string(n) + " run " + run_literal(space.at(i)));
        }
    {
        const RelevanceScale scale = RelevanceScale::indicator(2);
        check.expect(chain_closed_form_set(parse_run_literal("2110", scale, RunKind::SetBased),
                                           scale, 1) == 7,
                     "chain index of {2,1,1,0} is not 7");
        check.expect(chain_closed_form_set(parse_run_literal("2211", scale, RunKind::SetBased),
                                           scale, 1) == 11,
                     "chain index of {2,2,1,1} is not 11");
    }
    for (int c = 1; c <= 8; ++c)
        for (int n = 1; RunSpace::count(c, n, RunKind::RankBased) <= 729; ++n) {
            const RelevanceScale scale = RelevanceScale::indicator(c);
            const RunSpace space(scale, n, RunKind::RankBased);
            for (int i = 0; i < space.size(); ++i)
                check.expect(chain_closed_form_rank(space.at(i), scale, 1) == i,
                             "rank chain closed form mismatch at c=" + std::to_string(c) +
                                 " n=" + std::to_string(n) + " run " + run_literal(space.at(i)));
        }
    for (const auto& [c, n] : sweep())
        for (Ordering o : {Ordering::ReplSet, Ordering::ReplRank}) {
            const auto& a = cache.get(o, c, n);
            for (int i = 0; i < a.space->size(); ++i) {
                const auto below = irreducibles_below(*a.tables, i);
                check.expect(replacement_closed_form(a.space->at(i), 1) ==
                                 static_cast<int>(below.size()),
                             space_tag(o, c, n) + ": degree-sum formula != |J_x| for " +
                                 run_literal(a.space->at(i)));
            }
        }
    return {3, "closed-form-oracles", check.failures.empty(), false,
            "chain indices and |J_x| match the closed forms", check.failures};
}

// --- criterion 4: pinned counterexample values and witness pairs ---
CriterionResult criterion_counterexamples(AnalysisCache& cache) {
    Checker check;
    const RelevanceScale c2 = RelevanceScale::indicator(2);
    const RelevanceScale c1 = RelevanceScale::indicator(1);
    const MeasureSpec gp2 = MeasureSpec::gp(c2);
    const MeasureSpec gp1 = MeasureSpec::gp(c1);

    const JudgedRun s2000 = parse_run_literal("2000", c2, RunKind::SetBased);
    const JudgedRun s1110 = parse_run_literal("1110", c2, RunKind::SetBased);
    check.expect(leq(Ordering::ProjReplSet, s1110, s2000, c2), "{1110} should precede {2000}");
    check.expect_eq(format_rational(eval_exact(gp2, s2000)), "1/4", "gp({2,0,0,0})");
    check.expect_eq(format_rational(eval_exact(gp2, s1110)), "3/8", "gp({1,1,1,0})");

    const JudgedRun r0011 = parse_run_literal("0011", c1, RunKind::RankBased);
    const JudgedRun r1000 = parse_run_literal("1000", c1, RunKind::RankBased);
    check.expect(leq(Ordering::ProjReplRank, r0011, r1000, c1), "(0011) should precede (1000)");
    check.expect_eq(format_rational(eval_exact(gp1, r1000)), "1/4", "gp((1,0,0,0))");
    check.expect_eq(format_rational(eval_exact(gp1, r0011)), "1/2", "gp((0,0,1,1))");

    const MeasureSpec dcg2 = MeasureSpec::dcg(c1, 2);
    const JudgedRun r0100 = parse_run_literal("0100", c1, RunKind::RankBased);
    check.expect(std::abs(eval_float(dcg2, r0100) - 1.0) <= 1e-3, "dcg_2((0,1,0,0)) != 1.0");
    check.expect(std::abs(eval_float(dcg2, r0011) - 1.1309) <= 1e-3,
                 "dcg_2((0,0,1,1)) != 1.1309");
    check.expect(leq(Ordering::ProjReplRank, r0011, r0100, c1), "(0011) should precede (0100)");

    auto literal_of = [](const std::optional<std::pair<JudgedRun, JudgedRun>>& pair) {
        return pair ? "(" + run_literal(pair->first) + "," + run_literal(pair->second) + ")"
                    : std::string("none");
    };
    {
        const auto got = find_counterexample(gp2, Ordering::ProjReplSet, 4,
                                             MeasureProperty::Isotone, cache.budget);
        check.expect_eq(literal_of(got), "(1110,2000)",
                        "first isotone counterexample of gp on proj-repl-set c=2 n=4");
    }
    {
        const auto got = find_counterexample(gp2, Ordering::ReplSet, 3, MeasureProperty::Isotone,
                                             cache.budget);
        check.expect_eq(literal_of(got), "none",
                        "isotone counterexample of gp on repl-set c=2 n=3");
    }
    {
        const auto got = find_counterexample(gp1, Ordering::SwapReplRank, 3,
                                             MeasureProperty::Positive, cache.budget);
        check.expect_eq(literal_of(got), "(101,110)",
                        "first positivity counterexample of gp on swap-repl-rank c=1 n=3");
    }
    return {4, "counterexample-reproduction", check.failures.empty(), false,
            "pinned measure values and witness pairs", check.failures};
}

// --- criterion 5: positive valuations on replacement, isotone non-positive on swap ---
CriterionResult criterion_classification(AnalysisCache& cache) {
    Checker check;
    for (const auto& [c, n] : sweep()) {
        const RelevanceScale scale = RelevanceScale::indicator(c);
        std::vector<MeasureSpec> set_measures = {
            MeasureSpec::gp(scale),
            MeasureSpec::gr(scale, n),
            MeasureSpec::gr(scale, 2 * n),
        };
        std::vector<MeasureSpec> rank_measures = set_measures;
        rank_measures.push_back(MeasureSpec::grbp(scale, Rational(1, 2)));
        rank_measures.push_back(MeasureSpec::grbp(scale, Rational(4, 5)));
        rank_measures.push_back(MeasureSpec::dcg(scale, 2));
        rank_measures.push_back(MeasureSpec::dcg(scale, 10));

        for (const MeasureSpec& m : set_measures) {
            const auto report = classify(m, cache.get(Ordering::ReplSet, c, n), cache.workers);
            check.expect(report.is_valuation && report.is_isotone && report.is_positive,
                         m.display_name() + " on " + space_tag(Ordering::ReplSet, c, n) +
                             ": expected a positive valuation");
        }
        for (const MeasureSpec& m : rank_measures) {
            const auto report = classify(m, cache.get(Ordering::ReplRank, c, n), cache.workers);
            check.expect(report.is_valuation && report.is_isotone && report.is_positive,
                         m.display_name() + " on " + space_tag(Ordering::ReplRank, c, n) +
                             ": expected a positive valuation");
        }
        // n = 1 is degenerate for the swap ordering: with a single rank there
        // is nothing to swap and the poset coincides with the replacement
        // chain, where the same measures are positive by the criterion above.
        if (n == 1) continue;
        for (const MeasureSpec& m : rank_measures) {
            const auto report = classify(m, cache.get(Ordering::SwapReplRank, c, n), cache.workers);
            std::string got = std::string(report.is_valuation ? "" : "non-") + "valuation, " +
                              (report.is_isotone ? "" : "non-") + "isotone, " +
                              (report.is_positive ? "positive" : "non-positive");
            check.expect(report.is_valuation && report.is_isotone && !report.is_positive,
                         m.display_name() + " on " + space_tag(Ordering::SwapReplRank, c, n) +
                             ": expected an isotone non-positive valuation, got " + got);
        }
    }
    return {5, "measure-classification", check.failures.empty(), false,
            "gp/gr/grbp/dcg classified on repl orderings and on swap (n >= 2) over the sweep",
            check.failures};
}

// --- criterion 6: gRBP isotonicity flips at G/(G+1) ---
CriterionResult criterion_rbp_threshold(AnalysisCache& cache) {
    Checker check;
    const RelevanceScale binary = RelevanceScale::indicator(1);
    check.expect_eq(format_rational(rbp_threshold(binary)), "1/2", "binary gRBP threshold");
    const auto binary_table = verify_rbp_threshold(
        binary, 4, {Rational(1, 4), Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(4, 5)},
        cache.budget);
    const std::vector<bool> binary_expect = {true, true, true, false, false};
    for (std::size_t i = 0; i < binary_table.size(); ++i)
        check.expect_eq(binary_table[i].second, static_cast<bool>(binary_expect[i]),
                        "binary gRBP isotone at p=" + format_rational(binary_table[i].first));

    const RelevanceScale graded = RelevanceScale::indicator(2);
    check.expect_eq(format_rational(rbp_threshold(graded)), "1/3", "c=2 gRBP threshold");
    const auto graded_table =
        verify_rbp_threshold(graded, 4, {Rational(3, 10), Rational(2, 5)}, cache.budget);
    check.expect_eq(graded_table[0].second, true, "c=2 gRBP isotone at p=3/10");
    check.expect_eq(graded_table[1].second, false, "c=2 gRBP isotone at p=2/5");
    return {6, "rbp-threshold", check.failures.empty(), false,
            "isotonicity flips at 1/2 (binary) and 1/3 (c=2)", check.failures};
}

// --- criterion 7: metric axioms for weighted valuations on distributive spaces ---

// All-sources shortest paths on the cover graph, |dv| edge weights, int64.
// Independent test-side oracle for the lattice distance v(join) - v(meet).
std::vector<long long> dijkstra_all(const FinitePoset& poset,
                                    const std::vector<long long>& values, int source) {
    const int n = poset.size();
    std::vector<long long> dist(static_cast<std::size_t>(n), -1);
    using Entry = std::pair<long long, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.emplace(0, source);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (dist[static_cast<std::size_t>(u)] != d) continue;
        auto relax = [&](int v) {
            const long long w = std::llabs(values[static_cast<std::size_t>(v)] -
                                           values[static_cast<std::size_t>(u)]);
            auto& slot = dist[static_cast<std::size_t>(v)];
            if (slot < 0 || d + w < slot) {
                slot = d + w;
                queue.emplace(d + w, v);
            }
        };
        for (int v : poset.upper_covers()[static_cast<std::size_t>(u)]) relax(v);
        for (int v : poset.lower_covers()[static_cast<std::size_t>(u)]) relax(v);
    }
    return dist;
}

CriterionResult criterion_metric_axioms(AnalysisCache& cache, unsigned long long seed) {
    Checker check;
    std::mt19937_64 rng(seed);
    int rounds = 0;
    for (const auto& [c, n] : sweep())
        for (Ordering o : kAllOrderings) {
            const auto& a = cache.get(o, c, n);
            if (!a.verdict.is_distributive) continue;
            const int size = a.space->size();
            for (int round = 0; round < 20; ++round) {
                ++rounds;
                std::map<int, Rational> weights;
                for (int j : a.verdict.join_irreducibles)
                    weights.emplace(j, Rational(1 + static_cast<int>(rng() % 64), 16));
                const Valuation val =
                    valuation_from_weights(*a.tables, a.verdict, WeightAssignment::of(weights));
                const auto vc = check_valuation(*a.tables, val.values());
                check.expect(vc.is_valuation && vc.is_isotone && vc.is_positive,
                             space_tag(o, c, n) + " round " + std::to_string(round) +
                                 ": weighted valuation not positive");

                // Values scaled by 16 are integers (weights are m/16), so the
                // quadratic/cubic sweeps run exactly on int64.
                std::vector<long long> sv(static_cast<std::size_t>(size));
                bool scaled_ok = true;
                for (int x = 0; x < size; ++x) {
                    const Rational scaled = val.value(x) * 16;
                    if (boost::multiprecision::denominator(scaled) != 1) scaled_ok = false;
                    sv[static_cast<std::size_t>(x)] =
                        boost::multiprecision::numerator(scaled).convert_to<long long>();
                }
                check.expect(scaled_ok, space_tag(o, c, n) + ": values not multiples of 1/16");
                if (!scaled_ok) continue;
                auto d = [&](int x, int y) {
                    return sv[static_cast<std::size_t>(a.tables->join(x, y))] -
                           sv[static_cast<std::size_t>(a.tables->meet(x, y))];
                };
                // d() matches the engine's rational distance by construction;
                // pin that on the first pairs anyway.
                for (int x = 0; x < std::min(size, 8); ++x)
                    for (int y = 0; y < std::min(size, 8); ++y)
                        check.expect(val.distance(x, y) * 16 == d(x, y),
                                     space_tag(o, c, n) + ": scaled distance mismatch");
                bool identity = true, symmetry = true, triangle = true, contraction = true;
                for (int x = 0; x < size; ++x)
                    for (int y = 0; y < size; ++y) {
                        if ((d(x, y) == 0) != (x == y)) identity = false;
                        if (d(x, y) != d(y, x)) symmetry = false;
                    }
                for (int x = 0; x < size && (triangle || contraction); ++x)
                    for (int y = 0; y < size; ++y)
                        for (int z = 0; z < size; ++z) {
                            if (d(x, z) > d(x, y) + d(y, z)) triangle = false;
                            const int jx = a.tables->join(z, x), jy = a.tables->join(z, y);
                            const int mx = a.tables->meet(z, x), my = a.tables->meet(z, y);
                            if (d(jx, jy) + d(mx, my) > d(x, y)) contraction = false;
                        }
                check.expect(identity, space_tag(o, c, n) + ": identity of indiscernibles failed");
                check.expect(symmetry, space_tag(o, c, n) + ": symmetry failed");
                check.expect(triangle, space_tag(o, c, n) + ": triangle inequality failed");
                check.expect(contraction, space_tag(o, c, n) + ": join/meet contraction failed");

                bool shortest_ok = true;
                for (int x = 0; x < size && shortest_ok; ++x) {
                    const auto paths = dijkstra_all(*a.poset, sv, x);
                    for (int y = 0; y < size; ++y)
                        if (paths[static_cast<std::size_t>(y)] != d(x, y)) {
                            shortest_ok = false;
                            break;
                        }
                }
                check.expect(shortest_ok, space_tag(o, c, n) + ": shortest-path distance != d_v");
                // the engine's rational Dijkstra agrees too; spot-check the
                // small spaces every round
                if (size <= 16) {
                    bool engine_ok = true;
                    for (int x = 0; x < size && engine_ok; ++x)
                        for (int y = 0; y < size; ++y)
                            if (shortest_path_distance(*a.tables, val.values(), x, y) !=
                                val.distance(x, y)) {
                                engine_ok = false;
                                break;
                            }
                    check.expect(engine_ok,
                                 space_tag(o, c, n) + ": rational shortest path != d_v");
                }
            }
        }
    return {7, "metric-axioms", check.failures.empty(), false,
            std::to_string(rounds) + " weighted rounds over the distributive spaces",
            check.failures};
}

// --- criterion 8: gp induces a pseudo-metric (not a metric) on binary swap ---
CriterionResult criterion_swap_pseudometric(AnalysisCache& cache) {
    Checker check;
    for (int n = 1; n <= 4; ++n) {
        const auto& a = cache.get(Ordering::SwapReplRank, 1, n);
        const MeasureSpec gp = MeasureSpec::gp(a.space->scale());
        std::vector<Rational> values;
        for (const JudgedRun& run : a.space->elements()) values.push_back(eval_exact(gp, run));
        const int size = a.space->size();
        auto dist = [&](int x, int y) {
            const int m = a.tables->meet(x, y), j = a.tables->join(x, y);
            return values[static_cast<std::size_t>(j)] - values[static_cast<std::size_t>(m)];
        };
        bool zero_pair = false;
        for (int x = 0; x < size && !zero_pair; ++x)
            for (int y = x + 1; y < size; ++y)
                if (dist(x, y) == 0) {
                    zero_pair = true;
                    break;
                }
        if (n >= 2)
            check.expect(zero_pair, "swap-repl-rank c=1 n=" + std::to_string(n) +
                                        ": no distinct pair at gp-distance 0");
        bool symmetric = true, triangle = true;
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y) {
                if (dist(x, y) != dist(y, x)) symmetric = false;
                for (int z = 0; z < size; ++z)
                    if (dist(x, z) > dist(x, y) + dist(y, z)) triangle = false;
            }
        check.expect(symmetric, "gp distance not symmetric on swap-repl-rank c=1 n=" +
                                    std::to_string(n));
        check.expect(triangle, "gp distance violates the triangle inequality on "
                               "swap-repl-rank c=1 n=" + std::to_string(n));
        if (n == 3) {
            const int x = a.space->index_of(parse_run_literal("101", a.space->scale(),
                                                              RunKind::RankBased));
            const int y = a.space->index_of(parse_run_literal("110", a.space->scale(),
                                                              RunKind::RankBased));
            check.expect(dist(x, y) == 0 && x != y,
                         "gp distance of (101,110) should be 0");
        }
    }
    return {8, "swap-pseudometric", check.failures.empty(), false,
            "gp yields a pseudo-metric with distinct zero-distance runs on binary swap",
            check.failures};
}

// --- criterion 9: unique irredundant join-irreducible decomposition ---
CriterionResult criterion_birkhoff(AnalysisCache& cache) {
    Checker check;
    int decomposed = 0;
    for (const auto& [c, n] : sweep())
        for (Ordering o : kAllOrderings) {
            const auto& a = cache.get(o, c, n);
            if (!a.verdict.is_distributive) continue;
            const auto& tables = *a.tables;
            const auto& poset = *a.poset;
            for (int x = 0; x < a.space->size(); ++x) {
                if (x == tables.bottom()) continue;
                ++decomposed;
                std::vector<int> decomposition;
                try {
                    decomposition = birkhoff_decompose(tables, a.verdict, x);
                } catch (const std::exception& e) {
                    check.expect(false, space_tag(o, c, n) + ": decomposition of " +
                                            run_literal(a.space->at(x)) + " failed: " + e.what());
                    continue;
                }
                for (std::size_t i = 0; i < decomposition.size(); ++i)
                    for (std::size_t j = i + 1; j < decomposition.size(); ++j)
                        check.expect(!poset.leq(decomposition[i], decomposition[j]) &&
                                         !poset.leq(decomposition[j], decomposition[i]),
                                     space_tag(o, c, n) + ": decomposition not an antichain");
                // every antichain of J_x joining to x, checked for
                // irredundancy; exactly one must survive
                const std::vector<int> below = irreducibles_below(tables, x);
                std::vector<std::vector<int>> matches;
                std::vector<int> current;
                auto join_of = [&](const std::vector<int>& elems) {
                    int j = tables.bottom();
                    for (int e : elems) j = tables.join(j, e);
                    return j;
                };
                auto dfs = [&](auto&& self, std::size_t idx) -> void {
                    if (idx == below.size()) {
                        if (current.empty() || join_of(current) != x) return;
                        for (std::size_t skip = 0; skip < current.size(); ++skip) {
                            std::vector<int> reduced;
                            for (std::size_t i = 0; i < current.size(); ++i)
                                if (i != skip) reduced.push_back(current[i]);
                            if (join_of(reduced) == x) return;  // redundant
                        }
                        matches.push_back(current);
                        return;
                    }
                    self(self, idx + 1);
                    const int candidate = below[idx];
                    for (int chosen : current)
                        if (poset.leq(chosen, candidate) || poset.leq(candidate, chosen)) return;
                    current.push_back(candidate);
                    self(self, idx + 1);
                    current.pop_back();
                };
                dfs(dfs, 0);
                std::sort(decomposition.begin(), decomposition.end());
                check.expect(matches.size() == 1,
                             space_tag(o, c, n) + ": " + run_literal(a.space->at(x)) + " has " +
                                 std::to_string(matches.size()) +
                                 " irredundant decompositions, expected exactly 1");
                if (matches.size() == 1) {
                    std::sort(matches[0].begin(), matches[0].end());
                    check.expect(matches[0] == decomposition,
                                 space_tag(o, c, n) + ": decomposition of " +
                                     run_literal(a.space->at(x)) +
                                     " differs from the unique irredundant one");
                }
            }
        }
    return {9, "birkhoff-roundtrip", check.failures.empty(), false,
            std::to_string(decomposed) + " elements decomposed and re-joined uniquely",
            check.failures};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestConfig& config, std::ostream& out,
                                            const std::vector<int>& only) {
    AnalysisCache cache{config.budget, config.workers, {}};
    std::vector<CriterionResult> results;
    auto wants = [&](int id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    auto run = [&](int id, const std::string& name, auto&& fn) {
        if (!wants(id)) return;
        CriterionResult result;
        try {
            result = fn();
        } catch (const BudgetError& e) {
            result.id = id;
            result.name = name;
            result.pass = false;
            result.budget_exceeded = true;
            result.summary = std::string("budget exceeded: ") + e.what();
        }
        results.push_back(result);
        const CriterionResult& r = results.back();
        out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " — " << r.summary
            << "\n";
        for (const std::string& f : r.failures) out << "       - " << f << "\n";
    };
    run(1, "structure-verdicts", [&] { return criterion_structure(cache); });
    run(2, "join-irreducible-counts", [&] { return criterion_irreducibles(cache); });
    run(3, "closed-form-oracles", [&] { return criterion_closed_forms(cache); });
    run(4, "counterexample-reproduction", [&] { return criterion_counterexamples(cache); });
    run(5, "measure-classification", [&] { return criterion_classification(cache); });
    run(6, "rbp-threshold", [&] { return criterion_rbp_threshold(cache); });
    run(7, "metric-axioms", [&] { return criterion_metric_axioms(cache, config.seed); });
    run(8, "swap-pseudometric", [&] { return criterion_swap_pseudometric(cache); });
    run(9, "birkhoff-roundtrip", [&] { return criterion_birkhoff(cache); });
    return results;
}

int acceptance_exit_code(const std::vector<CriterionResult>& results) {
    bool budget = false, failed = false;
    for (const auto& r : results) {
        budget = budget || r.budget_exceeded;
        failed = failed || !r.pass;
    }
    if (budget) return 3;
    if (failed) return 4;
    return 0;
}

}  // namespace runlat
