#include "runlat/valuation.hpp"

#include <algorithm>
#include <queue>

#include "parallel.hpp"

namespace runlat {

WeightAssignment WeightAssignment::constant(Rational k) {
    if (k <= 0) throw UsageError("join-irreducible weights must be strictly positive");
    WeightAssignment w;
    w.constant_ = std::move(k);
    return w;
}

WeightAssignment WeightAssignment::of(std::map<int, Rational> weights) {
    WeightAssignment w;
    w.weights_ = std::move(weights);
    return w;
}

const Rational& WeightAssignment::at(int element) const {
    if (constant_) return *constant_;
    const auto it = weights_.find(element);
    if (it == weights_.end())
        throw UsageError("missing weight for join-irreducible element " + std::to_string(element));
    if (it->second <= 0) throw UsageError("join-irreducible weights must be strictly positive");
    return it->second;
}

Valuation valuation_from_weights(const LatticeTables& tables, const StructureVerdict& verdict,
                                 const WeightAssignment& weights) {
    if (!verdict.is_distributive)
        throw UsageError("valuations from join-irreducible weights need a distributive lattice");
    const FinitePoset& poset = tables.poset();
    Valuation v;
    v.tables_ = &tables;
    v.values_.assign(static_cast<std::size_t>(poset.size()), Rational(0));
    for (int j : verdict.join_irreducibles) {
        const Rational& w = weights.at(j);
        for (int x = 0; x < poset.size(); ++x)
            if (poset.leq(j, x)) v.values_[static_cast<std::size_t>(x)] += w;
    }
    return v;
}

Rational Valuation::distance(int x, int y) const {
    const int m = tables_->meet(x, y);
    const int j = tables_->join(x, y);
    if (m == LatticeTables::kMissing || j == LatticeTables::kMissing)
        throw UsageError("distance undefined: pair has no meet/join");
    return value(j) - value(m);
}

namespace {

using Witness = std::optional<std::pair<int, int>>;

void keep_min(Witness& slot, const Witness& candidate) {
    if (candidate && (!slot || *candidate < *slot)) slot = candidate;
}

// Shared sweep for exact and tolerant value types. Workers scan disjoint
// i-ranges and report candidate witnesses; the reduction keeps the smallest
// pair, so results do not depend on the worker count.
template <typename T, typename Less, typename LawEq>
ValuationCheck check_impl(const LatticeTables& tables, std::span<const T> values, Less less,
                          LawEq law_eq, double tolerance, int workers) {
    const FinitePoset& poset = tables.poset();
    const int n = poset.size();
    ValuationCheck out;
    out.tolerance_used = tolerance;

    struct Chunk {
        Witness law, isotone, positive;
        long long checked = 0;
        long long skipped = 0;
    };
    std::vector<Chunk> chunks(static_cast<std::size_t>(std::max(1, workers)));
    detail::for_chunks(n, workers, [&](int w, int begin, int end) {
        Chunk& chunk = chunks[static_cast<std::size_t>(w)];
        for (int i = begin; i < end; ++i) {
            for (int j = i; j < n; ++j) {
                const int m = tables.meet(i, j);
                const int v = tables.join(i, j);
                if (m == LatticeTables::kMissing || v == LatticeTables::kMissing) {
                    ++chunk.skipped;
                    continue;
                }
                ++chunk.checked;
                if (!chunk.law &&
                    !law_eq(values[static_cast<std::size_t>(i)] +
                                values[static_cast<std::size_t>(j)],
                            values[static_cast<std::size_t>(m)] +
                                values[static_cast<std::size_t>(v)]))
                    chunk.law = {{i, j}};
            }
            for (int j = 0; j < n; ++j) {
                if (!poset.leq(i, j)) continue;
                if (!chunk.isotone && less(values[static_cast<std::size_t>(j)],
                                           values[static_cast<std::size_t>(i)]))
                    chunk.isotone = {{i, j}};
                if (!chunk.positive && i != j &&
                    !less(values[static_cast<std::size_t>(i)],
                          values[static_cast<std::size_t>(j)]))
                    chunk.positive = {{i, j}};
            }
        }
    });
    for (const Chunk& chunk : chunks) {
        keep_min(out.law_witness, chunk.law);
        keep_min(out.isotone_witness, chunk.isotone);
        keep_min(out.positive_witness, chunk.positive);
        out.law_pairs_checked += chunk.checked;
        out.law_pairs_skipped += chunk.skipped;
    }
    out.is_valuation = !out.law_witness.has_value();
    out.is_isotone = !out.isotone_witness.has_value();
    out.is_positive = !out.positive_witness.has_value();
    return out;
}

}  // namespace

ValuationCheck check_valuation(const LatticeTables& tables, std::span<const Rational> values,
                               int workers) {
    return check_impl<Rational>(
        tables, values, [](const Rational& a, const Rational& b) { return a < b; },
        [](const Rational& a, const Rational& b) { return a == b; }, 0.0, workers);
}

ValuationCheck check_valuation(const LatticeTables& tables, std::span<const double> values,
                               double tolerance, int workers) {
    return check_impl<double>(
        tables, values, [=](double a, double b) { return a < b - tolerance; },
        [=](double a, double b) { return std::abs(a - b) <= tolerance; }, tolerance, workers);
}

Rational shortest_path_distance(const LatticeTables& tables, std::span<const Rational> values,
                                int from, int to) {
    const FinitePoset& poset = tables.poset();
    const int n = poset.size();
    std::vector<std::optional<Rational>> dist(static_cast<std::size_t>(n));
    using Entry = std::pair<Rational, int>;
    auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
    dist[static_cast<std::size_t>(from)] = Rational(0);
    queue.emplace(Rational(0), from);
    auto edge = [&](int a, int b) {
        Rational d = values[static_cast<std::size_t>(b)] - values[static_cast<std::size_t>(a)];
        return d < 0 ? Rational(-d) : d;
    };
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (dist[static_cast<std::size_t>(u)] && *dist[static_cast<std::size_t>(u)] < d) continue;
        if (u == to) return d;
        auto relax = [&](int v) {
            Rational nd = d + edge(u, v);
            auto& slot = dist[static_cast<std::size_t>(v)];
            if (!slot || nd < *slot) {
                slot = nd;
                queue.emplace(std::move(nd), v);
            }
        };
        for (int v : poset.upper_covers()[static_cast<std::size_t>(u)]) relax(v);
        for (int v : poset.lower_covers()[static_cast<std::size_t>(u)]) relax(v);
    }
    throw UsageError("cover graph is disconnected");  // cannot happen for lattices
}

Rational chain_closed_form_set(const JudgedRun& run, const RelevanceScale& scale,
                               const Rational& k) {
    if (run.kind != RunKind::SetBased)
        throw UsageError("chain_closed_form_set needs a set-based run");
    const int n = run.length();
    Int total = 0;
    for (int j = 1; j <= n; ++j) {
        scale.gain(run[j - 1]);  // range check against the scale
        total += binomial(static_cast<unsigned>(run[j - 1] + n - j),
                          static_cast<unsigned>(n - j + 1));
    }
    return k * Rational(total);
}

Rational chain_closed_form_rank(const JudgedRun& run, const RelevanceScale& scale,
                                const Rational& k) {
    if (run.kind != RunKind::RankBased)
        throw UsageError("chain_closed_form_rank needs a rank-based run");
    const int base = scale.c() + 1;
    Int total = 0;
    for (int d : run.degrees) {
        scale.gain(d);  // range check against the scale
        total = total * base + d;
    }
    return k * Rational(total);
}

Rational replacement_closed_form(const JudgedRun& run, const Rational& k) {
    Int total = 0;
    for (int d : run.degrees) total += d;
    return k * Rational(total);
}

}  // namespace runlat
