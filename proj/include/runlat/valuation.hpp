#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "runlat/poset.hpp"
#include "runlat/rational.hpp"

namespace runlat {

// Strictly positive weights on the join-irreducible elements, keyed by
// element index. constant(k) stands for "every join-irreducible weighs k".
class WeightAssignment {
public:
    static WeightAssignment constant(Rational k);
    static WeightAssignment of(std::map<int, Rational> weights);

    // Weight of join-irreducible element j; throws if missing or <= 0.
    const Rational& at(int element) const;
    bool is_constant() const { return constant_.has_value(); }

private:
    std::optional<Rational> constant_;
    std::map<int, Rational> weights_;
};

// v(x) = sum of w(j) over join-irreducibles j below x. Only defined on
// distributive lattices, where any such v is a positive valuation.
class Valuation {
public:
    const LatticeTables& tables() const { return *tables_; }
    const Rational& value(int element) const { return values_[static_cast<std::size_t>(element)]; }
    const std::vector<Rational>& values() const { return values_; }

    // d_v(x, y) = v(x v y) - v(x ^ y) = v(x) + v(y) - 2 v(x ^ y).
    Rational distance(int x, int y) const;

private:
    friend Valuation valuation_from_weights(const LatticeTables&, const StructureVerdict&,
                                            const WeightAssignment&);
    const LatticeTables* tables_ = nullptr;
    std::vector<Rational> values_;
};

Valuation valuation_from_weights(const LatticeTables& tables, const StructureVerdict& verdict,
                                 const WeightAssignment& weights);

// Exhaustive check of the valuation law, isotonicity and positivity for an
// arbitrary element -> value map. On incomplete tables the law is checked
// over the pairs whose meet and join both exist. Witnesses are the first
// failing pairs in canonical scan order.
struct ValuationCheck {
    bool is_valuation = false;
    bool is_isotone = false;
    bool is_positive = false;
    std::optional<std::pair<int, int>> law_witness;
    std::optional<std::pair<int, int>> isotone_witness;
    std::optional<std::pair<int, int>> positive_witness;
    long long law_pairs_checked = 0;
    long long law_pairs_skipped = 0;
    double tolerance_used = 0.0;
};

ValuationCheck check_valuation(const LatticeTables& tables, std::span<const Rational> values,
                               int workers = 1);
ValuationCheck check_valuation(const LatticeTables& tables, std::span<const double> values,
                               double tolerance, int workers = 1);

// Independent oracle for Valuation::distance: Dijkstra on the cover graph
// with edge weights |v(y) - v(x)|.
Rational shortest_path_distance(const LatticeTables& tables, std::span<const Rational> values,
                                int from, int to);

// Chain position of a set-based run under proj-repl-set, times k:
// k * sum_j C(delta(r_j) + N - j, N - j + 1).
Rational chain_closed_form_set(const JudgedRun& run, const RelevanceScale& scale,
                               const Rational& k);

// Chain position of a rank-based run under proj-repl-rank, times k: the
// base-(c+1) value of the degree string, rank 1 most significant.
Rational chain_closed_form_rank(const JudgedRun& run, const RelevanceScale& scale,
                                const Rational& k);

// k * sum of degree indices; equals k * |J_run| under either replacement
// ordering.
Rational replacement_closed_form(const JudgedRun& run, const Rational& k);

}  // namespace runlat
