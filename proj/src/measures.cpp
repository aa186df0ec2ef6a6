#include "runlat/measures.hpp"

#include <cmath>

namespace runlat {

std::string measure_kind_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::GP: return "gp";
        case MeasureKind::GR: return "gr";
        case MeasureKind::GRBP: return "grbp";
        case MeasureKind::DCG: return "dcg";
    }
    throw std::logic_error("unreachable");
}

std::optional<MeasureKind> measure_kind_from_name(const std::string& name) {
    for (MeasureKind k : {MeasureKind::GP, MeasureKind::GR, MeasureKind::GRBP, MeasureKind::DCG})
        if (measure_kind_name(k) == name) return k;
    return std::nullopt;
}

MeasureSpec MeasureSpec::gp(RelevanceScale scale) {
    return MeasureSpec(MeasureKind::GP, std::move(scale));
}

MeasureSpec MeasureSpec::gr(RelevanceScale scale, Rational recall_base) {
    if (recall_base <= 0) throw UsageError("recall base RB must be positive");
    MeasureSpec spec(MeasureKind::GR, std::move(scale));
    spec.recall_base_ = std::move(recall_base);
    return spec;
}

MeasureSpec MeasureSpec::grbp(RelevanceScale scale, Rational persistence) {
    if (persistence <= 0 || persistence >= 1)
        throw UsageError("gRBP persistence p must satisfy 0 < p < 1");
    MeasureSpec spec(MeasureKind::GRBP, std::move(scale));
    spec.persistence_ = std::move(persistence);
    return spec;
}

MeasureSpec MeasureSpec::dcg(RelevanceScale scale, int log_base) {
    if (log_base < 2) throw UsageError("DCG log base b must be >= 2");
    MeasureSpec spec(MeasureKind::DCG, std::move(scale));
    spec.log_base_ = log_base;
    return spec;
}

std::string MeasureSpec::display_name() const {
    switch (kind_) {
        case MeasureKind::GP: return "gp";
        case MeasureKind::GR: return "gr(rb=" + format_rational(*recall_base_) + ")";
        case MeasureKind::GRBP: return "grbp(p=" + format_rational(*persistence_) + ")";
        case MeasureKind::DCG: return "dcg(b=" + std::to_string(*log_base_) + ")";
    }
    throw std::logic_error("unreachable");
}

namespace {

void check_run_kind(const MeasureSpec& spec, const JudgedRun& run) {
    if ((spec.kind() == MeasureKind::GRBP || spec.kind() == MeasureKind::DCG) &&
        run.kind != RunKind::RankBased)
        throw UsageError(measure_kind_name(spec.kind()) + " is defined on rank-based runs only");
}

}  // namespace

Rational eval_exact(const MeasureSpec& spec, const JudgedRun& run) {
    check_run_kind(spec, run);
    const RelevanceScale& scale = spec.scale();
    switch (spec.kind()) {
        case MeasureKind::GP:
            return gain_sum(run, scale) / (Rational(run.length()) * scale.top_gain());
        case MeasureKind::GR:
            return gain_sum(run, scale) / (spec.recall_base() * scale.top_gain());
        case MeasureKind::GRBP: {
            const Rational& p = spec.persistence();
            Rational weighted = 0;
            Rational coef = 1;
            for (int d : run.degrees) {
                weighted += coef * scale.gain(d);
                coef *= p;
            }
            return (1 - p) / scale.top_gain() * weighted;
        }
        case MeasureKind::DCG:
            throw UsageError("DCG has no exact rational value; use eval_float");
    }
    throw std::logic_error("unreachable");
}

double eval_float(const MeasureSpec& spec, const JudgedRun& run) {
    if (spec.kind() != MeasureKind::DCG) return to_double(eval_exact(spec, run));
    check_run_kind(spec, run);
    const double log_base = std::log(spec.log_base());
    double total = 0.0;
    for (int i = 0; i < run.length(); ++i) {
        const double discount = std::max(1.0, std::log(i + 1) / log_base);
        total += to_double(spec.scale().gain(run[i])) / discount;
    }
    return total;
}

namespace {

std::pair<std::string, std::string> literal_pair(const RunSpace& space,
                                                 const std::pair<int, int>& pair) {
    return {run_literal(space.at(pair.first)), run_literal(space.at(pair.second))};
}

}  // namespace

ClassificationReport classify(const MeasureSpec& spec, const SpaceAnalysis& analysis,
                              int workers) {
    const RunSpace& space = *analysis.space;
    if (spec.scale().gains() != space.scale().gains())
        throw UsageError("measure scale does not match the analyzed space");
    const int n = space.size();
    ValuationCheck check;
    if (spec.exact()) {
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(n));
        for (const JudgedRun& run : space.elements()) values.push_back(eval_exact(spec, run));
        check = check_valuation(*analysis.tables, values, workers);
    } else {
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(n));
        for (const JudgedRun& run : space.elements()) values.push_back(eval_float(spec, run));
        check = check_valuation(*analysis.tables, values, kDcgLawTolerance, workers);
    }

    ClassificationReport report;
    report.measure = spec.display_name();
    report.ordering = analysis.poset->ordering();
    report.c = space.scale().c();
    report.n = space.length();
    report.space_is_lattice = analysis.verdict.is_lattice;
    report.is_valuation = check.is_valuation;
    report.is_isotone = check.is_isotone;
    report.is_positive = check.is_positive;
    if (check.law_witness) report.law_witness = literal_pair(space, *check.law_witness);
    if (check.isotone_witness) report.isotone_witness = literal_pair(space, *check.isotone_witness);
    if (check.positive_witness)
        report.positive_witness = literal_pair(space, *check.positive_witness);
    report.law_pairs_checked = check.law_pairs_checked;
    report.law_pairs_skipped = check.law_pairs_skipped;
    report.tolerance_used = check.tolerance_used;
    if (spec.kind() == MeasureKind::GRBP)
        report.threshold_note = "isotone on proj-repl-rank iff p <= " +
                                format_rational(rbp_threshold(spec.scale()));
    if (!analysis.verdict.is_lattice)
        report.note = "space is not a lattice; valuation law checked on the " +
                      std::to_string(check.law_pairs_checked) +
                      " pairs whose meet and join exist (" +
                      std::to_string(check.law_pairs_skipped) + " skipped)";
    return report;
}

ClassificationReport classify(const MeasureSpec& spec, Ordering ordering, int length,
                              std::size_t budget, int workers) {
    return classify(spec, analyze_space(spec.scale(), length, ordering, budget, workers), workers);
}

Rational rbp_threshold(const RelevanceScale& scale) {
    Rational min_gap = scale.gain(1) - scale.gain(0);
    for (int j = 2; j <= scale.c(); ++j)
        min_gap = std::min(min_gap, Rational(scale.gain(j) - scale.gain(j - 1)));
    const Rational g = min_gap / scale.top_gain();
    return Rational(g / (g + 1));
}

std::vector<std::pair<Rational, bool>> verify_rbp_threshold(const RelevanceScale& scale,
                                                            int length,
                                                            const std::vector<Rational>& probes,
                                                            std::size_t budget) {
    const SpaceAnalysis analysis =
        analyze_space(scale, length, Ordering::ProjReplRank, budget);
    std::vector<std::pair<Rational, bool>> table;
    table.reserve(probes.size());
    for (const Rational& p : probes) {
        const auto report = classify(MeasureSpec::grbp(scale, p), analysis);
        table.emplace_back(p, report.is_isotone);
    }
    return table;
}

namespace {

template <typename T, typename Less, typename Eq>
std::optional<std::pair<int, int>> first_violation(const SpaceAnalysis& analysis,
                                                   const std::vector<T>& values,
                                                   MeasureProperty property, Less less, Eq eq) {
    const FinitePoset& poset = *analysis.poset;
    const LatticeTables& tables = *analysis.tables;
    const int n = poset.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            switch (property) {
                case MeasureProperty::ValuationLaw: {
                    if (j < i) continue;
                    const int m = tables.meet(i, j);
                    const int v = tables.join(i, j);
                    if (m == LatticeTables::kMissing || v == LatticeTables::kMissing) continue;
                    if (!eq(values[static_cast<std::size_t>(i)] + values[static_cast<std::size_t>(j)],
                            values[static_cast<std::size_t>(m)] +
                                values[static_cast<std::size_t>(v)]))
                        return std::pair{i, j};
                    break;
                }
                case MeasureProperty::Isotone:
                    if (poset.leq(i, j) &&
                        less(values[static_cast<std::size_t>(j)], values[static_cast<std::size_t>(i)]))
                        return std::pair{i, j};
                    break;
                case MeasureProperty::Positive:
                    if (i != j && poset.leq(i, j) &&
                        !less(values[static_cast<std::size_t>(i)],
                              values[static_cast<std::size_t>(j)]))
                        return std::pair{i, j};
                    break;
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<JudgedRun, JudgedRun>> find_counterexample(const MeasureSpec& spec,
                                                                   Ordering ordering, int length,
                                                                   MeasureProperty property,
                                                                   std::size_t budget) {
    const SpaceAnalysis analysis = analyze_space(spec.scale(), length, ordering, budget);
    const RunSpace& space = *analysis.space;
    std::optional<std::pair<int, int>> hit;
    if (spec.exact()) {
        std::vector<Rational> values;
        for (const JudgedRun& run : space.elements()) values.push_back(eval_exact(spec, run));
        hit = first_violation(analysis, values, property,
                              [](const Rational& a, const Rational& b) { return a < b; },
                              [](const Rational& a, const Rational& b) { return a == b; });
    } else {
        std::vector<double> values;
        for (const JudgedRun& run : space.elements()) values.push_back(eval_float(spec, run));
        const double tol = kDcgLawTolerance;
        hit = first_violation(analysis, values, property,
                              [=](double a, double b) { return a < b - tol; },
                              [=](double a, double b) { return std::abs(a - b) <= tol; });
    }
    if (!hit) return std::nullopt;
    return std::pair{space.at(hit->first), space.at(hit->second)};
}

std::optional<std::pair<JudgedRun, JudgedRun>> find_counterexample(
    const SpaceAnalysis& analysis, std::span<const Rational> scores, MeasureProperty property) {
    if (static_cast<int>(scores.size()) != analysis.space->size())
        throw UsageError("score table size does not match the space");
    std::vector<Rational> values(scores.begin(), scores.end());
    const auto hit = first_violation(analysis, values, property,
                                     [](const Rational& a, const Rational& b) { return a < b; },
                                     [](const Rational& a, const Rational& b) { return a == b; });
    if (!hit) return std::nullopt;
    return std::pair{analysis.space->at(hit->first), analysis.space->at(hit->second)};
}

}  // namespace runlat
