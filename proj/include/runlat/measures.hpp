#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "runlat/poset.hpp"
#include "runlat/rational.hpp"
#include "runlat/run_space.hpp"
#include "runlat/valuation.hpp"

namespace runlat {

enum class MeasureKind { GP, GR, GRBP, DCG };

std::string measure_kind_name(MeasureKind kind);
std::optional<MeasureKind> measure_kind_from_name(const std::string& name);

// An evaluation measure with its parameters. gP and gR accept both run
// kinds; gRBP and DCG are rank-based only. gP, gR and gRBP evaluate to exact
// rationals, DCG to a double (log-base discounts are irrational).
class MeasureSpec {
public:
    static MeasureSpec gp(RelevanceScale scale);
    static MeasureSpec gr(RelevanceScale scale, Rational recall_base);
    static MeasureSpec grbp(RelevanceScale scale, Rational persistence);
    static MeasureSpec dcg(RelevanceScale scale, int log_base);

    MeasureKind kind() const { return kind_; }
    const RelevanceScale& scale() const { return scale_; }
    const Rational& recall_base() const { return *recall_base_; }
    const Rational& persistence() const { return *persistence_; }
    int log_base() const { return *log_base_; }
    bool exact() const { return kind_ != MeasureKind::DCG; }
    std::string display_name() const;  // e.g. "grbp(p=1/2)"

private:
    MeasureSpec(MeasureKind kind, RelevanceScale scale) : kind_(kind), scale_(std::move(scale)) {}
    MeasureKind kind_;
    RelevanceScale scale_;
    std::optional<Rational> recall_base_;
    std::optional<Rational> persistence_;
    std::optional<int> log_base_;
};

// Exact value for gP, gR, gRBP; throws for DCG.
Rational eval_exact(const MeasureSpec& spec, const JudgedRun& run);
// Value as a double for any measure.
double eval_float(const MeasureSpec& spec, const JudgedRun& run);

inline constexpr double kDcgLawTolerance = 1e-9;

// Verdicts of one measure on one ordering, from exhaustive sweeps over the
// whole space. Witness pairs carry run literals. When the space is not a
// lattice, the valuation law covers the pairs whose meet and join exist and
// `note` says so.
struct ClassificationReport {
    std::string measure;
    Ordering ordering = Ordering::ReplRank;
    int c = 0;
    int n = 0;
    bool space_is_lattice = false;
    bool is_valuation = false;
    bool is_isotone = false;
    bool is_positive = false;
    std::optional<std::pair<std::string, std::string>> law_witness;
    std::optional<std::pair<std::string, std::string>> isotone_witness;
    std::optional<std::pair<std::string, std::string>> positive_witness;
    long long law_pairs_checked = 0;
    long long law_pairs_skipped = 0;
    double tolerance_used = 0.0;
    std::optional<std::string> threshold_note;  // gRBP only
    std::optional<std::string> note;
};

ClassificationReport classify(const MeasureSpec& spec, Ordering ordering, int length,
                              std::size_t budget = kDefaultBudget, int workers = 1);

// Same sweep against a prebuilt analysis (avoids rebuilding tables).
ClassificationReport classify(const MeasureSpec& spec, const SpaceAnalysis& analysis,
                              int workers = 1);

// G / (G + 1) where G is the normalized smallest gain gap
// min_j (g(a_j) - g(a_{j-1})) / g(a_c). gRBP is isotone on proj-repl-rank
// exactly for p at or below this threshold.
Rational rbp_threshold(const RelevanceScale& scale);

// Runs the gRBP isotonicity sweep on proj-repl-rank for each probe p.
std::vector<std::pair<Rational, bool>> verify_rbp_threshold(const RelevanceScale& scale,
                                                            int length,
                                                            const std::vector<Rational>& probes,
                                                            std::size_t budget = kDefaultBudget);

enum class MeasureProperty { ValuationLaw, Isotone, Positive };

// Smallest (canonical scan order) pair violating the property, or nullopt.
std::optional<std::pair<JudgedRun, JudgedRun>> find_counterexample(
    const MeasureSpec& spec, Ordering ordering, int length, MeasureProperty property,
    std::size_t budget = kDefaultBudget);

// Same search for a user-supplied score table indexed like space.elements().
std::optional<std::pair<JudgedRun, JudgedRun>> find_counterexample(
    const SpaceAnalysis& analysis, std::span<const Rational> scores, MeasureProperty property);

}  // namespace runlat
