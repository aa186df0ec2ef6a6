#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "runlat/rational.hpp"

namespace runlat {

enum class RunKind { SetBased, RankBased };

std::string run_kind_name(RunKind kind);
std::optional<RunKind> run_kind_from_name(const std::string& name);

// Ordered relevance degrees a_0 .. a_c plus a gain function. Degrees are
// stored as integer indices; gains are exact rationals with gain(0) = 0 and
// gain strictly increasing. Omitting gains yields the indicator gain
// g(j) = j.
class RelevanceScale {
public:
    static RelevanceScale indicator(int c);
    static RelevanceScale with_gains(std::vector<Rational> gains);

    int c() const { return static_cast<int>(gains_.size()) - 1; }
    const Rational& gain(int degree) const;
    const Rational& top_gain() const { return gains_.back(); }
    bool is_indicator() const;
    const std::vector<Rational>& gains() const { return gains_; }

private:
    explicit RelevanceScale(std::vector<Rational> gains) : gains_(std::move(gains)) {}
    std::vector<Rational> gains_;
};

// make_scale(c) -> indicator scale; make_scale(c, gains) validates length,
// gains[0] = 0 and strict monotonicity.
RelevanceScale make_scale(int c, const std::optional<std::vector<Rational>>& gains = std::nullopt);

// A judged run of length N. Set-based runs are kept in canonical form:
// degrees sorted non-increasing.
struct JudgedRun {
    RunKind kind = RunKind::RankBased;
    std::vector<int> degrees;

    int length() const { return static_cast<int>(degrees.size()); }
    int operator[](int i) const { return degrees[static_cast<std::size_t>(i)]; }
    bool operator==(const JudgedRun&) const = default;
};

JudgedRun make_rank_run(std::vector<int> degrees, const RelevanceScale& scale);

// Sorts into canonical non-increasing form; idempotent and invariant under
// permutation of the input.
JudgedRun canonicalize_set_run(std::vector<int> degrees, const RelevanceScale& scale);

// Degree digits, most significant rank first ("2110"). Only defined for
// c <= 9.
std::string run_literal(const JudgedRun& run);
JudgedRun parse_run_literal(const std::string& text, const RelevanceScale& scale, RunKind kind);

Rational gain_sum(const JudgedRun& run, const RelevanceScale& scale);

// All judged runs of a given length in a fixed deterministic order:
// lexicographic on the degree sequence (canonical form for set-based runs).
// This order is a linear extension of every ordering in order.hpp.
class RunSpace {
public:
    RunSpace(RelevanceScale scale, int length, RunKind kind);

    const RelevanceScale& scale() const { return scale_; }
    int length() const { return length_; }
    RunKind kind() const { return kind_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const JudgedRun& at(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<JudgedRun>& elements() const { return elements_; }
    int index_of(const JudgedRun& run) const;

    // (c+1)^N for rank-based, C(N+c, c) for set-based.
    static Int count(int c, int length, RunKind kind);

private:
    RelevanceScale scale_;
    int length_;
    RunKind kind_;
    std::vector<JudgedRun> elements_;
    std::map<std::vector<int>, int> index_;
};

RunSpace enumerate_runs(const RelevanceScale& scale, int length, RunKind kind);

}  // namespace runlat
