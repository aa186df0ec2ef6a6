#include "runlat/run_space.hpp"

#include <algorithm>

namespace runlat {

std::string run_kind_name(RunKind kind) {
    return kind == RunKind::SetBased ? "set" : "rank";
}

std::optional<RunKind> run_kind_from_name(const std::string& name) {
    if (name == "set") return RunKind::SetBased;
    if (name == "rank") return RunKind::RankBased;
    return std::nullopt;
}

RelevanceScale RelevanceScale::indicator(int c) {
    if (c < 1) throw UsageError("relevance scale needs c >= 1");
    std::vector<Rational> gains;
    gains.reserve(static_cast<std::size_t>(c) + 1);
    for (int j = 0; j <= c; ++j) gains.emplace_back(j);
    return RelevanceScale(std::move(gains));
}

RelevanceScale RelevanceScale::with_gains(std::vector<Rational> gains) {
    if (gains.size() < 2) throw UsageError("relevance scale needs c >= 1 (at least two gains)");
    if (gains.front() != 0) throw UsageError("gain of a_0 must be 0");
    for (std::size_t i = 0; i + 1 < gains.size(); ++i)
        if (!(gains[i] < gains[i + 1]))
            throw UsageError("gains must be strictly increasing");
    return RelevanceScale(std::move(gains));
}

const Rational& RelevanceScale::gain(int degree) const {
    if (degree < 0 || degree > c())
        throw UsageError("degree " + std::to_string(degree) + " out of range 0.." + std::to_string(c()));
    return gains_[static_cast<std::size_t>(degree)];
}

bool RelevanceScale::is_indicator() const {
    for (int j = 0; j <= c(); ++j)
        if (gains_[static_cast<std::size_t>(j)] != j) return false;
    return true;
}

RelevanceScale make_scale(int c, const std::optional<std::vector<Rational>>& gains) {
    if (!gains) return RelevanceScale::indicator(c);
    if (static_cast<int>(gains->size()) != c + 1)
        throw UsageError("expected " + std::to_string(c + 1) + " gains, got " +
                         std::to_string(gains->size()));
    return RelevanceScale::with_gains(*gains);
}

namespace {

void check_degrees(const std::vector<int>& degrees, const RelevanceScale& scale) {
    for (int d : degrees)
        if (d < 0 || d > scale.c())
            throw UsageError("degree " + std::to_string(d) + " out of range 0.." +
                             std::to_string(scale.c()));
}

}  // namespace

JudgedRun make_rank_run(std::vector<int> degrees, const RelevanceScale& scale) {
    check_degrees(degrees, scale);
    return JudgedRun{RunKind::RankBased, std::move(degrees)};
}

JudgedRun canonicalize_set_run(std::vector<int> degrees, const RelevanceScale& scale) {
    check_degrees(degrees, scale);
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    return JudgedRun{RunKind::SetBased, std::move(degrees)};
}

std::string run_literal(const JudgedRun& run) {
    std::string out;
    out.reserve(run.degrees.size());
    for (int d : run.degrees) {
        if (d > 9) throw UsageError("run literals support degrees 0..9 only");
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

JudgedRun parse_run_literal(const std::string& text, const RelevanceScale& scale, RunKind kind) {
    std::vector<int> degrees;
    degrees.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw UsageError("run literal must be degree digits, got '" + text + "'");
        degrees.push_back(ch - '0');
    }
    if (kind == RunKind::SetBased) return canonicalize_set_run(std::move(degrees), scale);
    return make_rank_run(std::move(degrees), scale);
}

Rational gain_sum(const JudgedRun& run, const RelevanceScale& scale) {
    Rational total = 0;
    for (int d : run.degrees) total += scale.gain(d);
    return total;
}

RunSpace::RunSpace(RelevanceScale scale, int length, RunKind kind)
    : scale_(std::move(scale)), length_(length), kind_(kind) {
    if (length < 1) throw UsageError("run length N must be >= 1");
    const int c = scale_.c();
    // Odometer over degree sequences in ascending lexicographic order.
    // Set-based spaces enumerate only canonical (non-increasing) sequences.
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    const bool set_based = kind == RunKind::SetBased;
    while (true) {
        elements_.push_back(JudgedRun{kind, cur});
        int pos = length - 1;
        while (pos >= 0) {
            const int cap = (set_based && pos > 0) ? cur[static_cast<std::size_t>(pos - 1)] : c;
            if (cur[static_cast<std::size_t>(pos)] < cap) break;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
        std::fill(cur.begin() + pos + 1, cur.end(), 0);
    }
    for (int i = 0; i < size(); ++i) index_.emplace(elements_[static_cast<std::size_t>(i)].degrees, i);
}

int RunSpace::index_of(const JudgedRun& run) const {
    const auto it = index_.find(run.degrees);
    if (it == index_.end() || run.kind != kind_)
        throw UsageError("run does not belong to this space");
    return it->second;
}

Int RunSpace::count(int c, int length, RunKind kind) {
    if (kind == RunKind::RankBased) {
        Int total = 1;
        for (int i = 0; i < length; ++i) total *= c + 1;
        return total;
    }
    return binomial(static_cast<unsigned>(length + c), static_cast<unsigned>(c));
}

RunSpace enumerate_runs(const RelevanceScale& scale, int length, RunKind kind) {
    return RunSpace(scale, length, kind);
}

}  // namespace runlat
