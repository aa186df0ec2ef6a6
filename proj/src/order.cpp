#include "runlat/order.hpp"

#include <algorithm>
#include <iostream>

namespace runlat {

RunKind run_kind(Ordering ordering) {
    switch (ordering) {
        case Ordering::ProjReplSet:
        case Ordering::ReplSet:
            return RunKind::SetBased;
        default:
            return RunKind::RankBased;
    }
}

std::string ordering_name(Ordering ordering) {
    switch (ordering) {
        case Ordering::ProjReplSet: return "proj-repl-set";
        case Ordering::ReplSet: return "repl-set";
        case Ordering::ProjReplRank: return "proj-repl-rank";
        case Ordering::ReplRank: return "repl-rank";
        case Ordering::SwapReplRank: return "swap-repl-rank";
    }
    throw std::logic_error("unreachable");
}

std::optional<Ordering> ordering_from_name(const std::string& name) {
    for (Ordering o : kAllOrderings)
        if (ordering_name(o) == name) return o;
    return std::nullopt;
}

namespace {

void check_pair(Ordering ordering, const JudgedRun& r, const JudgedRun& s) {
    const RunKind kind = run_kind(ordering);
    if (r.kind != kind || s.kind != kind)
        throw UsageError("run kind does not match ordering " + ordering_name(ordering));
    if (r.length() != s.length())
        throw UsageError("runs must have the same length");
}

std::vector<int> degree_multiplicities(const JudgedRun& r, int c) {
    std::vector<int> counts(static_cast<std::size_t>(c) + 1, 0);
    for (int d : r.degrees) ++counts[static_cast<std::size_t>(d)];
    return counts;
}

bool leq_proj_repl_set(const JudgedRun& r, const JudgedRun& s, int c) {
    if (r == s) return true;
    const auto nr = degree_multiplicities(r, c);
    const auto ns = degree_multiplicities(s, c);
    for (int j = c; j >= 0; --j)
        if (nr[static_cast<std::size_t>(j)] != ns[static_cast<std::size_t>(j)])
            return nr[static_cast<std::size_t>(j)] < ns[static_cast<std::size_t>(j)];
    return true;  // identical multisets
}

bool leq_repl_set(const JudgedRun& r, const JudgedRun& s, int c) {
    for (int j = 1; j <= c; ++j) {
        int cr = 0, cs = 0;
        for (int d : r.degrees) cr += d >= j;
        for (int d : s.degrees) cs += d >= j;
        if (cr > cs) return false;
    }
    return true;
}

bool leq_proj_repl_rank(const JudgedRun& r, const JudgedRun& s) {
    for (int k = 0; k < r.length(); ++k)
        if (r[k] != s[k]) return r[k] < s[k];
    return true;
}

bool leq_repl_rank(const JudgedRun& r, const JudgedRun& s) {
    for (int k = 0; k < r.length(); ++k)
        if (r[k] > s[k]) return false;
    return true;
}

bool leq_swap_repl_rank(const JudgedRun& r, const JudgedRun& s, int c) {
    // Prefix counts per threshold, updated incrementally over k.
    std::vector<int> cr(static_cast<std::size_t>(c) + 1, 0);
    std::vector<int> cs(static_cast<std::size_t>(c) + 1, 0);
    for (int k = 0; k < r.length(); ++k) {
        for (int j = 1; j <= r[k]; ++j) ++cr[static_cast<std::size_t>(j)];
        for (int j = 1; j <= s[k]; ++j) ++cs[static_cast<std::size_t>(j)];
        for (int j = 1; j <= c; ++j)
            if (cr[static_cast<std::size_t>(j)] > cs[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

// Next element in the canonical enumeration order, or nullopt at the top.
std::optional<JudgedRun> next_run(const JudgedRun& r, int c) {
    std::vector<int> cur = r.degrees;
    const bool set_based = r.kind == RunKind::SetBased;
    int pos = static_cast<int>(cur.size()) - 1;
    while (pos >= 0) {
        const int cap = (set_based && pos > 0) ? cur[static_cast<std::size_t>(pos - 1)] : c;
        if (cur[static_cast<std::size_t>(pos)] < cap) break;
        --pos;
    }
    if (pos < 0) return std::nullopt;
    ++cur[static_cast<std::size_t>(pos)];
    std::fill(cur.begin() + pos + 1, cur.end(), 0);
    return JudgedRun{r.kind, std::move(cur)};
}

}  // namespace

bool leq(Ordering ordering, const JudgedRun& r, const JudgedRun& s, const RelevanceScale& scale) {
    check_pair(ordering, r, s);
    switch (ordering) {
        case Ordering::ProjReplSet: return leq_proj_repl_set(r, s, scale.c());
        case Ordering::ReplSet: return leq_repl_set(r, s, scale.c());
        case Ordering::ProjReplRank: return leq_proj_repl_rank(r, s);
        case Ordering::ReplRank: return leq_repl_rank(r, s);
        case Ordering::SwapReplRank: return leq_swap_repl_rank(r, s, scale.c());
    }
    throw std::logic_error("unreachable");
}

std::optional<MeetJoin> closed_form_meet_join(Ordering ordering, const JudgedRun& r,
                                              const JudgedRun& s, const RelevanceScale& scale) {
    check_pair(ordering, r, s);
    switch (ordering) {
        case Ordering::ProjReplSet:
        case Ordering::ProjReplRank: {
            const bool r_low = leq(ordering, r, s, scale);
            return MeetJoin{r_low ? r : s, r_low ? s : r};
        }
        case Ordering::ReplSet:
        case Ordering::ReplRank: {
            std::vector<int> lo(r.degrees.size()), hi(r.degrees.size());
            for (std::size_t i = 0; i < r.degrees.size(); ++i) {
                lo[i] = std::min(r.degrees[i], s.degrees[i]);
                hi[i] = std::max(r.degrees[i], s.degrees[i]);
            }
            JudgedRun meet{r.kind, std::move(lo)};
            JudgedRun join{r.kind, std::move(hi)};
            if (r.kind == RunKind::SetBased) {
                // Positionwise min/max of non-increasing sequences stays
                // non-increasing; re-canonicalize and report if not.
                for (JudgedRun* run : {&meet, &join}) {
                    if (!std::is_sorted(run->degrees.begin(), run->degrees.end(),
                                        std::greater<int>())) {
                        std::cerr << "runlat: anomaly: set-based meet/join left canonical form, "
                                     "re-canonicalizing " << run_literal(*run) << "\n";
                        *run = canonicalize_set_run(run->degrees, scale);
                    }
                }
            }
            return MeetJoin{std::move(meet), std::move(join)};
        }
        case Ordering::SwapReplRank:
            return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

bool cover(Ordering ordering, const JudgedRun& r, const JudgedRun& s, const RelevanceScale& scale) {
    check_pair(ordering, r, s);
    switch (ordering) {
        case Ordering::ProjReplSet:
        case Ordering::ProjReplRank: {
            const auto next = next_run(r, scale.c());
            return next && *next == s;
        }
        case Ordering::ReplSet:
        case Ordering::ReplRank: {
            // Exactly one position raised by one step (canonical forms in the
            // set case).
            int raised = 0;
            for (int k = 0; k < r.length(); ++k) {
                if (r[k] == s[k]) continue;
                if (s[k] != r[k] + 1) return false;
                ++raised;
            }
            return raised == 1;
        }
        case Ordering::SwapReplRank: {
            if (r == s || !leq(ordering, r, s, scale)) return false;
            JudgedRun z{r.kind, std::vector<int>(r.degrees.size(), 0)};
            for (std::optional<JudgedRun> cur = z; cur; cur = next_run(*cur, scale.c())) {
                if (*cur == r || *cur == s) continue;
                if (leq(ordering, r, *cur, scale) && leq(ordering, *cur, s, scale)) return false;
            }
            return true;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace runlat
