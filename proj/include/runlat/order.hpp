#pragma once

#include <optional>
#include <string>

#include "runlat/run_space.hpp"

namespace runlat {

// The five orderings of judged runs. The first two apply to set-based runs,
// the rest to rank-based runs.
enum class Ordering {
    ProjReplSet,
    ReplSet,
    ProjReplRank,
    ReplRank,
    SwapReplRank,
};

inline constexpr Ordering kAllOrderings[] = {
    Ordering::ProjReplSet, Ordering::ReplSet, Ordering::ProjReplRank,
    Ordering::ReplRank, Ordering::SwapReplRank,
};

RunKind run_kind(Ordering ordering);
std::string ordering_name(Ordering ordering);
std::optional<Ordering> ordering_from_name(const std::string& name);

// r "is at most" s:
//   proj-repl-set   compare multiplicities at the largest degree where they
//                   differ (a total order on canonical multisets)
//   repl-set        |{i : r_i >= a_j}| <= |{i : s_i >= a_j}| for every j
//   proj-repl-rank  lexicographic, rank 1 most significant (a total order)
//   repl-rank       r[k] <= s[k] for every rank k
//   swap-repl-rank  |{i <= k : r[i] >= a_j}| <= |{i <= k : s[i] >= a_j}|
//                   for every threshold j and every prefix k
bool leq(Ordering ordering, const JudgedRun& r, const JudgedRun& s, const RelevanceScale& scale);

struct MeetJoin {
    JudgedRun meet;
    JudgedRun join;
};

// Componentwise min/max for the replacement orderings (positionwise on
// canonical forms in the set case), (smaller, larger) for the two chains.
// swap-repl-rank has no closed form; use the brute-force tables instead.
std::optional<MeetJoin> closed_form_meet_join(Ordering ordering, const JudgedRun& r,
                                              const JudgedRun& s, const RelevanceScale& scale);

// Immediate-successor test. Replacement orderings: s equals r with exactly
// one position raised one step. Chains: s is next in the enumeration order.
// swap-repl-rank: decided by scanning the space for a strictly intermediate
// element.
bool cover(Ordering ordering, const JudgedRun& r, const JudgedRun& s, const RelevanceScale& scale);

}  // namespace runlat
