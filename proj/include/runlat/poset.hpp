#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "runlat/order.hpp"
#include "runlat/run_space.hpp"

namespace runlat {

inline constexpr std::size_t kDefaultBudget = 20000;

// Row-major bit matrix; rows are word-aligned so relation queries reduce to
// bitwise AND / containment scans.
class BitMatrix {
public:
    explicit BitMatrix(int n)
        : n_(n), words_((n + 63) / 64),
          bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0) {}

    int n() const { return n_; }
    int words() const { return words_; }
    void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
    bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    const std::uint64_t* row(int i) const {
        return bits_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_);
    }
    std::uint64_t* row(int i) {
        return bits_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_);
    }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// Explicit order relation of a run space under one ordering: full leq matrix
// (and its transpose), Hasse covers via transitive reduction, bottom/top.
class FinitePoset {
public:
    FinitePoset(std::shared_ptr<const RunSpace> space, Ordering ordering,
                std::size_t budget = kDefaultBudget);

    const RunSpace& space() const { return *space_; }
    std::shared_ptr<const RunSpace> space_ptr() const { return space_; }
    Ordering ordering() const { return ordering_; }
    int size() const { return space_->size(); }

    bool leq(int i, int j) const { return up_.get(i, j); }
    const BitMatrix& up() const { return up_; }      // up_.get(i,j) == leq(i,j)
    const BitMatrix& down() const { return down_; }  // transpose
    const std::vector<std::vector<int>>& upper_covers() const { return upper_covers_; }
    const std::vector<std::vector<int>>& lower_covers() const { return lower_covers_; }
    int cover_edge_count() const { return cover_edges_; }

    int bottom() const { return bottom_; }  // -1 when absent
    int top() const { return top_; }
    bool is_total() const;

    // Shortest cover-path length from the bottom (the rank function when the
    // poset is graded). Empty when there is no bottom.
    const std::vector<int>& levels() const { return levels_; }

private:
    std::shared_ptr<const RunSpace> space_;
    Ordering ordering_;
    BitMatrix up_;
    BitMatrix down_;
    std::vector<std::vector<int>> upper_covers_;
    std::vector<std::vector<int>> lower_covers_;
    std::vector<int> levels_;
    int cover_edges_ = 0;
    int bottom_ = -1;
    int top_ = -1;
};

// Brute-force glb/lub tables. Entries are element indices, or kMissing where
// the pair has no unique greatest lower / least upper bound; such posets are
// not lattices and the first offending pair (canonical order) is recorded.
class LatticeTables {
public:
    static constexpr int kMissing = -1;

    struct Failure {
        int a, b;
        bool missing_join;  // otherwise the meet is missing
    };

    explicit LatticeTables(const FinitePoset& poset);

    const FinitePoset& poset() const { return *poset_; }
    bool complete() const { return !failure_.has_value(); }
    const std::optional<Failure>& failure() const { return failure_; }
    long long missing_pairs() const { return missing_pairs_; }

    int meet(int i, int j) const { return meet_[idx(i, j)]; }
    int join(int i, int j) const { return join_[idx(i, j)]; }
    int bottom() const { return poset_->bottom(); }
    int top() const { return poset_->top(); }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(poset_->size()) +
               static_cast<std::size_t>(j);
    }
    const FinitePoset* poset_;
    std::vector<std::int32_t> meet_;
    std::vector<std::int32_t> join_;
    std::optional<Failure> failure_;
    long long missing_pairs_ = 0;
};

inline LatticeTables verify_lattice(const FinitePoset& poset) { return LatticeTables(poset); }

// Pentagon witness (o, x, y, z, i): y < z, x incomparable to both,
// x^y = x^z = o and xvy = xvz = i, with all four bounds existing. In a
// lattice this is exactly an N5 sublattice; on a non-lattice poset the same
// configuration, read with partial glb/lub, still rules out positive
// valuations.
struct N5Witness {
    std::array<int, 5> elems;  // o, x, y, z, i
};

struct StructureVerdict {
    bool is_lattice = false;
    bool is_distributive = false;
    bool is_modular = false;
    bool is_graded = false;
    std::optional<N5Witness> n5_witness;
    std::vector<int> join_irreducibles;  // canonical order
    std::optional<LatticeTables::Failure> lattice_failure;
    std::optional<std::array<int, 3>> distributive_failure;  // first (x,y,z)
    std::optional<std::array<int, 3>> modular_failure;
};

StructureVerdict classify_structure(const LatticeTables& tables, int workers = 1);

// Non-bottom elements with exactly one lower cover. On complete tables the
// definitional route (x v y = j forces x = j or y = j) is computed as well
// and both must agree.
std::vector<int> join_irreducibles(const LatticeTables& tables);

// J_x: join-irreducibles below x.
std::vector<int> irreducibles_below(const LatticeTables& tables, int x);

// Unique irredundant join-irreducible decomposition of x (the maximal
// elements of J_x). Requires a distributive lattice and x != bottom.
std::vector<int> birkhoff_decompose(const LatticeTables& tables, const StructureVerdict& verdict,
                                    int x);

using RunLabeler = std::function<std::string(const JudgedRun&)>;

// Deterministic DOT digraph of the Hasse diagram, edges from lower to upper
// cover. Nodes are labelled with run literals unless a labeler is given.
std::string export_hasse(const FinitePoset& poset, const RunLabeler& labeler = {});

// Convenience bundle used by the CLI and the acceptance suite.
struct SpaceAnalysis {
    std::shared_ptr<const RunSpace> space;
    std::shared_ptr<const FinitePoset> poset;
    std::shared_ptr<const LatticeTables> tables;
    StructureVerdict verdict;
};

SpaceAnalysis analyze_space(const RelevanceScale& scale, int length, Ordering ordering,
                            std::size_t budget = kDefaultBudget, int workers = 1);

}  // namespace runlat
