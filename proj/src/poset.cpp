#include "runlat/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "parallel.hpp"

namespace runlat {

using detail::for_chunks;

namespace {

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

bool subset_of(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

}  // namespace

FinitePoset::FinitePoset(std::shared_ptr<const RunSpace> space, Ordering ordering,
                         std::size_t budget)
    : space_(std::move(space)), ordering_(ordering), up_(space_->size()), down_(space_->size()) {
    if (run_kind(ordering_) != space_->kind())
        throw UsageError("ordering " + ordering_name(ordering_) + " needs " +
                         run_kind_name(run_kind(ordering_)) + "-based runs");
    const int n = space_->size();
    if (static_cast<std::size_t>(n) > budget)
        throw BudgetError("space has " + std::to_string(n) + " elements, budget is " +
                          std::to_string(budget) + "; raise --budget to at least " +
                          std::to_string(n));
    const RelevanceScale& scale = space_->scale();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (runlat::leq(ordering_, space_->at(i), space_->at(j), scale)) {
                up_.set(i, j);
                down_.set(j, i);
            }

    // Transitive reduction: j covers i iff the interval [i, j] is {i, j}.
    upper_covers_.resize(static_cast<std::size_t>(n));
    lower_covers_.resize(static_cast<std::size_t>(n));
    const int words = up_.words();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !up_.get(i, j)) continue;
            if (popcount_and(up_.row(i), down_.row(j), words) == 2) {
                upper_covers_[static_cast<std::size_t>(i)].push_back(j);
                lower_covers_[static_cast<std::size_t>(j)].push_back(i);
                ++cover_edges_;
            }
        }

    for (int i = 0; i < n; ++i) {
        if (popcount_and(up_.row(i), up_.row(i), words) == n) bottom_ = i;
        if (popcount_and(down_.row(i), down_.row(i), words) == n) top_ = i;
    }

    if (bottom_ >= 0) {
        levels_.assign(static_cast<std::size_t>(n), -1);
        levels_[static_cast<std::size_t>(bottom_)] = 0;
        std::deque<int> queue{bottom_};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : upper_covers_[static_cast<std::size_t>(u)])
                if (levels_[static_cast<std::size_t>(v)] < 0) {
                    levels_[static_cast<std::size_t>(v)] = levels_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
        }
    }
}

bool FinitePoset::is_total() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!up_.get(i, j) && !up_.get(j, i)) return false;
    return true;
}

LatticeTables::LatticeTables(const FinitePoset& poset) : poset_(&poset) {
    const int n = poset.size();
    if (n > 8192)
        throw BudgetError("lattice tables limited to 8192 elements, space has " +
                          std::to_string(n));
    meet_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kMissing);
    join_.assign(meet_.size(), kMissing);
    const int words = poset.up().words();
    std::vector<std::uint64_t> buf(static_cast<std::size_t>(words));

    // The enumeration order is a linear extension, so among common lower
    // bounds the highest index is a maximal one; it is the glb iff it
    // dominates the whole set. Dually for the lub.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const std::uint64_t* di = poset.down().row(i);
            const std::uint64_t* dj = poset.down().row(j);
            int glb = kMissing;
            for (int w = words - 1; w >= 0; --w) {
                buf[static_cast<std::size_t>(w)] = di[w] & dj[w];
                if (glb == kMissing && buf[static_cast<std::size_t>(w)])
                    glb = w * 64 + 63 - std::countl_zero(buf[static_cast<std::size_t>(w)]);
            }
            if (glb != kMissing && !subset_of(buf.data(), poset.down().row(glb), words))
                glb = kMissing;

            const std::uint64_t* ui = poset.up().row(i);
            const std::uint64_t* uj = poset.up().row(j);
            int lub = kMissing;
            for (int w = 0; w < words; ++w) {
                buf[static_cast<std::size_t>(w)] = ui[w] & uj[w];
                if (lub == kMissing && buf[static_cast<std::size_t>(w)])
                    lub = w * 64 + std::countr_zero(buf[static_cast<std::size_t>(w)]);
            }
            if (lub != kMissing && !subset_of(buf.data(), poset.up().row(lub), words))
                lub = kMissing;

            meet_[idx(i, j)] = meet_[idx(j, i)] = glb;
            join_[idx(i, j)] = join_[idx(j, i)] = lub;
            if (glb == kMissing || lub == kMissing) {
                ++missing_pairs_;
                if (!failure_) failure_ = Failure{i, j, glb != kMissing};
            }
        }
}

namespace {

std::vector<int> cover_count_irreducibles(const FinitePoset& poset) {
    std::vector<int> out;
    for (int x = 0; x < poset.size(); ++x)
        if (x != poset.bottom() && poset.lower_covers()[static_cast<std::size_t>(x)].size() == 1)
            out.push_back(x);
    return out;
}

}  // namespace

std::vector<int> join_irreducibles(const LatticeTables& tables) {
    const FinitePoset& poset = tables.poset();
    std::vector<int> by_covers = cover_count_irreducibles(poset);
    if (tables.complete()) {
        const int n = poset.size();
        std::vector<int> by_definition;
        for (int j = 0; j < n; ++j) {
            if (j == poset.bottom()) continue;
            bool reducible = false;
            for (int x = 0; x < n && !reducible; ++x) {
                if (x == j || !poset.leq(x, j)) continue;
                for (int y = x + 1; y < n; ++y) {
                    if (y == j || !poset.leq(y, j)) continue;
                    if (tables.join(x, y) == j) {
                        reducible = true;
                        break;
                    }
                }
            }
            if (!reducible) by_definition.push_back(j);
        }
        if (by_definition != by_covers)
            throw std::logic_error("join-irreducible routes disagree");
    }
    return by_covers;
}

std::vector<int> irreducibles_below(const LatticeTables& tables, int x) {
    std::vector<int> out;
    for (int j : join_irreducibles(tables))
        if (tables.poset().leq(j, x)) out.push_back(j);
    return out;
}

StructureVerdict classify_structure(const LatticeTables& tables, int workers) {
    const FinitePoset& poset = tables.poset();
    const int n = poset.size();
    StructureVerdict verdict;
    verdict.is_lattice = tables.complete();
    verdict.lattice_failure = tables.failure();
    verdict.join_irreducibles = join_irreducibles(tables);

    verdict.is_graded = poset.bottom() >= 0;
    if (verdict.is_graded) {
        const auto& lvl = poset.levels();
        for (int u = 0; u < n && verdict.is_graded; ++u) {
            if (lvl[static_cast<std::size_t>(u)] < 0) verdict.is_graded = false;
            for (int v : poset.upper_covers()[static_cast<std::size_t>(u)])
                if (lvl[static_cast<std::size_t>(v)] != lvl[static_cast<std::size_t>(u)] + 1) {
                    verdict.is_graded = false;
                    break;
                }
        }
    }

    if (verdict.is_lattice) {
        // x ^ (y v z) == (x ^ y) v (x ^ z), exhaustively over triples.
        std::vector<std::optional<std::array<int, 3>>> found(static_cast<std::size_t>(workers) + 1);
        for_chunks(n, workers, [&](int w, int begin, int end) {
            auto& slot = found[static_cast<std::size_t>(w)];
            for (int x = begin; x < end && !slot; ++x)
                for (int y = 0; y < n && !slot; ++y)
                    for (int z = 0; z < n; ++z)
                        if (tables.meet(x, tables.join(y, z)) !=
                            tables.join(tables.meet(x, y), tables.meet(x, z))) {
                            slot = std::array<int, 3>{x, y, z};
                            break;
                        }
        });
        for (const auto& slot : found)
            if (slot && (!verdict.distributive_failure || *slot < *verdict.distributive_failure))
                verdict.distributive_failure = slot;
        verdict.is_distributive = !verdict.distributive_failure.has_value();

        // x <= y implies x v (z ^ y) == (x v z) ^ y.
        std::vector<std::optional<std::array<int, 3>>> mod_found(static_cast<std::size_t>(workers) + 1);
        for_chunks(n, workers, [&](int w, int begin, int end) {
            auto& slot = mod_found[static_cast<std::size_t>(w)];
            for (int x = begin; x < end && !slot; ++x)
                for (int y = 0; y < n && !slot; ++y) {
                    if (!poset.leq(x, y)) continue;
                    for (int z = 0; z < n; ++z)
                        if (tables.join(x, tables.meet(z, y)) !=
                            tables.meet(tables.join(x, z), y)) {
                            slot = std::array<int, 3>{x, y, z};
                            break;
                        }
                }
        });
        for (const auto& slot : mod_found)
            if (slot && (!verdict.modular_failure || *slot < *verdict.modular_failure))
                verdict.modular_failure = slot;
        verdict.is_modular = !verdict.modular_failure.has_value();
    }

    // Pentagon search: fix the incomparable pair (x, y) first, then look for
    // z above y, still incomparable to x, sharing both bounds with y.
    for (int x = 0; x < n && !verdict.n5_witness; ++x)
        for (int y = 0; y < n && !verdict.n5_witness; ++y) {
            if (poset.leq(x, y) || poset.leq(y, x)) continue;
            const int o = tables.meet(x, y);
            const int i = tables.join(x, y);
            if (o == LatticeTables::kMissing || i == LatticeTables::kMissing) continue;
            for (int z = 0; z < n; ++z) {
                if (z == y || !poset.leq(y, z)) continue;
                if (poset.leq(x, z) || poset.leq(z, x)) continue;
                if (tables.meet(x, z) == o && tables.join(x, z) == i) {
                    verdict.n5_witness = N5Witness{{o, x, y, z, i}};
                    break;
                }
            }
        }

    return verdict;
}

std::vector<int> birkhoff_decompose(const LatticeTables& tables, const StructureVerdict& verdict,
                                    int x) {
    if (!verdict.is_distributive)
        throw UsageError("birkhoff decomposition requires a distributive lattice");
    if (x == tables.bottom())
        throw UsageError("bottom element has no join-irreducible decomposition");
    const FinitePoset& poset = tables.poset();
    const std::vector<int> below = irreducibles_below(tables, x);
    std::vector<int> maximal;
    for (int j : below) {
        bool dominated = false;
        for (int k : below)
            if (k != j && poset.leq(j, k)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(j);
    }
    int joined = tables.bottom();
    for (int j : maximal) joined = tables.join(joined, j);
    if (joined != x) throw std::logic_error("birkhoff decomposition does not re-join");
    return maximal;
}

std::string export_hasse(const FinitePoset& poset, const RunLabeler& labeler) {
    const RunSpace& space = poset.space();
    auto label = [&](int i) {
        return labeler ? labeler(space.at(i)) : run_literal(space.at(i));
    };
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < poset.size(); ++i) out << "  \"" << label(i) << "\";\n";
    for (int i = 0; i < poset.size(); ++i)
        for (int j : poset.upper_covers()[static_cast<std::size_t>(i)])
            out << "  \"" << label(i) << "\" -> \"" << label(j) << "\";\n";
    out << "}\n";
    return out.str();
}

SpaceAnalysis analyze_space(const RelevanceScale& scale, int length, Ordering ordering,
                            std::size_t budget, int workers) {
    const Int expected = RunSpace::count(scale.c(), length, run_kind(ordering));
    if (expected > budget)
        throw BudgetError("space has " + expected.str() + " elements, budget is " +
                          std::to_string(budget) + "; raise --budget to at least " +
                          expected.str());
    auto space = std::make_shared<RunSpace>(scale, length, run_kind(ordering));
    auto poset = std::make_shared<FinitePoset>(space, ordering, budget);
    auto tables = std::make_shared<LatticeTables>(*poset);
    SpaceAnalysis analysis{space, poset, tables, classify_structure(*tables, workers)};
    return analysis;
}

}  // namespace runlat
