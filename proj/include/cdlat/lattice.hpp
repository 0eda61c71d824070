#pragma once

#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdlat/subgroup.hpp"

namespace cdlat {

struct LatticeOptions {
    int max_subgroups = 100000;  // enumeration cap; exceeding it is a capacity_error
    int max_hasse = 20000;       // cover relations are only built up to this many subgroups
};

struct ModularityResult {
    bool modular = true;
    std::array<int, 3> violation{-1, -1, -1};  // (A, B, C) with A <= C when not modular
};

// The complete subgroup lattice of a group. Subgroups are deduplicated and
// canonically ordered by size, then lexicographic member set; ids are
// positions in that order. Immutable once built.
class SubgroupLattice {
public:
    SubgroupLattice(const Group& g, std::vector<Bitset> members, bool complete,
                    LatticeOptions opts = {});

    // all_subgroups: seed with the cyclic subgroups and join with them until
    // no new subgroup appears. Every subgroup is a join of cyclic subgroups,
    // so the fixpoint is the complete list.
    static SubgroupLattice enumerate(const Group& g, LatticeOptions opts = {});

    const Group& group() const { return *group_; }
    int size() const { return static_cast<int>(subgroups_.size()); }
    const Subgroup& at(int id) const { return subgroups_[static_cast<std::size_t>(id)]; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }

    // -1 when the member set is not in the lattice.
    int id_of(const Bitset& members) const;

    bool leq(int a, int b) const {
        return at(a).members.subset_of(at(b).members);
    }

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool complete() const { return complete_; }
    const LatticeOptions& options() const { return opts_; }

    // Meet = intersection, join = generated subgroup; both resolve to lattice
    // ids (-1 can only happen on a lattice marked incomplete).
    int meet(int a, int b) const;
    int join(int a, int b) const;

    bool is_cyclic(int id) const { return cyclic_[static_cast<std::size_t>(id)]; }

    bool has_hasse() const { return has_hasse_; }
    // Cover relations as (lower, upper) pairs, sorted.
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

    // True iff for all A,B,C in members with A <= C:
    // join(A, meet(B,C)) == meet(join(A,B), C). members must be meet/join
    // closed (not_a_sublattice otherwise); the witness triple is returned on
    // failure.
    ModularityResult is_modular_sublattice(const std::vector<int>& members) const;

private:
    const Group* group_;
    std::vector<Subgroup> subgroups_;
    std::unordered_map<Bitset, int, BitsetHash> index_;
    std::vector<bool> cyclic_;
    std::vector<std::pair<int, int>> hasse_;
    bool has_hasse_ = false;
    bool complete_ = false;
    int bottom_ = -1, top_ = -1;
    LatticeOptions opts_;

    void build_hasse();
};

inline SubgroupLattice all_subgroups(const Group& g, LatticeOptions opts = {}) {
    return SubgroupLattice::enumerate(g, opts);
}

}  // namespace cdlat
