#include "cdlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cdlat {

SubgroupLattice SubgroupLattice::enumerate(const Group& g, LatticeOptions opts) {
    const int n = g.order();
    Bitset trivial(n);
    trivial.set(g.identity());

    std::unordered_set<Bitset, BitsetHash> seen;
    std::deque<Bitset> queue;
    std::vector<Bitset> found;
    seen.insert(trivial);
    found.push_back(trivial);
    queue.push_back(trivial);

    // Extend each known subgroup H by one element per nontrivial coset of H:
    // <H,g> = <H,hg>, so a single representative per coset suffices, and every
    // subgroup is reached because K = <K', g> for any maximal K' < K.
    while (!queue.empty()) {
        Bitset h = queue.front();
        queue.pop_front();
        std::vector<int> members = h.to_vector();
        Bitset covered = h;
        for (int x = 0; x < n; ++x) {
            if (covered.test(x)) continue;
            for (int y : members) covered.set(g.mul(y, x));
            Bitset k = closure_extend(g, h, {x});
            if (seen.insert(k).second) {
                if (static_cast<int>(found.size()) + 1 > opts.max_subgroups)
                    throw capacity_error(
                        "subgroup count cap " + std::to_string(opts.max_subgroups) +
                            " exceeded for " + g.label() + " (partial count " +
                            std::to_string(found.size()) + ")",
                        static_cast<long long>(found.size()));
                found.push_back(k);
                queue.push_back(std::move(k));
            }
        }
    }
    return SubgroupLattice(g, std::move(found), true, opts);
}

SubgroupLattice::SubgroupLattice(const Group& g, std::vector<Bitset> members, bool complete,
                                 LatticeOptions opts)
    : group_(&g), complete_(complete), opts_(opts) {
    std::sort(members.begin(), members.end(), [](const Bitset& a, const Bitset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return Bitset::lex_less(a, b);
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());

    subgroups_.reserve(members.size());
    for (auto& m : members) {
        int id = static_cast<int>(subgroups_.size());
        index_.emplace(m, id);
        subgroups_.push_back(subgroup_from_members(g, std::move(m)));
    }

    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        const Subgroup& s = subgroups_[i];
        if (s.size == 1) bottom_ = static_cast<int>(i);
        if (s.size == g.order()) top_ = static_cast<int>(i);
    }
    if (bottom_ < 0 || top_ < 0)
        throw invalid_parameter("lattice must contain the trivial and full subgroups");

    cyclic_.resize(subgroups_.size(), false);
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        const Subgroup& s = subgroups_[i];
        bool cyc = false;
        s.members.for_each([&](int e) {
            if (g.element_order(e) == s.size) cyc = true;
        });
        cyclic_[i] = cyc;
    }

    if (size() <= opts_.max_hasse) {
        build_hasse();
        has_hasse_ = true;
    }
}

void SubgroupLattice::build_hasse() {
    // ids are sorted by size, so proper supersets always have larger ids.
    const int s = size();
    std::vector<int> sup;
    for (int a = 0; a < s; ++a) {
        sup.clear();
        for (int b = a + 1; b < s; ++b) {
            if (at(b).size <= at(a).size || at(b).size % at(a).size != 0) continue;
            if (at(a).members.subset_of(at(b).members)) sup.push_back(b);
        }
        // covers of a = minimal elements of sup (sup is sorted by size)
        for (std::size_t i = 0; i < sup.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (at(sup[i]).size % at(sup[j]).size != 0) continue;
                if (at(sup[j]).members.subset_of(at(sup[i]).members)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) hasse_.emplace_back(a, sup[i]);
        }
    }
    std::sort(hasse_.begin(), hasse_.end());
}

int SubgroupLattice::id_of(const Bitset& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::meet(int a, int b) const {
    return id_of(at(a).members & at(b).members);
}

int SubgroupLattice::join(int a, int b) const {
    const Subgroup& sa = at(a);
    const Subgroup& sb = at(b);
    if (sa.members.subset_of(sb.members)) return b;
    if (sb.members.subset_of(sa.members)) return a;
    const Subgroup& big = sa.size >= sb.size ? sa : sb;
    const Subgroup& small = sa.size >= sb.size ? sb : sa;
    return id_of(closure_extend(*group_, big.members, small.members.to_vector()));
}

ModularityResult SubgroupLattice::is_modular_sublattice(const std::vector<int>& members) const {
    for (int a : members)
        for (int b : members) {
            int m = meet(a, b), j = join(a, b);
            if (std::find(members.begin(), members.end(), m) == members.end() ||
                std::find(members.begin(), members.end(), j) == members.end())
                throw not_a_sublattice("member set is not closed under meet and join");
        }
    ModularityResult r;
    for (int a : members)
        for (int c : members) {
            if (!leq(a, c)) continue;
            for (int b : members) {
                if (join(a, meet(b, c)) != meet(join(a, b), c)) {
                    r.modular = false;
                    r.violation = {a, b, c};
                    return r;
                }
            }
        }
    return r;
}

}  // namespace cdlat
