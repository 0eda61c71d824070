#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdlat/lattice.hpp"

namespace cdlat {

// measure m_G(H) = |H| * |C_G(H)|.
long long measure(const Group& g, const Subgroup& h);

struct MeasureEntry {
    int size = 0;
    int centralizer_size = 0;
    long long value = 0;
};

struct PropertyCheck {
    bool passed = true;
    std::string witness;  // violating ids / diagnostic, empty on pass
};

// Measures, maximal measure, CD(G) membership and the structural property
// verdicts for one group. Property names:
//   duality_inequality        m(H) <= m(C(H)), equality forces C(C(H)) = H
//   double_centralizer        H in CD => C(H) in CD and C(C(H)) = H
//   closure                   CD closed under meet and join
//   self_duality              H -> C(H) is an order-reversing involution of CD
//   modularity                CD is a modular sublattice
//   min_member_abelian, min_member_contains_center, min_member_normal
//   max_member_normal, cd_max_equals_cd   (CD(M) = CD(G) through the embedding)
struct CDReport {
    std::string group_label;
    std::vector<MeasureEntry> measures;  // indexed by lattice id
    long long m_star = 0;
    std::vector<int> cd_members;  // sorted lattice ids attaining m_star
    std::vector<int> centralizer_ids;  // lattice id of C_G(H) per id
    int min_member_id = -1;       // the Chermak-Delgado subgroup M(G)
    int max_member_id = -1;
    std::map<std::string, PropertyCheck> properties;

    bool all_properties_pass() const {
        for (const auto& [name, check] : properties)
            if (!check.passed) return false;
        return true;
    }
};

// Full CD computation over a complete lattice. Throws invalid_action when the
// lattice is marked incomplete, internal_inconsistency when the meet or join
// of the CD members falls outside CD (an enumeration bug).
CDReport cd_lattice(const Group& g, const SubgroupLattice& lattice);

// The unique minimal member of CD(G): the meet of all members, asserted to be
// a member itself.
int chermak_delgado_subgroup(const CDReport& report, const SubgroupLattice& lattice);

}  // namespace cdlat
