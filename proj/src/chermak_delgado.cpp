#include "cdlat/chermak_delgado.hpp"

#include <algorithm>
#include <unordered_set>

namespace cdlat {

long long measure(const Group& g, const Subgroup& h) {
    return static_cast<long long>(h.size) * centralizer(g, h).size;
}

namespace {

std::string ids_str(int a, int b) {
    return "H=" + std::to_string(a) + ", K=" + std::to_string(b);
}

// Runs CD(M) = CD(G) for the maximal member by extracting M as a standalone
// group and mapping its CD members back through the element index map.
PropertyCheck check_cd_of_max(const Group& g, const SubgroupLattice& lattice,
                              const std::vector<int>& cd_members, int max_id) {
    const Subgroup& max_sub = lattice.at(max_id);
    if (max_sub.size == g.order()) {
        // The embedding is the identity; rerunning the same computation on a
        // verbatim copy cannot differ.
        return PropertyCheck{true, ""};
    }
    std::vector<int> elems = max_sub.elements();
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        pos[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);

    std::vector<std::vector<int>> tab(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            tab[a][b] = pos[static_cast<std::size_t>(g.mul(elems[a], elems[b]))];
    Group m_grp(std::move(tab), g.label() + "[max]", g.order());

    SubgroupLattice m_lat = SubgroupLattice::enumerate(m_grp, lattice.options());
    CDReport m_report = cd_lattice(m_grp, m_lat);

    std::unordered_set<Bitset, BitsetHash> mapped;
    for (int id : m_report.cd_members) {
        Bitset back(g.order());
        m_lat.at(id).members.for_each([&](int i) { back.set(elems[static_cast<std::size_t>(i)]); });
        mapped.insert(std::move(back));
    }
    std::unordered_set<Bitset, BitsetHash> ours;
    for (int id : cd_members) ours.insert(lattice.at(id).members);
    if (mapped == ours) return PropertyCheck{true, ""};
    return PropertyCheck{false, "CD of the maximal member has " +
                                    std::to_string(mapped.size()) + " sets vs " +
                                    std::to_string(ours.size())};
}

}  // namespace

CDReport cd_lattice(const Group& g, const SubgroupLattice& lattice) {
    if (!lattice.complete())
        throw invalid_action("cd_lattice requires a complete subgroup lattice for " + g.label());

    CDReport report;
    report.group_label = g.label();
    const int s = lattice.size();
    report.measures.resize(static_cast<std::size_t>(s));
    report.centralizer_ids.resize(static_cast<std::size_t>(s));

    for (int id = 0; id < s; ++id) {
        const Subgroup& h = lattice.at(id);
        Subgroup c = centralizer(g, h);
        int cid = lattice.id_of(c.members);
        if (cid < 0)
            throw internal_inconsistency("centralizer of subgroup " + std::to_string(id) +
                                         " is missing from the lattice of " + g.label());
        report.centralizer_ids[static_cast<std::size_t>(id)] = cid;
        report.measures[static_cast<std::size_t>(id)] =
            MeasureEntry{h.size, c.size, static_cast<long long>(h.size) * c.size};
    }

    report.m_star = 0;
    for (const auto& e : report.measures) report.m_star = std::max(report.m_star, e.value);
    for (int id = 0; id < s; ++id)
        if (report.measures[static_cast<std::size_t>(id)].value == report.m_star)
            report.cd_members.push_back(id);

    auto cent = [&](int id) { return report.centralizer_ids[static_cast<std::size_t>(id)]; };
    auto mval = [&](int id) { return report.measures[static_cast<std::size_t>(id)].value; };

    // duality inequality, with the double-centralizer collapse on equality
    PropertyCheck p1;
    for (int id = 0; id < s && p1.passed; ++id) {
        if (mval(id) > mval(cent(id)))
            p1 = {false, "m(H) > m(C(H)) for " + ids_str(id, cent(id))};
        else if (mval(id) == mval(cent(id)) && cent(cent(id)) != id)
            p1 = {false, "equal measures but C(C(H)) != H for H=" + std::to_string(id)};
    }
    report.properties["duality_inequality"] = p1;

    std::unordered_set<int> cd_set(report.cd_members.begin(), report.cd_members.end());

    PropertyCheck p2;
    for (int id : report.cd_members) {
        if (!cd_set.count(cent(id))) {
            p2 = {false, "C(H) outside CD for H=" + std::to_string(id)};
            break;
        }
        if (cent(cent(id)) != id) {
            p2 = {false, "C(C(H)) != H for H=" + std::to_string(id)};
            break;
        }
    }
    report.properties["double_centralizer"] = p2;

    PropertyCheck closure;
    for (std::size_t i = 0; i < report.cd_members.size() && closure.passed; ++i)
        for (std::size_t j = i; j < report.cd_members.size(); ++j) {
            int a = report.cd_members[i], b = report.cd_members[j];
            if (!cd_set.count(lattice.meet(a, b))) {
                closure = {false, "meet outside CD for " + ids_str(a, b)};
                break;
            }
            if (!cd_set.count(lattice.join(a, b))) {
                closure = {false, "join outside CD for " + ids_str(a, b)};
                break;
            }
        }
    report.properties["closure"] = closure;

    PropertyCheck self_dual;
    for (int a : report.cd_members) {
        if (!cd_set.count(cent(a)) || cent(cent(a)) != a) {
            self_dual = {false, "H -> C(H) is not an involution of CD at H=" + std::to_string(a)};
            break;
        }
        for (int b : report.cd_members)
            if (lattice.leq(a, b) && !lattice.leq(cent(b), cent(a))) {
                self_dual = {false, "centralizer map not order-reversing on " + ids_str(a, b)};
                break;
            }
        if (!self_dual.passed) break;
    }
    report.properties["self_duality"] = self_dual;

    PropertyCheck modularity;
    if (!closure.passed) {
        modularity = {false, "CD not meet/join closed"};
    } else {
        ModularityResult mr = lattice.is_modular_sublattice(report.cd_members);
        if (!mr.modular)
            modularity = {false, "modular law fails on (" + std::to_string(mr.violation[0]) +
                                     "," + std::to_string(mr.violation[1]) + "," +
                                     std::to_string(mr.violation[2]) + ")"};
    }
    report.properties["modularity"] = modularity;

    // minimal and maximal member via meet/join folds
    int min_id = report.cd_members.front();
    int max_id = report.cd_members.front();
    for (int id : report.cd_members) {
        min_id = lattice.meet(min_id, id);
        max_id = lattice.join(max_id, id);
        if (min_id < 0 || max_id < 0)
            throw internal_inconsistency("meet/join fold left the lattice of " + g.label());
    }
    if (!cd_set.count(min_id))
        throw internal_inconsistency("meet of CD members is not a CD member for " + g.label());
    if (!cd_set.count(max_id))
        throw internal_inconsistency("join of CD members is not a CD member for " + g.label());
    report.min_member_id = min_id;
    report.max_member_id = max_id;

    const Subgroup& min_sub = lattice.at(min_id);
    Subgroup z = center(g);
    report.properties["min_member_abelian"] =
        is_abelian_subgroup(g, min_sub)
            ? PropertyCheck{}
            : PropertyCheck{false, "M(G)=" + std::to_string(min_id) + " is not abelian"};
    report.properties["min_member_contains_center"] =
        z.members.subset_of(min_sub.members)
            ? PropertyCheck{}
            : PropertyCheck{false, "Z(G) not contained in M(G)=" + std::to_string(min_id)};
    report.properties["min_member_normal"] =
        is_normal(g, min_sub)
            ? PropertyCheck{}
            : PropertyCheck{false, "M(G)=" + std::to_string(min_id) + " is not normal"};
    report.properties["max_member_normal"] =
        is_normal(g, lattice.at(max_id))
            ? PropertyCheck{}
            : PropertyCheck{false, "maximal member " + std::to_string(max_id) + " is not normal"};
    report.properties["cd_max_equals_cd"] =
        check_cd_of_max(g, lattice, report.cd_members, max_id);

    return report;
}

int chermak_delgado_subgroup(const CDReport& report, const SubgroupLattice& lattice) {
    if (report.cd_members.empty())
        throw internal_inconsistency("empty CD member list for " + report.group_label);
    int acc = report.cd_members.front();
    for (int id : report.cd_members) {
        acc = lattice.meet(acc, id);
        if (acc < 0)
            throw internal_inconsistency("meet fold left the lattice of " + report.group_label);
    }
    if (std::find(report.cd_members.begin(), report.cd_members.end(), acc) ==
        report.cd_members.end())
        throw internal_inconsistency("meet of CD members is not a CD member for " +
                                     report.group_label);
    return acc;
}

}  // namespace cdlat
