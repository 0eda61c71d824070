#include "cdlat/subgroup.hpp"

#include <numeric>

#include "cdlat/arith.hpp"

namespace cdlat {

Subgroup trivial_subgroup(const Group& g) {
    Bitset b(g.order());
    b.set(g.identity());
    return Subgroup{&g, b, 1};
}

Subgroup full_subgroup(const Group& g) {
    Bitset b(g.order());
    for (int i = 0; i < g.order(); ++i) b.set(i);
    return Subgroup{&g, b, g.order()};
}

Subgroup subgroup_from_members(const Group& g, Bitset members) {
    int size = members.count();
    return Subgroup{&g, std::move(members), size};
}

Bitset closure_extend(const Group& g, const Bitset& base, const std::vector<int>& extra) {
    Bitset members = base;
    std::vector<int> worklist;
    for (int e : extra)
        if (!members.test(e)) {
            members.set(e);
            worklist.push_back(e);
        }
    // base is closed, so only products involving a new element can escape.
    std::vector<int> present = members.to_vector();
    std::size_t head = 0;
    while (head < worklist.size()) {
        int x = worklist[head++];
        for (std::size_t i = 0; i < present.size(); ++i) {
            int y = present[i];
            int xy = g.mul(x, y);
            if (!members.test(xy)) {
                members.set(xy);
                present.push_back(xy);
                worklist.push_back(xy);
            }
            int yx = g.mul(y, x);
            if (!members.test(yx)) {
                members.set(yx);
                present.push_back(yx);
                worklist.push_back(yx);
            }
        }
    }
    return members;
}

Subgroup subgroup_generated(const Group& g, const std::vector<int>& gens) {
    for (int e : gens)
        if (e < 0 || e >= g.order()) throw invalid_parameter("generator index out of range");
    Bitset triv(g.order());
    triv.set(g.identity());
    return subgroup_from_members(g, closure_extend(g, triv, gens));
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
    std::vector<int> hs = h.members.to_vector();
    Bitset c(g.order());
    for (int x = 0; x < g.order(); ++x) {
        bool commutes = true;
        for (int y : hs)
            if (g.mul(x, y) != g.mul(y, x)) {
                commutes = false;
                break;
            }
        if (commutes) c.set(x);
    }
    return subgroup_from_members(g, std::move(c));
}

Subgroup center(const Group& g) { return centralizer(g, full_subgroup(g)); }

Subgroup omega1(const Group& g, int p) {
    if (!is_prime(p)) throw invalid_parameter("omega1 requires a prime p");
    if (g.order() % p != 0)
        throw invalid_parameter("omega1 requires p to divide the group order");
    std::vector<int> gens;
    for (int i = 0; i < g.order(); ++i)
        if (g.element_order(i) == p) gens.push_back(i);
    return subgroup_generated(g, gens);
}

int exponent(const Group& g) {
    int e = 1;
    for (int i = 0; i < g.order(); ++i) e = std::lcm(e, g.element_order(i));
    return e;
}

bool is_abelian_subgroup(const Group& g, const Subgroup& h) {
    std::vector<int> hs = h.members.to_vector();
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (g.mul(hs[i], hs[j]) != g.mul(hs[j], hs[i])) return false;
    return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
    std::vector<int> hs = h.members.to_vector();
    for (int x = 0; x < g.order(); ++x) {
        int xi = g.inverse(x);
        for (int y : hs)
            if (!h.members.test(g.mul(g.mul(x, y), xi))) return false;
    }
    return true;
}

Bitset set_product(const Group& g, const Bitset& a, const Bitset& b) {
    Bitset r(g.order());
    a.for_each([&](int x) { b.for_each([&](int y) { r.set(g.mul(x, y)); }); });
    return r;
}

Group quotient(const Group& g, const Subgroup& n, int max_order) {
    if (n.parent != &g) throw invalid_parameter("subgroup does not belong to this group");
    if (!is_normal(g, n)) throw not_normal("quotient requires a normal subgroup");

    std::vector<int> ns = n.members.to_vector();
    std::vector<int> coset_of(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);  // x is minimal in its coset: smaller members were already claimed
        for (int y : ns) coset_of[static_cast<std::size_t>(g.mul(x, y))] = id;
    }

    int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(q),
                                      std::vector<int>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            tab[a][b] = coset_of[static_cast<std::size_t>(g.mul(reps[a], reps[b]))];
    return Group(std::move(tab), g.label() + "/" + std::to_string(n.size), max_order);
}

}  // namespace cdlat
