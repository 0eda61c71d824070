#include "cdlat/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdlat/arith.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

namespace {

// The unique central element of order 2 (exists in D8, Q8, C4, ...).
int unique_central_involution(const Group& g) {
    Subgroup z = center(g);
    int found = -1;
    for (int e : z.elements())
        if (g.element_order(e) == 2) {
            if (found >= 0) throw invalid_parameter(g.label() + " has several central involutions");
            found = e;
        }
    if (found < 0) throw invalid_parameter(g.label() + " has no central involution");
    return found;
}

// (A x B) / <(z_A, z_B)> for the unique central involutions: the central
// product A o B.
Group central_product(const Group& a, const Group& b, int max_order) {
    Group prod = direct_product(a, b, Group::kDefaultMaxOrder);
    int diag = unique_central_involution(a) * b.order() + unique_central_involution(b);
    Subgroup n = subgroup_generated(prod, {diag});
    return quotient(prod, n, max_order);
}

std::vector<std::vector<int>> iterate_action(const Group& h, const std::vector<int>& base_perm) {
    // action[h^j] = base^j over a cyclic H generated by element 1
    int nn = static_cast<int>(base_perm.size());
    std::vector<std::vector<int>> action(static_cast<std::size_t>(h.order()));
    std::vector<int> cur(static_cast<std::size_t>(nn));
    for (int i = 0; i < nn; ++i) cur[static_cast<std::size_t>(i)] = i;
    int e = h.identity();
    int x = e;
    for (;;) {
        action[static_cast<std::size_t>(x)] = cur;
        x = h.mul(x, 1);
        if (x == e) break;
        std::vector<int> next(static_cast<std::size_t>(nn));
        for (int i = 0; i < nn; ++i)
            next[static_cast<std::size_t>(i)] = base_perm[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])];
        cur = std::move(next);
    }
    return action;
}

Group build_a4(int max_order) {
    Group v4 = direct_product(make_cyclic(2), make_cyclic(2));
    Group c3 = make_cyclic(3);
    // cycle the three involutions 1 -> 2 -> 3 -> 1
    std::vector<int> cycle = {0, 2, 3, 1};
    return semidirect_general(v4, c3, iterate_action(c3, cycle), max_order);
}

Group build_heisenberg(int p, int max_order) {
    Group n = direct_product(make_cyclic(p), make_cyclic(p));
    Group h = make_cyclic(p);
    // shear (i,j) -> (i+j, j) on C_p x C_p, an automorphism of order p
    std::vector<int> shear(static_cast<std::size_t>(p * p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            shear[static_cast<std::size_t>(i * p + j)] = ((i + j) % p) * p + j;
    return semidirect_general(n, h, iterate_action(h, shear), max_order);
}

Group build_g16_3(int max_order) {
    Group v4 = direct_product(make_cyclic(2), make_cyclic(2));
    Group c4 = make_cyclic(4);
    // the generator of C4 swaps two of the involutions
    std::vector<int> swap = {0, 2, 1, 3};
    return semidirect_general(v4, c4, iterate_action(c4, swap), max_order);
}

std::vector<std::vector<int>> partitions_of(int e) {
    // weakly decreasing partitions, largest part first
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

}  // namespace

const Catalog& Catalog::standard() {
    static const Catalog instance;
    return instance;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<const CatalogEntry*> Catalog::in_order_range(int lo, int hi) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.order >= lo && e.order <= hi) out.push_back(&e);
    return out;
}

Group Catalog::build(const CatalogEntry& entry, int max_order) const {
    return build_group(entry.spec, named_, max_order);
}

Group Catalog::build_spec(const std::string& text, int max_order) const {
    return build_group(parse_spec(text), named_, max_order);
}

void Catalog::add(const std::string& name, int order, std::optional<std::pair<int, int>> tag) {
    entries_.push_back(CatalogEntry{name, order, tag, parse_spec(name)});
}

void Catalog::add_abelian_through(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        // factor n, primes ascending
        std::vector<std::pair<int, int>> factors;
        int rest = n;
        for (int p = 2; p <= rest; ++p)
            if (rest % p == 0) {
                int e = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++e;
                }
                factors.emplace_back(p, e);
            }

        std::vector<std::vector<std::vector<int>>> choices;
        for (auto [p, e] : factors) choices.push_back(partitions_of(e));

        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            bool cyclic = true;
            std::string name;
            for (std::size_t i = 0; i < choices.size(); ++i) {
                const auto& part = choices[i][pick[i]];
                if (part.size() != 1) cyclic = false;
                for (int a : part) {
                    if (!name.empty()) name += "x";
                    name += "C" + std::to_string(ipow(factors[i].first, a));
                }
            }
            if (cyclic || n == 1) name = "C" + std::to_string(n);
            add(name, n);

            std::size_t i = 0;
            while (i < choices.size() && ++pick[i] == choices[i].size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == choices.size()) break;
            if (choices.empty()) break;
        }
        if (factors.empty() && n > 1) throw std::logic_error("unreachable");
    }
}

Catalog::Catalog() {
    named_["A4"] = [](int cap) { return build_a4(cap); };
    named_["He3"] = [](int cap) { return build_heisenberg(3, cap); };
    named_["He5"] = [](int cap) { return build_heisenberg(5, cap); };
    named_["G16_3"] = [](int cap) { return build_g16_3(cap); };
    named_["G16_13"] = [](int cap) {
        return central_product(make_dihedral(8), make_cyclic(4), cap);
    };
    named_["CP_D8D8"] = [](int cap) {
        return central_product(make_dihedral(8), make_dihedral(8), cap);
    };
    named_["CP_D8Q8"] = [](int cap) {
        return central_product(make_dihedral(8), make_dicyclic(2), cap);
    };

    add_abelian_through(64);

    // class tags for the abelian entries of order <= 16 (standard numbering)
    const std::vector<std::tuple<std::string, int, int>> abelian_tags = {
        {"C1", 1, 1},   {"C2", 2, 1},   {"C3", 3, 1},
        {"C4", 4, 1},   {"C2xC2", 4, 2}, {"C5", 5, 1},
        {"C6", 6, 2},   {"C7", 7, 1},   {"C8", 8, 1},
        {"C4xC2", 8, 2}, {"C2xC2xC2", 8, 5}, {"C9", 9, 1},
        {"C3xC3", 9, 2}, {"C10", 10, 2}, {"C11", 11, 1},
        {"C12", 12, 2}, {"C2xC2xC3", 12, 5}, {"C13", 13, 1},
        {"C14", 14, 2}, {"C15", 15, 1}, {"C16", 16, 1},
        {"C4xC4", 16, 2}, {"C8xC2", 16, 5}, {"C4xC2xC2", 16, 10},
        {"C2xC2xC2xC2", 16, 14},
    };
    for (const auto& [name, order, idx] : abelian_tags) {
        for (auto& e : entries_)
            if (e.name == name) e.class_tag = std::make_pair(order, idx);
    }

    // nonabelian classes through order 16, one entry each
    add("D6", 6, {{6, 1}});
    add("D8", 8, {{8, 3}});
    add("Q8", 8, {{8, 4}});
    add("D10", 10, {{10, 1}});
    add("Dic3", 12, {{12, 1}});
    add("A4", 12, {{12, 3}});
    add("D12", 12, {{12, 4}});
    add("D14", 14, {{14, 1}});
    add("G16_3", 16, {{16, 3}});
    add("SDP(4,4,3)", 16, {{16, 4}});
    add("SDP(8,2,5)", 16, {{16, 6}});
    add("D16", 16, {{16, 7}});
    add("SDP(8,2,3)", 16, {{16, 8}});
    add("Q16", 16, {{16, 9}});
    add("D8xC2", 16, {{16, 11}});
    add("Q8xC2", 16, {{16, 12}});
    add("G16_13", 16, {{16, 13}});

    // larger families (not a complete classification beyond 16)
    for (int two_n = 18; two_n <= 128; two_n += 2) add("D" + std::to_string(two_n), two_n);
    for (int n = 5; n <= 32; ++n) {
        int order = 4 * n;
        bool pow2 = (order & (order - 1)) == 0;
        add(pow2 ? "Q" + std::to_string(order) : "Dic" + std::to_string(n), order);
    }
    add("Q8xC2xC2", 32);
    add("Q8xC2xC2xC2", 64);
    add("Q8xC2xC2xC2xC2", 128);
    add("SDP(9,3,4)", 27);
    add("He3", 27);
    add("SDP(8,4,3)", 32);
    add("SDP(16,2,7)", 32);
    add("SDP(16,2,9)", 32);
    add("CP_D8D8", 32);
    add("CP_D8Q8", 32);
    add("A4xC2", 24);
    add("Q8xC3", 24);
    add("D8xC3", 24);
    add("A4xC3", 36);
    add("D6xD6", 36);
    add("A4xC2xC2", 48);
    add("SDP(8,8,3)", 64);
    add("SDP(16,4,3)", 64);
    add("Q8xQ8", 64);
    add("Q8xD8", 64);
    add("D8xD8", 64);
    add("Q8xC9", 72);
    add("SDP(9,9,4)", 81);
    add("SDP(27,3,10)", 81);
    add("He5", 125);
    add("SDP(25,5,6)", 125);

    std::sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.name < b.name;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].name == entries_[i - 1].name)
            throw std::logic_error("duplicate catalog entry " + entries_[i].name);
}

}  // namespace cdlat
