#pragma once

#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

// A subgroup of a parent group, stored as the bit set of its element indices.
// The parent pointer is non-owning; the Group must outlive the Subgroup.
struct Subgroup {
    const Group* parent = nullptr;
    Bitset members;
    int size = 0;

    bool contains(int i) const { return members.test(i); }
    std::vector<int> elements() const { return members.to_vector(); }
};

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);

// Wrap an already-closed member set (caller guarantees closure).
Subgroup subgroup_from_members(const Group& g, Bitset members);

// Smallest subgroup containing gens: closure under multiplication from the
// identity, worklist until fixpoint. Empty gens give the trivial subgroup.
Subgroup subgroup_generated(const Group& g, const std::vector<int>& gens);

// Closure of an already-closed base set extended by extra elements. This is
// the work-horse behind subgroup_generated and lattice joins.
Bitset closure_extend(const Group& g, const Bitset& base, const std::vector<int>& extra);

// {g in G : gh = hg for all h in H}.
Subgroup centralizer(const Group& g, const Subgroup& h);

// Z(G) = centralizer of the whole group.
Subgroup center(const Group& g);

// Subgroup generated by {g : g^p = e}. p must be a prime dividing |G|.
Subgroup omega1(const Group& g, int p);

// lcm of all element orders.
int exponent(const Group& g);

bool is_abelian_subgroup(const Group& g, const Subgroup& h);

// Conjugation scan: x h x^-1 in H for all x in G, h in H.
bool is_normal(const Group& g, const Subgroup& h);

// The set product A*B = {ab : a in A, b in B} (not a subgroup in general).
Bitset set_product(const Group& g, const Bitset& a, const Bitset& b);

// Quotient G/N on cosets of a normal subgroup; representatives are the
// minimal element index of each coset, and cosets are numbered in
// representative order (the identity coset is first). Throws not_normal.
Group quotient(const Group& g, const Subgroup& n, int max_order = Group::kDefaultMaxOrder);

}  // namespace cdlat
