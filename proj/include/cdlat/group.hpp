#pragma once

#include <string>
#include <vector>

#include "cdlat/errors.hpp"

namespace cdlat {

struct ElementInfo {
    int index;
    int order;    // multiplicative order
    int inverse;  // index of the two-sided inverse
};

// An explicit finite group: an n-by-n Cayley table over element indices
// 0..n-1. The table is the single source of truth; construction validates the
// group axioms in full (identity, inverses, associativity over all triples).
// Instances are immutable after construction and safe to share across threads.
class Group {
public:
    static constexpr int kDefaultMaxOrder = 512;

    // table[i][j] = index of g_i * g_j. Throws invalid_parameter when the
    // table is not a group table, capacity_error when n exceeds max_order.
    Group(std::vector<std::vector<int>> table, std::string label,
          int max_order = kDefaultMaxOrder);

    int order() const { return n_; }
    int identity() const { return identity_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

    // Least k >= 1 with g_i^k = identity. Throws invalid_parameter when i is
    // out of range.
    int element_order(int i) const;
    ElementInfo element_info(int i) const;

    bool is_abelian() const { return abelian_; }

    // g^e for integer e (negative exponents via the inverse).
    int power(int g, long long e) const;

    bool same_table(const Group& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    int n_ = 0;
    int identity_ = 0;
    bool abelian_ = true;
    std::vector<int> table_;  // flattened row-major n*n
    std::vector<int> inverse_;
    std::vector<int> order_;
    std::string label_;

    void validate_and_index(int max_order);
};

// C_n, label "C<n>".
Group make_cyclic(int n, int max_order = Group::kDefaultMaxOrder);

// Dihedral group of order two_n (two_n even, >= 2), label "D<two_n>".
Group make_dihedral(int two_n, int max_order = Group::kDefaultMaxOrder);

// Dicyclic group of order 4n: <a,b | a^(2n)=1, b^2=a^n, b a b^-1 = a^-1>.
// make_dicyclic(2) is Q8. Label "Q<4n>" when 4n is a power of two, else "Dic<n>".
Group make_dicyclic(int n, int max_order = Group::kDefaultMaxOrder);

// Direct product on index pairs flattened row-major, label "<G>x<H>".
Group direct_product(const Group& g, const Group& h,
                     int max_order = Group::kDefaultMaxOrder);

// <a,b | a^m = b^n = 1, b a b^-1 = a^t> realized on pairs (i,j) with
// (i,j)(i',j') = (i + t^j i' mod m, j + j' mod n). Requires gcd(t,m)=1 and
// t^n = 1 (mod m); label "SDP(<m>,<n>,<t>)".
Group semidirect_cyclic(int m, int n, int t, int max_order = Group::kDefaultMaxOrder);

// Semidirect product N x| H for an explicit action: action[h] is a permutation
// of N's elements, required to be an automorphism of N for every h, and
// h -> action[h] must be a homomorphism (checked pointwise).
Group semidirect_general(const Group& n_grp, const Group& h_grp,
                         const std::vector<std::vector<int>>& action,
                         int max_order = Group::kDefaultMaxOrder);

}  // namespace cdlat
