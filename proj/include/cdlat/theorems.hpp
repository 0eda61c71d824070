#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/chermak_delgado.hpp"

namespace cdlat {

enum class Verdict { Pass, Fail, NotApplicable };
enum class TriState { True, False, Vacuous };

std::string to_string(Verdict v);
std::string to_string(TriState t);

struct Recognition {
    enum Kind { Cp, Q8, Neither } kind = Neither;
    int p = 0;  // the prime when kind == Cp
};

// Verdicts for the equal-cyclic-measure structure theorem and its rigidity
// corollary on one group. Conclusion names:
//   p_group               |G| is a prime power
//   omega1_equals_center  Omega_1(G) = Z(G)
//   common_value          the shared cyclic measure equals p^(n+1)
//   center_bound          k <= n - 2m + 2
//   divisibility          |<b>Z(G)| = p^(m+k-1) divides |C_G(<b>)| for every
//                         element b of maximal order
// When the hypothesis does not hold the conclusions are NotApplicable, never
// Fail.
struct TheoremReport {
    std::string group_label;
    TriState hypothesis = TriState::False;
    std::optional<long long> common_measure;
    std::optional<int> prime;      // p when |G| = p^n
    std::optional<int> n, m, k;    // |G| = p^n, exp(G) = p^m, |Z(G)| = p^k
    std::optional<int> bound_slack;  // (n - 2m + 2) - k
    std::map<std::string, Verdict> conclusions;

    // corollary section
    TriState condition_a = TriState::False;  // all nontrivial cyclic measures equal m*(G)
    TriState condition_b = TriState::False;  // all nontrivial abelian subgroups share a measure
    Verdict recognition = Verdict::NotApplicable;  // (a or b) forces C_p or Q8
    Recognition recognized;

    bool violation() const;  // hypothesis-true conclusion failure or failed recognition
};

// Ids of the nontrivial cyclic subgroups (a subgroup is cyclic when some
// member's element order equals the subgroup size).
std::vector<int> nontrivial_cyclic_subgroups(const SubgroupLattice& lattice);

// True iff all nontrivial cyclic subgroups share one measure; Vacuous for the
// trivial group.
TriState equal_cyclic_measure(const Group& g, const SubgroupLattice& lattice);

// Evaluates the hypothesis and, when it holds, all five conclusions.
TheoremReport verify_theorem(const Group& g, const SubgroupLattice& lattice);

// Fills the corollary section of an existing report: evaluates conditions (a)
// and (b) and, when either holds, checks that the group is recognized as C_p
// or Q8.
TheoremReport verify_corollary(const Group& g, const SubgroupLattice& lattice,
                               const CDReport& cd, TheoremReport report);

// Cp iff |G| is prime; Q8 iff |G| = 8, nonabelian, with exactly one element
// of order 2; Neither otherwise.
Recognition recognize_cp_or_q8(const Group& g);

}  // namespace cdlat
