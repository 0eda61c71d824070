#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

// Parsed group-spec: a left-associative direct product of atoms.
// Grammar:  spec := term ("x" term)*
//           term := "C"int | "D"int | "Dic"int | "Q"int
//                 | "SDP(" int "," int "," int ")" | catalog-name
// Whitespace is ignored. "Q<n>" requires n to be a multiple of 4 and denotes
// the dicyclic group Dic(n/4).
struct GroupSpec {
    struct Atom {
        enum Kind { Cyclic, Dihedral, Dicyclic, Sdp, Named } kind = Cyclic;
        int a = 0, b = 0, c = 0;  // Cyclic/Dihedral/Dicyclic use a; Sdp uses (a,b,c)
        std::string name;         // Named

        std::string canonical() const;
        bool operator==(const Atom&) const = default;
    };

    std::vector<Atom> factors;

    std::string canonical() const;
    bool operator==(const GroupSpec&) const = default;
};

// Throws invalid_spec with the byte position of the problem.
GroupSpec parse_spec(const std::string& text);

// Builders for catalog-named atoms, keyed by name; each receives the
// max-order cap.
using NamedBuilders = std::map<std::string, std::function<Group(int)>>;

// Builds the group a spec denotes. The result's label equals the spec's
// canonical form. Unknown names throw invalid_parameter; algebraic
// precondition failures surface from the group constructors.
Group build_group(const GroupSpec& spec, const NamedBuilders& named,
                  int max_order = Group::kDefaultMaxOrder);

}  // namespace cdlat
