#pragma once

#include <stdexcept>
#include <string>

namespace cdlat {

// Base class for all toolkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric argument is out of range (zero order, bad element index, non-prime p, ...).
struct invalid_parameter : error {
    using error::error;
};

// A construction input fails its algebraic side condition
// (t^n != 1 mod m, a map that is not an automorphism/homomorphism, ...).
struct invalid_action : error {
    using error::error;
};

// quotient() was asked to factor by a non-normal subgroup.
struct not_normal : error {
    using error::error;
};

// A configured cap (group order, subgroup count, Hasse size) was exceeded.
struct capacity_error : error {
    capacity_error(const std::string& what, long long partial = -1)
        : error(what), partial_count(partial) {}
    long long partial_count;  // subgroups found before giving up, -1 if n/a
};

// A member set handed to the modularity check is not meet/join-closed.
struct not_a_sublattice : error {
    using error::error;
};

// An invariant that is mathematically guaranteed failed: enumeration bug signal.
struct internal_inconsistency : error {
    using error::error;
};

// Group-spec text failed to parse; position is the byte offset of the problem.
struct invalid_spec : error {
    invalid_spec(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Requested output needs structure that was not built (e.g. DOT without Hasse edges).
struct unsupported : error {
    using error::error;
};

}  // namespace cdlat
