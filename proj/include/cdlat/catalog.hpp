#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdlat/spec_parser.hpp"

namespace cdlat {

// One construction recipe. The name is a canonical spec string; the built
// group's label always equals it. Entries of order <= 16 carry their position
// in the standard numbering of the isomorphism classes of that order.
struct CatalogEntry {
    std::string name;
    int order = 0;
    std::optional<std::pair<int, int>> class_tag;  // (order, standard index)
    GroupSpec spec;
};

// The built-in recipe catalog: complete through order 16 (one entry per
// isomorphism class), all abelian groups through order 64, and an assortment
// of dihedral, dicyclic, semidirect and central-product families through
// order 128.
class Catalog {
public:
    static const Catalog& standard();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const std::string& name) const;
    std::vector<const CatalogEntry*> in_order_range(int lo, int hi) const;

    const NamedBuilders& named_atoms() const { return named_; }

    Group build(const CatalogEntry& entry, int max_order = Group::kDefaultMaxOrder) const;

    // Parse and build any spec string against this catalog's named atoms.
    Group build_spec(const std::string& text, int max_order = Group::kDefaultMaxOrder) const;

private:
    Catalog();
    std::vector<CatalogEntry> entries_;
    NamedBuilders named_;

    void add(const std::string& name, int order,
             std::optional<std::pair<int, int>> tag = std::nullopt);
    void add_abelian_through(int max_n);
};

}  // namespace cdlat
