#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chord.hpp"
#include "knot.hpp"

namespace mk {

struct CatalogEntry {
    std::string name;
    std::variant<ChordDiagram, KnotDiagram, TanglePresentation> payload;
    std::string provenance;

    bool is_chord() const { return std::holds_alternative<ChordDiagram>(payload); }
    bool is_knot() const { return std::holds_alternative<KnotDiagram>(payload); }
    bool is_tangle() const { return std::holds_alternative<TanglePresentation>(payload); }
    std::string serialize_payload() const;
};

// Names: unknot, trefoil-cd, figure8-cd, trefoil-pd, trefoil-tangle,
// figure8-tangle, milnor-fox:<n1>, kanenobu:<n1>, 8_20, 10_140.
// 8_18 is reserved but not shipped (no machine-readable source diagram).
CatalogEntry catalog_get(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace mk
