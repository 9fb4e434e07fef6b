#include "catalog.hpp"

#include <sstream>

#include "error.hpp"

namespace mk {

namespace {

ChordDiagram elementary(int outer_sign, int inner_sign) {
    return ChordDiagram(std::vector<Chord>{{"1", Placement::Outer, outer_sign, 0, 2},
                                           {"2", Placement::Inner, inner_sign, 1, 3}});
}

KnotDiagram trefoil_pd() {
    std::vector<Crossing> cr;
    auto a = [](int i) { return "a" + std::to_string(i % 3); };
    for (int i = 0; i < 3; i++) cr.push_back({a(i + 2), a(i), a(i + 1), 1});
    return KnotDiagram(std::move(cr));
}

long long parse_param(const std::string& name, size_t colon) {
    std::string tail = name.substr(colon + 1);
    long long v = 0;
    try {
        size_t used = 0;
        v = std::stoll(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
        fail_domain("bad twist parameter in catalog name '" + name + "'");
    }
    // the named families are defined for positive even twist counts only
    if (v <= 0 || v % 2 != 0)
        fail_domain("twist parameter in '" + name + "' must be a positive even integer");
    return v;
}

}  // namespace

std::string CatalogEntry::serialize_payload() const {
    if (is_chord()) return std::get<ChordDiagram>(payload).serialize();
    if (is_knot()) return std::get<KnotDiagram>(payload).serialize();
    return serialize_tangle(std::get<TanglePresentation>(payload));
}

std::vector<std::string> catalog_names() {
    return {"unknot",         "trefoil-cd",   "figure8-cd",     "trefoil-pd",
            "trefoil-tangle", "figure8-tangle", "milnor-fox:<n1>", "kanenobu:<n1>",
            "8_20",           "10_140"};
}

CatalogEntry catalog_get(const std::string& name) {
    if (name == "unknot")
        return {name, ChordDiagram(std::vector<Chord>{{"1", Placement::Inner, -1, 0, 1}}),
                "single-chord diagram; reconstructs a 2-crossing unknot diagram"};
    if (name == "trefoil-cd")
        return {name, elementary(1, -1),
                "elementary diagram of the even continued fraction [2,-2] (trefoil)"};
    if (name == "figure8-cd")
        return {name, elementary(1, 1),
                "elementary diagram of the even continued fraction [2,2] (figure-eight)"};
    if (name == "trefoil-pd")
        return {name, trefoil_pd(), "standard 3-crossing positive trefoil diagram"};
    if (name == "trefoil-tangle")
        return {name, cut_to_tangle(trefoil_pd(), {"a0", "a1"}),
                "trefoil diagram cut along two arcs for the duplicate construction"};
    if (name == "figure8-tangle")
        return {name, cut_to_tangle(chord_to_knot(elementary(1, 1)), {"a0", "a1"}),
                "figure-eight diagram (from its chord diagram) cut along two arcs"};
    if (name.rfind("milnor-fox:", 0) == 0) {
        long long n1 = parse_param(name, name.find(':'));
        auto t = catalog_get("trefoil-tangle");
        return {name, duplicate(std::get<TanglePresentation>(t.payload), {(int)n1}),
                "duplicate of the trefoil tangle with twist parameter " + std::to_string(n1)};
    }
    if (name.rfind("kanenobu:", 0) == 0) {
        long long n1 = parse_param(name, name.find(':'));
        auto t = catalog_get("figure8-tangle");
        return {name, duplicate(std::get<TanglePresentation>(t.payload), {(int)n1}),
                "duplicate of the figure-eight tangle with twist parameter " + std::to_string(n1)};
    }
    if (name == "8_20") {
        auto e = catalog_get("milnor-fox:2");
        e.name = name;
        e.provenance += " (the knot 8_20)";
        return e;
    }
    if (name == "10_140") {
        auto e = catalog_get("milnor-fox:4");
        e.name = name;
        e.provenance += " (the knot 10_140)";
        return e;
    }
    if (name == "8_18")
        fail_domain("8_18 is reserved but not shipped: no machine-readable diagram is "
                    "available. Its expected second elementary ideal is (t^2 - t + 1); "
                    "verify a user-supplied diagram with `ideal --file <diagram> -k 2`.");
    std::ostringstream os;
    os << "unknown catalog name '" << name << "'; available:";
    for (auto& n : catalog_names()) os << " " << n;
    fail_domain(os.str());
}

}  // namespace mk
