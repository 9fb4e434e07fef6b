#include <doctest.h>

#include <algorithm>

#include "alexander.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "knot.hpp"

using mk::ChordDiagram;
using mk::KnotDiagram;
using mk::LaurentPoly;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

LaurentPoly delta(const KnotDiagram& k) {
    return mk::alexander_polynomial(mk::build_matrix_wirtinger(k));
}

}  // namespace

TEST_CASE("every catalog name resolves and its payload is valid") {
    auto names = mk::catalog_names();
    CHECK(!names.empty());
    for (auto name : names) {
        // template names list a placeholder parameter; substitute one
        auto ph = name.find("<n1>");
        if (ph != std::string::npos) name = name.substr(0, ph) + "2";
        mk::CatalogEntry e = mk::catalog_get(name);
        CHECK(e.name == name);
        CHECK(!e.provenance.empty());
        std::string text = e.serialize_payload();
        CHECK(!text.empty());
        // payload round-trips through its own file format
        if (e.is_chord()) {
            CHECK(ChordDiagram::parse(text) == std::get<ChordDiagram>(e.payload));
        } else if (e.is_knot()) {
            CHECK(KnotDiagram::parse(text).serialize() == text);
        } else {
            CHECK(mk::serialize_tangle(mk::parse_tangle(text)) == text);
        }
    }
}

TEST_CASE("catalog values") {
    CHECK(delta(mk::chord_to_knot(std::get<ChordDiagram>(mk::catalog_get("unknot").payload))) ==
          P("1"));
    CHECK(delta(mk::chord_to_knot(
              std::get<ChordDiagram>(mk::catalog_get("trefoil-cd").payload))) ==
          P("1 - t + t^2"));
    CHECK(delta(mk::chord_to_knot(
              std::get<ChordDiagram>(mk::catalog_get("figure8-cd").payload))) ==
          P("1 - 3t + t^2"));
    CHECK(delta(std::get<KnotDiagram>(mk::catalog_get("trefoil-pd").payload)) ==
          P("1 - t + t^2"));
}

TEST_CASE("8_20 and the twist family") {
    KnotDiagram k820 = std::get<KnotDiagram>(mk::catalog_get("8_20").payload);
    CHECK(k820.crossings().size() == 8);
    CHECK(delta(k820) == P("1 - 2t + 3t^2 - 2t^3 + t^4"));  // (t^2 - t + 1)^2
    CHECK(mk::elementary_ideal(mk::build_matrix_wirtinger(k820), 2).is_trivial());

    // 10_140 = the next twist; E_2 = (t^2 - t + 1, 2), nontrivial
    KnotDiagram k10140 = std::get<KnotDiagram>(mk::catalog_get("10_140").payload);
    CHECK(k10140.crossings().size() == 10);
    CHECK(delta(k10140) == P("1 - 2t + 3t^2 - 2t^3 + t^4"));
    mk::Ideal e2 = mk::elementary_ideal(mk::build_matrix_wirtinger(k10140), 2);
    CHECK(!e2.is_trivial());
    CHECK(e2.equals(mk::Ideal({P("t^2 - t + 1"), P("2")})));
    // aliases agree with the twist-family entries
    CHECK(std::get<KnotDiagram>(mk::catalog_get("milnor-fox:2").payload).serialize() ==
          k820.serialize());
    CHECK(std::get<KnotDiagram>(mk::catalog_get("milnor-fox:4").payload).serialize() ==
          k10140.serialize());
}

TEST_CASE("kanenobu entries") {
    KnotDiagram k = std::get<KnotDiagram>(mk::catalog_get("kanenobu:2").payload);
    CHECK(delta(k) == P("1 - 6t + 11t^2 - 6t^3 + t^4"));  // (t^2 - 3t + 1)^2
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(mk::catalog_get("8_18"), mk::Error);  // reserved, not shipped
    try {
        mk::catalog_get("no-such-knot");
        FAIL("expected an error");
    } catch (const mk::Error& e) {
        // the message lists the available names
        CHECK(std::string(e.what()).find("trefoil-cd") != std::string::npos);
    }
    CHECK_THROWS_AS(mk::catalog_get("milnor-fox:3"), mk::Error);   // odd parameter
    CHECK_THROWS_AS(mk::catalog_get("milnor-fox:x"), mk::Error);
    CHECK_THROWS_AS(mk::catalog_get("milnor-fox:0"), mk::Error);
}
