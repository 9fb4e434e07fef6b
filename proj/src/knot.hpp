#pragma once

#include <string>
#include <vector>

#include "chord.hpp"

namespace mk {

struct Crossing {
    std::string over;
    std::string under_in;
    std::string under_out;
    int sign;  // +1 or -1
};

// Planar knot diagram as formal Wirtinger data: one crossing per line, arcs as
// string labels. Single-component validity is checked where the spec demands it.
class KnotDiagram {
public:
    KnotDiagram() = default;
    explicit KnotDiagram(std::vector<Crossing> crossings);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    std::vector<std::string> arcs() const;  // sorted, deduplicated
    bool has_arc(const std::string& arc) const;

    // number of closed strands traced along under_in -> under_out;
    // -1 if the under-role structure is not a disjoint union of cycles
    int component_count() const;

    KnotDiagram mirror() const;

    std::string serialize() const;
    static KnotDiagram parse(const std::string& text);

private:
    std::vector<Crossing> crossings_;
};

struct TanglePresentation {
    KnotDiagram diagram;
    std::vector<std::string> boundary;  // cut arcs b_0, ..., b_k
};

// Reconstruct the matched knot diagram of a chord diagram: each chord becomes a
// clasp of two equal-sign crossings on the four adjacent arcs. Arcs are named
// a0..a(2n-1) after the circle positions. Result is checked to be one component.
KnotDiagram chord_to_knot(const ChordDiagram& d);

TanglePresentation cut_to_tangle(const KnotDiagram& k, const std::vector<std::string>& cut_arcs);

// Union of the tangle with its mirror image: b_0 joined crossing-free, each
// further cut arc b_j replaced by a clasp region of |n_j| crossings of sign
// sgn(n_j). Arc labels are regenerated (a0, a1, ...). Errors if the result is
// not a single component.
KnotDiagram duplicate(const TanglePresentation& t, const std::vector<int>& params);

// parse/serialize of tangle files: knot format plus a 'boundary' line
std::string serialize_tangle(const TanglePresentation& t);
TanglePresentation parse_tangle(const std::string& text);

// true iff the crossings can be partitioned into same-sign pairs sharing an arc
// (the matched-diagram pairing used by the duplicate structural check)
bool has_matched_pairing(const KnotDiagram& k);

}  // namespace mk
