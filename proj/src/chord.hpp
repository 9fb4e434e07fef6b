#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mk {

enum class Placement { Inner, Outer };

struct Chord {
    std::string id;
    Placement placement;
    int sign;  // +1 or -1
    int p, q;  // endpoint positions, 0 <= p < q < 2n
};

struct IntersectionGraph {
    struct Vertex {
        std::string id;
        Placement placement;
        int sign;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;  // interleaving chords
};

// Signed chord diagram on an oriented circle with 2n labeled endpoint positions.
// Chords of equal placement may not interleave (the intersection graph is
// bipartite with parts inner/outer).
class ChordDiagram {
public:
    ChordDiagram() = default;
    // Validates endpoints and the same-placement non-interleaving rule.
    explicit ChordDiagram(std::vector<Chord> chords);

    int n() const { return (int)chords_.size(); }
    const std::vector<Chord>& chords() const { return chords_; }
    const Chord& chord(const std::string& id) const;
    bool has_chord(const std::string& id) const;

    // true iff all chords share one placement (or the diagram is empty)
    bool is_trivial_diagram() const;

    IntersectionGraph intersection_graph() const;
    bool graph_connected() const;

    // Add a chord crossing `target` only: its endpoints flank one endpoint of
    // target (the smaller one unless `endpoint` names the other); placement is
    // forced opposite to target's. Returns the new diagram and the new chord id.
    ChordDiagram apply_op1(const std::string& target, int sign, std::string* new_id = nullptr,
                           std::optional<int> endpoint = std::nullopt) const;

    // Add a chord nesting around `target` (endpoints just outside target's),
    // same placement, duplicating target's neighborhood in the graph.
    ChordDiagram apply_op2(const std::string& target, int sign, std::string* new_id = nullptr) const;

    std::string serialize() const;
    static ChordDiagram parse(const std::string& text);

    bool operator==(const ChordDiagram& o) const;

private:
    std::vector<Chord> chords_;  // sorted by smaller endpoint
    std::string fresh_id() const;
};

// endpoints (p,q) and (r,s) interleave on the circle
bool chords_interleave(int p, int q, int r, int s);

}  // namespace mk
