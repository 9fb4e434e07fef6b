#pragma once

#include <string>
#include <vector>

#include "chord.hpp"
#include "ideal.hpp"
#include "knot.hpp"
#include "laurent.hpp"

namespace mk {

// free-group word: (generator, exponent) letters
using Word = std::vector<std::pair<std::string, int>>;

// Abelianized Fox derivative d(word)/d(gen) in Z[t,t^-1] (every generator |-> t).
LaurentPoly fox_derivative(const Word& word, const std::string& gen);

struct PresentationMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<LaurentPoly>> entries;

    int rows() const { return (int)entries.size(); }
    int cols() const { return (int)col_labels.size(); }
    std::string to_string() const;  // aligned grid with labels
};

// One Wirtinger relator per crossing, one column per arc; the oracle path.
PresentationMatrix build_matrix_wirtinger(const KnotDiagram& k);

// Per-chord stencil rows written into the four adjacent arc columns; must agree
// with the Wirtinger builder on every elementary ideal.
PresentationMatrix build_matrix_stencil(const ChordDiagram& d);

// The fixed 2x4 stencil for a (placement, sign) pair, columns ordered by arc
// positions (p-1, p, q-1, q).
std::vector<std::vector<LaurentPoly>> chord_stencil(Placement placement, int sign);

// Ideal generated by all minors of order cols - m (zero ideal if the order
// exceeds the row count, unit ideal if the order is <= 0). Unit pivots are
// eliminated first; this preserves every elementary ideal.
Ideal elementary_ideal(const PresentationMatrix& q, int m);

// Generator of E_1 up to units: lp_normalize of the gcd of the order cols-1 minors.
LaurentPoly alexander_polynomial(const PresentationMatrix& q);

// Chords whose row deletion leaves a unit minor of order 2n-2 in the stencil matrix.
std::vector<std::string> support_chords(const ChordDiagram& d);

struct Theorem1Report {
    bool trivial;              // E_k is the unit ideal
    bool contains_t_plus_1;    // meaningful only when nontrivial; must be false
};

// Computes E_k of the diagram and checks the t+1 exclusion; a positive
// membership is an internal error (the theory forbids it for these diagrams).
Theorem1Report theorem1_check(const ChordDiagram& d, int k);

// determinant up to a unit factor (rows are rescaled to clear negative
// exponents), by fraction-free elimination
LaurentPoly det_up_to_unit(std::vector<std::vector<LaurentPoly>> m);

}  // namespace mk
