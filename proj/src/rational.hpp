#pragma once

#include <string>
#include <vector>

#include "chord.hpp"
#include "laurent.hpp"

namespace mk {

// Continued fraction with even nonzero terms: p/q = 1/(b1 + 1/(b2 + ...)).
struct EvenCF {
    std::vector<long long> terms;
};

// Greedy expansion of p/q (coprime, 0 < |p/q| < 1) into an even continued
// fraction; when the reciprocal is an odd integer the larger even neighbour is
// taken (remainder pushed negative). Inputs with p and q both odd have no even
// expansion; the |q|-step limit then reports a domain error.
EvenCF even_cf(long long p, long long q);

// Exact evaluation, reduced; numerator/denominator pair with q > 0.
std::pair<Int, Int> cf_value(const EvenCF& cf);

struct RationalDiagram {
    ChordDiagram diagram;
    std::string support_id;  // last-added chord, the certified support chord
};

// Chord diagram of the rational knot of an even-length even CF, built from the
// elementary diagram of the last term pair by the two chord operations.
RationalDiagram rational_diagram(const EvenCF& cf);

}  // namespace mk
