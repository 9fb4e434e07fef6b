#pragma once

#include <memory>
#include <vector>

#include "laurent.hpp"

namespace mk {

// Finitely generated ideal of Z[t,t^-1] supporting exact membership, triviality
// and equality queries. Internally the ideal is lifted to Z[t,s]/(ts-1) and a
// strong Groebner basis over Z is computed (Buchberger with S- and G-polynomials,
// degree-then-lex order with t > s); membership = normal form is zero.
class Ideal {
public:
    explicit Ideal(std::vector<LaurentPoly> gens);

    // Reduction-step budget shared by construction and queries; exceeding it
    // raises ErrorKind::WorkLimit instead of returning a wrong answer.
    static long long work_limit();
    static void set_work_limit(long long limit);

    // Unit-normalized, deduplicated, sorted.
    const std::vector<LaurentPoly>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_trivial() const { return trivial_; }
    bool contains(const LaurentPoly& f) const;
    bool equals(const Ideal& o) const;

    // Basis for display: canonicalized Laurent forms of the computed basis.
    std::vector<LaurentPoly> basis() const;

private:
    std::vector<LaurentPoly> gens_;
    bool trivial_ = false;                 // settled on a fast path or by the basis
    bool single_ = false;                  // one generator: membership by division
    struct Impl;
    std::shared_ptr<const Impl> impl_;     // lifted basis (absent on fast paths)
};

}  // namespace mk
