// Buchberger's algorithm over Q with lex order, sized for the small
// elimination ideals produced by line propagation.
#pragma once

#include <vector>

#include "netforge/multipoly.hpp"

namespace netforge::algebra {

struct Ideal {
    Ring ring;
    std::vector<MultiPoly> generators;  // nonzero, content-normalized

    Ideal(Ring r, std::vector<MultiPoly> gens);
};

// Remainder of p on division by the basis (multivariate division
// algorithm, lex order).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis);

// Reduced lex Groebner basis. Guards: at most 8 variables actually used
// across the generators and at most 40 generators; beyond that the
// caller should eliminate by propagation first.
std::vector<MultiPoly> groebner_basis(const Ideal& ideal);

// Whether the ideal is all of Q[x1..xn], i.e. the basis is {1}; an
// inconsistent (empty-variety, over Qbar) polynomial system.
bool ideal_is_trivial(const Ideal& ideal);

}  // namespace netforge::algebra
