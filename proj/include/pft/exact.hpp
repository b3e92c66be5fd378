#pragma once

#include <utility>

#include "pft/laurent.hpp"
#include "pft/matrix.hpp"
#include "pft/smith.hpp"

namespace pft {

// Order of the module presented by P (rows = generators, columns =
// relations): gcd of all maximal (rows x rows) minors, in doteq-canonical
// form. Zero when the module has positive rank.
LaurentZ module_order(const PolyMat& p);

// Res(t^m - 1, f) = product of f over all m-th roots of unity, exact for
// Laurent input (the t^k part contributes a sign). Multiplicative in f.
// Throws on f = 0.
Integer cyclic_resultant(const LaurentZ& f, unsigned long m);

// After normalizing the lowest exponent to 0 with coefficients c_0..c_r:
// true iff c_i = c_{r-i} for all i.
bool is_reciprocal(const LaurentZ& f);

struct AnnihilatorWitness {
    LaurentZ a;   // nonzero
    PolyMat q;    // P * Q * P = a * P holds exactly
};

// Witness for the matrix identity P Q P = a P: a maximal nonsingular
// square submatrix acts as the pivot block; its adjugate, placed at the
// transposed position, is a one-sided generalized inverse scaled by
// a = det(block). The zero matrix yields (1, 0).
AnnihilatorWitness annihilator_witness(const PolyMat& p);

}  // namespace pft
