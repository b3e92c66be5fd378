#pragma once

#include <vector>

#include "pft/matrix.hpp"

namespace pft {

// U * M * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, U and V
// unimodular. rank = number of nonzero invariant factors.
struct SmithDecomposition {
    std::vector<Integer> invariant_factors;  // length min(rows, cols)
    IntMat U;                                // rows x rows
    IntMat V;                                // cols x cols
    std::size_t rank = 0;

    // Nontrivial torsion part: factors d_i with d_i > 1.
    std::vector<Integer> torsion() const {
        std::vector<Integer> t;
        for (auto& d : invariant_factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

SmithDecomposition smith_form(const IntMat& m);

// Basis of ker(M) as matrix columns (a saturated sublattice of Z^cols).
IntMat kernel_basis(const IntMat& m);

// Canonical row-style Hermite normal form: echelon rows with positive
// pivots, entries above each pivot reduced to [0, pivot); zero rows dropped.
// Two integer matrices have equal row lattices iff their HNFs are equal.
IntMat hermite_row_basis(const IntMat& m);

// Free quotient data for coker(M) = Z^rows / col-span(M): a projection
// matrix P (free_rank x rows) and a section S (rows x free_rank) with
// P * S = identity. An endomorphism T of Z^rows with T(im M) <= im M
// descends to P * T * S on the free quotient.
struct CokernelSplit {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    IntMat projection;  // free_rank x rows
    IntMat section;     // rows x free_rank
};

CokernelSplit cokernel_split(const IntMat& m);

}  // namespace pft
