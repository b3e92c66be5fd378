#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pft/fox.hpp"
#include "pft/laurent.hpp"
#include "pft/matrix.hpp"
#include "pft/smith.hpp"

namespace pft {

struct SurfaceSpec {
    unsigned genus = 0;
    unsigned punctures = 0;

    int euler_characteristic() const {
        return 2 - 2 * static_cast<int>(genus) - static_cast<int>(punctures);
    }
    bool closed() const { return punctures == 0; }
    // Rank of H_1: 2g for the closed surface, 2g + p - 1 for the free
    // group of a punctured one.
    std::size_t h1_rank() const {
        return 2 * genus + (punctures > 0 ? punctures - 1 : 0);
    }
    std::size_t generator_count() const { return h1_rank(); }
};

// One-vertex CW model: ranks (1, 2g, 1) with d2 the Fox column of the
// surface relator for closed surfaces, ranks (1, 2g+p-1, 0) for punctured
// ones.
struct SurfaceComplex {
    SurfaceSpec surface;
    std::vector<std::size_t> ranks;  // C_0, C_1, and C_2 when closed
    Mat<GroupRingElem> d1;           // 1 x n
    Mat<GroupRingElem> d2;           // n x 1, closed case only
};

SurfaceComplex surface_chain_complex(const SurfaceSpec& s);

// Integer representation of the surface group generators plus the stable
// letter; all images must have finite multiplicative order (checked
// against the declared group order at validation).
struct Representation {
    std::size_t dim = 1;
    std::vector<IntMat> generator_images;
    IntMat stable_letter_image;
    Integer declared_group_order = 1;

    static Representation trivial(std::size_t generator_count);
    bool trivial_on_surface() const;
};

struct FiberedPresentation {
    SurfaceSpec surface;
    IntMat monodromy_h1;  // action on H_1(S; Z), invertible over Z
    Representation rep;

    void validate() const;
};

struct TwistedDegree {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    // Monodromy action on the free quotient. Always present in degree 0;
    // in degrees 1 and 2 it is derived from the ingested H_1 matrix, which
    // pins it down exactly when the representation restricted to the
    // surface group is trivial.
    std::optional<IntMat> action;
};

struct TwistedHomologyResult {
    std::vector<TwistedDegree> degrees;  // indices 0..2
};

TwistedHomologyResult twisted_homology(const FiberedPresentation& fp);

// P_n(t) = det(1 - t f_n^free); constant coefficient 1, leading +-1.
LaurentZ monodromy_char_poly(const FiberedPresentation& fp, unsigned degree);

// Delta_n in doteq-canonical form over Q (equals P_n up to units).
LaurentQ twisted_alexander(const FiberedPresentation& fp, unsigned degree);

struct TorsionResult {
    bool zero = false;      // degenerate input: some P_n = 0
    LaurentQ numerator;     // canonical form of prod over odd degrees
    LaurentQ denominator;   // canonical form of prod over even degrees
};

TorsionResult reidemeister_torsion(const FiberedPresentation& fp);

// Whether Delta_1 mod q is nonzero (finite-dimensional degree-1 twisted
// homology over F_q), the per-representation fiberedness test.
bool fiberedness_evidence(const FiberedPresentation& fp, const Integer& q);

struct DualityReport {
    struct Pairing {
        std::string name;
        bool pass = false;
    };
    std::vector<Pairing> pairings;
    bool all_pass = true;
};

// Checks Delta_n(t) = Delta-bar_n(1/t) pairings (transpose-inverse
// representation), in the boundary or closed pattern.
DualityReport duality_check(const FiberedPresentation& fp);

// Helper for ingesting rational representations: conjugates a finite-order
// rational matrix family onto an invariant lattice, yielding GL(k, Z)
// images (the common-lattice construction).
std::vector<IntMat> realize_over_integers(const std::vector<RatMat>& images);

}  // namespace pft
