#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "groupwidth/complex.hpp"
#include "groupwidth/field.hpp"
#include "groupwidth/linalg.hpp"

namespace gw {

/**
 * Simplicial boundary maps C2 -> C1 -> C0 with integer entries.
 *
 * Rows and columns follow the lexicographic order of `complex.simplices(d)`,
 * so `complex.index_of(tuple)` is the row/column position of a simplex.
 * Orientation is the increasing vertex order; omitting the j-th vertex of a
 * simplex contributes sign (-1)^j.
 */
struct BoundaryPair {
    SimplicialComplex complex;
    linalg::IntMatrix d1;  ///< vertices x edges
    linalg::IntMatrix d2;  ///< edges x triangles
};

BoundaryPair boundary_pair(const SimplicialComplex& complex);

std::size_t betti0(const SimplicialComplex& complex, const FieldSpec& field);
std::size_t betti1(const SimplicialComplex& complex, const FieldSpec& field);

/// Dimension of the image of H1(C; F) -> H1(K; F) with K = C.parent(),
/// computed as rank(Z1(C) + B1(K)) - rank(B1(K)) inside C1(K).
std::size_t image_rank_h1(const Subcomplex& sub, const FieldSpec& field);

/// As above against an explicit ambient complex. Throws
/// Error(NotASubcomplex) if some simplex of `sub` is missing from `ambient`.
std::size_t image_rank_h1(const SimplicialComplex& ambient, const Subcomplex& sub, const FieldSpec& field);

/**
 * Evaluates H1-image ranks of full subcomplexes through cohomology.
 *
 * Construction picks cocycles phi_1..phi_b vanishing on a spanning forest
 * whose classes form a basis of H^1(K; F). For a full subcomplex C the
 * image of H1(C) in H1(K) then has dimension equal to the rank of the
 * pairing matrix <phi_a, z> over the fundamental cycles z of a spanning
 * forest of C. This is the hot path used by width evaluation and search;
 * image_rank_h1 above is the direct chain-level computation.
 */
class H1Pairing {
public:
    H1Pairing(const SimplicialComplex& complex, const FieldSpec& field);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    const FieldSpec& field() const noexcept { return field_; }

    /// dim H1(K; F), equal to the number of basis cocycles.
    std::size_t betti1() const noexcept;

    /// Image rank of the full subcomplex on `vertices` (any order,
    /// duplicates not allowed). The set need not be connected.
    std::size_t image_rank(std::span<const Vertex> vertices) const;

    /// Value of cocycle `which` on every edge of K, reduced into F and
    /// written as integers (residues for F_p).
    std::vector<linalg::BigInt> cocycle(std::size_t which) const;

    class Impl;

private:
    SimplicialComplex complex_;
    FieldSpec field_;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace gw
