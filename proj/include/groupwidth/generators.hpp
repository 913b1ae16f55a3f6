#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "groupwidth/complex.hpp"
#include "groupwidth/morse.hpp"

namespace gw {

/// A complex with an optional labeling that, when present, is valid on it.
struct LabeledComplex {
    SimplicialComplex complex;
    std::optional<MorseLabeling> labeling;
};

/// m-cycle on vertices 0..m-1. Throws Error(TooFewVertices) for m < 3.
SimplicialComplex generate_circle(int m);

/// Freudenthal triangulation of the k-torus on the grid (Z/n)^k.
struct TorusGrid {
    int dim = 0;
    int resolution = 0;
    SimplicialComplex complex;

    /// Vertex id of the grid point; coordinates are reduced mod resolution.
    Vertex vertex(std::span<const int> coords) const;
    int coordinate(Vertex v, int axis) const;
};

/// Throws Error(ResolutionTooSmall) for n < 3 and Error(BadAxis) for k < 1.
TorusGrid generate_torus(int k, int n);

/// label(v) = min(r, n - r) with r the coordinate of v along `axis`.
/// Throws Error(BadAxis) when the axis is outside 0..k-1.
MorseLabeling tent_labeling(const TorusGrid& torus, int axis = 0);

/// The same tent on an m-cycle from generate_circle (a 1-torus).
MorseLabeling circle_tent_labeling(int m);

/// Wedge sum identifying v1 in k1 with v2 in k2. Vertices of k1 keep their
/// ids; the remaining vertices of k2 follow in order.
SimplicialComplex wedge(const SimplicialComplex& k1, Vertex v1, const SimplicialComplex& k2, Vertex v2);

/// Smallest arc length spread_wedge accepts for these inputs.
int min_arc_length(const LabeledComplex& l1, Vertex v1, const LabeledComplex& l2, Vertex v2);

/**
 * Joins two labeled complexes by a monotonically labeled arc.
 *
 * The second labeling is translated so that the arc, which climbs by one per
 * edge from l1's label at v1, arrives at v2 exactly; `arc_len` must leave a
 * gap of at least two between the label ranges so that no slab meets both
 * pieces. Result ids: l1 vertices, then the arc_len - 1 interior arc
 * vertices, then l2 vertices. Throws Error(ArcTooShort) or
 * Error(MissingLabels).
 */
LabeledComplex spread_wedge(const LabeledComplex& l1, Vertex v1, const LabeledComplex& l2, Vertex v2, int arc_len);

/// Staircase triangulation of |K1| x |K2|; vertex (a, b) has id a * |V(K2)| + b.
struct ProductComplex {
    SimplicialComplex complex;
    std::size_t first_count = 0;
    std::size_t second_count = 0;

    Vertex first(Vertex v) const { return static_cast<Vertex>(static_cast<std::size_t>(v) / second_count); }
    Vertex second(Vertex v) const { return static_cast<Vertex>(static_cast<std::size_t>(v) % second_count); }
};

ProductComplex product_complex(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// label(a, b) = f1(a). Throws Error(InvalidLabeling) on a size mismatch.
MorseLabeling pullback_labeling(const ProductComplex& product, const MorseLabeling& f1);

/// Relator letters are +g / -g for generator g (1-based).
using Word = std::vector<int>;

/// Parses "aBa" style words: lowercase letter = generator, uppercase = inverse.
/// Throws Error(BadWord) on other characters or letters beyond num_generators.
Word parse_word(std::string_view text, int num_generators);

/**
 * Simplicial 2-complex homotopy equivalent to the presentation complex.
 *
 * Each generator is a 3-edge circle through the base vertex 0. A relator of
 * length L bounds a disk built from an annulus (outer ring = the 3L-edge
 * boundary path, inner ring = 3L new vertices) and a cone on the inner ring.
 * Throws Error(EmptyRelator) or Error(BadWord).
 */
SimplicialComplex presentation_complex(int num_generators, const std::vector<Word>& relators);

}  // namespace gw
