#pragma once

// Slow, dense reference implementations used to cross-check the library.
// Nothing here calls into linalg, homology or search.

#include <cstdint>
#include <utility>
#include <vector>

#include "groupwidth/complex.hpp"
#include "groupwidth/field.hpp"

namespace gw::oracle {

using Dense = std::vector<std::vector<long long>>;

/// Rank over Q by classical Bareiss elimination (exact division by the previous pivot).
std::size_t rank_q(const Dense& m);

/// Rank over F_p by plain Gauss-Jordan.
std::size_t rank_mod(const Dense& m, std::uint32_t p);

std::size_t rank(const Dense& m, const FieldSpec& field);

/// Dense d1 (vertices x edges) and d2 (edges x triangles) built from the
/// simplex lists directly.
Dense boundary1(const SimplicialComplex& k);
Dense boundary2(const SimplicialComplex& k);

Dense multiply(const Dense& a, const Dense& b);

std::size_t betti1(const SimplicialComplex& k, const FieldSpec& field);

/**
 * dim image(H1(C) -> H1(K)) for the full subcomplex C on `vertices`, as
 * rank[E_C | d2] - rank(d1 E_C) - rank(d2), where E_C selects the edges of
 * C. Uses Z1(C) + B1(K) = (C1(C) + B1(K)) cap ker d1, so no cycle basis is
 * needed.
 */
std::size_t image_rank(const SimplicialComplex& k, const std::vector<Vertex>& vertices, const FieldSpec& field);

/// Components of the full subgraph on `vertices` (BFS over the edge list).
std::vector<std::vector<Vertex>> components(const SimplicialComplex& k, const std::vector<Vertex>& vertices);

/// Max image rank over slab components, read off the definition.
std::size_t width(const SimplicialComplex& k, const std::vector<int>& labels, const FieldSpec& field);

bool valid_labels(const SimplicialComplex& k, const std::vector<int>& labels);

/// Minimum width over every valid labeling with values in 0..max_label
/// (min label 0), without pruning. max_label defaults to n - 1, which covers
/// every normalized labeling of a connected complex; any value at least the
/// graph diameter does too. At most 20000000 candidate vectors.
std::size_t brute_force_min(const SimplicialComplex& k, const FieldSpec& field, int max_label = -1);

/// Largest edge-path distance between two vertices (BFS from every vertex).
int diameter(const SimplicialComplex& k);

/// One representative edge list per isomorphism class of connected graphs on n vertices.
std::vector<std::vector<std::pair<int, int>>> connected_graphs(int n);

/// The graph as a 1-dimensional complex.
SimplicialComplex graph_complex(int n, const std::vector<std::pair<int, int>>& edges);

/// Clique complex of the graph.
SimplicialComplex flag_complex(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace gw::oracle
