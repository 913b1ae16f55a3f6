#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace gw {

using Vertex = std::int32_t;

/// Strictly increasing vertex tuple.
using Simplex = std::vector<Vertex>;

/**
 * Finite, immutable simplicial complex on the vertex ids 0..n-1.
 *
 * Simplices are stored per dimension as sorted, strictly increasing tuples,
 * and every face of a stored simplex is stored. Copies share the underlying
 * data, so a complex can be passed around by value and shared between
 * threads.
 */
class SimplicialComplex {
public:
    SimplicialComplex();

    std::size_t vertex_count() const noexcept;

    /// -1 for the empty complex.
    int dim() const noexcept;

    /// Simplices of dimension d in lexicographic order; empty for d > dim().
    const std::vector<Simplex>& simplices(int d) const;

    std::size_t count(int d) const noexcept;
    std::size_t simplex_count() const noexcept;

    bool contains(std::span<const Vertex> simplex) const;

    /// Position of `simplex` within simplices(simplex.size() - 1).
    std::optional<std::size_t> index_of(std::span<const Vertex> simplex) const;

    /// Sorted neighbour lists of the 1-skeleton.
    const std::vector<std::vector<Vertex>>& neighbors() const noexcept;

    /// Simplices that are not a proper face of another simplex.
    std::vector<Simplex> maximal_simplices() const;

    /// True when both handles refer to the same underlying storage.
    bool same_instance(const SimplicialComplex& other) const noexcept { return data_ == other.data_; }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    struct Data;
    explicit SimplicialComplex(std::shared_ptr<const Data> data);

    friend SimplicialComplex complex_from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);

    std::shared_ptr<const Data> data_;
};

/// Face closure of `maximal_simplices` on `vertex_count` vertices.
/// Throws Error(DegenerateSimplex) on a repeated vertex and
/// Error(VertexOutOfRange) on an id >= vertex_count.
SimplicialComplex build_complex(const std::vector<Simplex>& maximal_simplices, std::size_t vertex_count);

/// Assembles a complex from a face-closed list of increasing tuples
/// (duplicates allowed). Used by constructions that already produce closed
/// sets; no validation beyond sorting.
SimplicialComplex complex_from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);

/// Full subcomplex of a parent complex on a vertex subset.
///
/// Local vertex i corresponds to parent vertex `vertices()[i]`; since the
/// vertex set is kept sorted, the injection preserves order and local
/// simplices map to increasing parent tuples.
class Subcomplex {
public:
    Subcomplex(SimplicialComplex parent, std::vector<Vertex> vertices, SimplicialComplex local);

    const SimplicialComplex& parent() const noexcept { return parent_; }
    const SimplicialComplex& local() const noexcept { return local_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    Vertex to_parent(Vertex local_vertex) const { return vertices_.at(static_cast<std::size_t>(local_vertex)); }

    /// Simplices of dimension d written in parent vertex ids.
    std::vector<Simplex> parent_simplices(int d) const;

    bool empty() const noexcept { return vertices_.empty(); }

private:
    SimplicialComplex parent_;
    std::vector<Vertex> vertices_;
    SimplicialComplex local_;
};

/// Out-of-range ids in `vertex_set` are ignored; duplicates are collapsed.
Subcomplex induced_subcomplex(const SimplicialComplex& complex, std::span<const Vertex> vertex_set);

/// Components of the 1-skeleton, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& complex);

/// Same, reported in parent vertex ids.
std::vector<std::vector<Vertex>> connected_components(const Subcomplex& sub);

bool is_connected(const SimplicialComplex& complex);

long long euler_characteristic(const SimplicialComplex& complex);

}  // namespace gw
