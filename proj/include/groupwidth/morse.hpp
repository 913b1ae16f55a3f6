#pragma once

#include <climits>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "groupwidth/complex.hpp"
#include "groupwidth/field.hpp"
#include "groupwidth/homology.hpp"

namespace gw {

/// Integer label per vertex. Validity (every simplex spans at most two
/// consecutive integers) is relative to a complex; see validate_labeling.
class MorseLabeling {
public:
    MorseLabeling() = default;
    explicit MorseLabeling(std::vector<int> labels) : labels_(std::move(labels)) {}

    static MorseLabeling constant(std::size_t vertex_count, int value = 0)
    {
        return MorseLabeling(std::vector<int>(vertex_count, value));
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    int operator[](std::size_t v) const { return labels_[v]; }
    const std::vector<int>& values() const noexcept { return labels_; }

    int min() const;
    int max() const;

    MorseLabeling translated(int offset) const;
    MorseLabeling negated() const;

    /// Translate so the minimum label is 0.
    MorseLabeling normalized() const { return empty() ? *this : translated(-min()); }

    friend auto operator<=>(const MorseLabeling&, const MorseLabeling&) = default;

private:
    std::vector<int> labels_;
};

/// Simplices whose labels span more than one unit; empty means valid.
/// Throws Error(InvalidLabeling) if the label count differs from the vertex count.
std::vector<Simplex> validate_labeling(const SimplicialComplex& complex, const MorseLabeling& labeling);

/// Full subcomplex on the vertices labeled exactly i.
Subcomplex level(const SimplicialComplex& complex, const MorseLabeling& labeling, int i);

/// Full subcomplex on the vertices labeled i or i + 1.
Subcomplex slab(const SimplicialComplex& complex, const MorseLabeling& labeling, int i);

/// Quotient graph Q_f: one vertex per component of a slab, one edge per
/// component of a level, joined by inclusion.
struct QuotientGraph {
    struct Node {
        int slab;
        int component;
        std::vector<Vertex> members;
    };
    struct Edge {
        int level;
        int component;
        std::vector<Vertex> members;
        std::size_t lower;  ///< node in slab level - 1
        std::size_t upper;  ///< node in slab level
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    MorseLabeling labeling;

    /// theta on slab i: the node whose component contains v, if v lies in slab i.
    std::optional<std::size_t> theta_vertex(int slab_index, Vertex v) const;

    /// theta on level i: the edge whose component contains v, if v is labeled i.
    std::optional<std::size_t> theta_level(int level_index, Vertex v) const;

    // per K-vertex lookups backing theta
    std::vector<std::size_t> node_below;  ///< node in slab f(v) - 1
    std::vector<std::size_t> node_above;  ///< node in slab f(v)
    std::vector<std::size_t> edge_of;     ///< edge at level f(v)
};

/// Throws Error(InvalidLabeling) for an invalid labeling and
/// Error(NotConnected) when the complex is disconnected.
QuotientGraph quotient_graph(const SimplicialComplex& complex, const MorseLabeling& labeling);

/// #edges - #nodes + #components of the graph.
long long qf_betti1(const QuotientGraph& graph);

enum class QfClass { Tree, Circle, Other };

const char* to_string(QfClass cls);

QfClass classify_betti1(long long betti1);

/**
 * Homological connected width rank of one labeled complex.
 *
 * Ranks are dimensions of H1-images over the chosen field; they bound the
 * subgroup ranks of the fundamental-group definition from below and agree
 * with them when pi_1 is abelian.
 */
struct WidthReport {
    struct SlabRank {
        int slab;
        int component;
        std::size_t size;
        std::size_t rank;
    };

    FieldSpec field = FieldSpec::rationals();
    std::vector<SlabRank> per_slab;  ///< sorted by slab, then component
    std::size_t max_rank = 0;
    std::vector<std::pair<int, int>> argmax;
    std::size_t qf_nodes = 0;
    std::size_t qf_edges = 0;
    long long qf_betti1 = 0;
    QfClass qf_class = QfClass::Tree;
    MorseLabeling labeling;
};

WidthReport hcwr_value(const SimplicialComplex& complex, const MorseLabeling& labeling, const FieldSpec& field);

/// Reuses a prepared pairing (its complex and field) across many labelings.
WidthReport hcwr_value(const H1Pairing& pairing, const MorseLabeling& labeling);

/// Label value marking a vertex as not yet assigned in partial evaluations.
inline constexpr int kUnassigned = INT_MIN;

/**
 * Allocation-light width scoring for search loops.
 *
 * Labels may contain kUnassigned; such vertices are left out of every slab,
 * which makes the score of a partial assignment a lower bound for each of
 * its completions (slab components only grow, and image rank is monotone).
 */
class WidthEvaluator {
public:
    struct Score {
        std::size_t max_rank = 0;
        std::size_t count_at_max = 0;
        std::size_t rank_sum = 0;

        friend auto operator<=>(const Score&, const Score&) = default;
    };

    WidthEvaluator(const SimplicialComplex& complex, const FieldSpec& field);

    const SimplicialComplex& complex() const noexcept { return pairing_.complex(); }
    const H1Pairing& pairing() const noexcept { return pairing_; }
    std::size_t betti1() const noexcept { return pairing_.betti1(); }

    Score score(std::span<const int> labels) const;

    /// Max slab-component rank; returns early once the value reaches `stop_at`.
    std::size_t max_rank(std::span<const int> labels, std::size_t stop_at = static_cast<std::size_t>(-1)) const;

private:
    template <class Visit>
    void for_each_component(std::span<const int> labels, Visit&& visit) const;

    H1Pairing pairing_;
};

}  // namespace gw
