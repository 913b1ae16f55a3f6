#include "groupwidth/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "groupwidth/error.hpp"

namespace gw {

SimplicialComplex generate_circle(int m)
{
    if (m < 3) throw Error(ErrorCode::TooFewVertices, "a simplicial circle needs at least 3 vertices, got " + std::to_string(m));
    std::vector<Simplex> edges;
    for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
    return build_complex(edges, static_cast<std::size_t>(m));
}

Vertex TorusGrid::vertex(std::span<const int> coords) const
{
    Vertex id = 0;
    for (int axis = dim - 1; axis >= 0; --axis) {
        const int c = ((coords[static_cast<std::size_t>(axis)] % resolution) + resolution) % resolution;
        id = id * resolution + c;
    }
    return id;
}

int TorusGrid::coordinate(Vertex v, int axis) const
{
    if (axis < 0 || axis >= dim) throw Error(ErrorCode::BadAxis, "axis " + std::to_string(axis) + " outside 0.." + std::to_string(dim - 1));
    for (int a = 0; a < axis; ++a) v /= resolution;
    return v % resolution;
}

TorusGrid generate_torus(int k, int n)
{
    if (k < 1) throw Error(ErrorCode::BadAxis, "torus dimension must be at least 1");
    if (n < 3) throw Error(ErrorCode::ResolutionTooSmall, "torus resolution must be at least 3, got " + std::to_string(n));
    TorusGrid grid;
    grid.dim = k;
    grid.resolution = n;

    std::size_t count = 1;
    for (int a = 0; a < k; ++a) count *= static_cast<std::size_t>(n);

    std::vector<Simplex> top;
    std::vector<int> base(static_cast<std::size_t>(k));
    std::vector<int> order(static_cast<std::size_t>(k));
    for (std::size_t id = 0; id < count; ++id) {
        std::size_t rest = id;
        for (auto& c : base) {
            c = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        std::iota(order.begin(), order.end(), 0);
        do {
            // chain base, base + e_order[0], base + e_order[0] + e_order[1], ...
            std::vector<int> point = base;
            Simplex s{grid.vertex(point)};
            for (int axis : order) {
                ++point[static_cast<std::size_t>(axis)];
                s.push_back(grid.vertex(point));
            }
            top.push_back(std::move(s));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    grid.complex = build_complex(top, count);
    return grid;
}

MorseLabeling tent_labeling(const TorusGrid& torus, int axis)
{
    if (axis < 0 || axis >= torus.dim) {
        throw Error(ErrorCode::BadAxis, "axis " + std::to_string(axis) + " outside 0.." + std::to_string(torus.dim - 1));
    }
    const int n = torus.resolution;
    std::vector<int> labels(torus.complex.vertex_count());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const int r = torus.coordinate(static_cast<Vertex>(v), axis);
        labels[v] = std::min(r, n - r);
    }
    return MorseLabeling(std::move(labels));
}

MorseLabeling circle_tent_labeling(int m)
{
    if (m < 3) throw Error(ErrorCode::TooFewVertices, "a simplicial circle needs at least 3 vertices, got " + std::to_string(m));
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) labels[static_cast<std::size_t>(r)] = std::min(r, m - r);
    return MorseLabeling(std::move(labels));
}

namespace {

void check_vertex(const SimplicialComplex& k, Vertex v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= k.vertex_count()) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " with vertex_count " + std::to_string(k.vertex_count()));
    }
}

// Copies every maximal simplex of `k` through `map` into `out`.
template <class Map>
void append_mapped(const SimplicialComplex& k, Map&& map, std::vector<Simplex>& out)
{
    for (const auto& s : k.maximal_simplices()) {
        Simplex t;
        for (Vertex v : s) t.push_back(map(v));
        out.push_back(std::move(t));
    }
}

const MorseLabeling& labels_of(const LabeledComplex& l)
{
    if (!l.labeling) throw Error(ErrorCode::MissingLabels, "spread_wedge needs labeled inputs");
    return *l.labeling;
}

}  // namespace

SimplicialComplex wedge(const SimplicialComplex& k1, Vertex v1, const SimplicialComplex& k2, Vertex v2)
{
    check_vertex(k1, v1);
    check_vertex(k2, v2);
    const auto n1 = static_cast<Vertex>(k1.vertex_count());
    std::vector<Simplex> top;
    append_mapped(k1, [](Vertex v) { return v; }, top);
    append_mapped(k2, [&](Vertex w) { return w == v2 ? v1 : n1 + (w < v2 ? w : w - 1); }, top);
    return build_complex(top, k1.vertex_count() + k2.vertex_count() - 1);
}

int min_arc_length(const LabeledComplex& l1, Vertex v1, const LabeledComplex& l2, Vertex v2)
{
    check_vertex(l1.complex, v1);
    check_vertex(l2.complex, v2);
    const auto& f1 = labels_of(l1);
    const auto& f2 = labels_of(l2);
    // the arc climbs from f1(v1); the translated range of f2 must start at max f1 + 2 or above
    return (f1.max() - f1[static_cast<std::size_t>(v1)]) + (f2[static_cast<std::size_t>(v2)] - f2.min()) + 2;
}

LabeledComplex spread_wedge(const LabeledComplex& l1, Vertex v1, const LabeledComplex& l2, Vertex v2, int arc_len)
{
    const int needed = min_arc_length(l1, v1, l2, v2);
    if (arc_len < needed) {
        throw Error(ErrorCode::ArcTooShort, "arc of length " + std::to_string(arc_len) + " cannot separate the label ranges; need " +
                                                std::to_string(needed));
    }
    const auto& f1 = *l1.labeling;
    const auto& f2 = *l2.labeling;
    const auto n1 = static_cast<Vertex>(l1.complex.vertex_count());
    const auto n2 = static_cast<Vertex>(l2.complex.vertex_count());
    const Vertex arc_start = n1;
    const Vertex second_start = n1 + arc_len - 1;
    const int start_label = f1[static_cast<std::size_t>(v1)];
    const int shift = start_label + arc_len - f2[static_cast<std::size_t>(v2)];

    std::vector<Simplex> top;
    append_mapped(l1.complex, [](Vertex v) { return v; }, top);
    append_mapped(l2.complex, [&](Vertex w) { return second_start + w; }, top);
    std::vector<Vertex> arc{v1};
    for (int t = 1; t < arc_len; ++t) arc.push_back(arc_start + t - 1);
    arc.push_back(second_start + v2);
    for (std::size_t t = 0; t + 1 < arc.size(); ++t) top.push_back({arc[t], arc[t + 1]});

    const std::size_t total = static_cast<std::size_t>(second_start + n2);
    std::vector<int> labels(total);
    for (Vertex v = 0; v < n1; ++v) labels[static_cast<std::size_t>(v)] = f1[static_cast<std::size_t>(v)];
    for (int t = 1; t < arc_len; ++t) labels[static_cast<std::size_t>(arc_start + t - 1)] = start_label + t;
    for (Vertex w = 0; w < n2; ++w) labels[static_cast<std::size_t>(second_start + w)] = f2[static_cast<std::size_t>(w)] + shift;

    return {build_complex(top, total), MorseLabeling(std::move(labels))};
}

ProductComplex product_complex(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    ProductComplex out;
    out.first_count = k1.vertex_count();
    out.second_count = k2.vertex_count();
    const auto n2 = static_cast<Vertex>(out.second_count);

    std::vector<Simplex> top;
    const auto max1 = k1.maximal_simplices();
    const auto max2 = k2.maximal_simplices();
    for (const auto& s : max1) {
        for (const auto& t : max2) {
            const std::size_t p = s.size() - 1;
            const std::size_t q = t.size() - 1;
            // monotone lattice paths: choose which of the p + q steps advance along s
            std::vector<bool> steps(p + q, false);
            std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(p), true);
            std::sort(steps.begin(), steps.end());
            do {
                std::size_t i = 0;
                std::size_t j = 0;
                Simplex chain{s[0] * n2 + t[0]};
                for (bool along_first : steps) {
                    along_first ? ++i : ++j;
                    chain.push_back(s[i] * n2 + t[j]);
                }
                top.push_back(std::move(chain));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    out.complex = build_complex(top, out.first_count * out.second_count);
    return out;
}

MorseLabeling pullback_labeling(const ProductComplex& product, const MorseLabeling& f1)
{
    if (f1.size() != product.first_count) {
        throw Error(ErrorCode::InvalidLabeling, "labeling has " + std::to_string(f1.size()) + " entries, first factor has " +
                                                    std::to_string(product.first_count) + " vertices");
    }
    std::vector<int> labels(product.complex.vertex_count());
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = f1[static_cast<std::size_t>(product.first(static_cast<Vertex>(v)))];
    return MorseLabeling(std::move(labels));
}

Word parse_word(std::string_view text, int num_generators)
{
    Word w;
    for (char ch : text) {
        int letter = 0;
        if (ch >= 'a' && ch <= 'z') {
            letter = ch - 'a' + 1;
        } else if (ch >= 'A' && ch <= 'Z') {
            letter = -(ch - 'A' + 1);
        } else {
            throw Error(ErrorCode::BadWord, std::string("unexpected character '") + ch + "'");
        }
        if (std::abs(letter) > num_generators) {
            throw Error(ErrorCode::BadWord, std::string("letter '") + ch + "' beyond " + std::to_string(num_generators) + " generators");
        }
        w.push_back(letter);
    }
    return w;
}

SimplicialComplex presentation_complex(int num_generators, const std::vector<Word>& relators)
{
    if (num_generators < 0) throw Error(ErrorCode::BadWord, "negative generator count");
    std::vector<Simplex> top;
    const Vertex base = 0;
    auto circle_vertex = [](int gen, int k) { return static_cast<Vertex>(2 * gen - 2 + k); };  // k = 1, 2
    for (int g = 1; g <= num_generators; ++g) {
        top.push_back({base, circle_vertex(g, 1)});
        top.push_back({circle_vertex(g, 1), circle_vertex(g, 2)});
        top.push_back({base, circle_vertex(g, 2)});
    }
    Vertex next = static_cast<Vertex>(2 * num_generators + 1);
    for (const auto& word : relators) {
        if (word.empty()) throw Error(ErrorCode::EmptyRelator, "relator words must be nonempty");
        std::vector<Vertex> outer;
        for (int letter : word) {
            const int g = std::abs(letter);
            if (g == 0 || g > num_generators) throw Error(ErrorCode::BadWord, "letter " + std::to_string(letter) + " out of range");
            outer.push_back(base);
            if (letter > 0) {
                outer.push_back(circle_vertex(g, 1));
                outer.push_back(circle_vertex(g, 2));
            } else {
                outer.push_back(circle_vertex(g, 2));
                outer.push_back(circle_vertex(g, 1));
            }
        }
        const std::size_t len = outer.size();
        const Vertex inner0 = next;
        const auto cone = static_cast<Vertex>(inner0 + static_cast<Vertex>(len));
        auto inner = [&](std::size_t j) { return static_cast<Vertex>(inner0 + static_cast<Vertex>(j % len)); };
        for (std::size_t j = 0; j < len; ++j) {
            const Vertex c0 = outer[j];
            const Vertex c1 = outer[(j + 1) % len];
            top.push_back({c0, c1, inner(j)});
            top.push_back({c1, inner(j), inner(j + 1)});
            top.push_back({cone, inner(j), inner(j + 1)});
        }
        next = cone + 1;
    }
    return build_complex(top, static_cast<std::size_t>(next));
}

}  // namespace gw
