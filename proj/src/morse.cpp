#include "groupwidth/morse.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "groupwidth/error.hpp"

namespace gw {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void require_size(const SimplicialComplex& complex, const MorseLabeling& labeling)
{
    if (labeling.size() != complex.vertex_count()) {
        throw Error(ErrorCode::InvalidLabeling, "expected " + std::to_string(complex.vertex_count()) + " labels, got " +
                                                    std::to_string(labeling.size()));
    }
}

void require_valid(const SimplicialComplex& complex, const MorseLabeling& labeling)
{
    const auto violations = validate_labeling(complex, labeling);
    if (!violations.empty()) {
        std::string msg = std::to_string(violations.size()) + " simplices span more than one unit, first {";
        for (std::size_t j = 0; j < violations.front().size(); ++j) msg += (j ? "," : "") + std::to_string(violations.front()[j]);
        throw Error(ErrorCode::InvalidLabeling, msg + "}");
    }
}

// Components of the full subcomplex on `members` (sorted), ordered by smallest member.
std::vector<std::vector<Vertex>> components_within(const SimplicialComplex& complex, const std::vector<Vertex>& members)
{
    std::vector<char> inside(complex.vertex_count(), 0);
    for (Vertex v : members) inside[static_cast<std::size_t>(v)] = 1;
    std::vector<std::vector<Vertex>> out;
    for (Vertex start : members) {
        if (inside[static_cast<std::size_t>(start)] != 1) continue;
        std::vector<Vertex> comp{start};
        inside[static_cast<std::size_t>(start)] = 2;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : complex.neighbors()[static_cast<std::size_t>(comp[head])]) {
                if (inside[static_cast<std::size_t>(w)] == 1) {
                    inside[static_cast<std::size_t>(w)] = 2;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Vertex> vertices_with_labels(const MorseLabeling& labeling, int lo, int hi)
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < labeling.size(); ++v) {
        if (labeling[v] >= lo && labeling[v] <= hi) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace

int MorseLabeling::min() const
{
    if (labels_.empty()) throw Error(ErrorCode::MissingLabels, "empty labeling");
    return *std::min_element(labels_.begin(), labels_.end());
}

int MorseLabeling::max() const
{
    if (labels_.empty()) throw Error(ErrorCode::MissingLabels, "empty labeling");
    return *std::max_element(labels_.begin(), labels_.end());
}

MorseLabeling MorseLabeling::translated(int offset) const
{
    auto out = labels_;
    for (auto& l : out) l += offset;
    return MorseLabeling(std::move(out));
}

MorseLabeling MorseLabeling::negated() const
{
    auto out = labels_;
    for (auto& l : out) l = -l;
    return MorseLabeling(std::move(out));
}

std::vector<Simplex> validate_labeling(const SimplicialComplex& complex, const MorseLabeling& labeling)
{
    require_size(complex, labeling);
    std::vector<Simplex> violations;
    for (int d = 1; d <= complex.dim(); ++d) {
        for (const auto& s : complex.simplices(d)) {
            auto [lo, hi] = std::minmax_element(s.begin(), s.end(), [&](Vertex a, Vertex b) {
                return labeling[static_cast<std::size_t>(a)] < labeling[static_cast<std::size_t>(b)];
            });
            if (static_cast<long long>(labeling[static_cast<std::size_t>(*hi)]) - labeling[static_cast<std::size_t>(*lo)] > 1) {
                violations.push_back(s);
            }
        }
    }
    return violations;
}

Subcomplex level(const SimplicialComplex& complex, const MorseLabeling& labeling, int i)
{
    require_size(complex, labeling);
    const auto members = vertices_with_labels(labeling, i, i);
    return induced_subcomplex(complex, members);
}

Subcomplex slab(const SimplicialComplex& complex, const MorseLabeling& labeling, int i)
{
    require_size(complex, labeling);
    const auto members = vertices_with_labels(labeling, i, i + 1);
    return induced_subcomplex(complex, members);
}

std::optional<std::size_t> QuotientGraph::theta_vertex(int slab_index, Vertex v) const
{
    const auto idx = static_cast<std::size_t>(v);
    if (idx >= labeling.size()) return std::nullopt;
    if (labeling[idx] == slab_index + 1) return node_below[idx];
    if (labeling[idx] == slab_index) return node_above[idx];
    return std::nullopt;
}

std::optional<std::size_t> QuotientGraph::theta_level(int level_index, Vertex v) const
{
    const auto idx = static_cast<std::size_t>(v);
    if (idx >= labeling.size() || labeling[idx] != level_index) return std::nullopt;
    return edge_of[idx];
}

QuotientGraph quotient_graph(const SimplicialComplex& complex, const MorseLabeling& labeling)
{
    require_valid(complex, labeling);
    if (!is_connected(complex)) throw Error(ErrorCode::NotConnected, "quotient graph needs a connected complex");

    QuotientGraph q;
    q.labeling = labeling;
    const std::size_t n = complex.vertex_count();
    q.node_below.assign(n, kNone);
    q.node_above.assign(n, kNone);
    q.edge_of.assign(n, kNone);
    const int lo = labeling.min();
    const int hi = labeling.max();

    for (int i = lo - 1; i <= hi; ++i) {
        const auto comps = components_within(complex, vertices_with_labels(labeling, i, i + 1));
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const std::size_t node = q.nodes.size();
            for (Vertex v : comps[c]) {
                auto& slot = (labeling[static_cast<std::size_t>(v)] == i) ? q.node_above : q.node_below;
                slot[static_cast<std::size_t>(v)] = node;
            }
            q.nodes.push_back({i, static_cast<int>(c), comps[c]});
        }
    }
    for (int i = lo; i <= hi; ++i) {
        const auto comps = components_within(complex, vertices_with_labels(labeling, i, i));
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const Vertex rep = comps[c].front();
            const std::size_t edge = q.edges.size();
            for (Vertex v : comps[c]) q.edge_of[static_cast<std::size_t>(v)] = edge;
            q.edges.push_back({i, static_cast<int>(c), comps[c], q.node_below[static_cast<std::size_t>(rep)],
                               q.node_above[static_cast<std::size_t>(rep)]});
        }
    }
    return q;
}

long long qf_betti1(const QuotientGraph& graph)
{
    const std::size_t n = graph.nodes.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const auto& e : graph.edges) {
        const auto a = find(e.lower);
        const auto b = find(e.upper);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return static_cast<long long>(graph.edges.size()) - static_cast<long long>(n) + static_cast<long long>(components);
}

const char* to_string(QfClass cls)
{
    switch (cls) {
    case QfClass::Tree: return "tree";
    case QfClass::Circle: return "circle";
    case QfClass::Other: return "other";
    }
    return "other";
}

QfClass classify_betti1(long long betti1)
{
    if (betti1 <= 0) return QfClass::Tree;
    if (betti1 == 1) return QfClass::Circle;
    return QfClass::Other;
}

WidthReport hcwr_value(const SimplicialComplex& complex, const MorseLabeling& labeling, const FieldSpec& field)
{
    return hcwr_value(H1Pairing(complex, field), labeling);
}

WidthReport hcwr_value(const H1Pairing& pairing, const MorseLabeling& labeling)
{
    const auto& complex = pairing.complex();
    const auto graph = quotient_graph(complex, labeling);

    WidthReport report;
    report.field = pairing.field();
    report.labeling = labeling;
    for (const auto& node : graph.nodes) {
        const std::size_t r = pairing.image_rank(node.members);
        report.per_slab.push_back({node.slab, node.component, node.members.size(), r});
        report.max_rank = std::max(report.max_rank, r);
    }
    for (const auto& s : report.per_slab) {
        if (s.rank == report.max_rank) report.argmax.emplace_back(s.slab, s.component);
    }
    report.qf_nodes = graph.nodes.size();
    report.qf_edges = graph.edges.size();
    report.qf_betti1 = qf_betti1(graph);
    report.qf_class = classify_betti1(report.qf_betti1);
    return report;
}

// ---------------------------------------------------------------------------

WidthEvaluator::WidthEvaluator(const SimplicialComplex& complex, const FieldSpec& field) : pairing_(complex, field) {}

template <class Visit>
void WidthEvaluator::for_each_component(std::span<const int> labels, Visit&& visit) const
{
    const auto& nbrs = complex().neighbors();
    const std::size_t n = labels.size();
    int lo = INT_MAX;
    int hi = INT_MIN;
    for (int l : labels) {
        if (l == kUnassigned) continue;
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    if (lo > hi) return;

    std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(hi - lo) + 1);
    for (std::size_t v = 0; v < n; ++v) {
        if (labels[v] != kUnassigned) bucket[static_cast<std::size_t>(labels[v] - lo)].push_back(static_cast<Vertex>(v));
    }
    std::vector<int> stamp(n, INT_MIN);
    std::vector<Vertex> comp;
    comp.reserve(n);
    for (int i = lo - 1; i <= hi; ++i) {
        auto in_slab = [&](Vertex v) {
            const int l = labels[static_cast<std::size_t>(v)];
            return l != kUnassigned && (l == i || l == i + 1);
        };
        for (int which : {i, i + 1}) {
            if (which < lo || which > hi) continue;
            for (Vertex start : bucket[static_cast<std::size_t>(which - lo)]) {
                if (stamp[static_cast<std::size_t>(start)] == i) continue;
                stamp[static_cast<std::size_t>(start)] = i;
                comp.clear();
                comp.push_back(start);
                for (std::size_t head = 0; head < comp.size(); ++head) {
                    for (Vertex w : nbrs[static_cast<std::size_t>(comp[head])]) {
                        if (stamp[static_cast<std::size_t>(w)] != i && in_slab(w)) {
                            stamp[static_cast<std::size_t>(w)] = i;
                            comp.push_back(w);
                        }
                    }
                }
                if (!visit(comp)) return;
            }
        }
    }
}

WidthEvaluator::Score WidthEvaluator::score(std::span<const int> labels) const
{
    Score s;
    for_each_component(labels, [&](const std::vector<Vertex>& comp) {
        const std::size_t r = comp.size() < 3 ? 0 : pairing_.image_rank(comp);
        s.rank_sum += r;
        if (r > s.max_rank) {
            s.max_rank = r;
            s.count_at_max = 1;
        } else if (r == s.max_rank) {
            ++s.count_at_max;
        }
        return true;
    });
    return s;
}

std::size_t WidthEvaluator::max_rank(std::span<const int> labels, std::size_t stop_at) const
{
    std::size_t best = 0;
    const std::size_t cap = std::min(stop_at, pairing_.betti1());
    if (cap == 0) return 0;
    for_each_component(labels, [&](const std::vector<Vertex>& comp) {
        if (comp.size() >= 3) best = std::max(best, pairing_.image_rank(comp));
        return best < cap;
    });
    return best;
}

}  // namespace gw
