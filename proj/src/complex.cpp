#include "groupwidth/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "groupwidth/error.hpp"

namespace gw {

struct SimplicialComplex::Data {
    std::size_t vertex_count = 0;
    std::vector<std::vector<Simplex>> by_dim;
    std::vector<std::vector<Vertex>> neighbors;
};

namespace {

const std::vector<Simplex> kNoSimplices;

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

// Groups `members` by union-find root; output sorted by smallest member.
std::vector<std::vector<Vertex>> components_of(std::size_t n, const std::vector<Simplex>& edges,
                                               const std::vector<Vertex>& names)
{
    UnionFind uf(n);
    for (const auto& e : edges) uf.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]));
    std::vector<std::vector<Vertex>> groups(n);
    for (std::size_t v = 0; v < n; ++v) groups[uf.find(v)].push_back(names.empty() ? static_cast<Vertex>(v) : names[v]);
    std::vector<std::vector<Vertex>> out;
    for (auto& g : groups) {
        if (!g.empty()) out.push_back(std::move(g));
    }
    // roots are the smallest local index, and names are increasing, so the
    // groups already come out ordered by smallest member
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<const Data>()) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

std::size_t SimplicialComplex::vertex_count() const noexcept { return data_->vertex_count; }

int SimplicialComplex::dim() const noexcept { return static_cast<int>(data_->by_dim.size()) - 1; }

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const
{
    if (d < 0 || d > dim()) return kNoSimplices;
    return data_->by_dim[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::count(int d) const noexcept
{
    if (d < 0 || d > dim()) return 0;
    return data_->by_dim[static_cast<std::size_t>(d)].size();
}

std::size_t SimplicialComplex::simplex_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& level : data_->by_dim) total += level.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> simplex) const
{
    if (simplex.empty()) return std::nullopt;
    const auto& level = simplices(static_cast<int>(simplex.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), simplex, [](const Simplex& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == level.end() || !std::equal(it->begin(), it->end(), simplex.begin(), simplex.end())) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(std::span<const Vertex> simplex) const { return index_of(simplex).has_value(); }

const std::vector<std::vector<Vertex>>& SimplicialComplex::neighbors() const noexcept { return data_->neighbors; }

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        const auto& level = simplices(d);
        std::vector<bool> covered(level.size(), false);
        for (const auto& coface : simplices(d + 1)) {
            Simplex facet(coface.size() - 1);
            for (std::size_t skip = 0; skip < coface.size(); ++skip) {
                std::size_t k = 0;
                for (std::size_t j = 0; j < coface.size(); ++j) {
                    if (j != skip) facet[k++] = coface[j];
                }
                if (auto idx = index_of(facet)) covered[*idx] = true;
            }
        }
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!covered[i]) out.push_back(level[i]);
        }
    }
    return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.data_ == b.data_ || (a.data_->vertex_count == b.data_->vertex_count && a.data_->by_dim == b.data_->by_dim);
}

SimplicialComplex complex_from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices)
{
    auto data = std::make_shared<SimplicialComplex::Data>();
    data->vertex_count = vertex_count;
    for (Vertex v = 0; static_cast<std::size_t>(v) < vertex_count; ++v) simplices.push_back({v});
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    for (auto& s : simplices) {
        const std::size_t d = s.size() - 1;
        if (data->by_dim.size() <= d) data->by_dim.resize(d + 1);
        data->by_dim[d].push_back(std::move(s));
    }
    data->neighbors.resize(vertex_count);
    if (data->by_dim.size() > 1) {
        for (const auto& e : data->by_dim[1]) {
            data->neighbors[static_cast<std::size_t>(e[0])].push_back(e[1]);
            data->neighbors[static_cast<std::size_t>(e[1])].push_back(e[0]);
        }
        for (auto& list : data->neighbors) std::sort(list.begin(), list.end());
    }
    return SimplicialComplex(std::move(data));
}

SimplicialComplex build_complex(const std::vector<Simplex>& maximal_simplices, std::size_t vertex_count)
{
    std::vector<Simplex> closed;
    for (const auto& raw : maximal_simplices) {
        if (raw.empty()) continue;
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        for (Vertex v : s) {
            if (v < 0 || static_cast<std::size_t>(v) >= vertex_count) {
                throw Error(ErrorCode::VertexOutOfRange,
                            "vertex " + std::to_string(v) + " with vertex_count " + std::to_string(vertex_count));
            }
        }
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw Error(ErrorCode::DegenerateSimplex, "simplex repeats a vertex");
        }
        if (s.size() > 30) throw Error(ErrorCode::DegenerateSimplex, "simplex with more than 30 vertices");
        const std::uint32_t full = (std::uint32_t{1} << s.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (mask & (std::uint32_t{1} << j)) face.push_back(s[j]);
            }
            closed.push_back(std::move(face));
        }
    }
    return complex_from_simplices(vertex_count, std::move(closed));
}

Subcomplex::Subcomplex(SimplicialComplex parent, std::vector<Vertex> vertices, SimplicialComplex local)
    : parent_(std::move(parent)), vertices_(std::move(vertices)), local_(std::move(local))
{
}

std::vector<Simplex> Subcomplex::parent_simplices(int d) const
{
    std::vector<Simplex> out;
    for (const auto& s : local_.simplices(d)) {
        Simplex mapped(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) mapped[j] = vertices_[static_cast<std::size_t>(s[j])];
        out.push_back(std::move(mapped));
    }
    return out;
}

Subcomplex induced_subcomplex(const SimplicialComplex& complex, std::span<const Vertex> vertex_set)
{
    const std::size_t n = complex.vertex_count();
    std::vector<Vertex> members;
    for (Vertex v : vertex_set) {
        if (v >= 0 && static_cast<std::size_t>(v) < n) members.push_back(v);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<Vertex> local_id(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) local_id[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);

    std::vector<Simplex> local;
    for (int d = 1; d <= complex.dim(); ++d) {
        for (const auto& s : complex.simplices(d)) {
            Simplex mapped;
            mapped.reserve(s.size());
            for (Vertex v : s) {
                const Vertex id = local_id[static_cast<std::size_t>(v)];
                if (id < 0) break;
                mapped.push_back(id);
            }
            if (mapped.size() == s.size()) local.push_back(std::move(mapped));
        }
    }
    auto sub = complex_from_simplices(members.size(), std::move(local));
    return Subcomplex(complex, std::move(members), std::move(sub));
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& complex)
{
    return components_of(complex.vertex_count(), complex.simplices(1), {});
}

std::vector<std::vector<Vertex>> connected_components(const Subcomplex& sub)
{
    return components_of(sub.local().vertex_count(), sub.local().simplices(1), sub.vertices());
}

bool is_connected(const SimplicialComplex& complex) { return connected_components(complex).size() == 1; }

long long euler_characteristic(const SimplicialComplex& complex)
{
    long long chi = 0;
    for (int d = 0; d <= complex.dim(); ++d) {
        const auto c = static_cast<long long>(complex.count(d));
        chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
}

}  // namespace gw
