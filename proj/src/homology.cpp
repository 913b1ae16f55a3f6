#include "groupwidth/homology.hpp"

#include <deque>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupwidth/error.hpp"

namespace gw {

using linalg::BigInt;
using linalg::Echelon;
using linalg::FractionFree;
using linalg::ModPrime;
using linalg::SparseVector;

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t edge_index(const SimplicialComplex& complex, Vertex a, Vertex b)
{
    const Vertex e[2] = {std::min(a, b), std::max(a, b)};
    auto idx = complex.index_of(e);
    if (!idx) throw Error(ErrorCode::NotASubcomplex, "edge missing from ambient complex");
    return *idx;
}

template <class Policy>
std::size_t rank_with(const linalg::IntMatrix& m, Policy policy)
{
    Echelon<Policy> echelon(std::move(policy), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) echelon.insert(linalg::convert(echelon.policy(), m.column(c)));
    return echelon.rank();
}

template <class Policy>
std::size_t image_rank_chain_level(const SimplicialComplex& ambient, const Subcomplex& sub, Policy policy)
{
    const auto& local = sub.local();
    const std::size_t n = local.vertex_count();
    if (n == 0 || local.count(1) == 0) return 0;

    // spanning forest of the subcomplex, in local ids
    std::vector<Vertex> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<bool> tree_edge(local.count(1), false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::deque<Vertex> queue{static_cast<Vertex>(root)};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : local.neighbors()[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
                parent[static_cast<std::size_t>(v)] = u;
                const Vertex e[2] = {std::min(u, v), std::max(u, v)};
                tree_edge[*local.index_of(e)] = true;
                queue.push_back(v);
            }
        }
    }

    // adds sign * (path from x to its root) in ambient edge coordinates
    auto add_path_to_root = [&](std::map<std::size_t, long long>& acc, Vertex x, long long sign) {
        while (parent[static_cast<std::size_t>(x)] >= 0) {
            const Vertex p = parent[static_cast<std::size_t>(x)];
            const Vertex gx = sub.to_parent(x);
            const Vertex gp = sub.to_parent(p);
            // traversing x -> p agrees with the edge orientation iff x < p
            acc[edge_index(ambient, gx, gp)] += (gx < gp ? sign : -sign);
            x = p;
        }
    };

    const auto& d2 = boundary_pair(ambient).d2;
    Echelon<Policy> echelon(std::move(policy), ambient.count(1));
    for (std::size_t c = 0; c < d2.cols(); ++c) echelon.insert(linalg::convert(echelon.policy(), d2.column(c)));
    const std::size_t boundary_rank = echelon.rank();

    const auto& local_edges = local.simplices(1);
    for (std::size_t k = 0; k < local_edges.size(); ++k) {
        if (tree_edge[k]) continue;
        const Vertex u = local_edges[k][0];
        const Vertex v = local_edges[k][1];
        // cycle: u -> v, v -> root, root -> u
        std::map<std::size_t, long long> acc;
        acc[edge_index(ambient, sub.to_parent(u), sub.to_parent(v))] += 1;
        add_path_to_root(acc, v, 1);
        add_path_to_root(acc, u, -1);
        SparseVector<long long> cycle;
        for (const auto& [idx, coeff] : acc) {
            if (coeff != 0) cycle.push_back({idx, coeff});
        }
        echelon.insert(linalg::convert(echelon.policy(), cycle));
    }
    return echelon.rank() - boundary_rank;
}

// -- scalar helpers shared by the pairing implementation --------------------

std::uint32_t add(const ModPrime& f, std::uint32_t a, std::uint32_t b) { return f.add(a, b); }
std::uint32_t sub(const ModPrime& f, std::uint32_t a, std::uint32_t b) { return f.sub(a, b); }
BigInt add(const FractionFree&, const BigInt& a, const BigInt& b) { return a + b; }
BigInt sub(const FractionFree&, const BigInt& a, const BigInt& b) { return a - b; }
BigInt to_big(const ModPrime&, std::uint32_t a) { return BigInt(a); }
BigInt to_big(const FractionFree&, const BigInt& a) { return a; }

// Nullspace vector of an echelon system with x[free_col] = 1, the other free
// columns 0, pivot columns solved from the bottom up.
std::vector<std::uint32_t> solve_free(const Echelon<ModPrime>& ech, std::size_t free_col)
{
    const auto& f = ech.policy();
    std::vector<std::uint32_t> x(ech.dimension(), 0);
    x[free_col] = 1;
    for (std::size_t c = ech.dimension(); c-- > 0;) {
        if (!ech.has_pivot(c)) continue;
        std::uint32_t s = 0;
        for (const auto& t : ech.pivot_row(c)) {
            if (t.index != c) s = f.add(s, f.mul(t.value, x[t.index]));
        }
        x[c] = f.sub(0, s);  // leading entry is 1
    }
    return x;
}

std::vector<BigInt> solve_free(const Echelon<FractionFree>& ech, std::size_t free_col)
{
    using Rational = boost::multiprecision::cpp_rational;
    std::vector<Rational> x(ech.dimension(), Rational(0));
    x[free_col] = 1;
    for (std::size_t c = ech.dimension(); c-- > 0;) {
        if (!ech.has_pivot(c)) continue;
        Rational s = 0;
        const auto& row = ech.pivot_row(c);
        for (const auto& t : row) {
            if (t.index != c && !x[t.index].is_zero()) s += Rational(t.value) * x[t.index];
        }
        x[c] = -s / Rational(row.front().value);
    }
    BigInt scale = 1;
    for (const auto& q : x) {
        const BigInt d = boost::multiprecision::denominator(q);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    std::vector<BigInt> out(x.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = boost::multiprecision::numerator(x[i]) * (scale / boost::multiprecision::denominator(x[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1) {
        for (auto& v : out) v /= g;
    }
    return out;
}

}  // namespace

BoundaryPair boundary_pair(const SimplicialComplex& complex)
{
    BoundaryPair pair{complex, linalg::IntMatrix(complex.count(0), complex.count(1)),
                      linalg::IntMatrix(complex.count(1), complex.count(2))};
    const auto& edges = complex.simplices(1);
    for (std::size_t c = 0; c < edges.size(); ++c) {
        // d[a,b] = b - a
        pair.d1.push(static_cast<std::size_t>(edges[c][0]), c, -1);
        pair.d1.push(static_cast<std::size_t>(edges[c][1]), c, 1);
    }
    const auto& triangles = complex.simplices(2);
    for (std::size_t c = 0; c < triangles.size(); ++c) {
        const auto& t = triangles[c];
        // d[a,b,c] = [b,c] - [a,c] + [a,b]; faces come out in increasing row order
        const Vertex ab[2] = {t[0], t[1]};
        const Vertex ac[2] = {t[0], t[2]};
        const Vertex bc[2] = {t[1], t[2]};
        std::pair<std::size_t, long long> entries[3] = {
            {*complex.index_of(ab), 1}, {*complex.index_of(ac), -1}, {*complex.index_of(bc), 1}};
        std::sort(std::begin(entries), std::end(entries));
        for (const auto& [row, value] : entries) pair.d2.push(row, c, value);
    }
    return pair;
}

std::size_t betti0(const SimplicialComplex& complex, const FieldSpec& field)
{
    return complex.count(0) - linalg::rank(boundary_pair(complex).d1, field);
}

std::size_t betti1(const SimplicialComplex& complex, const FieldSpec& field)
{
    const auto pair = boundary_pair(complex);
    const std::size_t r1 = linalg::rank(pair.d1, field);
    const std::size_t r2 = linalg::rank(pair.d2, field);
    return complex.count(1) - r1 - r2;
}

std::size_t image_rank_h1(const Subcomplex& sub, const FieldSpec& field)
{
    if (field.is_rational()) return image_rank_chain_level(sub.parent(), sub, FractionFree{});
    return image_rank_chain_level(sub.parent(), sub, ModPrime(field.characteristic()));
}

std::size_t image_rank_h1(const SimplicialComplex& ambient, const Subcomplex& sub, const FieldSpec& field)
{
    if (!sub.parent().same_instance(ambient) && !(sub.parent() == ambient)) {
        for (Vertex v : sub.vertices()) {
            if (static_cast<std::size_t>(v) >= ambient.vertex_count()) {
                throw Error(ErrorCode::NotASubcomplex, "vertex " + std::to_string(v) + " not in ambient complex");
            }
        }
        for (int d = 1; d <= sub.local().dim(); ++d) {
            for (const auto& s : sub.parent_simplices(d)) {
                if (!ambient.contains(s)) throw Error(ErrorCode::NotASubcomplex, "simplex missing from ambient complex");
            }
        }
    }
    if (field.is_rational()) return image_rank_chain_level(ambient, sub, FractionFree{});
    return image_rank_chain_level(ambient, sub, ModPrime(field.characteristic()));
}

// ---------------------------------------------------------------------------

class H1Pairing::Impl {
public:
    virtual ~Impl() = default;
    virtual std::size_t betti1() const = 0;
    virtual std::size_t image_rank(std::span<const Vertex> vertices) const = 0;
    virtual std::vector<BigInt> cocycle(std::size_t which) const = 0;
};

namespace {

template <class Policy>
class PairingImpl final : public H1Pairing::Impl {
public:
    using Scalar = typename Policy::Scalar;

    PairingImpl(const SimplicialComplex& complex, Policy policy) : policy_(std::move(policy)), n_(complex.vertex_count())
    {
        const auto& edges = complex.simplices(1);
        adjacency_.resize(n_);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adjacency_[static_cast<std::size_t>(edges[e][0])].push_back({edges[e][1], e});
            adjacency_[static_cast<std::size_t>(edges[e][1])].push_back({edges[e][0], e});
        }

        // spanning forest of K
        std::vector<bool> tree(edges.size(), false);
        std::vector<bool> seen(n_, false);
        for (std::size_t root = 0; root < n_; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            std::deque<std::size_t> queue{root};
            while (!queue.empty()) {
                const std::size_t u = queue.front();
                queue.pop_front();
                for (const auto& [v, e] : adjacency_[u]) {
                    if (seen[static_cast<std::size_t>(v)]) continue;
                    seen[static_cast<std::size_t>(v)] = true;
                    tree[e] = true;
                    queue.push_back(static_cast<std::size_t>(v));
                }
            }
        }
        std::vector<std::size_t> column_of(edges.size(), kNone);
        std::vector<std::size_t> off_tree;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!tree[e]) {
                column_of[e] = off_tree.size();
                off_tree.push_back(e);
            }
        }

        // cocycle condition on every triangle, restricted to off-tree edges
        Echelon<Policy> system(policy_, off_tree.size());
        for (const auto& t : complex.simplices(2)) {
            const Vertex ab[2] = {t[0], t[1]};
            const Vertex ac[2] = {t[0], t[2]};
            const Vertex bc[2] = {t[1], t[2]};
            SparseVector<long long> row;
            for (auto [face, sign] : {std::pair{ab, 1LL}, std::pair{ac, -1LL}, std::pair{bc, 1LL}}) {
                const std::size_t col = column_of[*complex.index_of(std::span<const Vertex>(face, 2))];
                if (col != kNone) row.push_back({col, sign});
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
            system.insert(linalg::convert(system.policy(), row));
        }

        for (std::size_t free_col = 0; free_col < off_tree.size(); ++free_col) {
            if (system.has_pivot(free_col)) continue;
            auto solution = solve_free(system, free_col);
            std::vector<Scalar> phi(edges.size(), policy_.from_int(0));
            for (std::size_t c = 0; c < off_tree.size(); ++c) phi[off_tree[c]] = policy_.from_big(to_big(policy_, solution[c]));
            cocycles_.push_back(std::move(phi));
        }
    }

    std::size_t betti1() const override { return cocycles_.size(); }

    std::vector<BigInt> cocycle(std::size_t which) const override
    {
        std::vector<BigInt> out;
        for (const auto& v : cocycles_.at(which)) out.push_back(to_big(policy_, v));
        return out;
    }

    std::size_t image_rank(std::span<const Vertex> vertices) const override
    {
        const std::size_t b = cocycles_.size();
        const std::size_t m = vertices.size();
        if (b == 0 || m == 0) return 0;

        std::vector<std::size_t> slot(n_, kNone);
        for (std::size_t i = 0; i < m; ++i) slot[static_cast<std::size_t>(vertices[i])] = i;

        // potentials: integral of each cocycle along the forest from the root
        std::vector<Scalar> potential(m * b, policy_.from_int(0));
        std::vector<std::size_t> parent_edge(m, kNone);
        std::vector<bool> seen(m, false);
        std::vector<std::size_t> queue;
        queue.reserve(m);
        for (std::size_t root = 0; root < m; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            queue.clear();
            queue.push_back(root);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const std::size_t i = queue[head];
                const Vertex u = vertices[i];
                for (const auto& [v, e] : adjacency_[static_cast<std::size_t>(u)]) {
                    const std::size_t j = slot[static_cast<std::size_t>(v)];
                    if (j == kNone || seen[j]) continue;
                    seen[j] = true;
                    parent_edge[j] = e;
                    for (std::size_t a = 0; a < b; ++a) {
                        const Scalar& w = cocycles_[a][e];
                        potential[j * b + a] = (u < v) ? add(policy_, potential[i * b + a], w) : sub(policy_, potential[i * b + a], w);
                    }
                    queue.push_back(j);
                }
            }
        }

        Echelon<Policy> echelon(policy_, b);
        for (std::size_t i = 0; i < m; ++i) {
            const Vertex u = vertices[i];
            for (const auto& [v, e] : adjacency_[static_cast<std::size_t>(u)]) {
                const std::size_t j = slot[static_cast<std::size_t>(v)];
                if (v < u || j == kNone || parent_edge[j] == e || parent_edge[i] == e) continue;
                SparseVector<Scalar> column;
                for (std::size_t a = 0; a < b; ++a) {
                    Scalar value = sub(policy_, add(policy_, potential[i * b + a], cocycles_[a][e]), potential[j * b + a]);
                    if (!policy_.is_zero(value)) column.push_back({a, std::move(value)});
                }
                if (column.empty()) continue;
                echelon.insert(std::move(column));
                if (echelon.rank() == b) return b;
            }
        }
        return echelon.rank();
    }

private:
    Policy policy_;
    std::size_t n_;
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adjacency_;
    std::vector<std::vector<Scalar>> cocycles_;
};

}  // namespace

H1Pairing::H1Pairing(const SimplicialComplex& complex, const FieldSpec& field) : complex_(complex), field_(field)
{
    if (field.is_rational()) {
        impl_ = std::make_shared<PairingImpl<FractionFree>>(complex, FractionFree{});
    } else {
        impl_ = std::make_shared<PairingImpl<ModPrime>>(complex, ModPrime(field.characteristic()));
    }
}

std::size_t H1Pairing::betti1() const noexcept { return impl_->betti1(); }

std::size_t H1Pairing::image_rank(std::span<const Vertex> vertices) const { return impl_->image_rank(vertices); }

std::vector<BigInt> H1Pairing::cocycle(std::size_t which) const { return impl_->cocycle(which); }

}  // namespace gw
