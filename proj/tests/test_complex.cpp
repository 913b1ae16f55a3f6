#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "groupwidth/complex.hpp"
#include "groupwidth/error.hpp"
#include "groupwidth/generators.hpp"
#include "properties.hpp"

using namespace gw;

namespace {

SimplicialComplex filled_triangle() { return build_complex({{0, 1, 2}}, 3); }
SimplicialComplex three_cycle() { return build_complex({{0, 1}, {1, 2}, {0, 2}}, 3); }

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::BadFormat;
}

}  // namespace

TEST_CASE("build_complex closes faces")
{
    const auto k = filled_triangle();
    CHECK(k.simplex_count() == 7);
    CHECK(k.count(0) == 3);
    CHECK(k.count(1) == 3);
    CHECK(k.count(2) == 1);
    CHECK(k.dim() == 2);
    CHECK(props::face_closure(k).ok);

    const auto cycle = three_cycle();
    CHECK(cycle.simplex_count() == 6);
    CHECK(cycle.count(2) == 0);
    CHECK(cycle.dim() == 1);
}

TEST_CASE("build_complex dedupes and sorts input tuples")
{
    CHECK(build_complex({{0, 1, 2}, {0, 1, 2}}, 3) == filled_triangle());
    CHECK(build_complex({{2, 0, 1}}, 3) == filled_triangle());
    CHECK(build_complex({{1, 2}, {0, 1, 2}}, 3) == filled_triangle());
}

TEST_CASE("build_complex rejects bad tuples")
{
    CHECK(code_of([] { build_complex({{0, 0, 1}}, 3); }) == ErrorCode::DegenerateSimplex);
    CHECK(code_of([] { build_complex({{0, 3}}, 3); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { build_complex({{-1, 0}}, 3); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("isolated vertices and the empty complex")
{
    const auto points = build_complex({}, 4);
    CHECK(points.vertex_count() == 4);
    CHECK(points.count(0) == 4);
    CHECK(points.dim() == 0);
    CHECK(connected_components(points).size() == 4);

    const SimplicialComplex empty;
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.dim() == -1);
    CHECK(connected_components(empty).empty());
    CHECK(euler_characteristic(empty) == 0);
}

TEST_CASE("index_of and contains follow lexicographic order")
{
    const auto k = filled_triangle();
    const Simplex e02{0, 2};
    const Simplex e12{1, 2};
    CHECK(k.index_of(e02) == 1);
    CHECK(k.index_of(e12) == 2);
    CHECK(k.contains(Simplex{0, 1, 2}));
    CHECK_FALSE(three_cycle().contains(Simplex{0, 1, 2}));
    CHECK_FALSE(k.index_of(Simplex{0, 3}).has_value());
}

TEST_CASE("neighbors and maximal simplices")
{
    const auto k = build_complex({{0, 1, 2}, {2, 3}}, 5);
    CHECK(k.neighbors()[2] == std::vector<Vertex>{0, 1, 3});
    CHECK(k.neighbors()[4].empty());
    const auto maximal = k.maximal_simplices();
    CHECK(maximal == std::vector<Simplex>{{4}, {2, 3}, {0, 1, 2}});
}

TEST_CASE("induced_subcomplex")
{
    const auto cycle = three_cycle();
    const std::vector<Vertex> s01{0, 1};
    const auto edge = induced_subcomplex(cycle, s01);
    CHECK(edge.local().count(0) == 2);
    CHECK(edge.local().count(1) == 1);

    const std::vector<Vertex> all{2, 0, 1, 1};
    CHECK(induced_subcomplex(cycle, all).local() == cycle);

    const std::vector<Vertex> s02{0, 2};
    const auto e = induced_subcomplex(filled_triangle(), s02);
    CHECK(e.parent_simplices(1) == std::vector<Simplex>{{0, 2}});
    CHECK(e.to_parent(1) == 2);
    CHECK(e.local().count(2) == 0);

    const std::vector<Vertex> none;
    CHECK(induced_subcomplex(cycle, none).empty());
}

TEST_CASE("induced_subcomplex is monotone in the vertex set")
{
    const auto t = generate_torus(2, 4).complex;
    const std::vector<Vertex> small{0, 1, 4, 5};
    const std::vector<Vertex> large{0, 1, 2, 4, 5, 6, 9};
    const auto a = induced_subcomplex(t, small);
    const auto b = induced_subcomplex(t, large);
    for (int d = 0; d <= 2; ++d) {
        const auto sa = a.parent_simplices(d);
        const auto sb = b.parent_simplices(d);
        const std::set<Simplex> big(sb.begin(), sb.end());
        for (const auto& s : sa) CHECK(big.count(s) == 1);
    }
}

TEST_CASE("connected_components")
{
    CHECK(connected_components(three_cycle()) == std::vector<std::vector<Vertex>>{{0, 1, 2}});
    const auto two = build_complex({{0, 1}, {2, 3}}, 4);
    CHECK(connected_components(two) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(three_cycle()));
}

TEST_CASE("components partition the vertex set and are mutually non-adjacent")
{
    const auto t = generate_torus(2, 5).complex;
    const std::vector<Vertex> subset{0, 1, 2, 7, 8, 13, 14, 20, 21, 24};
    const auto sub = induced_subcomplex(t, subset);
    const auto comps = connected_components(sub);
    std::vector<Vertex> joined;
    for (const auto& c : comps) joined.insert(joined.end(), c.begin(), c.end());
    std::sort(joined.begin(), joined.end());
    CHECK(joined == subset);
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            for (Vertex x : comps[a]) {
                for (Vertex y : comps[b]) CHECK_FALSE(t.contains(Simplex{std::min(x, y), std::max(x, y)}));
            }
        }
    }
}

TEST_CASE("euler characteristic")
{
    CHECK(euler_characteristic(filled_triangle()) == 1);
    CHECK(euler_characteristic(three_cycle()) == 0);
    CHECK(euler_characteristic(generate_torus(2, 3).complex) == 0);
    CHECK(euler_characteristic(generate_torus(2, 5).complex) == 0);
    CHECK(euler_characteristic(generate_torus(3, 3).complex) == 0);
}

TEST_CASE("copies share storage and can be read from several threads")
{
    const auto t = generate_torus(3, 3).complex;
    const auto copy = t;
    CHECK(copy.same_instance(t));
    std::vector<std::size_t> counts(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            pool.emplace_back([&, i] { counts[i] = connected_components(copy).size() + copy.simplices(2).size(); });
        }
    }
    for (auto c : counts) CHECK(c == counts[0]);
}
