#include <doctest.h>

#include <set>

#include "groupwidth/error.hpp"
#include "groupwidth/generators.hpp"
#include "groupwidth/homology.hpp"
#include "properties.hpp"

using namespace gw;

namespace {

const FieldSpec Q = FieldSpec::rationals();

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

void check_complex(const SimplicialComplex& k)
{
    const auto closure = props::face_closure(k);
    INFO(closure.detail);
    CHECK(closure.ok);
    CHECK(props::boundary_squares_to_zero(k).ok);
}

}  // namespace

TEST_CASE("circles")
{
    const auto c3 = generate_circle(3);
    CHECK(c3.count(0) == 3);
    CHECK(c3.count(1) == 3);
    CHECK(betti1(c3, Q) == 1);
    CHECK(betti1(generate_circle(6), Q) == 1);
    CHECK(code_of([] { generate_circle(2); }) == ErrorCode::TooFewVertices);
    CHECK(circle_tent_labeling(6).values() == std::vector<int>{0, 1, 2, 3, 2, 1});
    CHECK(validate_labeling(generate_circle(7), circle_tent_labeling(7)).empty());
}

TEST_CASE("torus counts")
{
    const auto t23 = generate_torus(2, 3).complex;
    CHECK(t23.count(0) == 9);
    CHECK(t23.count(1) == 27);
    CHECK(t23.count(2) == 18);
    CHECK(euler_characteristic(t23) == 0);

    const auto t24 = generate_torus(2, 4).complex;
    CHECK(t24.count(0) == 16);
    CHECK(t24.count(1) == 48);
    CHECK(t24.count(2) == 32);
    CHECK(betti1(t24, Q) == 2);

    const auto t33 = generate_torus(3, 3).complex;
    CHECK(t33.count(0) == 27);
    CHECK(euler_characteristic(t33) == 0);
    CHECK(betti1(t33, Q) == 3);

    const auto t34 = generate_torus(3, 4).complex;
    CHECK(t34.count(3) == 384);
    CHECK(betti1(t34, Q) == 3);
}

TEST_CASE("torus invariants for several sizes")
{
    for (int k = 1; k <= 3; ++k) {
        for (int n = 3; n <= (k == 3 ? 4 : 6); ++n) {
            const auto t = generate_torus(k, n);
            CHECK(betti1(t.complex, Q) == static_cast<std::size_t>(k));
            CHECK(euler_characteristic(t.complex) == 0);
            check_complex(t.complex);
            for (int axis = 0; axis < k; ++axis) CHECK(validate_labeling(t.complex, tent_labeling(t, axis)).empty());
        }
    }
}

TEST_CASE("torus grid coordinates")
{
    const auto t = generate_torus(2, 4);
    const std::vector<int> c{1, 2};
    const Vertex v = t.vertex(c);
    CHECK(v == 9);
    CHECK(t.coordinate(v, 0) == 1);
    CHECK(t.coordinate(v, 1) == 2);
    const std::vector<int> wrapped{5, -2};
    CHECK(t.vertex(wrapped) == v);
}

TEST_CASE("torus errors")
{
    CHECK(code_of([] { generate_torus(2, 2); }) == ErrorCode::ResolutionTooSmall);
    CHECK(code_of([] { generate_torus(0, 4); }) == ErrorCode::BadAxis);
    CHECK(code_of([] { tent_labeling(generate_torus(2, 4), 2); }) == ErrorCode::BadAxis);
}

TEST_CASE("wedge")
{
    const auto c = generate_circle(3);
    const auto w = wedge(c, 0, c, 0);
    CHECK(w.vertex_count() == 5);
    CHECK(w.count(1) == 6);
    CHECK(betti1(w, Q) == 2);
    check_complex(w);

    const auto t = generate_torus(2, 4).complex;
    CHECK(betti1(wedge(t, 3, t, 7), Q) == 4);
    CHECK(code_of([&] { wedge(c, 3, c, 0); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("spread wedge")
{
    const auto t = generate_torus(2, 4);
    const LabeledComplex tent{t.complex, tent_labeling(t, 0)};
    const LabeledComplex hex{generate_circle(6), circle_tent_labeling(6)};

    const int arc = min_arc_length(tent, 0, tent, 0);
    // the second copy starts two labels above the first one's top
    CHECK(arc == (2 - 0) + (0 - 0) + 2);
    const auto tt = spread_wedge(tent, 0, tent, 0, arc);
    CHECK(tt.complex.vertex_count() == 16 + (arc - 1) + 16);
    CHECK(betti1(tt.complex, Q) == 4);
    REQUIRE(tt.labeling);
    CHECK(validate_labeling(tt.complex, *tt.labeling).empty());
    CHECK(hcwr_value(tt.complex, *tt.labeling, Q).max_rank == 1);
    check_complex(tt.complex);

    const auto hh = spread_wedge(hex, 0, hex, 0, min_arc_length(hex, 0, hex, 0));
    CHECK(hcwr_value(hh.complex, *hh.labeling, Q).max_rank == 0);
    CHECK(betti1(hh.complex, Q) == 2);

    const auto th = spread_wedge(tent, 5, hex, 2, min_arc_length(tent, 5, hex, 2) + 3);
    CHECK(hcwr_value(th.complex, *th.labeling, Q).max_rank == 1);
    CHECK(betti1(th.complex, Q) == 3);

    // arc interior vertices have degree two and climb one label per edge
    const Vertex first_arc = 16;
    for (Vertex v = first_arc; v < first_arc + arc - 1; ++v) {
        CHECK(tt.complex.neighbors()[v].size() == 2);
        CHECK((*tt.labeling)[static_cast<std::size_t>(v)] == v - first_arc + 1);
    }

    CHECK(code_of([&] { spread_wedge(tent, 0, tent, 0, arc - 1); }) == ErrorCode::ArcTooShort);
    const LabeledComplex bare{t.complex, std::nullopt};
    CHECK(code_of([&] { spread_wedge(bare, 0, tent, 0, 10); }) == ErrorCode::MissingLabels);
}

TEST_CASE("product complexes")
{
    const auto c4 = generate_circle(4);
    const auto p = product_complex(c4, c4);
    CHECK(euler_characteristic(p.complex) == 0);
    CHECK(betti1(p.complex, Q) == 2);
    check_complex(p.complex);
    CHECK(p.first(9) == 2);
    CHECK(p.second(9) == 1);

    const auto edge = build_complex({{0, 1}}, 2);
    const auto square = product_complex(edge, edge);
    CHECK(square.complex.count(2) == 2);
    CHECK(euler_characteristic(square.complex) == 1);

    const auto prism = product_complex(build_complex({{0, 1, 2}}, 3), edge);
    CHECK(prism.complex.count(3) == 3);
    CHECK(euler_characteristic(prism.complex) == 1);
}

TEST_CASE("pullback labelings")
{
    const auto c4 = generate_circle(4);
    const auto p = product_complex(c4, c4);
    const auto f = pullback_labeling(p, circle_tent_labeling(4));
    CHECK(validate_labeling(p.complex, f).empty());
    CHECK(hcwr_value(p.complex, f, Q).max_rank == 1);
    CHECK(hcwr_value(p.complex, pullback_labeling(p, MorseLabeling::constant(4)), Q).max_rank == betti1(p.complex, Q));

    const auto prism = product_complex(generate_circle(6), generate_circle(3));
    const auto g = pullback_labeling(prism, circle_tent_labeling(6));
    CHECK(validate_labeling(prism.complex, g).empty());
    CHECK(hcwr_value(prism.complex, g, Q).max_rank == 1);

    CHECK(code_of([&] { pullback_labeling(p, circle_tent_labeling(5)); }) == ErrorCode::InvalidLabeling);
}

TEST_CASE("words")
{
    CHECK(parse_word("aBa", 2) == Word{1, -2, 1});
    CHECK(code_of([] { parse_word("ac", 2); }) == ErrorCode::BadWord);
    CHECK(code_of([] { parse_word("a1", 2); }) == ErrorCode::BadWord);
}

TEST_CASE("presentation complexes")
{
    const auto moore = presentation_complex(1, {Word{1, 1, 1}});
    CHECK(betti1(moore, Q) == 0);
    CHECK(betti1(moore, FieldSpec::prime(3)) == 1);
    check_complex(moore);

    const auto free1 = presentation_complex(1, {});
    CHECK(free1.count(0) == 3);
    CHECK(betti1(free1, Q) == 1);

    const auto torus = presentation_complex(2, {parse_word("abAB", 2)});
    CHECK(betti1(torus, Q) == 2);
    CHECK(euler_characteristic(torus) == 0);
    check_complex(torus);

    // Z x Z/4 = <a, b | abAB, bbbb>
    const auto mixed = presentation_complex(2, {parse_word("abAB", 2), parse_word("bbbb", 2)});
    CHECK(betti1(mixed, Q) == 1);
    CHECK(betti1(mixed, FieldSpec::prime(2)) == 2);
    CHECK(betti1(mixed, FieldSpec::prime(3)) == 1);

    CHECK(code_of([] { presentation_complex(1, {Word{}}); }) == ErrorCode::EmptyRelator);
    CHECK(code_of([] { presentation_complex(1, {Word{2}}); }) == ErrorCode::BadWord);
}
