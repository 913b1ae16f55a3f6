#include <doctest.h>

#include <filesystem>

#include "groupwidth/error.hpp"
#include "groupwidth/generators.hpp"
#include "groupwidth/scx.hpp"

using namespace gw;

namespace {

ErrorCode parse_error(const std::string& text)
{
    try {
        parse_scx(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown for " << text);
    return ErrorCode::BadFormat;
}

}  // namespace

TEST_CASE("round trip through text and files")
{
    const auto t = generate_torus(2, 4);
    ScxDocument doc{t.complex, tent_labeling(t, 0), {{"kind", "torus"}, {"dim", 2}, {"res", 4}}};
    const auto back = parse_scx(dump_scx(doc));
    CHECK(back.complex == doc.complex);
    CHECK(back.labels == doc.labels);
    CHECK(back.family == doc.family);

    const auto path = std::filesystem::temp_directory_path() / "groupwidth_roundtrip.scx";
    write_scx(path, doc);
    const auto from_file = read_scx(path);
    CHECK(from_file.complex == doc.complex);
    CHECK(from_file.labels == doc.labels);
    std::filesystem::remove(path);
}

TEST_CASE("minimal documents")
{
    const auto doc = parse_scx(R"({"format":"scx-1","vertex_count":3,"maximal_simplices":[[0,1,2]]})");
    CHECK(doc.complex.simplex_count() == 7);
    CHECK_FALSE(doc.labels);
    CHECK(doc.family.is_null());

    const auto isolated = parse_scx(R"({"format":"scx-1","vertex_count":2,"maximal_simplices":[],"labels":[0,5]})");
    CHECK(isolated.complex.count(0) == 2);
    CHECK(isolated.labels->values() == std::vector<int>{0, 5});
}

TEST_CASE("malformed documents")
{
    CHECK(parse_error("not json") == ErrorCode::BadFormat);
    CHECK(parse_error("[]") == ErrorCode::BadFormat);
    CHECK(parse_error(R"({"format":"scx-2","vertex_count":1,"maximal_simplices":[]})") == ErrorCode::BadFormat);
    CHECK(parse_error(R"({"format":"scx-1","maximal_simplices":[]})") == ErrorCode::BadFormat);
    CHECK(parse_error(R"({"format":"scx-1","vertex_count":-1,"maximal_simplices":[]})") == ErrorCode::BadFormat);
    CHECK(parse_error(R"({"format":"scx-1","vertex_count":2,"maximal_simplices":[[0,"a"]]})") == ErrorCode::BadFormat);
    CHECK(parse_error(R"({"format":"scx-1","vertex_count":2,"maximal_simplices":[[0,1]],"labels":[0]})") == ErrorCode::InvalidLabeling);
    CHECK(parse_error(R"({"format":"scx-1","vertex_count":2,"maximal_simplices":[[0,0]]})") == ErrorCode::DegenerateSimplex);
    CHECK(parse_error(R"({"format":"scx-1","vertex_count":2,"maximal_simplices":[[0,2]]})") == ErrorCode::VertexOutOfRange);
}

TEST_CASE("invalid labels name the offending simplices")
{
    try {
        parse_scx(R"({"format":"scx-1","vertex_count":3,"maximal_simplices":[[0,1],[1,2],[0,2]],"labels":[0,1,2]})");
        FAIL("expected InvalidLabeling");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidLabeling);
        CHECK(std::string(e.what()).find("[0,2]") != std::string::npos);
    }
}

TEST_CASE("family tents")
{
    const auto torus = family_tent({{"kind", "torus"}, {"dim", 2}, {"res", 4}});
    REQUIRE(torus);
    CHECK(*torus == tent_labeling(generate_torus(2, 4), 0));

    const auto circle = family_tent({{"kind", "circle"}, {"m", 6}});
    REQUIRE(circle);
    CHECK(*circle == circle_tent_labeling(6));

    const auto c4 = generate_circle(4);
    const auto p = product_complex(c4, generate_circle(3));
    const auto prod = family_tent({{"kind", "product"}, {"first", {{"kind", "circle"}, {"m", 4}}}, {"second_count", 3}});
    REQUIRE(prod);
    CHECK(*prod == pullback_labeling(p, circle_tent_labeling(4)));

    CHECK_FALSE(family_tent(nlohmann::json()));
    CHECK_FALSE(family_tent({{"kind", "wedge"}}));
}

TEST_CASE("report json")
{
    const auto t = generate_torus(2, 4);
    const auto j = report_json(hcwr_value(t.complex, tent_labeling(t, 0), FieldSpec::rationals()));
    CHECK(j["field"] == "Q");
    CHECK(j["max_rank"] == 1);
    CHECK(j["qf"]["vertices"] == 4);
    CHECK(j["qf"]["edges"] == 4);
    CHECK(j["qf"]["betti1"] == 1);
    CHECK(j["qf"]["class"] == "circle");
    REQUIRE(j["slabs"].is_array());
    CHECK(j["slabs"][0].contains("i"));
    CHECK(j["slabs"][0].contains("component"));
    CHECK(j["slabs"][0].contains("size"));
    CHECK(j["slabs"][0].contains("rank"));

    const auto f3 = report_json(hcwr_value(t.complex, MorseLabeling::constant(16), FieldSpec::prime(3)));
    CHECK(f3["field"] == "Fp:3");
    CHECK(f3["max_rank"] == 2);
}

TEST_CASE("search json embeds the certificate")
{
    const auto r = exhaustive_min(generate_circle(4), FieldSpec::rationals());
    const auto j = search_json(r, FieldSpec::rationals(), "exhaustive");
    CHECK(j["best_value"] == 0);
    CHECK(j["exhaustive"] == true);
    CHECK(j["labels"] == nlohmann::json::array({0, 1, 2, 1}));
    CHECK(j["mode"] == "exhaustive");
}
