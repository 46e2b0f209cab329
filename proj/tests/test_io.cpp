#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "jordan/errors.hpp"
#include "jordan/io.hpp"
#include "jordan/order_maps.hpp"

using namespace jordan;
using namespace jordan::testing;
using io::Json;

TEST_CASE("algebra documents") {
    const auto a = io::algebra_from_json(Json::parse(R"({"factors": [{"kind": "real"}, {"kind": "sym", "n": 3},
                                                                      {"kind": "spin", "n": 2}]})"));
    CHECK(a->name() == "Real ⊕ Sym(3) ⊕ Spin(2)");
    CHECK(io::algebra_from_json(io::to_json(*a))->factors() == a->factors());
    CHECK_THROWS_AS(io::algebra_from_json(Json::parse(R"({"factors": [{"kind": "octonion"}]})")), FormatError);
    CHECK_THROWS_AS(io::algebra_from_json(Json::parse(R"({"factors": [{"kind": "sym"}]})")), FormatError);
    CHECK_THROWS_AS(io::algebra_from_json(Json::parse(R"([1, 2])")), FormatError);
}

TEST_CASE("element and operator documents") {
    const auto a = sym(2);
    CHECK(gap(io::element_from_json(Json::parse("[1, 2, 3]"), a), elem(a, {1, 2, 3})) == 0.0);
    CHECK(gap(io::element_from_json(Json::parse(R"({"coords": [1, 2, 3]})"), a), elem(a, {1, 2, 3})) == 0.0);
    CHECK_THROWS_AS(io::element_from_json(Json::parse("[1, 2]"), a), FormatError);
    CHECK_THROWS_AS(io::element_from_json(Json::parse(R"(["x", 2, 3])"), a), FormatError);

    const auto t = io::operator_from_json(Json::parse(R"({"rows": 3, "cols": 3, "data": [1,0,0, 0,1,0, 0,0,1]})"), a, a);
    CHECK(gap(t.matrix(), Matrix::Identity(3, 3)) == 0.0);
    CHECK_THROWS_AS(io::operator_from_json(Json::parse(R"({"rows": 3, "cols": 3, "data": [1]})"), a, a), FormatError);

    Rng rng(61);
    const LinearOperator u = quadratic_rep(random_element(a, rng));
    CHECK(gap(io::operator_from_json(io::to_json(u), a, a).matrix(), u.matrix()) == 0.0);
}

TEST_CASE("monotone map documents") {
    const auto m = MonotoneBijection::power(0.5).after(MonotoneBijection::piecewise_linear({{1, 2}, {2, 5}}));
    CHECK(io::monotone_from_json(io::to_json(m)) == m);
    CHECK(io::monotone_from_json(Json::parse(R"({"kind": "power", "alpha": 2})"))(3.0) == doctest::Approx(9.0));
    CHECK_THROWS_AS(io::monotone_from_json(Json::parse(R"({"kind": "power", "alpha": -2})")), FormatError);
    CHECK_THROWS_AS(io::monotone_from_json(Json::parse(R"({"kind": "exp"})")), FormatError);
}

TEST_CASE("forms round-trip through JSON") {
    const auto a = sum({FactorDescriptor::real(), FactorDescriptor::sym(2), FactorDescriptor::real()});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = random_order_iso(a, a, seed, true);
        const Json doc = io::to_json(f);
        const auto g = io::form_from_json(Json::parse(doc.dump()));
        CHECK(io::to_json(g) == doc);
        Rng rng = trial_rng(62, seed);
        const Element x = random_positive(a, rng);
        CHECK(gap(apply_order_iso(g, x), apply_order_iso(f, x)) < 1e-12);
    }
}

TEST_CASE("load_file") {
    const auto path = std::filesystem::temp_directory_path() / "jordan_io_test.json";
    {
        std::ofstream(path) << R"({"factors": [{"kind": "real"}]})";
    }
    CHECK(io::load_file(path.string()).at("factors").size() == 1);
    {
        std::ofstream(path) << "{not json";
    }
    CHECK_THROWS_AS(io::load_file(path.string()), FormatError);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::load_file(path.string()), FormatError);
}
