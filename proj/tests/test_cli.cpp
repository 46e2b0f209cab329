#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "jordan/cli.hpp"
#include "jordan/io.hpp"

using namespace jordan;
using namespace jordan::cli;
using io::Json;

namespace {

struct TempFiles {
    std::filesystem::path dir;
    TempFiles() : dir(std::filesystem::temp_directory_path() / "jordan_cli_test") {
        std::filesystem::create_directories(dir);
    }
    ~TempFiles() { std::filesystem::remove_all(dir); }
    std::string write(const std::string& name, const std::string& content) const {
        const auto p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

Json structured(Command c) {
    c.format = Format::Structured;
    return Json::parse(run(c).output);
}

constexpr const char* kRealRealSym3 = R"({"factors": [{"kind": "real"}, {"kind": "real"}, {"kind": "sym", "n": 3}]})";
constexpr const char* kSym2 = R"({"factors": [{"kind": "sym", "n": 2}]})";
constexpr const char* kSquaringForm = R"({
  "domain": {"factors": [{"kind": "real"}, {"kind": "real"}]},
  "codomain": {"factors": [{"kind": "real"}, {"kind": "real"}]},
  "sigma": [[0, 0], [1, 1]],
  "f_p": [{"kind": "power", "alpha": 2}, {"kind": "power", "alpha": 2}],
  "y": null, "J": null})";

}  // namespace

TEST_CASE("analyze lists disengaged atoms and the engaged part") {
    TempFiles tmp;
    Command c{.verb = "analyze", .algebra_path = tmp.write("a.json", kRealRealSym3)};
    const Outcome text = run(c);
    CHECK(text.exit_code == kOk);
    CHECK(text.output.find("disengaged atoms: 2") != std::string::npos);
    CHECK(text.output.find("engaged part:     Sym(3)") != std::string::npos);

    const Json doc = structured(c);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "analyze");
    CHECK(doc["exit_code"] == 0);
    CHECK(doc["result"]["disengaged_atoms"].size() == 2);
    CHECK(io::algebra_from_json(doc["result"]["engaged"])->name() == "Sym(3)");
    CHECK(doc["result"]["codim1_ideals"] == 2);
}

TEST_CASE("spectrum reports eigenvalues and idempotents") {
    TempFiles tmp;
    Command c{.verb = "spectrum", .algebra_path = tmp.write("a.json", kSym2), .element_path = tmp.write("x.json", "[5, 0, -1]")};
    const Json doc = structured(c);
    CHECK(doc["exit_code"] == 0);
    CHECK(doc["result"]["order_unit_norm"].get<double>() == doctest::Approx(5.0));
    CHECK(doc["result"]["is_positive"] == false);
}

TEST_CASE("factorize the identity") {
    TempFiles tmp;
    Command c{.verb = "factorize",
              .algebra_path = tmp.write("a.json", kSym2),
              .map_path = tmp.write("t.json", R"({"rows": 3, "cols": 3, "data": [1,0,0, 0,1,0, 0,0,1]})")};
    const Json doc = structured(c);
    REQUIRE(doc["exit_code"] == 0);
    const auto a = io::algebra_from_json(Json::parse(kSym2));
    const Element y = io::element_from_json(doc["result"]["y"], a);
    CHECK((y.coords() - Element::unit(a).coords()).norm() < 1e-12);
    const auto j = io::operator_from_json(doc["result"]["J"], a, a);
    CHECK((j.matrix() - Matrix::Identity(3, 3)).norm() < 1e-12);

    // A map that does not send e into the interior is a precondition failure.
    Command bad = c;
    bad.map_path = tmp.write("bad.json", R"({"rows": 3, "cols": 3, "data": [-1,0,0, 0,1,0, 0,0,1]})");
    const Json err = structured(bad);
    CHECK(err["exit_code"] == kPrecondition);
    CHECK(err["error"]["kind"] == "precondition");
    CHECK(err["error"]["message"] == "Te not in interior of cone");
}

TEST_CASE("decompose") {
    TempFiles tmp;
    const Json doc = structured(Command{.verb = "decompose", .algebra_path = tmp.write("a.json", kRealRealSym3)});
    CHECK(doc["exit_code"] == 0);
    CHECK(doc["result"].contains("p_D"));
}

TEST_CASE("verify-oiso on coordinate squaring: order preserving, not linear") {
    TempFiles tmp;
    Command c{.verb = "verify-oiso", .form_path = tmp.write("f.json", kSquaringForm)};
    c.trials = 500;
    const Json doc = structured(c);
    CHECK(doc["exit_code"] == kOk);
    CHECK(doc["result"]["order_preserving"]["failure_count"] == 0);
    CHECK(doc["result"]["linear"] == false);
    CHECK(doc["result"]["classified_linear"] == false);
}

TEST_CASE("demo-nonlinear prints a homogeneity witness") {
    Command c{.verb = "demo-nonlinear"};
    c.trials = 200;
    const Json doc = structured(c);
    CHECK(doc["exit_code"] == kOk);
    CHECK(doc["result"]["linear"] == false);
    CHECK(doc["result"]["witness"]["gap"].get<double>() > 1e-3);
    CHECK(doc["result"]["grid"].size() == 8);

    c.lambda = -1.0;
    CHECK(run(c).exit_code == kPrecondition);
}

TEST_CASE("malformed input exits 1") {
    TempFiles tmp;
    CHECK(run(Command{.verb = "analyze", .algebra_path = tmp.write("a.json", "{oops")}).exit_code == kMalformedInput);
    CHECK(run(Command{.verb = "analyze", .algebra_path = (tmp.dir / "missing.json").string()}).exit_code ==
          kMalformedInput);
    CHECK(run(Command{.verb = "analyze"}).exit_code == kMalformedInput);
    CHECK(run(Command{.verb = "frobnicate"}).exit_code == kMalformedInput);
    const Json doc = structured(Command{.verb = "spectrum",
                                        .algebra_path = tmp.write("s.json", kSym2),
                                        .element_path = tmp.write("x.json", "[1, 2]")});
    CHECK(doc["error"]["kind"] == "malformed_input");
}

TEST_CASE("structured output is deterministic for a fixed seed") {
    TempFiles tmp;
    Command c{.verb = "verify-oiso", .form_path = tmp.write("f.json", kSquaringForm)};
    c.trials = 200;
    c.seed = 7;
    c.format = Format::Structured;
    const std::string first = run(c).output;
    CHECK(run(c).output == first);
    CHECK(Json::parse(Json::parse(first).dump()) == Json::parse(first));
}
