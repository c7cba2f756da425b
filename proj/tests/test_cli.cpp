#include "composita/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace composita;

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
    Json doc; // parsed stdout when the format was json
};

CliResult run(const CliOptions& o) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(o, out, err);
    r.out = out.str();
    r.err = err.str();
    if (o.format == "json" && !r.out.empty()) r.doc = Json::parse(r.out);
    return r;
}

CliOptions opts(std::string command, std::string base, std::vector<std::string> ext) {
    CliOptions o;
    o.command = std::move(command);
    o.base = std::move(base);
    o.ext = std::move(ext);
    return o;
}

} // namespace

TEST_CASE("classify reports the full fact sheet for a quadratic", "[cli]") {
    auto r = run(opts("classify", "Q", {"x^2-2"}));
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("tool_version") == "1.0.0");
    REQUIRE(r.doc.at("input").at("command") == "classify");
    REQUIRE(r.doc.at("input").at("base") == "Q");
    REQUIRE(r.doc.at("input").at("ext") == Json::array({"x^2-2"}));
    const Json& rep = r.doc.at("report");
    CHECK(rep.at("degree") == 2);
    CHECK(rep.at("finite") == true);
    CHECK(rep.at("algebraic") == true);
    CHECK(rep.at("separable") == true);
    CHECK(rep.at("normal") == true);
    CHECK(rep.at("galois") == true);
    CHECK(rep.at("aut_order") == 2);
    CHECK(rep.at("group") == "C2");
    CHECK(rep.at("fixed_field_is_k") == true);
    CHECK(rep.at("hypothesis_flags").at("perfect_base") == true);
    CHECK(rep.at("hypothesis_flags").at("fixed_field_is_k") == true);
    CHECK(rep.at("hypothesis_flags").at("aut_order_equals_degree") == true);
    CHECK(r.doc.at("notes").empty());
}

TEST_CASE("classify with no tower steps describes the trivial extension", "[cli]") {
    auto r = run(opts("classify", "Q", {}));
    REQUIRE(r.code == 0);
    CHECK(r.doc.at("report").at("degree") == 1);
    CHECK(r.doc.at("report").at("group") == "C1");
    CHECK(r.doc.at("report").at("galois") == true);
}

TEST_CASE("composite lists generators and a replayable certificate", "[cli]") {
    auto o = opts("composite", "Q", {"x^3-2"});
    o.bound = 6;
    auto r = run(o);
    REQUIRE(r.code == 0);
    const Json& rep = r.doc.at("report");
    CHECK(rep.at("noetherian") == true);
    CHECK(rep.at("degree") == 3);
    CHECK(rep.at("generators") == Json::array({"x", "a*x", "a^2*x"}));
    CHECK(rep.at("certificate").at("bound") == 6);
    CHECK(rep.at("certificate").at("certified") == true);
    CHECK(rep.at("certificate").at("rows").size() > 0);
    CHECK(r.doc.at("input").at("bound") == 6);
}

TEST_CASE("magid reports the tensor structure of an inseparable quadratic", "[cli]") {
    auto r = run(opts("magid", "GF(2)(t)", {"x^2-t"}));
    REQUIRE(r.code == 0);
    const Json& rep = r.doc.at("report");
    CHECK(rep.at("separable") == false);
    CHECK(rep.at("nilradical_zero") == false);
    CHECK(rep.at("all_unit_times_idempotent") == false);
    CHECK(rep.at("generated_by_idempotents") == false);
    CHECK(rep.at("consistent") == true);
    CHECK(rep.at("algebra_dim") == 2);
    CHECK(rep.at("nilradical_dim") == 1);
    CHECK(rep.at("idempotent_count") == 1);
    CHECK(rep.at("element_mode") == "sampled");
    CHECK(rep.at("elements_tested") == 1007);
    bool noted = false;
    for (const auto& n : r.doc.at("notes"))
        if (n.get<std::string>().find("splitting field surrogate") != std::string::npos)
            noted = true;
    CHECK(noted);
}

TEST_CASE("verify over the builtin catalog passes", "[cli][slow]") {
    CliOptions o;
    o.command = "verify";
    auto r = run(o);
    REQUIRE(r.code == 0);
    const Json& rep = r.doc.at("report");
    CHECK(rep.at("entries") == 16);
    CHECK(rep.at("ok") == true);
    CHECK(rep.at("counts").at("violation") == 0);
    CHECK(rep.at("row_count").get<std::size_t>() == rep.at("rows").size());
    CHECK(r.doc.at("input").at("catalog") == "builtin");
    CHECK(r.doc.at("input").at("seed") == 0);
}

TEST_CASE("reports are byte-identical across runs with the same seed", "[cli]") {
    auto a = run(opts("magid", "Q", {"x^2-2"}));
    auto b = run(opts("magid", "Q", {"x^2-2"}));
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("syntax errors exit with code 1 and point at the column", "[cli]") {
    auto r = run(opts("classify", "Q", {"x + y"}));
    REQUIRE(r.code == 1);
    CHECK(r.doc.at("report").is_null());
    REQUIRE(r.doc.at("notes").size() == 1);
    std::string note = r.doc.at("notes")[0].get<std::string>();
    CHECK(note.find("input error:") == 0);
    CHECK(note.find("(column 5)") != std::string::npos);
    CHECK(r.err.find("column 5") != std::string::npos);
}

TEST_CASE("rational coefficients are rejected over a prime field", "[cli]") {
    auto r = run(opts("classify", "GF(3)", {"x^2 - 1/2"}));
    REQUIRE(r.code == 1);
    CHECK(r.doc.at("notes")[0].get<std::string>().find("rational coefficient in a prime field") !=
          std::string::npos);
}

TEST_CASE("degree-one steps and bad base tokens are input errors", "[cli]") {
    CHECK(run(opts("classify", "Q", {"x - 1"})).code == 1);
    CHECK(run(opts("classify", "GF(4)", {"x^2-2"})).code == 1);
    CHECK(run(opts("frobnicate", "Q", {})).code == 1);
}

TEST_CASE("undecidable towers exit with the capability code", "[cli]") {
    auto r = run(opts("magid", "GF(2)(t)", {"x^2+x+t", "x^2-t"}));
    REQUIRE(r.code == 3);
    CHECK(r.doc.at("report").is_null());
    std::string note = r.doc.at("notes")[0].get<std::string>();
    CHECK(note.find("capability limit:") == 0);
    CHECK(note.find("trusted=true") != std::string::npos);
    CHECK(run(opts("classify", "GF(2)(t)", {"x^2+x+t", "x^2-t"})).code == 3);
}

TEST_CASE("text format renders the same document as indented lines", "[cli]") {
    auto o = opts("classify", "Q", {"x^2-2"});
    o.format = "text";
    auto r = run(o);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("tool_version: 1.0.0\n") != std::string::npos);
    CHECK(r.out.find("  degree: 2\n") != std::string::npos);
    CHECK(r.out.find("  group: C2\n") != std::string::npos);
    CHECK(r.out.find("{") == std::string::npos); // no raw JSON leaks through
}

TEST_CASE("catalog files load, sort, and verify cleanly", "[cli][slow]") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "composita_sample_catalog.json";
    {
        std::ofstream f(p);
        f << R"json([
  // comments are allowed in catalog files
  {"name": "zz-later", "base": "GF(7)", "ext": ["x^2-3"],
   "expected": {"degree": 2, "galois": true, "group": "C2"}},
  {"name": "aa-first", "base": "Q", "ext": ["x^2-5"],
   "expected": {"degree": 2, "separable": true, "normal": true}},
  {"name": "mm-tower", "base": "Q", "ext": ["x^2-2", "x^2-5"], "split": 1,
   "expected": {"degree": 4, "group": "C2xC2"}},
  {"name": "qq-infinite", "base": "Q", "infinite": "algebraic",
   "expected": {"infinite": true}}
])json";
    }
    auto cat = load_catalog(p.string());
    REQUIRE(cat.size() == 4);
    CHECK(cat.front().name == "aa-first");
    CHECK(cat.back().name == "zz-later");
    CHECK(cat[1].triple);
    CHECK(cat[1].mid.levels_used() == 1);

    CliOptions o;
    o.command = "verify";
    o.catalog = p.string();
    auto r = run(o);
    REQUIRE(r.code == 0);
    CHECK(r.doc.at("report").at("entries") == 4);
    CHECK(r.doc.at("report").at("ok") == true);
    std::remove(p.string().c_str());
}

TEST_CASE("catalog file errors are input errors", "[cli]") {
    CliOptions o;
    o.command = "verify";
    o.catalog = "/nonexistent/catalog.json";
    auto r = run(o);
    REQUIRE(r.code == 1);
    CHECK(r.doc.at("notes")[0].get<std::string>().find("cannot open catalog file") !=
          std::string::npos);

    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "composita_bad_catalog.json";
    {
        std::ofstream f(p);
        f << R"([{"name": "bad", "base": "Q", "ext": ["x^2-2"], "infinite": "algebraic"}])";
    }
    o.catalog = p.string();
    CHECK(run(o).code == 1);
    std::remove(p.string().c_str());
}

TEST_CASE("the bundled sample catalog stays loadable", "[cli]") {
#ifdef COMPOSITA_TEST_DATA_DIR
    auto cat = load_catalog(std::string(COMPOSITA_TEST_DATA_DIR) + "/sample_catalog.json");
    REQUIRE(cat.size() == 4);
    CHECK(cat.front().name == "sample-f7-sqrt3");
#else
    SUCCEED("data directory not configured for this build");
#endif
}
