#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ydlab.h"
#include "ydlab/workspace.hpp"

using namespace ydlab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* tag) {
    fs::path p = fs::temp_directory_path() / (std::string("ydlab_test_") + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cmd(ydlab_session* s, std::vector<const char*> argv, std::string* report = nullptr) {
    char* out = nullptr;
    int rc = ydlab_session_run(s, static_cast<int>(argv.size()), argv.data(), &out);
    if (report && out) *report = out;
    ydlab_free_string(out);
    return rc;
}

}  // namespace

TEST_CASE("builtin workspaces load and verify eagerly") {
    Workspace ws = builtin_workspace("sweedler");
    CHECK(ws.bimonads.count("sweedler") == 1);
    CHECK(ws.objects.count("adjoint") == 1);
    CHECK(ws.objects.count("anti") == 1);
    CHECK(ws.pairs.count("eps_g") == 1);
    CHECK(ws.objects.at("anti").alpha == ws.automorphisms.at("phi_neg1").matrix);
    CHECK_THROWS_AS(builtin_workspace("nope"), Error);
    CHECK(builtin_workspace("trivial").bimonads.size() == 1);
    CHECK(builtin_workspace("cyclic2").objects.count("crossed") == 1);
}

TEST_CASE("export then reload round-trips the whole workspace") {
    fs::path dir = fresh_dir("roundtrip");
    Workspace ws = builtin_workspace("sweedler");
    export_workspace(ws, dir.string());
    Workspace back = load_workspace((dir / "manifest.json").string());
    CHECK(back.bimonads.size() == ws.bimonads.size());
    CHECK(back.objects.size() == ws.objects.size());
    CHECK(back.pairs.size() == ws.pairs.size());
    CHECK(back.bimonad("sweedler")->mult == ws.bimonad("sweedler")->mult);
    CHECK(back.object("anti").psi == ws.object("anti").psi);
    CHECK(back.pair("eps_g").g.col == ws.pair("eps_g").g.col);
}

TEST_CASE("empty manifest loads an empty workspace") {
    fs::path dir = fresh_dir("empty");
    std::ofstream(dir / "manifest.json") << "{}\n";
    Workspace ws = load_workspace((dir / "manifest.json").string());
    CHECK(ws.bimonads.empty());
    CHECK(ws.objects.empty());
}

TEST_CASE("non-reduced rationals are canonicalized at load") {
    fs::path dir = fresh_dir("canon");
    std::ofstream(dir / "manifest.json") << R"({"bimonads": ["b.json"]})";
    // trivial bimonad with every entry written as 2/4 of the true value * 2
    std::ofstream(dir / "b.json") << R"({
        "name": "halfy", "dim": 1,
        "mult": [["2/2"]], "unit": [["4/4"]], "comult": [["1"]],
        "counit": [["3/3"]], "lambda": [["1/1"]]})";
    Workspace ws = load_workspace((dir / "manifest.json").string());
    CHECK(ws.bimonad("halfy")->mult.at(0, 0) == Scalar(1));
}

TEST_CASE("a corrupted component fails atomically with the identity named") {
    fs::path dir = fresh_dir("corrupt");
    std::ofstream(dir / "manifest.json") << R"({"bimonads": ["b.json"]})";
    std::ofstream(dir / "b.json") << R"({
        "name": "bad", "dim": 1,
        "mult": [["2"]], "unit": [["1"]], "comult": [["1"]],
        "counit": [["1"]], "lambda": [["1"]]})";
    try {
        load_workspace((dir / "manifest.json").string());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IntegrityError);
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
    // malformed JSON is an input error naming the file
    std::ofstream(dir / "b.json") << "{not json";
    CHECK_THROWS_AS(load_workspace((dir / "manifest.json").string()), Error);
}

TEST_CASE("C API sessions run commands with spec exit codes") {
    ydlab_session* s = nullptr;
    char* err = nullptr;
    REQUIRE(ydlab_session_open("sweedler", &s, &err) == YDLAB_OK);
    std::string report;

    CHECK(run_cmd(s, {"verify-bimonad", "sweedler"}, &report) == YDLAB_OK);
    CHECK(report.find("result: pass") != std::string::npos);

    CHECK(run_cmd(s, {"verify-aut", "phi_neg1"}) == YDLAB_OK);
    CHECK(run_cmd(s, {"verify-yd", "--object", "adjoint"}) == YDLAB_OK);
    CHECK(run_cmd(s, {"verify-yd", "--object", "anti"}) == YDLAB_OK);

    // wrong grading: mathematical failure, report names the identity
    CHECK(run_cmd(s, {"verify-yd", "--object", "adjoint", "--beta", "phi_neg1"}, &report) ==
          YDLAB_CHECK_FAILED);
    CHECK(report.find("twisted-YD") != std::string::npos);
    CHECK(report.find("FAIL") != std::string::npos);

    CHECK(run_cmd(s, {"classify", "--object", "adjoint"}, &report) == YDLAB_OK);
    CHECK(report.find("(id, id)") != std::string::npos);

    CHECK(run_cmd(s, {"compose", "--left", "adjoint", "--right", "unit"}) == YDLAB_OK);
    CHECK(run_cmd(s, {"twist", "--object", "adjoint", "--mode", "source", "--aut", "phi_2"}) ==
          YDLAB_OK);
    CHECK(run_cmd(s, {"phi-laws", "--object", "adjoint", "--alpha", "phi_neg1", "--beta",
                      "phi_neg1", "--object2", "unit"}) == YDLAB_OK);
    CHECK(run_cmd(s, {"involution-check", "eps_g"}) == YDLAB_OK);
    CHECK(run_cmd(s, {"group-axioms", "--group", "s3", "--seed", "3"}) == YDLAB_OK);
    CHECK(run_cmd(s, {"tau-build", "--pair", "eps_g"}) == YDLAB_OK);

    // iso writes an output object file
    fs::path dir = fresh_dir("iso_out");
    std::string outfile = (dir / "plain.json").string();
    CHECK(run_cmd(s, {"iso", "--pair", "eps_g", "--object", "anti", "--direction", "forward",
                      "--out", outfile.c_str()},
                  &report) == YDLAB_OK);
    CHECK(fs::exists(outfile));
    CHECK(report.find("(id, id)") != std::string::npos);

    // input errors
    CHECK(run_cmd(s, {"no-such-command"}) == YDLAB_INPUT_ERROR);
    CHECK(run_cmd(s, {"verify-yd", "--object", "ghost"}) == YDLAB_INPUT_ERROR);
    CHECK(run_cmd(s, {"verify-yd"}) == YDLAB_INPUT_ERROR);
    CHECK(run_cmd(s, {"iso", "--pair", "eps_g", "--object", "anti", "--direction", "sideways"}) ==
          YDLAB_INPUT_ERROR);

    ydlab_session_free(s);
}

TEST_CASE("JSON reports parse and carry the seed deterministically") {
    ydlab_session* s = nullptr;
    REQUIRE(ydlab_session_open("sweedler", &s, nullptr) == YDLAB_OK);
    std::string a, b;
    CHECK(run_cmd(s, {"group-axioms", "--group", "d4", "--seed", "11", "--json"}, &a) == YDLAB_OK);
    CHECK(run_cmd(s, {"group-axioms", "--group", "d4", "--seed", "11", "--json"}, &b) == YDLAB_OK);
    auto j = nlohmann::json::parse(a);
    CHECK(j.at("passed").get<bool>());
    CHECK(j.at("seed").get<unsigned long>() == 11);
    CHECK(!j.at("checks").empty());
    // determinism given (inputs, seed) — elapsed time is excluded
    j.erase("elapsed_ms");
    auto j2 = nlohmann::json::parse(b);
    j2.erase("elapsed_ms");
    CHECK(j == j2);
    ydlab_session_free(s);
}

TEST_CASE("session opening reports bad workspaces") {
    ydlab_session* s = nullptr;
    char* err = nullptr;
    CHECK(ydlab_session_open("/no/such/manifest.json", &s, &err) == YDLAB_INPUT_ERROR);
    CHECK(err != nullptr);
    ydlab_free_string(err);
    CHECK(ydlab_version() != nullptr);
}

TEST_CASE("export command produces a loadable workspace") {
    ydlab_session* s = nullptr;
    REQUIRE(ydlab_session_open("cyclic2", &s, nullptr) == YDLAB_OK);
    fs::path dir = fresh_dir("export_cmd");
    std::string d = dir.string();
    CHECK(run_cmd(s, {"export-workspace", "--dir", d.c_str()}) == YDLAB_OK);
    ydlab_session_free(s);
    Workspace back = load_workspace((dir / "manifest.json").string());
    CHECK(back.objects.count("crossed") == 1);
}
