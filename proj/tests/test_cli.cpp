#include "doctest.h"

#include "commands.hpp"
#include "io.hpp"

#include "twd/catalog.hpp"

#include <filesystem>
#include <fstream>

using namespace twd;
using io::json;

namespace {

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto dir = std::filesystem::temp_directory_path() / "twd_test_cli";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

std::string emitted(const std::string& name)
{
    const cli::Outcome o = cli::run({"catalog", "emit", name});
    REQUIRE(o.exit_code == 0);
    return o.out;
}

json run_json(const std::vector<std::string>& args, int expected_exit = 0)
{
    const cli::Outcome o = cli::run(args);
    INFO(o.err);
    CHECK(o.exit_code == expected_exit);
    return json::parse(o.out);
}

} // namespace

TEST_CASE("catalog lists all eight names")
{
    const json j = run_json({"catalog", "list"});
    CHECK(j["catalog"] == json({"h4_sweedler", "group_Z2", "group_Z3", "group_S3", "lie_ab2", "lie_heis3", "lie_sl2", "lie_nonab2"}));
    const cli::Outcome t = cli::run({"--format", "text", "catalog", "list"});
    CHECK(t.out.find("lie_nonab2\n") != std::string::npos);
}

TEST_CASE("algebra files round-trip byte-identically and verify")
{
    for (const auto& name : run_json({"catalog", "list"})["catalog"]) {
        const std::string text = emitted(name.get<std::string>());
        INFO(name);
        CHECK(io::emit_algebra(io::parse_algebra(text)) == text);
        const json r = run_json({"verify", temp_file(name.get<std::string>() + ".json", text)});
        CHECK(r["status"] == "pass");
        CHECK(r["inputs"]["algebra"]["sha256"] == io::sha256_hex(text));
    }
}

TEST_CASE("scalars are exact strings")
{
    CHECK(io::scalar_json(Q(-3) / 6) == "-1/2");
    CHECK(io::scalar_from(json("4/6")) == Q(2) / 3);
    CHECK_THROWS_AS(io::scalar_from(json(0.5)), FormatError);
    CHECK_THROWS_AS(io::scalar_from(json("1/0")), FormatError);
}

TEST_CASE("malformed files are input errors")
{
    CHECK_THROWS_AS(io::parse_algebra("{"), FormatError);
    CHECK_THROWS_AS(io::parse_algebra(R"({"kind":"group","dim":1,"basis_names":["e"]})"), FormatError);
    CHECK_THROWS_AS(io::parse_algebra(R"({"kind":"lie_algebra","dim":2,"basis_names":["x"],"bracket":[]})"), FormatError);
    CHECK_THROWS_AS(
        io::parse_algebra(R"({"kind":"lie_algebra","dim":1,"basis_names":["x"],"bracket":[],"extra":1})"), FormatError);
    CHECK_THROWS_AS(io::parse_algebra(R"({"kind":"lie_algebra","dim":1,"basis_names":["x"],"bracket":[[0,0,3,"1"]]})"),
        FormatError);

    const std::string bad = temp_file("bad.json", "not json");
    const cli::Outcome o = cli::run({"verify", bad});
    CHECK(o.exit_code == cli::kInputError);
    CHECK(json::parse(o.out)["status"] == "error");
    CHECK(cli::run({"verify", "/nonexistent/file.json"}).exit_code == cli::kInputError);
    CHECK(cli::run({"frobnicate"}).exit_code == cli::kInputError);
    CHECK(cli::run({"catalog", "emit", "nope"}).exit_code == cli::kInputError);
    CHECK(cli::run({"lie", temp_file("h4.json", emitted("h4_sweedler")), "--outder"}).exit_code == cli::kInputError);
}

TEST_CASE("verification failures exit with 1 and carry a witness")
{
    // [x,y] = x without the antisymmetric partner.
    const std::string broken = temp_file("broken.json",
        R"({"kind":"lie_algebra","name":"broken","dim":2,"basis_names":["x","y"],"bracket":[[0,1,0,"1"]]})");
    const json r = run_json({"verify", broken}, cli::kVerificationFailed);
    CHECK(r["status"] == "fail");
    bool witnessed = false;
    for (const auto& v : r["verdicts"])
        if (!v["passed"].get<bool>())
            witnessed = !v["witness"].get<std::string>().empty();
    CHECK(witnessed);
}

TEST_CASE("Sweedler examples")
{
    const std::string h4 = temp_file("h4.json", emitted("h4_sweedler"));
    const json t = run_json({"twisted", h4, "--crossed-module"});
    const json& cm = t["results"]["crossed_module"];
    CHECK(cm["pi0_dim"] == 2);
    CHECK(cm["pi1_dim"] == 0);
    CHECK(cm["pi0_derived_dim"] == 1);
    CHECK(t["results"]["der_tw_dim"] == 5);

    const json c = run_json({"cohomology", h4, "--degree", "1", "--max-degree", "3"});
    CHECK(c["results"]["degrees"][0]["dim"] == 0);
    CHECK(c["results"]["degrees"][1]["dim"] == 1);

    const json s3 = run_json({"cohomology", temp_file("s3.json", emitted("group_S3")), "--degree", "2"});
    CHECK(s3["results"]["degrees"][0]["dim"] == 0);
}

TEST_CASE("rmatrix with element files by name")
{
    const std::string h4 = temp_file("h4.json", emitted("h4_sweedler"));
    const std::string r = temp_file("r.json", io::element_json(catalog::h4_r_matrix(Q(2))).dump());
    const json j = run_json({"rmatrix", h4, "--R", r, "--tangent", "--stabilizer"});
    CHECK(j["status"] == "pass");
    CHECK(j["results"]["tangent"]["dim"].get<int>() >= 1);

    const std::string named = temp_file("rn.json",
        R"({"kind":"element","degree":2,"terms":[{"c":"1","slots":["1","1"]}]})");
    const json k = run_json({"rmatrix", h4, "--R", named}, cli::kVerificationFailed);
    CHECK(k["status"] == "fail");
}

TEST_CASE("lie, ug and ediff subcommands")
{
    const std::string ab2 = temp_file("ab2.json", emitted("lie_ab2"));
    const std::string sl2 = temp_file("sl2.json", emitted("lie_sl2"));
    CHECK(run_json({"lie", ab2, "--semidirect"})["results"]["semidirect"]["outer_dim"] == 4);
    CHECK(run_json({"lie", sl2, "--exterior-invariants", "3"})["results"]["exterior_invariants"]["dim"] == 1);
    CHECK(run_json({"lie", sl2, "--schouten"})["status"] == "pass");
    CHECK(cli::run({"lie", sl2, "--outder", "--schouten"}).exit_code == cli::kInputError);

    const json g = run_json({"ug", sl2, "--graded-cohomology", "3", "--trunc", "3", "--invariant"});
    CHECK(g["results"]["graded_cohomology"]["dim"] == 1);
    CHECK(cli::run({"ug", sl2, "--graded-cohomology", "2"}).exit_code == cli::kInputError);
    CHECK(cli::run({"ug", sl2, "--graded-cohomology", "4", "--trunc", "3"}).exit_code == cli::kInputError);

    const std::string ef = temp_file("ef.json",
        R"({"kind":"element","degree":2,"terms":[{"c":"1","slots":["e","f"]},{"c":"-1","slots":["f","e"]}]})");
    CHECK(run_json({"ug", sl2, "--twist-check", ef}, cli::kVerificationFailed)["status"] == "fail");

    const std::string phi = temp_file("phi.json", R"({"kind":"element","degree":2,"terms":[{"c":"1","slots":["x","y"]}]})");
    const json e = run_json({"ediff", ab2, "--phi", phi, "--weight", "4", "--verify"});
    CHECK(e["results"]["piece_dims"] == json({1, 2, 5, 13, 34}));
    CHECK(e["status"] == "pass");
    CHECK(cli::run({"ediff", sl2, "--phi", phi}).exit_code == cli::kInputError);
    const std::string notcocycle = temp_file("nc.json",
        R"({"kind":"element","degree":2,"terms":[{"c":"1","slots":["x","x*y"]}]})");
    CHECK(cli::run({"ediff", ab2, "--phi", notcocycle}).exit_code == cli::kInputError);
}

TEST_CASE("reports are byte-stable")
{
    const std::string h4 = temp_file("h4.json", emitted("h4_sweedler"));
    const std::vector<std::string> args = {"twisted", h4, "--crossed-module", "--jacobiator", "--separate-all"};
    CHECK(cli::run(args).out == cli::run(args).out);
    const json j = json::parse(cli::run(args).out);
    CHECK(j["schema"] == cli::kReportSchema);
    CHECK(j["command"] == json(args));
}

TEST_CASE("element files round-trip")
{
    UTensor t(2);
    t.add({Word{0, 1}, Word{}}, Q(3) / 4);
    t.add({Word{1}, Word{0}}, Q(-1));
    const std::string text = io::emit_element(t);
    CHECK(io::to_words({"x", "y"}, io::parse_element(text)) == t);
    CHECK(io::emit_element(io::to_words({"x", "y"}, io::parse_element(text))) == text);
    const auto named = io::parse_element(R"({"degree":1,"terms":[{"c":"2","slots":["x^2*y"]}]})");
    UTensor w(1);
    w.add({Word{0, 0, 1}}, Q(2));
    CHECK(io::to_words({"x", "y"}, named) == w);
}
