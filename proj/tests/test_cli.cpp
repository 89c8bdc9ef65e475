#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "phasetrop/cli.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Run {
    int code;
    json body;
    std::string raw;
};

fs::path write_input(const std::string& name, const std::string& text)
{
    fs::path dir = fs::temp_directory_path() / "phasetrop_cli_tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "phasetrop");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = phasetrop::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    Run r{code, json(), out.str()};
    if (!r.raw.empty() && r.raw.front() == '{') r.body = json::parse(r.raw);
    return r;
}

const char* kSurfaceVars = "vars: x1 x2 x3 x4\n";

}  // namespace

TEST_CASE("initial polynomial command")
{
    fs::path in = write_input("init.txt", "vars: x\npoly f = x - t\n");
    Run r = run({"init", in.string(), "--alpha", "1"});
    CHECK(r.code == 0);
    CHECK(r.body == json::parse(R"({"value":"1","poly":"X - 1"})"));
}

TEST_CASE("initial ideal command")
{
    fs::path in = write_input("init_ideal.txt", std::string(kSurfaceVars) + "ideal I = {x1*x4 - x2*x3 - 1}\n");
    CHECK(run({"init", in.string(), "--alpha", "-1"}).body["ideal"] == json::array({"1"}));
    CHECK(run({"init", in.string(), "--alpha", "0"}).body["ideal"] == json::array({"X1*X4 - X2*X3 - 1"}));
    CHECK(run({"init", in.string(), "--alpha", "1"}).body["ideal"] == json::array({"X1*X4 - X2*X3"}));
}

TEST_CASE("critical levels command")
{
    fs::path in = write_input("levels.txt", std::string(kSurfaceVars) + "ideal I = {x1*x4 - x2*x3 - 1}\n");
    Run r = run({"levels", in.string()});
    CHECK(r.code == 0);
    CHECK(r.body["levels"] == json::array({"0"}));
    CHECK(r.body["flags_ok"] == true);
}

TEST_CASE("limit verification command")
{
    fs::path in = write_input("limit.txt", "vars: x\nmat a = [[t, 0], [t, t^-1]]\n");
    Run r = run({"verify-limit", in.string(), "--s", "10,20,40,80"});
    CHECK(r.code == 0);
    const json& sample = r.body["samples"][0];
    CHECK(sample["rate_ok"] == true);
    CHECK(sample["decreasing"] == true);
    const json& errors = sample["errors"];
    REQUIRE(errors.size() == 4);
    for (std::size_t k = 1; k < errors.size(); ++k) CHECK(errors[k]["eps"].get<double>() < errors[k - 1]["eps"].get<double>());
    CHECK(errors[3]["eps"].get<double>() < 0.05);
}

TEST_CASE("slow convergence exits with the non-convergence code")
{
    fs::path in = write_input("slow.txt", "vars: x\nmat m = [[1 + 2*t^2, -2*i], [i*t^2, 1]]\n");
    Run r = run({"verify-limit", in.string()});
    CHECK(r.code == 3);
    CHECK(r.body["samples"][0]["rate_ok"] == false);
}

TEST_CASE("limit and inverse commands")
{
    fs::path in = write_input("sl2.txt", "vars: x\nmat d = [[t, 0], [0, t^-1]]\n");
    Run lim = run({"sl2-limit", in.string()});
    CHECK(lim.code == 0);
    CHECK(lim.body["level"] == "1");
    CHECK(lim.body["branch"] == "singular");
    Run inv = run({"sl2-invert", in.string(), "--s", "1"});
    CHECK(inv.code == 0);
    CHECK(std::abs(inv.body["level"].get<double>() - 1) < 1e-12);
    CHECK(run({"sl2-invert", in.string()}).code == 2);
}

TEST_CASE("layers and realization commands")
{
    fs::path in = write_input("layers.txt", std::string(kSurfaceVars) + "poly f = x1 - 1\npoly g = x1*x4 - x2*x3 + x1\n" +
                                                "poly b0 = 1\npoly b1 = x1^2 + x2*x3\n");
    Run f = run({"layers", in.string(), "--name", "f"});
    CHECK(f.code == 0);
    CHECK(f.body["levels"] == json::array({"0"}));
    CHECK(f.body["generic"] == true);
    Run g = run({"layers", in.string(), "--name", "g"});
    CHECK(g.body["poly"] == "x1 + 1");

    Run r = run({"realize", in.string(), "--blocks", "b0,b1", "--roots", "2"});
    CHECK(r.code == 0);
    CHECK(r.body["roots"] == json::array({"2"}));
    CHECK(r.body["exponents"] == json::array({"0", "-4"}));
}

TEST_CASE("lifting command")
{
    fs::path in = write_input("lift.txt", "vars: x\npoly f = x^2 - t^2 - t\n");
    Run r = run({"lift", in.string(), "--alpha", "1", "--theta", "1", "--precision", "3"});
    CHECK(r.code == 0);
    CHECK(r.body["root"] == "t + 1/2 - 1/8*t^-1");
    CHECK(r.body["residual"] == "-1");
}

TEST_CASE("parse errors report line and column")
{
    fs::path in = write_input("bad.txt", "vars: x\npoly f = x +* 1\n");
    Run r = run({"init", in.string(), "--alpha", "1"});
    CHECK(r.code == 2);
    CHECK(r.body["error"]["kind"] == "parse");
    CHECK(r.body["error"]["line"] == 2);
    CHECK(r.body["error"]["column"] == 13);

    fs::path unknown = write_input("unknown.txt", "vars: x\npoly f = y\n");
    Run u = run({"init", unknown.string(), "--alpha", "0"});
    CHECK(u.code == 2);
    CHECK(u.body["error"]["column"] == 10);
}

TEST_CASE("input and precondition errors")
{
    CHECK(run({"init", "/nonexistent/file", "--alpha", "1"}).code == 2);
    CHECK(run({"init"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    fs::path in = write_input("pre.txt", "vars: x\nmat m = [[t, 0], [0, t]]\n");
    Run r = run({"sl2-limit", in.string()});
    CHECK(r.code == 2);
    CHECK(r.body["error"]["kind"] == "precondition");
    fs::path nf = write_input("nf.txt", "vars: x\npoly f = x\n");
    CHECK(run({"init", nf.string(), "--alpha", "1", "--name", "g"}).code == 2);
}

TEST_CASE("output is deterministic")
{
    fs::path in = write_input("det.txt", std::string(kSurfaceVars) + "ideal I = {x1*x4 - x2*x3 - 1, x1 - t*x2}\n" +
                                             "mat a = [[t, 0], [t, t^-1]]\n");
    CHECK(run({"levels", in.string()}).raw == run({"levels", in.string()}).raw);
    CHECK(run({"verify-limit", in.string()}).raw == run({"verify-limit", in.string()}).raw);
    Run s1 = run({"selftest", "--seed", "7"}), s2 = run({"selftest", "--seed", "7"});
    CHECK(s1.code == 0);
    CHECK(s1.raw == s2.raw);
}
