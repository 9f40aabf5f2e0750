#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "orelab/cli.hpp"

using namespace orelab;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/orelab_cli_" + name;
    std::ofstream f(path);
    f << body;
    return path;
}

} // namespace

TEST_CASE("check exits with the verdict") {
    CHECK(cli({"check", "reduced", "--name", "zn2"}).code == 0);
    CHECK(cli({"check", "skew-armendariz", "--name", "zn2"}).code == 0);

    Run fails = cli({"check", "reduced", "--name", "zn4"});
    CHECK(fails.code == 1);
    CHECK(fails.out.find("fails") != std::string::npos);
    CHECK(fails.out.find("a = 2") != std::string::npos);

    Run open = cli({"check", "reduced", "--name", "gauss_conj"});
    CHECK(open.code == 3);
    CHECK(open.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("skew products print both factors and the result") {
    Run tt = cli({"mul", "--name", "z2poly_eval0", "--p", "{t}", "--q", "{t}"});
    CHECK(tt.code == 0);
    CHECK(tt.out == "({t}) * ({t}) = {t^2}\n");

    // the echo is the canonical form, so a bare x regains its coefficient
    Run xt = cli({"mul", "--name", "z2poly_eval0", "--p", "x", "--q", "{t}"});
    CHECK(xt.code == 0);
    CHECK(xt.out == "({1} x) * ({t}) = 0\n");

    Run machine = cli({"mul", "--name", "z2poly_eval0", "--p", "{t}", "--q",
                       "{t}", "--format", "machine"});
    CHECK(machine.code == 0);
    json j = json::parse(machine.out);
    CHECK(j.at("product") == "{t^2}");
}

TEST_CASE("annihilator listings include the generator when one exists") {
    Run tri = cli(
        {"ann", "--name", "tri4_negate", "--elem", "(2, 0)", "--principal"});
    CHECK(tri.code == 0);
    CHECK(tri.out ==
          "r((2, 0) R) has 4 member(s): (0, 0) (0, 2) (2, 0) (2, 2)\n"
          "idempotent generator: NONE\n");

    Run t2 = cli(
        {"ann", "--name", "t2f2_id", "--elem", "(0, 0, 1)", "--principal"});
    CHECK(t2.code == 0);
    CHECK(t2.out.find("has 4 member(s)") != std::string::npos);
    CHECK(t2.out.find("idempotent generator: (1, 0, 0)") != std::string::npos);

    Run left = cli({"ann", "--name", "t2f2_id", "--elem", "(0, 0, 1)",
                    "--left", "--principal"});
    CHECK(left.out.find("has 1 member(s): (0, 0, 0)") != std::string::npos);

    // exhaustive scans cannot run on a sampled backend
    Run g = cli({"ann", "--name", "gauss_conj", "--elem", "1"});
    CHECK(g.code == 2);
    CHECK(g.err.find("error") != std::string::npos);
}

TEST_CASE("fmap evaluates one coefficient map") {
    Run r = cli({"fmap", "--name", "t2f2_inner", "--i", "1", "--j", "1",
                 "--elem", "(1, 1, 0)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("f_1^1((1, 1, 0)) = ", 0) == 0);

    Run m = cli({"fmap", "--name", "t2f2_id", "--i", "0", "--j", "2",
                 "--elem", "#5", "--format", "machine"});
    CHECK(m.code == 0);
    json j = json::parse(m.out);
    CHECK(j.at("i") == 0);
    CHECK(j.at("value") == "(0, 0, 0)"); // identity twist, i < j
}

TEST_CASE("witness construction is exit-coded like a check") {
    Run ok = cli({"witness", "--name", "t2f2_id", "--p", "{#4} + {#1} x"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("claim 1") != std::string::npos);
    CHECK(ok.out.find("claim 2") != std::string::npos);

    Run zero =
        cli({"witness", "--name", "t2f2_id", "--p", "0", "--deg-phi", "1"});
    CHECK(zero.code == 0);
    CHECK(zero.out.find("members 64, expected 64") != std::string::npos);

    Run blocked =
        cli({"witness", "--name", "tri4_negate", "--p", "{(2, 0)}"});
    CHECK(blocked.code == 3);
    CHECK(blocked.err.rfind("blocked: hypothesis pq-baer-right failed", 0) ==
          0);
}

TEST_CASE("report surveys a catalog entry or a ring file") {
    Run zn2 = cli({"report", "--name", "zn2"});
    CHECK(zn2.code == 0);
    CHECK(zn2.out.find("branch: iii") != std::string::npos);
    CHECK(zn2.out.find("reduced") != std::string::npos);

    Run machine = cli({"report", "--name", "zn2", "--format", "machine"});
    json j = json::parse(machine.out);
    CHECK(j.at("report").at("branch") == "iii");
    CHECK(j.at("profile").at("mode") == "exhaustive");

    std::string path = write_temp("z6.json", R"({"ring": {"kind": "zn", "n": 6}})");
    Run file = cli({"report", "--file", path});
    CHECK(file.code == 0);

    // maps default to (identity, zero) but can be spelled out
    std::string path2 = write_temp("z6maps.json", R"({
        "ring": {"kind": "zn", "n": 6},
        "sigma": {"kind": "identity"},
        "delta": {"kind": "zero"}
    })");
    Run file2 = cli({"report", "--file", path2, "--format", "machine"});
    CHECK(file2.code == 0);
    CHECK(json::parse(file2.out) ==
          json::parse(cli({"report", "--file", path, "--format", "machine"}).out));
}

TEST_CASE("bad input exits 2 with a reason on stderr") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"explode"}).code == 2);

    Run neither = cli({"report"});
    CHECK(neither.code == 2);
    CHECK(neither.err.find("--name or --file") != std::string::npos);

    Run both = cli({"report", "--name", "zn2", "--file", "/tmp/x.json"});
    CHECK(both.code == 2);

    Run unknown = cli({"report", "--name", "zn99"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("zn2") != std::string::npos); // lists known names

    CHECK(cli({"report", "--name", "zn2", "--format", "yaml"}).code == 2);
    CHECK(cli({"check", "bogus-prop", "--name", "zn2"}).code == 2);
    CHECK(cli({"ann", "--name", "zn2"}).code == 2); // missing --elem
    CHECK(cli({"mul", "--name", "zn4", "--p", "{banana}", "--q", "0"}).code == 2);

    std::string bad_json = write_temp("bad.json", "{ not json");
    CHECK(cli({"report", "--file", bad_json}).code == 2);
    std::string no_ring = write_temp("no_ring.json", R"({"sigma": {"kind": "identity"}})");
    CHECK(cli({"report", "--file", no_ring}).code == 2);
    std::string extra = write_temp("extra.json",
                                   R"({"ring": {"kind": "zn", "n": 6}, "surprise": 1})");
    CHECK(cli({"report", "--file", extra}).code == 2);
    CHECK(cli({"report", "--file", "/tmp/orelab_does_not_exist.json"}).code ==
          2);

    Run help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("report") != std::string::npos);
}

TEST_CASE("paper reruns pinned expectations") {
    Run one = cli({"paper", "--name", "zn2"});
    CHECK(one.code == 0);
    CHECK(one.out.find("zn2") != std::string::npos);
    CHECK(one.out.find("all catalog expectations hold") != std::string::npos);

    Run machine = cli({"paper", "--name", "zn2", "--format", "machine"});
    CHECK(machine.code == 0);
    json j = json::parse(machine.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("name") == "zn2");
    CHECK(j[0].at("ok").get<bool>());

    CHECK(cli({"paper", "--name", "zn99"}).code == 2);
}

TEST_CASE("machine reports are byte-deterministic and seed-steerable") {
    std::vector<std::string> args = {"report", "--name",   "gauss_conj",
                                     "--format", "machine", "--seed",
                                     "7",      "--samples", "300"};
    Run a = cli(args);
    Run b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    json j = json::parse(a.out);
    bool saw_echo = false;
    for (const auto& row : j.at("report").at("rows")) {
        if (!row.contains("bounds")) continue;
        const auto& bounds = row.at("bounds");
        if (bounds.contains("seed")) CHECK(bounds.at("seed") == 7);
        // pair scans echo the budget as pairs; element scans as samples
        if (bounds.contains("pairs") && bounds.at("pairs") == 300)
            saw_echo = true;
        if (bounds.contains("samples") && bounds.at("samples") == 300)
            saw_echo = true;
    }
    CHECK(saw_echo);

    // a different seed changes the survey inputs but not its shape
    std::vector<std::string> other = args;
    other.back() = "301";
    CHECK(json::parse(cli(other).out).at("report").at("rows").size() == 13);
}

TEST_CASE("the installed binary behaves like the in-process entry point") {
    auto shell = [](const std::string& cmd) {
        int status = std::system(cmd.c_str());
        REQUIRE(status != -1);
        return WEXITSTATUS(status);
    };
    const std::string bin = ORELAB_BIN;
    const std::string tmp = "/tmp/orelab_cli_bin_out.json";

    CHECK(shell(bin + " report --name zn2 --format machine > " + tmp +
                " 2>/dev/null") == 0);
    std::ifstream f(tmp);
    json j = json::parse(f);
    CHECK(j.at("report").at("branch") == "iii");

    CHECK(shell(bin + " check reduced --name zn4 > /dev/null 2>&1") == 1);
    CHECK(shell(bin + " check reduced --name gauss_conj > /dev/null 2>&1") ==
          3);
    CHECK(shell(bin + " report > /dev/null 2>&1") == 2);
    CHECK(shell(bin + " --help > /dev/null 2>&1") == 0);
    std::remove(tmp.c_str());
}
