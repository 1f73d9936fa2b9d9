#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "wittlab/descriptor.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("WITTLAB_CLI");
    return env ? env : "";
}

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json parse_stripped(const std::string& text) {
    json j = json::parse(text);
    j.erase("timing_ms");
    return j;
}

} // namespace

TEST_CASE("CLI is available to the test suite") { REQUIRE(!cli_path().empty()); }

TEST_CASE("documented example: asw cokernel on the affine line over F_2") {
    auto res = run_cli("asw cokernel --ring \"F(2,1)[x,1/1]\" --n 1 --deg 4 --mode geometric");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["result"]["invariant_factors"] == json::array({"2", "2"}));
    CHECK(j["result"]["generators"] == json::array({"x", "x^3"}));
    CHECK(j["inputs"]["ring"] == "F(2,1)[x,1/1]");
}

TEST_CASE("documented example: group quasip on S_3 at p=3") {
    auto res = run_cli("group quasip --group \"deg=3; gens=(0 1 2),(0 1)\" --p 3");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["result"]["order"] == 3);
}

TEST_CASE("documented example: curve lemma67 at (2,2)") {
    auto res = run_cli("curve lemma67 --p 2 --n 2");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["result"]["bound"] == "4");
    CHECK(j["certificates"]["derivative"] == "-1");
    CHECK(j["certificates"]["profile_bound"] == "4");
}

TEST_CASE("witt arithmetic through the CLI") {
    auto res = run_cli(
        "witt add --ring \"F(2,1)[x,1/1]\" --u \"[1,0]\" --v \"[1,0]\"");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["result"]["sum"] == json::array({"0", "1"}));
    auto pm = run_cli("witt pmap --ring \"F(2,1)[x,1/1]\" --u \"[x]\"");
    REQUIRE(pm.exit_code == 0);
    json jp = json::parse(pm.output);
    CHECK(jp["result"]["p_map"] == json::array({"x^2+x"}));
}

TEST_CASE("error handling and exit codes") {
    SUBCASE("bad ring descriptor: exit 2 with machine-readable kind") {
        auto res = run_cli("asw cokernel --ring \"F(2,1)[x,1/(x^2)]\" --n 1 --deg 2");
        CHECK(res.exit_code == 2);
        json j = json::parse(res.output);
        CHECK(j.contains("error"));
        CHECK(j["error"]["kind"] == "InvalidArgument");
    }
    SUBCASE("composite p rejected") {
        auto res = run_cli("curve lemma67 --p 6 --n 1");
        CHECK(res.exit_code == 2);
        json j = json::parse(res.output);
        CHECK(j["error"]["kind"] == "CompositeP");
    }
    SUBCASE("cap exceedance: exit 3") {
        auto res = run_cli("group mingen --group \"deg=4; gens=(0 1),(2 3)\" --cap 1");
        CHECK(res.exit_code == 3);
        json j = json::parse(res.output);
        CHECK(j["error"]["kind"] == "CapExceeded");
    }
}

TEST_CASE("byte-stable output across repeated runs (timing aside)") {
    std::vector<std::string> cmds{
        "asw cokernel --ring \"F(2,1)[x,1/1]\" --n 1 --deg 4 --mode geometric",
        "asw covers --ring \"F(3,1)[x,1/1]\" --n 2 --deg 1",
        "group quasip --group \"deg=3; gens=(0 1 2),(0 1)\" --p 3",
        "curve lemma67 --p 2 --n 2",
        "embed abhyankar --group \"deg=5; gens=(0 1 2),(0 1 2 3 4)\" --p 7 --genus 0 --punctures 3",
    };
    for (const auto& cmd : cmds) {
        auto a = run_cli(cmd), b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(parse_stripped(a.output).dump() == parse_stripped(b.output).dump());
    }
}

TEST_CASE("grid computation merges deterministically under --jobs") {
    auto seq = run_cli("asw cokernel --ring \"F(2,1)[x,1/1]\" --n 2 --deg 3 --grid --jobs 1");
    auto par = run_cli("asw cokernel --ring \"F(2,1)[x,1/1]\" --n 2 --deg 3 --grid --jobs 4");
    REQUIRE(seq.exit_code == 0);
    REQUIRE(par.exit_code == 0);
    CHECK(parse_stripped(seq.output).dump() == parse_stripped(par.output).dump());
}

TEST_CASE("inputs block re-feeds to the same result") {
    auto res = run_cli("asw covers --ring \"F(3,1)[x,1/x]\" --n 1 --deg 3");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.output);
    std::string ring = j["inputs"]["ring"];
    int n = j["inputs"]["n"], d = j["inputs"]["d"];
    std::string mode = j["inputs"]["mode"];
    auto again = run_cli("asw covers --ring \"" + ring + "\" --n " + std::to_string(n) +
                         " --deg " + std::to_string(d) + " --mode " + mode);
    REQUIRE(again.exit_code == 0);
    CHECK(json::parse(again.output)["result"] == j["result"]);
}

TEST_CASE("descriptor parsers round-trip") {
    using namespace wittlab;
    auto ring = parse_ring_descriptor("F(5,1)[x,1/(x*(x-1))]");
    CHECK(ring->punctures_finite() == 2);
    auto again = parse_ring_descriptor(ring->describe());
    CHECK(again->h() == ring->h());
    auto G = parse_group_descriptor("deg=5; gens=(0 1 2 3 4),(0 1)");
    CHECK(G.order() == 120);
    auto elem = parse_ring_elem("(1 + 1/x)^2", parse_ring_descriptor("F(3,1)[x,1/x]"));
    CHECK(elem.denom_exp() == 2);
}
