// Copyright 2026 The twozero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + std::string(TWOZERO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json parse_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("enumerate: golden example") {
    const auto res = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["n"] == 24);
    CHECK(j["k"] == 4);
    CHECK(j["minimum_distance"] == 12);
    CHECK(j["dimension_check"]["pass"] == true);
    const nlohmann::json expected = {{"0", 1},   {"12", 72},  {"16", 72}, {"18", 264},
                                     {"20", 864}, {"22", 864}, {"24", 264}};
    CHECK(j["counts"] == expected);
}

TEST_CASE("enumerate: csv format") {
    const auto res = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.rfind("weight,frequency\n0,1\n12,72\n", 0) == 0);
}

TEST_CASE("enumerate: invalid parameters exit 2 with one-line reason") {
    const auto res = run_cli("enumerate --p 7 --s 1 --m 2 --h 4 --e 3");
    CHECK(res.exit_code == 2);
    CHECK(res.output == "error: e does not divide h\n");

    const auto bad_p = run_cli("enumerate --p 6 --s 1 --m 2 --h 3 --e 3");
    CHECK(bad_p.exit_code == 2);
    CHECK(bad_p.output == "error: p is not prime\n");
}

TEST_CASE("enumerate: work cap breach exits 3, override lifts it") {
    const auto res = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --work-cap 100");
    CHECK(res.exit_code == 3);
    CHECK(res.output.rfind("error: enumeration work cap exceeded", 0) == 0);

    // the environment variable sets the default cap; the flag still wins
    const auto env = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3",
                             "TWOZERO_WORK_CAP=100 ");
    CHECK(env.exit_code == 3);
    const auto flag = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --work-cap 100000",
                              "TWOZERO_WORK_CAP=100 ");
    CHECK(flag.exit_code == 0);
}

TEST_CASE("enumerate matches predict for q = 13") {
    const auto en = run_cli("enumerate --p 13 --s 1 --m 2 --h 3 --e 3");
    const auto pr = run_cli("predict --p 13 --s 1 --m 2 --h 3 --e 3");
    REQUIRE(en.exit_code == 0);
    REQUIRE(pr.exit_code == 0);
    CHECK(parse_json(en.output)["counts"] ==
          parse_json(pr.output)["table1"]["counts"]);
}

TEST_CASE("predict: out-of-hypothesis parameters exit 2 naming the condition") {
    const auto res = run_cli("predict --p 7 --s 1 --m 3 --h 3 --e 3");
    CHECK(res.exit_code == 2);
    CHECK(res.output == "error: gcd(m, e(q-1)/h) = 3, closed form requires 2\n");

    const auto ok = run_cli("predict --p 13 --s 1 --m 2 --h 6 --e 3");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("deterministic output: repeated runs and thread counts agree") {
    const std::string args = "enumerate --p 13 --s 1 --m 2 --h 6 --e 3";
    const auto a = run_cli(args + " --jobs 1");
    const auto b = run_cli(args + " --jobs 4");
    const auto c = run_cli(args + " --jobs 4");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(b.output == c.output);
}

TEST_CASE("gauss: N = 2 closed form agreement") {
    const auto res = run_cli("gauss --p 7 --s 1 --m 2 --N 2");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["closed_form"]["available"] == true);
    CHECK(j["closed_form"]["eta0"] == "3");
    CHECK(j["closed_form"]["eta1"] == "-4");
    CHECK(j["closed_form"]["agrees_with_character_sum"] == true);
    CHECK(j["period_sum_is_minus_one"] == true);
    CHECK(j["periods"][0]["rational_value"] == 3);
    CHECK(j["periods"][1]["rational_value"] == -4);
}

TEST_CASE("gauss: N = 1 gives -1") {
    const auto res = run_cli("gauss --p 7 --s 1 --m 2 --N 1");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["periods"][0]["rational_value"] == -1);
}

TEST_CASE("gauss: N = 3 emits exact histograms without a closed form") {
    const auto res = run_cli("gauss --p 7 --s 1 --m 2 --N 3");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["periods"].size() == 3);
    for (const auto& pj : j["periods"]) {
        CHECK(pj["value"]["p"] == 7);
        CHECK(pj["value"]["coeffs"].size() == 7);
    }
    CHECK_FALSE(j.contains("closed_form"));
    CHECK(j["period_sum_is_minus_one"] == true);
}

TEST_CASE("gauss: non-representable closed form is reported") {
    const auto res = run_cli("gauss --p 7 --s 1 --m 3 --N 2");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["closed_form"]["available"] == false);
    CHECK(j["closed_form"]["reason"] == "not rational; use exact character sum");
}

TEST_CASE("gauss: N not dividing r-1 exits 2") {
    const auto res = run_cli("gauss --p 7 --s 1 --m 2 --N 5");
    CHECK(res.exit_code == 2);
    CHECK(res.output == "error: N does not divide r-1\n");
}

TEST_CASE("curves: counts and identities for the GF(49) example") {
    const auto res = run_cli("curves --p 7 --s 1 --m 2 --h 3 --e 3");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["square_system"]["total"] == 48);
    CHECK(j["nonsquare_system"]["total"] == 52);
    CHECK(j["cubic"]["total"] == 48);
    CHECK(j["cubic_twist"]["total"] == 52);
    CHECK(j["shift_triples"]["all_squares"] == 4);
    CHECK(j["shift_triples"]["all_nonsquares"] == 6);
    for (const auto& [key, val] : j["identities"].items()) {
        CAPTURE(key);
        CHECK(val == true);
    }
    CHECK(j["all_pass"] == true);
}

TEST_CASE("explore: e = 1, f = 1 counts r") {
    const auto res = run_cli("explore --p 7 --s 1 --m 2 --f 1 --shifts 1 --units 1");
    REQUIRE(res.exit_code == 0);
    CHECK(parse_json(res.output)["count"] == 49);
}

TEST_CASE("explore: the two canonical shift systems") {
    const auto sq = run_cli(
        "explore --p 7 --s 1 --m 2 --e 3 --f 2 --shifts \"1;b;b^2\" --units \"1;1;1\"");
    REQUIRE(sq.exit_code == 0);
    CHECK(parse_json(sq.output)["count"] == 44);

    const auto nsq = run_cli(
        "explore --p 7 --s 1 --m 2 --e 3 --f 2 --shifts \"1;b;b^2\" --units \"a;a;a\"");
    REQUIRE(nsq.exit_code == 0);
    CHECK(parse_json(nsq.output)["count"] == 48);
    CHECK(parse_json(nsq.output)["units_canonical"] == true);
}

TEST_CASE("explore: non-canonical units warn but still count") {
    const auto res = run_cli(
        "explore --p 7 --s 1 --m 2 --f 2 --shifts \"1;2\" --units \"a^5;1\"");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("warning: units are not all among a^0..a^1") !=
          std::string::npos);
}

TEST_CASE("verify: the golden set passes") {
    const auto res = run_cli("verify --p 7 --s 1 --m 2 --h 3 --e 3");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["all_pass"] == true);
    for (const auto& check : j["checks"]) {
        CAPTURE(check["name"]);
        CHECK(check["pass"] == true);
    }
}

TEST_CASE("verify: the full closed-form-regime sweep passes") {
    for (const std::string args :
         {"--p 7 --s 1 --m 2 --h 3 --e 3", "--p 13 --s 1 --m 2 --h 3 --e 3",
          "--p 13 --s 1 --m 2 --h 6 --e 3", "--p 19 --s 1 --m 2 --h 3 --e 3",
          "--p 19 --s 1 --m 2 --h 9 --e 3"}) {
        CAPTURE(args);
        const auto res = run_cli("verify " + std::string(args));
        CHECK(res.exit_code == 0);
        CHECK(parse_json(res.output)["all_pass"] == true);
    }
}

TEST_CASE("verify: corrupted table constants are caught") {
    for (int idx : {0, 1, 5, 12}) {
        const auto res = run_cli(
            "verify --p 7 --s 1 --m 2 --h 3 --e 3 --corrupt-table1 " +
            std::to_string(idx));
        CHECK(res.exit_code == 1);
        const auto j = parse_json(res.output);
        CHECK(j["all_pass"] == false);
    }
}

TEST_CASE("verify: out-of-hypothesis parameters exit 2") {
    const auto res = run_cli("verify --p 7 --s 1 --m 2 --h 6 --e 3");
    CHECK(res.exit_code == 2);
    CHECK(res.output.rfind("error: gcd(m, e(q-1)/h) = 1", 0) == 0);
}

TEST_CASE("out file and pretty format") {
    const std::string path = "/tmp/twozero_test_out.json";
    std::remove(path.c_str());
    const auto res =
        run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --out " + path);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), f))
        content.append(buf.data(), got);
    fclose(f);
    CHECK(parse_json(content)["counts"]["12"] == 72);
    std::remove(path.c_str());

    const auto pretty = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --format pretty");
    REQUIRE(pretty.exit_code == 0);
    CHECK(pretty.output.find("minimum_distance") != std::string::npos);

    const auto badfmt = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --format bogus");
    CHECK(badfmt.exit_code == 2);
    CHECK(badfmt.output == "error: unknown format 'bogus'\n");
}

TEST_CASE("modulus flag selects a specific primitive polynomial") {
    // x^2 + x + 3 is primitive over GF(7); weight data must be unchanged
    const auto res =
        run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --modulus 3,1,1");
    REQUIRE(res.exit_code == 0);
    const auto j = parse_json(res.output);
    CHECK(j["field"]["modulus"] == "3,1,1");
    CHECK(j["counts"]["12"] == 72);

    const auto bad = run_cli("enumerate --p 7 --s 1 --m 2 --h 3 --e 3 --modulus 1,0,1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.rfind("error: modulus is not primitive", 0) == 0);
}

TEST_CASE("missing required flags exit 2") {
    const auto res = run_cli("enumerate --p 7 --s 1 --m 2");
    CHECK(res.exit_code == 2);
    CHECK(res.output.rfind("error:", 0) == 0);
}

TEST_CASE("element list parsing rejects malformed tokens") {
    const auto bad_exp = run_cli(
        "explore --p 7 --s 1 --m 2 --f 1 --shifts a^x --units 1");
    CHECK(bad_exp.exit_code == 2);
    CHECK(bad_exp.output == "error: bad exponent in 'a^x'\n");

    const auto bad_list = run_cli(
        "explore --p 7 --s 1 --m 2 --f 1 --shifts \"1;;2\" --units \"1;1;1\"");
    CHECK(bad_list.exit_code == 2);

    const auto beta_without_e = run_cli(
        "explore --p 7 --s 1 --m 2 --f 2 --shifts \"1;b\" --units \"1;1\"");
    CHECK(beta_without_e.exit_code == 2);
    CHECK(beta_without_e.output == "error: 'b' shorthand requires --e\n");

    const auto coeff_out_of_range = run_cli(
        "explore --p 7 --s 1 --m 2 --f 1 --shifts 9 --units 1");
    CHECK(coeff_out_of_range.exit_code == 2);
}
