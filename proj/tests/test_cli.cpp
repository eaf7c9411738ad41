// End-to-end checks of the command-line interface: exit codes, JSON output,
// pipe composition, determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef AWREL_CLI_PATH
#error "AWREL_CLI_PATH must point at the built CLI"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& input) {
    std::string command = "printf '%s' '" + input + "' | '" AWREL_CLI_PATH "' " +
                          args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

const std::string kKrawtchoukSpec =
    R"({"family":"krawtchouk","normalization":"L7","d":3,"params":{"v":"2"}})";

std::string temp_directory() {
    const char* dir = getenv("TMPDIR");
    return dir != nullptr ? dir : "/tmp";
}

}  // namespace

TEST_CASE("generate emits the array and tuple, exit 0") {
    RunResult r = run_cli("generate", kKrawtchoukSpec);
    CHECK(r.exit_code == 0);
    json out = json::parse(r.output);
    CHECK(out["expected_aw"]["omega"] == "3");
    CHECK(out["parameter_array"]["theta"][0] == "-3/2");
}

TEST_CASE("input errors exit 2 with a structured error object") {
    SUBCASE("degenerate parameters") {
        RunResult r = run_cli(
            "generate",
            R"({"family":"krawtchouk","normalization":"L7","d":3,"params":{"v":"0"}})");
        CHECK(r.exit_code == 2);
        json out = json::parse(r.output);
        CHECK(out["code"] == "degenerate_parameters");
        CHECK(out.contains("message"));
    }
    SUBCASE("malformed JSON") {
        RunResult r = run_cli("generate", "{broken");
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.output)["code"] == "parse_error");
    }
    SUBCASE("aw on a too-small diameter") {
        RunResult gen = run_cli(
            "generate",
            R"({"family":"krawtchouk","normalization":"L7","d":2,"params":{"v":"2"}})");
        REQUIRE(gen.exit_code == 0);
        std::string array = json::parse(gen.output)["parameter_array"].dump();
        RunResult r = run_cli("aw", array);
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.output)["code"] == "diameter_too_small");
    }
}

TEST_CASE("pipes compose: generate -> aw -> normalize -> classify") {
    RunResult gen = run_cli("generate", kKrawtchoukSpec);
    REQUIRE(gen.exit_code == 0);
    json parsed = json::parse(gen.output);
    std::string array = parsed["parameter_array"].dump();

    RunResult aw = run_cli("aw", array);
    REQUIRE(aw.exit_code == 0);
    CHECK(json::parse(aw.output) == parsed["expected_aw"]);

    RunResult normalized = run_cli("normalize", aw.output);
    REQUIRE(normalized.exit_code == 0);
    json norm = json::parse(normalized.output);
    CHECK(norm["case"] == 5);
    CHECK(norm["unique"] == true);

    RunResult classified = run_cli("classify", aw.output);
    REQUIRE(classified.exit_code == 0);
    CHECK(json::parse(classified.output)["type"] == "krawtchouk");
    CHECK(json::parse(classified.output)["leonard_consistent"] == true);
}

TEST_CASE("check splits valid from invalid with exit codes 0/1") {
    RunResult gen = run_cli("generate", kKrawtchoukSpec);
    std::string array = json::parse(gen.output)["parameter_array"].dump();
    CHECK(run_cli("check", array).exit_code == 0);

    json broken = json::parse(array);
    broken["varphi"][1] = "0";
    RunResult r = run_cli("check", broken.dump());
    CHECK(r.exit_code == 1);
    json report = json::parse(r.output);
    CHECK(report["valid"] == false);
    CHECK(report["violations"][0]["condition"] == "PA2");
}

TEST_CASE("verify reports zero residuals on the Krawtchouk pair, exit 0/1") {
    RunResult gen = run_cli("generate", kKrawtchoukSpec);
    json parsed = json::parse(gen.output);
    RunResult split = run_cli("split", parsed["parameter_array"].dump());
    REQUIRE(split.exit_code == 0);
    json matrices = json::parse(split.output);

    json request{{"a", matrices["split1"]["a"]},
                 {"astar", matrices["split1"]["astar"]},
                 {"aw", parsed["expected_aw"]}};
    RunResult ok = run_cli("verify", request.dump());
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.output)["ok"] == true);

    request["aw"]["omega"] = "4";
    RunResult bad = run_cli("verify", request.dump());
    CHECK(bad.exit_code == 1);
    json out = json::parse(bad.output);
    CHECK(out["ok"] == false);
    CHECK(out["first_nonzero"].is_object());
}

TEST_CASE("solve matches aw and respects exit-code 1 failures") {
    RunResult gen = run_cli("generate", kKrawtchoukSpec);
    json parsed = json::parse(gen.output);
    RunResult split = run_cli("split", parsed["parameter_array"].dump());
    json matrices = json::parse(split.output);
    json request{{"a", matrices["split1"]["a"]},
                 {"astar", matrices["split1"]["astar"]}};
    RunResult solved = run_cli("solve", request.dump());
    CHECK(solved.exit_code == 0);
    CHECK(json::parse(solved.output) == parsed["expected_aw"]);

    // repeated eigenvalues leave the system underdetermined: exit 1
    json diag{{"order", 4},
              {"entries",
               {{"1", "0", "0", "0"},
                {"0", "1", "0", "0"},
                {"0", "0", "2", "0"},
                {"0", "0", "0", "2"}}}};
    json diag2{{"order", 4},
               {"entries",
                {{"4", "0", "0", "0"},
                 {"0", "3", "0", "0"},
                 {"0", "0", "4", "0"},
                 {"0", "0", "0", "3"}}}};
    RunResult failed = run_cli("solve", json{{"a", diag}, {"astar", diag2}}.dump());
    CHECK(failed.exit_code == 1);
    CHECK(json::parse(failed.output)["code"] == "underdetermined");
}

TEST_CASE("transform and roundtrip") {
    RunResult gen = run_cli("generate", kKrawtchoukSpec);
    json parsed = json::parse(gen.output);
    json shift{{"t", "1"}, {"t_star", "1"}, {"c", "1"}, {"c_star", "0"}};
    RunResult shifted = run_cli(
        "transform", json{{"aw", parsed["expected_aw"]}, {"map", shift}}.dump());
    REQUIRE(shifted.exit_code == 0);
    json tuple = json::parse(shifted.output);
    CHECK(tuple["eta"] == "-3");
    CHECK(tuple["eta_star"] == "-1");

    // the Krawtchouk array shifted by (t, t*, c, c*) = (1, 1, 1, 0)
    json shifted_array = parsed["parameter_array"];
    shifted_array["theta"] = {"-1/2", "1/2", "3/2", "5/2"};
    RunResult applied = run_cli("roundtrip", shifted_array.dump());
    REQUIRE(applied.exit_code == 0);
    json roundtrip = json::parse(applied.output);
    CHECK(roundtrip["type"] == "krawtchouk");
    CHECK(roundtrip["translation"]["c"] == "-1");
    CHECK(roundtrip["translation"]["c_star"] == "0");
    CHECK(roundtrip["normalized_aw"] == parsed["expected_aw"]);
    CHECK(roundtrip["aw"] == tuple);  // the transform output from above
    CHECK(roundtrip["rederived_aw"] == tuple);
    CHECK(roundtrip["match"] == true);

    // roundtrip on the unshifted array is the identity translation
    RunResult plain = run_cli("roundtrip", parsed["parameter_array"].dump());
    REQUIRE(plain.exit_code == 0);
    CHECK(json::parse(plain.output)["translation"]["c"] == "0");
    CHECK(json::parse(plain.output)["match"] == true);
}

TEST_CASE("relatives emits the three permuted arrays") {
    RunResult gen = run_cli("generate", kKrawtchoukSpec);
    std::string array = json::parse(gen.output)["parameter_array"].dump();
    RunResult r = run_cli("relatives", array);
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.output);
    CHECK(out["down"]["varphi"] == json::parse(R"(["-3","-4","-3"])"));
    CHECK(out["ddown"]["theta"][0] == "3/2");
    CHECK(out["down_ddown"]["theta_star"][0] == "3/2");
}

TEST_CASE("gaussian field flag admits complex scalars") {
    json tuple{{"beta", "5/2"}, {"gamma", "0"},       {"gamma_star", "0"},
               {"rho", "1"},    {"rho_star", "1"},    {"omega", "0"},
               {"eta", "0"},    {"eta_star", "0"}};
    json map{{"t", json{{"re", "0"}, {"im", "1"}}},
             {"t_star", "1"},
             {"c", "0"},
             {"c_star", "0"}};
    json request{{"aw", tuple}, {"map", map}};
    CHECK(run_cli("transform", request.dump()).exit_code == 2);
    RunResult ok = run_cli("transform --field gaussian", request.dump());
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.output)["rho"] == "-1");  // rho t^2 with t = i
}

TEST_CASE("--in and --out move I/O to files") {
    std::string dir = temp_directory();
    std::string in_path = dir + "/awrel_cli_in.json";
    std::string out_path = dir + "/awrel_cli_out.json";
    {
        FILE* f = fopen(in_path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs(kKrawtchoukSpec.c_str(), f);
        fclose(f);
    }
    RunResult r = run_cli("generate --in " + in_path + " --out " + out_path, "");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    FILE* f = fopen(out_path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string contents;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), f)) > 0)
        contents.append(buffer.data(), got);
    fclose(f);
    CHECK(json::parse(contents)["expected_aw"]["omega"] == "3");
    remove(in_path.c_str());
    remove(out_path.c_str());
}

TEST_CASE("identical input bytes produce identical output bytes") {
    RunResult first = run_cli("generate --pretty", kKrawtchoukSpec);
    RunResult second = run_cli("generate --pretty", kKrawtchoukSpec);
    CHECK(first.output == second.output);
    CHECK(first.output.find('\n') != std::string::npos);
}
