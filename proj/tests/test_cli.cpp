#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "coop/boycott.hpp"
#include "coop/generators.hpp"
#include "coop/io.hpp"
#include "coop/sampling.hpp"
#include "coop/shapley.hpp"

using namespace coop;
namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code;
    std::string output; // stdout and stderr combined
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(COOPGAME_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, got);
    }
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("coopgame-test-" + std::to_string(getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& contents) const {
        const fs::path file = path_ / name;
        std::ofstream out(file);
        out << contents;
        return file.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

} // namespace

TEST_CASE("exact shapley over a document file and stdin") {
    TempDir dir;
    const std::string doc = dir.write("triangle.json", write_game_document(triangle_example()));

    const CommandResult table = run_cli("shapley --game " + doc);
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("shapley") != std::string::npos);

    const CommandResult json_out = run_cli("shapley --game " + doc + " --format json");
    CHECK(json_out.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_out.output);
    CHECK(parsed["mode"] == "exact");
    for (const auto& row : parsed["values"]) {
        CHECK(row["value"] == "4");
    }

    const CommandResult via_stdin = run_cli("shapley --game - --format json < " + doc);
    CHECK(via_stdin.exit_code == 0);
    CHECK(nlohmann::json::parse(via_stdin.output) == parsed);
}

TEST_CASE("sampled shapley matches the library bit for bit") {
    TempDir dir;
    const std::string doc = dir.write("block.json", write_game_document(homogeneous_block(4)));
    const CommandResult result =
        run_cli("shapley --game " + doc + " --sample 500 --seed 42 --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.output);
    CHECK(parsed["mode"] == "sampled");
    CHECK(parsed["permutations"] == 500);
    const SampledValueVector expected = shapley_sampled(homogeneous_block(4), 500, 42);
    for (const auto& row : parsed["values"]) {
        const std::size_t p = row["player"].get<std::size_t>();
        CHECK(row["estimate"].get<double>() == expected.estimate[p]);
        CHECK(row["std_error"].get<double>() == expected.std_error[p]);
    }
}

TEST_CASE("boycott document round-trips through shapley") {
    TempDir dir;
    const std::string doc = dir.write("triangle.json", write_game_document(triangle_example()));
    const std::string out = dir.file("boycotted.json");

    const CommandResult transform =
        run_cli("boycott --game " + doc + " -A '{0}' -B '{1}' > " + out);
    CHECK(transform.exit_code == 0);

    // Re-ingested document equals the in-process transform exactly.
    const Game expected = boycott(triangle_example(), BoycottSpec::one_on_one(0, 1, 3));
    CHECK(load_game_file(out) == expected);

    const CommandResult values = run_cli("shapley --game " + out + " --format json");
    CHECK(values.exit_code == 0);
    const auto parsed = nlohmann::json::parse(values.output);
    const ValueVector direct = shapley_exact(expected);
    for (const auto& row : parsed["values"]) {
        const std::size_t p = row["player"].get<std::size_t>();
        CHECK(row["value"].get<std::string>() == to_fraction_string(direct[p]));
    }
}

TEST_CASE("rational strings survive a round trip") {
    TempDir dir;
    const std::string doc = dir.write(
        "fractions.json",
        R"({"format": "game/1", "values": [0, "5/3", -2, "7/2"]})");
    // An empty boycott is the identity transform, so this echoes the table.
    const CommandResult echoed = run_cli("boycott --game " + doc + " -A '{}' -B '{}'");
    CHECK(echoed.exit_code == 0);
    CHECK(echoed.output.find("\"5/3\"") != std::string::npos);
    CHECK(echoed.output.find("\"7/2\"") != std::string::npos);
}

TEST_CASE("impact table shows roles and exact values") {
    TempDir dir;
    const std::string doc = dir.write("triangle.json", write_game_document(triangle_example()));
    const CommandResult result = run_cli("impact --game " + doc + " -A '{0}' -B '{1}' --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("0,1,boycotter,4,3,1") != std::string::npos);
    CHECK(result.output.find("2,3,bystander,4,6,-2") != std::string::npos);
}

TEST_CASE("check subcommands use exit code 2 for violations") {
    TempDir dir;
    const std::string convex = dir.write("convex.json", write_game_document(triangle_example()));
    const std::string concave = dir.write(
        "concave.json", R"({"format": "game/1", "values": [0, 1, 1, 1]})");
    const std::string additive = dir.write(
        "additive.json", R"({"format": "game/1", "values": [0, 3, 5, 8]})");

    CHECK(run_cli("check convex --game " + convex).exit_code == 0);
    const CommandResult violated = run_cli("check convex --game " + concave);
    CHECK(violated.exit_code == 2);
    CHECK(violated.output.find("not supermodular") != std::string::npos);

    CHECK(run_cli("check disjoint --game " + additive + " -A '{0}' -B '{1}'").exit_code == 0);
    CHECK(run_cli("check disjoint --game " + convex + " -A '{0}' -B '{1}'").exit_code == 2);

    CHECK(run_cli("check invariant --game " + convex + " -A '{0}' -B '{1}' -k 2").exit_code == 0);
    CHECK(run_cli("check invariant --game " + convex + " -A '{0}' -B '{1}' -k 0").exit_code == 2);
}

TEST_CASE("verify runs theorem suites") {
    const CommandResult all = run_cli("verify --family triangle --theorem all");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("convexity-biconditional") != std::string::npos);
    CHECK(all.output.find("nested-monotonicity") != std::string::npos);
    CHECK(all.output.find("many-on-one-maximal-impact") != std::string::npos);
    CHECK(all.output.find("impact-signs") != std::string::npos);
    CHECK(all.output.find("[violated]") == std::string::npos);

    const CommandResult generated =
        run_cli("verify --family random_convex --n 5 --seed 3 --theorem sign");
    CHECK(generated.exit_code == 0);

    TempDir dir;
    const std::string concave = dir.write(
        "concave.json", R"({"format": "game/1", "values": [0, 1, 1, 1]})");
    // Theorems about supermodular games reject other inputs.
    CHECK(run_cli("verify --game " + concave + " --theorem nested").exit_code == 1);
    // In the combined suite they are skipped instead.
    const CommandResult skipped = run_cli("verify --game " + concave + " --theorem all");
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.output.find("[skipped]") != std::string::npos);

    // Without --game or --family the instance comes from stdin.
    const std::string triangle = dir.write(
        "triangle.json", R"({"format": "game/1", "values": [0, 0, 0, 6, 0, 6, 6, 12]})");
    const CommandResult piped = run_cli("verify --theorem convexity < " + triangle);
    CHECK(piped.exit_code == 0);
    CHECK(piped.output.find("convexity-biconditional") != std::string::npos);
}

TEST_CASE("scenario reproduces the worked examples") {
    const CommandResult triangle = run_cli("scenario triangle");
    CHECK(triangle.exit_code == 0);
    CHECK(triangle.output.find("MATCH") != std::string::npos);
    CHECK(triangle.output.find("MISMATCH") == std::string::npos);
    CHECK(triangle.output.find("all expectations match") != std::string::npos);

    const CommandResult blocks = run_cli("scenario three-block --n 2 --variant blocks");
    CHECK(blocks.exit_code == 0);
    CHECK(blocks.output.find("expected 7n = 14") != std::string::npos);

    const CommandResult dropout =
        run_cli("scenario three-block --n 2 --variant dropout --format json");
    CHECK(dropout.exit_code == 0);
    const auto parsed = nlohmann::json::parse(dropout.output);
    CHECK(parsed["all_match"] == true);
    CHECK_FALSE(parsed["notes"].empty());

    const CommandResult homogeneous = run_cli("scenario homogeneous --n 5 --a 1 --b 1");
    CHECK(homogeneous.exit_code == 0);
    CHECK(homogeneous.output.find("3/4") != std::string::npos); // 1 - 1/(n-b)
}

TEST_CASE("myerson subcommand emits the restricted game") {
    TempDir dir;
    const std::string base = dir.write("base.json", write_game_document(triangle_example()));
    const std::string graph = dir.write(
        "path.json", R"({"format": "graph/1", "n": 3, "edges": [[0, 1], [1, 2]]})");
    const std::string out = dir.file("restricted.json");
    CHECK(run_cli("myerson --base " + base + " --graph " + graph + " > " + out).exit_code == 0);
    CHECK(load_game_file(out) ==
          myerson_restriction(triangle_example(), Graph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("exit codes distinguish input errors from size limits") {
    TempDir dir;
    const std::string broken = dir.write("broken.json", "{not json");
    CHECK(run_cli("shapley --game " + broken).exit_code == 1);

    const std::string empty_worth = dir.write(
        "nonzero.json", R"({"format": "game/1", "values": [1, 1]})");
    CHECK(run_cli("shapley --game " + empty_worth).exit_code == 1);

    const std::string huge = dir.write(
        "huge.json", R"({"format": "game/1", "generator": {"family": "three_block", "n": 7}})");
    CHECK(run_cli("shapley --game " + huge).exit_code == 3);

    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("shapley --game /nonexistent/path.json").exit_code == 1);
}
