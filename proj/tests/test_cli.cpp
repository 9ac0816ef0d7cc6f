// Drives the command line binary as a subprocess and compares against
// golden transcripts. CLI_BIN_PATH and GOLDEN_DIR come from the build.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    static int counter = 0;
    fs::path base = fs::temp_directory_path() /
                    ("cf_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::path in_path = base.string() + ".in";
    fs::path out_path = base.string() + ".out";
    fs::path err_path = base.string() + ".err";
    {
        std::ofstream in(in_path, std::ios::binary);
        in << stdin_text;
    }
    std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " < " + in_path.string() + " > " +
                      out_path.string() + " 2> " + err_path.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    fs::remove(in_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return r;
}

std::string golden(const std::string& name) { return read_file(fs::path(GOLDEN_DIR) / name); }

const std::string kIdentity6 = R"({"n":6,"perm":[0,1,2,3,4,5]})";

}  // namespace

TEST_CASE("construct matches the golden transcripts") {
    RunResult r = run_cli("construct --n 20 --k 3");
    CHECK(r.code == 0);
    CHECK(r.out == golden("construct_20_3.json"));
    CHECK(r.err.empty());

    r = run_cli("construct --n 10 --k 4");
    CHECK(r.code == 0);
    CHECK(r.out == golden("construct_10_4.json"));

    r = run_cli("construct --n 10 --k 4 --r 2");
    CHECK(r.code == 0);
    CHECK(r.out == golden("construct_10_4_r2.json"));
}

TEST_CASE("bounds and sigma match the golden transcripts") {
    RunResult r = run_cli("bounds --n 20 --k 3");
    CHECK(r.code == 0);
    CHECK(r.out == golden("bounds_20_3.json"));

    r = run_cli("bounds --n 10 --k 4 --r 2");
    CHECK(r.code == 0);
    CHECK(r.out == golden("bounds_10_4_r2.json"));

    r = run_cli("sigma --n 7 --k 2");
    CHECK(r.code == 0);
    CHECK(r.out == golden("sigma_7_2.json"));

    r = run_cli("sigma --n 7 --k 3 --r 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] >= j["lower"]);
    CHECK(j["value"] <= j["upper"]);
}

TEST_CASE("matrix output") {
    RunResult r = run_cli("matrix --n 20 --s 3");
    CHECK(r.code == 0);
    CHECK(r.out == golden("matrix_20_3.txt"));

    r = run_cli("matrix --n 120 --s 23");
    REQUIRE(r.code == 0);
    std::vector<std::string> lines;
    std::stringstream ss(r.out);
    for (std::string line; std::getline(ss, line);) lines.push_back(line);
    REQUIRE(lines.size() == 25);  // 24 rows and the move line
    CHECK(lines[0].substr(0, 10) == "0 24 48 72");
    CHECK(lines[1] == "1 25 49 73 97");
    CHECK(lines[23].substr(0, 2) == "23");
    size_t tokens = 1;
    for (char c : lines[24]) tokens += c == ' ';
    CHECK(tokens == 120);
}

TEST_CASE("verify reports witnesses") {
    RunResult r = run_cli("verify --s 2 --k 2", kIdentity6);
    CHECK(r.code == 1);
    CHECK(r.out == golden("verify_id6.json"));

    r = run_cli("verify --s 2 --k 2 --all", kIdentity6);
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["clash_free"] == false);
    REQUIRE(j.contains("witnesses"));
    CHECK(j["witnesses"].size() == 6);
    CHECK(j["witnesses"][0]["subset"] == json::array({0, 1}));

    r = run_cli("verify --s 3 --k 3 --r 2", kIdentity6);
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["witness"]["subset"] == json::array({0, 1, 2}));
}

TEST_CASE("construct output pipes straight into verify") {
    RunResult built = run_cli("construct --n 20 --k 3");
    REQUIRE(built.code == 0);
    RunResult checked = run_cli("verify --s 5 --k 3", built.out);
    CHECK(checked.code == 0);
    CHECK(json::parse(checked.out)["clash_free"] == true);

    built = run_cli("construct --n 10 --k 4 --r 2");
    REQUIRE(built.code == 0);
    checked = run_cli("verify --s 3 --k 4 --r 2", built.out);
    CHECK(checked.code == 0);
    CHECK(json::parse(checked.out)["clash_free"] == true);
}

TEST_CASE("verify over seeded random permutations") {
    RunResult r = run_cli("verify --random 5 --n 10 --s 1 --k 10 --seed 3");
    CHECK(r.code == 0);  // s = 1 never clashes
    CHECK(r.out == golden("verify_random_10.json"));

    r = run_cli("verify --random 4 --n 6 --s 6 --k 6 --seed 1");
    CHECK(r.code == 1);  // s = k = n: everything clashes
    json j = json::parse(r.out);
    CHECK(j["clash_count"] == 4);
    CHECK(j["clash_free_count"] == 0);
}

TEST_CASE("render emits the golden SVG") {
    const std::string id2 = R"({"n":2,"perm":[0,1]})";
    RunResult r = run_cli("render --s 1 --k 1", id2);
    CHECK(r.code == 0);
    CHECK(r.out == golden("render_id2.svg"));

    fs::path out_path = fs::temp_directory_path() / ("cf_cli_svg_" + std::to_string(::getpid()) + ".svg");
    r = run_cli("render --s 1 --k 1 --out " + out_path.string(), id2);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(read_file(out_path) == golden("render_id2.svg"));
    fs::remove(out_path);
}

TEST_CASE("failures use the documented exit codes and keep stdout clean") {
    RunResult r = run_cli("bounds --n 10 --k 4 --r 5");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.substr(0, 7) == "error: ");

    r = run_cli("sigma --n 20 --k 3");
    CHECK(r.code == 3);  // past the default search cap
    CHECK(r.out.empty());

    r = run_cli("verify --s 2 --k 2", "not json at all");
    CHECK(r.code == 2);

    r = run_cli("verify --s 7 --k 3 --r 2", kIdentity6);
    CHECK(r.code == 2);  // s beyond n has no meaning for subsets

    r = run_cli("matrix --n 20 --s 19");
    CHECK(r.code == 2);

    r = run_cli("verify --random 3 --s 2 --k 2");
    CHECK(r.code == 2);  // --random needs --n

    r = run_cli("");
    CHECK(r.code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("construct --help").code == 0);
}
