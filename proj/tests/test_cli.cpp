#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "octolin/gallery.hpp"
#include "octolin/json_io.hpp"

using namespace octolin;

namespace {

std::string cli_path() {
    const char* p = std::getenv("OCTOLIN_CLI");
    REQUIRE_MESSAGE(p != nullptr, "OCTOLIN_CLI must point at the CLI binary");
    return p;
}

std::string tmp_file(const std::string& name) { return "/tmp/octolin_test_" + name; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_path = tmp_file("out.txt");
    const std::string cmd = cli_path() + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
}

} // namespace

TEST_CASE("check classifies the identity matrix") {
    const std::string path = tmp_file("identity.json");
    write_file(path, to_json(OMatrix::identity(2)).dump());
    const RunResult r = run("check --matrix " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("is_isometry") != std::string::npos);
    CHECK(r.output.find("true") != std::string::npos);
}

TEST_CASE("check reports a non-isometry with exit code 0") {
    const std::string path = tmp_file("counter.json");
    write_file(path, to_json(gallery::quaternionic_gram_matrix()).dump());
    const RunResult r = run("check --matrix " + path + " --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["is_isometry"] == false);
    CHECK(j["gram_TTstar_residual"].get<double>() <= 1e-9);
    CHECK(j["gram_TstarT_residual"].get<double>() <= 1e-9);
}

TEST_CASE("malformed JSON exits 2") {
    const std::string path = tmp_file("bad.json");
    write_file(path, "{not json");
    CHECK(run("check --matrix " + path).exit_code == 2);
    CHECK(run("check --matrix /nonexistent.json").exit_code == 2);

    const std::string short_oct = tmp_file("short.json");
    write_file(short_oct, "[[[1,2,3]]]");
    CHECK(run("check --matrix " + short_oct).exit_code == 2);
}

TEST_CASE("dimension errors exit 3") {
    const std::string path = tmp_file("ragged.json");
    write_file(path, "[[[1,0,0,0,0,0,0,0]],[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]]");
    CHECK(run("check --matrix " + path).exit_code == 3);

    const std::string rect = tmp_file("rect.json");
    write_file(rect, to_json(OMatrix::zero(2, 3)).dump());
    CHECK(run("check --matrix " + rect).exit_code == 3);

    const std::string ragged_frame = tmp_file("ragged_frame.json");
    write_file(ragged_frame, "[[[1,0,0,0,0,0,0,0]],[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]]");
    CHECK(run("basis --frame " + ragged_frame).exit_code == 3);
}

TEST_CASE("basis command") {
    const std::string path = tmp_file("frame.json");
    write_file(path, to_json(Frame::standard_basis(2)).dump());
    const RunResult r = run("basis --frame " + path + " --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["orthonormal"] == true);
    CHECK(j["associative"] == true);
    CHECK(j["weak_associative"] == true);
    CHECK(j["complete"] == true);

    const std::string four = tmp_file("four.json");
    write_file(four, to_json(gallery::four_vector_orthonormal_o2()).dump());
    const auto j4 = nlohmann::json::parse(run("basis --frame " + four + " --format json").output);
    CHECK(j4["orthonormal"] == true);
    CHECK(j4["weak_associative"] == false);
}

TEST_CASE("stiefel command") {
    const std::string path = tmp_file("unit.json");
    write_file(path, to_json(OVector::standard_basis(3, 0)).dump());
    const RunResult r = run("stiefel --vector " + path + " --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["dim_OOy"] == 8);
    CHECK(j["fiber_dim"] == 16);

    const std::string nonunit = tmp_file("nonunit.json");
    write_file(nonunit, to_json(OVector::standard_basis(3, 0) * 2.0).dump());
    CHECK(run("stiefel --vector " + nonunit).exit_code == 1);
}

TEST_CASE("decompose command") {
    const std::string iso = tmp_file("iso2.json");
    write_file(iso, to_json(gallery::swap_isometry2()).dump());
    const RunResult ok = run("decompose --matrix " + iso + " --format json");
    CHECK(ok.exit_code == 0);
    const auto j = nlohmann::json::parse(ok.output);
    CHECK(j["residual"].get<double>() <= 1e-9);

    const std::string counter = tmp_file("noniso.json");
    write_file(counter, to_json(gallery::quaternionic_gram_matrix()).dump());
    CHECK(run("decompose --matrix " + counter).exit_code == 4);

    const std::string big = tmp_file("three.json");
    write_file(big, to_json(OMatrix::identity(3)).dump());
    CHECK(run("decompose --matrix " + big).exit_code == 4);
}

TEST_CASE("mult-table shows the triple products") {
    const RunResult r = run("mult-table");
    CHECK(r.exit_code == 0);
    // Row e1: e1*e2 = e3 appears; row e4: e4*e1 = -e5.
    CHECK(r.output.find("e3") != std::string::npos);
    CHECK(r.output.find("-e5") != std::string::npos);
}

TEST_CASE("verify command exit codes") {
    CHECK(run("verify --trials 5").exit_code == 0);
    CHECK(run("verify --trials 0").exit_code == 0);
    CHECK(run("verify --trials 5 --inject-fault").exit_code == 1);
}

TEST_CASE("tolerance flags reach the classifiers") {
    const std::string four = tmp_file("four_tol.json");
    write_file(four, to_json(gallery::four_vector_orthonormal_o2()).dump());
    const auto strict = nlohmann::json::parse(
        run("basis --frame " + four + " --format json").output);
    CHECK(strict["weak_associative"] == false);
    // An absurdly loose associator tolerance flips the verdict.
    const auto loose = nlohmann::json::parse(
        run("basis --frame " + four + " --format json --tol-gram 100").output);
    CHECK(loose["weak_associative"] == true);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string path = tmp_file("repeat.json");
    write_file(path, to_json(gallery::mixed_isometry3()).dump());
    const RunResult a = run("check --matrix " + path + " --seed 7 --format json");
    const RunResult b = run("check --matrix " + path + " --seed 7 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const RunResult v1 = run("verify --seed 9 --trials 10");
    const RunResult v2 = run("verify --seed 9 --trials 10");
    CHECK(v1.output == v2.output);
}

TEST_CASE("seed comes from OCTOLIN_SEED when the flag is absent") {
    const RunResult r = run("verify --trials 0");
    CHECK(r.output.find("seed 42") != std::string::npos);

    const std::string out_path = tmp_file("env_out.txt");
    const std::string cmd = "OCTOLIN_SEED=123 " + cli_path() + " verify --trials 0 > " +
                            out_path + " 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("seed 123") != std::string::npos);

    // An explicit flag wins over the environment.
    const std::string cmd2 = "OCTOLIN_SEED=123 " + cli_path() + " verify --trials 0 --seed 5 > " +
                             out_path + " 2>&1";
    REQUIRE(std::system(cmd2.c_str()) == 0);
    std::ifstream in2(out_path);
    std::stringstream ss2;
    ss2 << in2.rdbuf();
    CHECK(ss2.str().find("seed 5") != std::string::npos);
}
