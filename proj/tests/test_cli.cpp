#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "uquat/action.hpp"
#include "uquat/checks.hpp"
#include "uquat/json_io.hpp"

using namespace uquat;

namespace {

struct CliRun {
    int exit_code;
    std::string output;
};

CliRun run_cli(const std::string& args, const std::string& input = "") {
    std::string escaped;
    for (char c : input) {
        if (c == '\'')
            escaped += "'\\''";
        else
            escaped += c;
    }
    const std::string cmd = "printf '%s' '" + escaped + "' | '" UQUAT_CLI_PATH "' " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::fgets(buf, sizeof(buf), pipe)) out += buf;
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const Quaternion i1 = Quaternion::vector(1.0, 0.0, 0.0);

}  // namespace

TEST_CASE("compose of a single element echoes it back") {
    checks::Rng rng(71);
    const ExtQuaternion q = rng.ext(Algebra::split, 2.0);
    const CliRun r = run_cli("compose", io::to_json(q) + "\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output == io::to_json(q) + "\n");
}

TEST_CASE("compose multiplies left to right") {
    checks::Rng rng(72);
    const UnitElement q = rng.unit(Algebra::complex);
    const ExtQuaternion inv = bar(q.value());
    const std::string input = io::to_json(q.value()) + "\n" + io::to_json(inv) + "\n";
    const CliRun r = run_cli("compose", input);
    CHECK(r.exit_code == 0);
    CHECK(r.output == io::to_json(q.value() * inv) + "\n");

    const UnitElement r1 = make_rotor(Algebra::split, i1, 0.3);
    const UnitElement r2 = make_rotor(Algebra::split, i1, 0.5);
    const CliRun rr =
        run_cli("compose", io::to_json(r1.value()) + "\n" + io::to_json(r2.value()) + "\n");
    CHECK(rr.output == io::to_json(r1.value() * r2.value()) + "\n");
}

TEST_CASE("compose usage errors exit with code 2") {
    CHECK(run_cli("compose", "").exit_code == 2);
    CHECK(run_cli("compose", "{not json}\n").exit_code == 2);
    const std::string mixed = io::to_json(ExtQuaternion::one(Algebra::complex)) + "\n" +
                              io::to_json(ExtQuaternion::one(Algebra::dual)) + "\n";
    CHECK(run_cli("compose", mixed).exit_code == 2);
}

TEST_CASE("decompose of a pure rotor reports theta zero") {
    const UnitElement r = make_rotor(Algebra::dual, i1, 1.2);
    const CliRun run = run_cli("decompose", io::to_json(r.value()) + "\n");
    CHECK(run.exit_code == 0);
    const auto doc = nlohmann::json::parse(run.output);
    CHECK(doc["theta"].get<double>() == 0.0);
    CHECK(doc["q_b"]["alpha"][0].get<double>() == 1.0);
    CHECK(doc["q_r"]["alpha"][1].get<double>() ==
          doctest::Approx(r.value().alpha.x).epsilon(1e-15));
}

TEST_CASE("decompose rejects non-unit input") {
    const CliRun run =
        run_cli("decompose", R"({"algebra":"split","alpha":[2,0,0,0],"beta":[0,0,0,0]})");
    CHECK(run.exit_code == 2);
}

TEST_CASE("apply output matches the library bit for bit") {
    checks::Rng rng(73);
    for (Algebra alg : all_algebras) {
        const UnitElement q = rng.unit(alg);
        const Minquat v = rng.minquat(alg, 2.0);
        const std::string request =
            "{\"q\":" + io::to_json(q.value()) + ",\"v\":" + io::to_json(v) + "}";
        const CliRun run = run_cli("apply", request + "\n");
        CHECK(run.exit_code == 0);
        CHECK(run.output == io::to_json(apply(q, v)) + "\n");
    }
}

TEST_CASE("matrix of the identity") {
    const CliRun run =
        run_cli("matrix", io::to_json(ExtQuaternion::one(Algebra::complex)) + "\n");
    CHECK(run.exit_code == 0);
    CHECK(run.output == io::to_json(Mat4::identity()) + "\n");
}

TEST_CASE("distance golden value through the CLI") {
    const CliRun run =
        run_cli("distance", R"({"algebra":"dual","v":[1,3,0,0],"w":[1,0,4,0]})" "\n");
    CHECK(run.exit_code == 0);
    CHECK(run.output == "{\"distance\":5}\n");
}

TEST_CASE("distance rejects points off the space form") {
    const CliRun run =
        run_cli("distance", R"({"algebra":"complex","v":[2,0,0,0],"w":[1,0,0,0]})" "\n");
    CHECK(run.exit_code == 2);
}

TEST_CASE("check is reproducible for a fixed seed") {
    const CliRun a = run_cli("check --seed 5 --samples 20");
    const CliRun b = run_cli("check --seed 5 --samples 20");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("check with zero samples is a usage error") {
    CHECK(run_cli("check --samples 0").exit_code == 2);
}

TEST_CASE("corrupting the tolerances makes check fail") {
    const CliRun run = run_cli("check --samples 5 --tolerance-scale 0");
    CHECK(run.exit_code == 1);
    CHECK(run.output.find("\"all_pass\":false") != std::string::npos);
}

TEST_CASE("bench agrees at a tiny batch") {
    const CliRun run = run_cli("bench -n 1 --batch 1");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("\"agreement\":false") == std::string::npos);
}

TEST_CASE("--out writes the result to a file") {
    const std::string path = "/tmp/uquat_cli_out_test.json";
    std::remove(path.c_str());
    const CliRun run = run_cli("--out " + path + " matrix",
                               io::to_json(ExtQuaternion::one(Algebra::dual)) + "\n");
    CHECK(run.exit_code == 0);
    CHECK(run.output.empty());
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::string content;
    while (std::fgets(buf, sizeof(buf), f)) content += buf;
    std::fclose(f);
    std::remove(path.c_str());
    CHECK(content == io::to_json(Mat4::identity()) + "\n");
}
