// Drives the installed CLI binary end to end.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MCX_CLI_PATH
#error "MCX_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MCX_CLI_PATH) + " " + args + " 2>/tmp/mcx_cli_stderr.txt";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string stderr_text() {
    std::ifstream in("/tmp/mcx_cli_stderr.txt");
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

} // namespace

TEST_CASE("gen then homology round-trips through a file") {
    RunResult gen = run("gen --family triangular --t 4 --out /tmp/mcx_p34.json");
    CHECK(gen.exit_code == 0);

    RunResult from_file = run("--format json homology --in /tmp/mcx_p34.json");
    RunResult from_flags = run("--format json homology --family triangular --t 4");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == from_flags.out);
    CHECK(json::parse(from_file.out).at("betti") == json{{"1", 5}});
}

TEST_CASE("reduce emits verified certificates") {
    RunResult r = run(
        "--format json reduce --family triangular --t 8 --emit-cert /tmp/mcx_cert.json");
    CHECK(r.exit_code == 0);
    json body = json::parse(r.out);
    CHECK(body.at("class_text") == "8*S^2 v S^3");
    CHECK(body.at("certificate_verified") == true);

    std::ifstream cert("/tmp/mcx_cert.json");
    REQUIRE(cert.good());
    json c = json::parse(cert);
    CHECK(c.contains("graph_key"));
    CHECK(c.contains("children"));

    // scripted strategy via family flags
    RunResult s = run("reduce --family pentagonal --t 5 --strategy scripted_pentagon");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("12*S^5") != std::string::npos);
}

TEST_CASE("verify agrees across channels") {
    RunResult ok = run("verify --family triangular --t-min 1 --t-max 6");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("MISMATCH") == std::string::npos);

    RunResult pent = run("--format json verify --family pentagonal --t 3");
    CHECK(pent.exit_code == 0);
    json reports = json::parse(pent.out);
    CHECK(reports[0].at("agreement").at("all") == true);

    RunResult ext = run("verify --family extended --s 4,6 --k 0 --l 0 --channels homology,engine");
    CHECK(ext.exit_code == 0);
}

TEST_CASE("table renders the reference rows") {
    RunResult t = run("table --t-max 13");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("MISMATCH") == std::string::npos);
    CHECK(t.out.find("64*S^4 v S^5") != std::string::npos);
}

TEST_CASE("outputs are deterministic across processes") {
    RunResult a = run("--format json reduce --family triangular --t 9 --emit-cert /tmp/mcx_det_a.json");
    RunResult b = run("--format json reduce --family triangular --t 9 --emit-cert /tmp/mcx_det_b.json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::ifstream fa("/tmp/mcx_det_a.json"), fb("/tmp/mcx_det_b.json");
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK_FALSE(ca.empty());
}

TEST_CASE("the seed flag is recorded in reports") {
    RunResult r = run("--format json --seed 5 verify --family triangular --t 3");
    CHECK(r.exit_code == 0);
    json reports = json::parse(r.out);
    CHECK(reports[0].at("seed") == 5);

    RunResult pred = run("--format json predict --family pentagonal --t 3");
    CHECK(pred.exit_code == 0);
    CHECK(json::parse(pred.out)[0].at("class_text") == "4*S^3");
}

TEST_CASE("errors exit nonzero with machine-readable JSON on stderr") {
    std::ofstream bad("/tmp/mcx_bad_graph.json");
    bad << "{\"vertices\":[\"u\"],\"edges\":[{\"id\":\"e\",\"u\":\"u\",\"v\":\"u\"}]}";
    bad.close();
    RunResult r = run("homology --in /tmp/mcx_bad_graph.json");
    CHECK(r.exit_code == 2);
    json err = json::parse(stderr_text());
    CHECK(err.at("error").at("name") == "self_loop");

    RunResult parse = run("reduce --in /tmp/mcx_cli_stderr.txt");
    CHECK(parse.exit_code == 2);

    RunResult budget = run("reduce --family triangular --t 9 --budget 2");
    CHECK(budget.exit_code == 2);
    CHECK(json::parse(stderr_text()).at("error").at("name") == "budget");
}
