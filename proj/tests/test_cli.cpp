#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(UNICOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fx(const std::string& name) { return std::string(UNICOUNT_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli count matches the documented examples") {
    RunResult r = run("count " + fx("square.json") + " --dilate 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"H\":[[1,0],[0,1]],\"count\":4,\"index\":1}\n");

    CHECK(run("count " + fx("x.json") + " --dilate 2,2").out ==
          "{\"H\":[[2,0],[0,2]],\"count\":9,\"index\":4}\n");
    CHECK(run("count " + fx("square.json") + " --dilate 1,2").out ==
          "{\"H\":[[1,0],[0,2]],\"count\":6,\"index\":2}\n");
    CHECK(run("count " + fx("x.json") + " --dilate 1,2").out ==
          "{\"H\":[[1,0],[0,2]],\"count\":5,\"index\":2}\n");
}

TEST_CASE("cli count canonicalizes arbitrary lattice bases") {
    RunResult r = run("count " + fx("square.json") + " --lattice '1,1;0,2'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"H\":[[1,0],[0,2]],\"count\":6,\"index\":2}\n");

    CHECK(run("count " + fx("square.json") + " --lattice '1,1;2,2'").exit_code == 2);
    CHECK(run("count " + fx("square.json") + " --lattice '1,x;0,2'").exit_code == 2);
    CHECK(run("count " + fx("square.json") + " --dilate 1,2,3").exit_code == 2);
}

TEST_CASE("cli output is byte-identical across runs") {
    std::string args = "sweep " + fx("p_hexagon.json") + " " + fx("q_pentagon.json") +
                       " --max-index 12";
    RunResult a = run(args);
    RunResult b = run(args + " --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "{\"discrepancy\":null,\"tested\":127}\n");
}

TEST_CASE("cli check-equal modes and exit codes") {
    RunResult eq = run("check-equal " + fx("p_hexagon.json") + " " + fx("q_pentagon.json") +
                       " --mode exact2d");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out == "{\"equal\":true}\n");

    RunResult ne = run("check-equal " + fx("square.json") + " " + fx("x.json") +
                       " --mode exact2d");
    CHECK(ne.exit_code == 1);
    CHECK(ne.out == "{\"equal\":false,\"fail\":\"profile\",\"witness_class\":[1,1]}\n");

    RunResult nec = run("check-equal " + fx("square.json") + " " + fx("x.json") +
                        " --mode necessary");
    CHECK(nec.exit_code == 1);
    CHECK(nec.out ==
          "{\"pass\":false,\"violation\":{\"rvol_p\":[\"0\",\"0\"],\"rvol_q\":[\"1\",\"0\"],"
          "\"z\":[1,1]}}\n");

    RunResult sw = run("check-equal " + fx("square.json") + " " + fx("x.json") +
                       " --mode sweep --max-index 2");
    CHECK(sw.exit_code == 1);
    CHECK(sw.out ==
          "{\"discrepancy\":{\"H\":[[1,0],[0,2]],\"count_p\":6,\"count_q\":5,\"index\":2},"
          "\"tested\":2}\n");

    CHECK(run("check-equal " + fx("cube.json") + " " + fx("cube.json") + " --mode exact2d")
              .exit_code == 2);
    CHECK(run("check-equal " + fx("cube.json") + " " + fx("square.json") + " --mode necessary")
              .exit_code == 2);
    CHECK(run("check-equal " + fx("cube.json") + " " + fx("cube.json") + " --mode necessary")
              .exit_code == 0);
}

TEST_CASE("cli ehrhart, profile and width") {
    CHECK(run("ehrhart " + fx("square.json")).out == "{\"coeffs\":[\"1\",\"2\",\"1\"]}\n");
    CHECK(run("ehrhart " + fx("x.json")).out == "{\"coeffs\":[\"1\",\"2\",\"1\"]}\n");
    CHECK(run("ehrhart " + fx("cube.json")).out ==
          "{\"coeffs\":[\"1\",\"3\",\"3\",\"1\"]}\n");

    CHECK(run("profile " + fx("x.json")).out ==
          "{\"classes\":[{\"total\":2,\"z\":[0,1]},{\"total\":1,\"z\":[1,-1]},"
          "{\"total\":1,\"z\":[1,1]}]}\n");

    RunResult w = run("width " + fx("x.json") + " --z 1,0");
    CHECK(w.out == "{\"boundary_formula\":2,\"width\":2}\n");
    CHECK(run("width " + fx("cube.json") + " --z 1,1,1").out == "{\"width\":3}\n");
}

TEST_CASE("cli decompose and synth") {
    RunResult d = run("decompose " + fx("p_hexagon.json") + " " + fx("q_pentagon.json"));
    CHECK(d.exit_code == 0);
    CHECK(d.out ==
          "{\"shift_p\":[0,0],\"shift_q\":[0,0],\"x\":{\"dim\":2,\"vertices\":[[0,0],[2,0],"
          "[1,1]]},\"y\":{\"dim\":2,\"vertices\":[[0,0],[1,1],[0,3]]}}\n");

    CHECK(run("decompose " + fx("square.json") + " " + fx("x.json")).exit_code == 1);

    RunResult s = run("synth " + fx("x.json") + " " + fx("y.json"));
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("\"area2_p\":17") != std::string::npos);
    CHECK(s.out.find("\"equal\":true") != std::string::npos);
}

TEST_CASE("cli verify-equidecomp") {
    RunResult ok = run("verify-equidecomp " + fx("square.json") + " " + fx("square_shift3.json") +
                       " " + fx("cert_square_translate.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "{\"pass\":true}\n");

    RunResult bad = run("verify-equidecomp " + fx("square.json") + " " + fx("square.json") + " " +
                        fx("cert_overlap.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("\"failed_check\":\"b\"") != std::string::npos);
    CHECK(bad.out.find("\"intersection_area2\":\"1/2\"") != std::string::npos);

    CHECK(run("verify-equidecomp " + fx("square.json") + " " + fx("square.json") + " " +
              fx("x.json"))
              .exit_code == 2);
}

TEST_CASE("cli input validation") {
    CHECK(run("count " + fx("missing.json") + " --dilate 1,1").exit_code == 2);
    CHECK(run("ehrhart " + fx("cert_overlap.json")).exit_code == 2);
    CHECK(run("sweep " + fx("square.json") + " " + fx("cube.json") + " --max-index 3")
              .exit_code == 2);
}

TEST_CASE("cli sweep budget from the environment") {
    RunResult tight = run("sweep " + fx("p_hexagon.json") + " " + fx("q_pentagon.json") +
                          " --max-index 60",
                          "UNICOUNT_BUDGET=100");
    CHECK(tight.exit_code == 2);

    RunResult fine = run("sweep " + fx("square.json") + " " + fx("square.json") +
                         " --max-index 3",
                         "UNICOUNT_BUDGET=1000000");
    CHECK(fine.exit_code == 0);
}

TEST_CASE("cli fuzz is reproducible") {
    RunResult a = run("fuzz --seed 5 --count 4 --box 6");
    RunResult b = run("fuzz --seed 5 --count 4 --box 6");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"checks\":\"ok\"") != std::string::npos);
    RunResult c = run("fuzz --seed 6 --count 4 --box 6");
    CHECK(c.out != a.out);
}
