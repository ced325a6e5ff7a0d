#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RINGLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("classify prints a verdict table") {
    CliResult r = run_cli("classify --spec \"U(2,Z(4))\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ring U(2,Z(4)) order=64") != std::string::npos);
    CHECK(r.out.find("strongly_nil_ifp: holds") != std::string::npos);
    CHECK(r.out.find("armendariz: fails") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("classify --json is machine readable") {
    CliResult r = run_cli("classify --spec \"Z(6)\" --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"property\": \"reduced\"") != std::string::npos);
    CHECK(r.out.find("\"status\": \"holds\"") != std::string::npos);
}

TEST_CASE("classify accepts a ring file") {
    CliResult dump = run_cli("classify --spec \"Z(4)\"");
    REQUIRE(dump.exit_code == 0);
    // write the canonical text format by hand
    std::string path = "/tmp/ringlab_test_z4.ring";
    std::ofstream os(path);
    os << "ring Z4_file order=4 one=1\nadd:\n";
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) os << (a + b) % 4 << (b == 3 ? "" : " ");
        os << "\n";
    }
    os << "mul:\n";
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) os << (a * b) % 4 << (b == 3 ? "" : " ");
        os << "\n";
    }
    os.close();
    CliResult r = run_cli("classify --spec " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("two_primal: holds") != std::string::npos);
}

TEST_CASE("classify accepts a presentation file by realizing it") {
    std::string path = "/tmp/ringlab_test_dual.alg";
    std::ofstream os(path);
    os << "algebra p=2 gens=[a] unital\nrel a*a\n";
    os.close();
    CliResult r = run_cli("classify --spec " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("order=4") != std::string::npos);
    CHECK(r.out.find("reduced: fails") != std::string::npos);
}

TEST_CASE("explain renders a derivation chain") {
    CliResult r = run_cli("explain --spec \"T(Z(3))\" --property weak_ideal_armendariz");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weak_ideal_armendariz: holds") != std::string::npos);
    CHECK(r.out.find("transfer") != std::string::npos);
}

TEST_CASE("lattice emits DOT with the flow-chart boxes") {
    CliResult r = run_cli("lattice --dot -");
    CHECK(r.exit_code == 0);
    for (const char* box : {"ideal_armendariz", "weak_ideal_armendariz", "semicommutative",
                            "strongly_nil_ifp", "weakly_semicommutative", "weak_armendariz"})
        CHECK(r.out.find(box) != std::string::npos);
    CHECK(r.out.find("style=dashed") != std::string::npos);
}

TEST_CASE("hunt reports separations") {
    CliResult r = run_cli(
        "hunt --max-order 8 --pairs weakly_semicommutative:semicommutative --report -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weakly_semicommutative holds, semicommutative fails") !=
          std::string::npos);
    CHECK(r.out.find("U(2,Z(2))") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("classify").exit_code == 2);
    CHECK(run_cli("classify --spec \"W(3)\"").exit_code == 2);
    CHECK(run_cli("explain --spec \"Z(4)\" --property no_such_thing").exit_code == 2);
}

TEST_CASE("verify-paper --strict at the defaults exits cleanly") {
    CliResult r = run_cli("verify-paper --strict --jobs 2 --report -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify-paper smoke run at a tiny bound") {
    // degree 0 lenient: fast and must exit 0
    CliResult r = run_cli("--max-degree 0 verify-paper --report -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("bound-limited") != std::string::npos);
}
