#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const auto log = std::filesystem::temp_directory_path() / "pxp_cli_test.log";
  const std::string cmd = std::string(PXPDRIVE_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::ostringstream os;
  os << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, os.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("basis reports the dimension") {
    const auto r = run("basis --L 12 --bc pbc");
    CHECK(r.code == 0);
    CHECK(r.out.find("dimension=322") != std::string::npos);
  }

  TEST_CASE("validation errors exit with 1 and name the key") {
    auto r = run("run --protocol u4 --T 1 --dT 0.5 --out /tmp/pxp_cli_unused");
    CHECK(r.code == 1);
    CHECK(r.out.find("dT") != std::string::npos);
    r = run("run --lambda banana");
    CHECK(r.code == 1);
    CHECK(r.out.find("lambda") != std::string::npos);
    r = run("basis --L 40");
    CHECK(r.code == 1);
    r = run("frobnicate");
    CHECK(r.code == 1);
  }

  TEST_CASE("runtime failures exit with 2") {
    const auto r = run("run --L 6 --cycles 2 --out /proc/pxp_no_such_dir/x");
    CHECK(r.code == 2);
  }

  TEST_CASE("run writes CSV and sidecar, and the sidecar reruns identically") {
    const auto dir = std::filesystem::temp_directory_path() / "pxp_cli_run";
    std::filesystem::remove_all(dir);
    const std::string out = (dir / "a").string();
    REQUIRE(run("run --protocol u4 --L 6 --T 2 --dT 0.1 --dw 0.01 --cycles 30 --seed 5 --out " + out).code ==
            0);
    REQUIRE(run("run --config " + out + ".meta.json --out " + (dir / "b").string()).code == 0);
    std::ifstream a(dir / "a.csv"), b(dir / "b.csv");
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str().size() > 30);
    CHECK(sa.str() == sb.str());
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("effective and seqstats print tables") {
    auto r = run("effective --check special-periods");
    CHECK(r.code == 0);
    CHECK(r.out.find("u5_B_envelope") != std::string::npos);
    r = run("seqstats --bruteforce-N 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("3,3/2,3/2,1") != std::string::npos);
    r = run("seqstats --protocol fib --level 10");
    CHECK(r.code == 0);
    r = run("seqstats --closed-N 4 --bruteforce-N 4");
    CHECK(r.code == 1);
  }

  TEST_CASE("preset list names every preset") {
    const auto r = run("preset --list");
    CHECK(r.code == 0);
    for (const char* name : {"fig1", "fig2", "fig3a", "fig3b", "fig4", "fig5", "fig6", "fig7"}) {
      CHECK(r.out.find(name) != std::string::npos);
    }
  }
}
