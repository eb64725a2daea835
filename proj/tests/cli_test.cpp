#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_binary() {
  const char *path = std::getenv("ISOFORGE_CLI");
  REQUIRE(path != nullptr);
  return path;
}

RunResult run(const std::string &args) {
  const std::string cmd = cli_binary() + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string &out, const std::string &line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

fs::path temp_file(const std::string &name) {
  return fs::temp_directory_path() /
         ("isoforge-cli-" + std::to_string(::getpid()) + "-" + name);
}

}  // namespace

TEST_CASE("classify quaternion") {
  const RunResult r = run("classify --group zoo:quaternion");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "case=C"));
  CHECK(has_line(r.out, "hull_e=8"));
  CHECK(has_line(r.out, "kappa_in_hull=true"));
}

TEST_CASE("hull of cyclic:4 translations") {
  const RunResult r = run("hull --group zoo:cyclic:4");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "order=8"));
  CHECK(has_line(r.out, "closed=false"));
}

TEST_CASE("rigidify then verify through files") {
  const fs::path metric = temp_file("s3.metric");
  const RunResult rig = run("rigidify --group zoo:sym:3 --epsilon 1/10 --out " +
                            metric.string());
  CHECK(rig.code == 0);
  CHECK(has_line(rig.out, "order=6"));
  CHECK(has_line(rig.out, "exact=true"));
  CHECK(has_line(rig.out, "verified=true"));

  const RunResult ver =
      run("verify --metric " + metric.string() + " --expect-order 6");
  CHECK(ver.code == 0);
  CHECK(has_line(ver.out, "order=6"));
  CHECK(has_line(ver.out, "match=true"));

  const RunResult bad =
      run("verify --metric " + metric.string() + " --expect-order 5");
  CHECK(bad.code == 1);
  CHECK(has_line(bad.out, "match=false"));
  fs::remove(metric);
}

TEST_CASE("two-point spaces always have the swap") {
  const fs::path metric = temp_file("pair.metric");
  std::ofstream(metric) << "metric 2\n7/3\n";
  const RunResult r =
      run("verify --metric " + metric.string() + " --expect-order 1");
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "order=2"));
  fs::remove(metric);
}

TEST_CASE("exit codes for misuse and refusal") {
  CHECK(run("classify").code == 3);                  // missing --group
  CHECK(run("frobnicate").code == 3);                // unknown subcommand
  CHECK(run("rigidify --group zoo:nonsense").code == 1);  // unknown zoo name
  // The one-point group on two points is refused at validation level.
  const fs::path group = temp_file("trivial.group");
  const fs::path action = temp_file("two.action");
  std::ofstream(group) << "group trivial 1\nidentity 0\n0\n";
  std::ofstream(action) << "action " << group.filename().string()
                        << " 2\n0 1\n";
  CHECK(run("rigidify --action " + action.string()).code == 1);
  fs::remove(group);
  fs::remove(action);
}

TEST_CASE("budget exhaustion exits with the budget code") {
  const RunResult r = run("hull --group zoo:sym:4 --budget 3");
  CHECK(r.code == 2);
}

TEST_CASE("repeat runs are byte identical") {
  const std::string args =
      "rigidify --group zoo:dihedral:4 --epsilon 1/100 --scheme paper";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has_line(a.out, "order=8"));
}

TEST_CASE("density smoke run") {
  const RunResult r = run("density --points 4 --trials 20 --seed 1");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "trials=20"));
  CHECK(has_line(r.out, "corridor_all_trivial=true"));
}
