#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "support.hpp"

namespace {

namespace fs = std::filesystem;

// Runs the command line tool with the given arguments, muting its streams;
// returns the process exit code.
int run_cli(const std::string& args) {
#ifdef CHAINHULL_CLI_PATH
  const std::string command =
      std::string(CHAINHULL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  (void)args;
  FAIL("command line tool not built");
  return -1;
#endif
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "chainhull_cli_test") {
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli computes a hull end to end") {
  TempDir dir;
  {
    std::ofstream out(dir.file("square.xy"));
    out << "0 0\n1 0\n1 1\n0 1\n0.5 0.5\n0.25 0.75\n";
  }
  CHECK(run_cli("hull --input " + dir.file("square.xy") + " --output " +
                dir.file("hull.xy") + " --stats-output " + dir.file("stats.csv")) ==
        0);
  CHECK(slurp(dir.file("hull.xy")) == "0 0\n1 0\n1 1\n0 1\n");
  CHECK(slurp(dir.file("stats.csv")).starts_with("n_input,"));
}

TEST_CASE("cli exit codes distinguish usage errors from runtime errors") {
  TempDir dir;
  CHECK(run_cli("hull --input " + dir.file("missing.xy") + " --output " +
                dir.file("h.xy")) == 2);
  CHECK(run_cli("verify --n 100 --trials 0") == 2);
  CHECK(run_cli("gen --n 10 --output " + dir.file("g.xy") +
                " --distribution no_such") == 2);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("") == 2);  // a subcommand is required

  // Malformed content is a runtime error, not a usage error.
  {
    std::ofstream out(dir.file("bad.xy"));
    out << "zero zero\n";
  }
  CHECK(run_cli("hull --input " + dir.file("bad.xy") + " --output " +
                dir.file("h.xy")) == 1);
}

TEST_CASE("cli hull output is identical for every chunk count") {
  TempDir dir;
  CHECK(run_cli("gen --distribution uniform_disk --n 20000 --seed 5 --output " +
                dir.file("pts.xy")) == 0);
  CHECK(run_cli("hull --input " + dir.file("pts.xy") + " --chunk-count 1 --output " +
                dir.file("h1.xy")) == 0);
  CHECK(run_cli("hull --input " + dir.file("pts.xy") +
                " --chunk-count 1024 --output " + dir.file("h1024.xy")) == 0);
  const std::string h1 = slurp(dir.file("h1.xy"));
  CHECK(h1 == slurp(dir.file("h1024.xy")));
  CHECK_FALSE(h1.empty());
}

TEST_CASE("cli verify agrees with the reference hull") {
  CHECK(run_cli("verify --distribution uniform_square --n 2000 --trials 3 "
                "--chunk-counts 1 1024") == 0);
  // List options also accept one comma-separated value.
  CHECK(run_cli("verify --distribution uniform_disk --n 1000 --trials 2 "
                "--chunk-counts 1,16,1024") == 0);
  CHECK(run_cli("verify --distribution collinear --n 500 --trials 2") == 0);
}

TEST_CASE("cli bench writes one row per size, seed, and repeat") {
  TempDir dir;
  CHECK(run_cli("bench --sizes 1000 2000 --seeds 1 2 --repeats 2 --csv-output " +
                dir.file("bench.csv")) == 0);
  const std::string csv = slurp(dir.file("bench.csv"));
  CHECK(csv.starts_with("size,seed,repeat,"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);  // header + 8 rows
}
