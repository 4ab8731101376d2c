#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using sbppa::cli::run_cli;

namespace {

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args)
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_lines(const std::string& text)
{
  std::size_t n = 0;
  for (char c : text) {
    n += c == '\n' ? 1 : 0;
  }
  return n;
}

struct TempDir
{
  fs::path path;

  explicit TempDir(const std::string& tag)
  {
    path = fs::temp_directory_path() / ("sbppa_cli_" + tag + "_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

/// Restores SBPPA_SEED on scope exit.
struct SeedEnv
{
  std::string saved;
  bool had = false;

  explicit SeedEnv(const char* value)
  {
    if (const char* v = std::getenv("SBPPA_SEED")) {
      saved = v;
      had = true;
    }
    if (value != nullptr) {
      ::setenv("SBPPA_SEED", value, 1);
    } else {
      ::unsetenv("SBPPA_SEED");
    }
  }
  ~SeedEnv()
  {
    if (had) {
      ::setenv("SBPPA_SEED", saved.c_str(), 1);
    } else {
      ::unsetenv("SBPPA_SEED");
    }
  }
};

} // namespace

TEST_CASE("list-problems prints the whole catalog")
{
  const Result r = cli({"list-problems"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 19); // header plus 18 problems
  CHECK(r.out.find("speed_reducer") != std::string::npos);
  CHECK(r.out.find("colville") != std::string::npos);

  const Result j = cli({"list-problems", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.front() == '[');
}

TEST_CASE("run twice with one seed writes identical files")
{
  const SeedEnv env(nullptr);
  const TempDir dir("determinism");
  for (const char* ext : {"csv", "json"}) {
    const fs::path a = dir.path / (std::string("a.") + ext);
    const fs::path b = dir.path / (std::string("b.") + ext);
    const fs::path ta = dir.path / (std::string("ta_") + ext + ".csv");
    const fs::path tb = dir.path / (std::string("tb_") + ext + ".csv");
    const Result ra = cli({"run", "--problem", "matyas", "--seed", "42", "--gmax", "200", "--out",
                           a.string(), "--trace", ta.string(), "--jobs", "3"});
    const Result rb = cli({"run", "--problem", "matyas", "--seed", "42", "--gmax", "200", "--out",
                           b.string(), "--trace", tb.string(), "--jobs", "1"});
    CAPTURE(ext);
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(read_file(a) == read_file(b));
    CHECK(read_file(ta) == read_file(tb));
    CHECK_FALSE(read_file(a).empty());
  }
  CHECK(read_file(dir.path / "a.json").front() == '{');
  CHECK(read_file(dir.path / "a.csv").rfind("run_index,", 0) == 0);
}

TEST_CASE("run output reports both statistics bases")
{
  const SeedEnv env(nullptr);
  const Result r = cli({"run", "--problem", "sixhump", "--gmax", "100", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all runs: best") != std::string::npos);
  CHECK(r.out.find("pop_best: best") != std::string::npos);
  CHECK(r.out.find("mode=agent-index") != std::string::npos);
}

TEST_CASE("--format overrides the file extension")
{
  const TempDir dir("format");
  const fs::path out = dir.path / "results.txt";
  const Result r =
      cli({"run", "--problem", "cp5", "--gmax", "20", "--out", out.string(), "--format", "json"});
  CHECK(r.code == 0);
  CHECK(read_file(out).front() == '{');
}

TEST_CASE("SBPPA_SEED is the fallback seed")
{
  const std::vector<std::string> args{"run", "--problem", "trid6", "--gmax", "50"};
  std::string with_env;
  {
    const SeedEnv env("42");
    with_env = cli(args).out;
    CHECK(with_env.find("seed=42") != std::string::npos);
  }
  std::vector<std::string> explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "42"});
  CHECK(cli(explicit_args).out == with_env);

  {
    const SeedEnv env(nullptr);
    CHECK(cli(args).out.find("seed=20160627") != std::string::npos);
  }
  {
    const SeedEnv env("forty-two");
    CHECK(cli(args).code == 2);
  }
}

TEST_CASE("usage errors exit with 2")
{
  const Result unknown = cli({"run", "--problem", "rastrigin"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("rastrigin") != std::string::npos);

  CHECK(cli({"run", "--problem", "matyas", "--bogus"}).code == 2);
  CHECK(cli({"run"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"run", "--problem", "matyas", "--mode", "random"}).code == 2);
  CHECK(cli({"run", "--problem", "matyas", "--np", "1"}).code == 2);
  CHECK(cli({"run", "--problem", "matyas", "--runs", "5"}).code == 2);
  CHECK(cli({"reproduce", "--table", "7"}).code == 2);
  CHECK(cli({"reproduce", "--table", "3", "--scale", "huge"}).code == 2);
}

TEST_CASE("runtime errors exit with 1")
{
  const Result r = cli({"run", "--problem", "matyas", "--gmax", "5", "--out",
                        "/nonexistent-dir/sub/out.csv"});
  CHECK(r.code == 1);
  CHECK(r.err.find("/nonexistent-dir/sub/out.csv") != std::string::npos);
}

TEST_CASE("help exits cleanly")
{
  const Result r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reproduce") != std::string::npos);
}

TEST_CASE("reproduce table 4 at desk scale covers every constrained problem")
{
  const Result r = cli({"reproduce", "--table", "4", "--scale", "desk", "--runs", "10", "--seed",
                        "3"});
  REQUIRE(r.code == 0);
  for (const char* name :
       {"cp1", "cp2", "cp3", "cp4", "cp5", "spring", "welded_beam", "speed_reducer"}) {
    CAPTURE(name);
    CHECK(r.out.find(std::string("\n") + name + " (") != std::string::npos);
  }
  for (const char* algorithm : {"SbPPA", "ABC", "PSO", "FF", "SSO-C"}) {
    CAPTURE(algorithm);
    CHECK(r.out.find(algorithm) != std::string::npos);
  }
  CHECK(r.out.find("gmax=2400") != std::string::npos);
}

TEST_CASE("the installed binary behaves like run_cli")
{
  const char* bin = std::getenv("SBPPA_BIN");
  if (bin == nullptr) {
    MESSAGE("SBPPA_BIN not set; skipping the process-level check");
    return;
  }
  const TempDir dir("binary");
  const fs::path out = dir.path / "list.txt";
  const std::string command = std::string("\"") + bin + "\" list-problems > \"" + out.string() + "\"";
  CHECK(std::system(command.c_str()) == 0);
  CHECK(read_file(out) == cli({"list-problems"}).out);

  const std::string bad = std::string("\"") + bin + "\" run --problem nope 2> /dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
