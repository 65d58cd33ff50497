#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string output;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("critlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path log = scratch() / "log.txt";
  const std::string cmd = std::string(CRITLAB_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(log)};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

void write(const std::string& name, const std::string& text) {
  std::ofstream(scratch() / name, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("sample") {
  Run r = run("sample --model haar-u --n 8 --seed 7 --out " + path("m.csv"));
  CHECK(r.code == 0);
  CHECK(r.output.find("membership residual:") != std::string::npos);
  const double residual = std::stod(r.output.substr(r.output.find(':') + 1));
  CHECK(residual < 1e-10);
  std::istringstream rows(slurp(path("m.csv")));
  std::string line;
  int count = -1;  // header
  while (std::getline(rows, line)) count++;
  CHECK(count == 8);

  CHECK(run("sample --model haar-u --n 8 --seed 7 --out " + path("m2.csv")).code == 0);
  CHECK(slurp(path("m.csv")) == slurp(path("m2.csv")));

  Run odd = run("sample --model haar-sp --n 7 --seed 1 --out " + path("sp.csv"));
  CHECK(odd.code != 0);
  CHECK(odd.output.find("dimension must be even") != std::string::npos);

  CHECK(run("sample --model nonsense --n 3 --seed 1 --out " + path("x.csv")).code == 2);
  CHECK(run("sample --model haar-o --n 3 --seed 1 --out /nonexistent/dir/x.csv").code == 1);
}

TEST_CASE("critical") {
  write("pair.csv", "re,im\n1,0\n-1,0\n");
  Run r = run("critical --in " + path("pair.csv") + " --out " + path("pair_out.csv"));
  CHECK(r.code == 0);
  CHECK(slurp(path("pair_out.csv")) == "re,im\n0,0\n");
  CHECK(r.output.find("radial deficit: 1") != std::string::npos);
  CHECK(r.output.find("gauss-lucas: true") != std::string::npos);

  write("cube.csv", "re,im\n1,0\n-0.5,0.8660254037844386\n-0.5,-0.8660254037844386\n");
  CHECK(run("critical --in " + path("cube.csv") + " --out " + path("cube_out.csv")).code == 0);
  std::istringstream rows(slurp(path("cube_out.csv")));
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    count++;
    const auto comma = line.find(',');
    CHECK(std::abs(std::stod(line.substr(0, comma))) < 1e-7);
    CHECK(std::abs(std::stod(line.substr(comma + 1))) < 1e-7);
  }
  CHECK(count == 2);

  write("one.csv", "re,im\n1,0\n");
  Run one = run("critical --in " + path("one.csv") + " --out " + path("one_out.csv"));
  CHECK(one.code != 0);
  CHECK(one.output.find("degree must be >= 2") != std::string::npos);

  write("junk.csv", "re,im\n1,zz\n");
  CHECK(run("critical --in " + path("junk.csv") + " --out " + path("j.csv")).code != 0);
}

TEST_CASE("figure") {
  CHECK(run("figure --figure fig1 --out " + path("f1.csv")).code == 0);
  CHECK(run("figure --figure fig1 --out " + path("f1b.csv")).code == 0);
  CHECK(slurp(path("f1.csv")) == slurp(path("f1b.csv")));
  CHECK(slurp(path("f1.csv")).rfind("re,im,series\n", 0) == 0);

  CHECK(run("figure --figure fig2 --n 40 --format svg --out " + path("f2.svg")).code == 0);
  CHECK(slurp(path("f2.svg")).rfind("<svg", 0) == 0);

  CHECK(run("figure --figure fig9 --out " + path("f9.csv")).code == 2);
}

TEST_CASE("verify") {
  Run g = run("verify --suite groups");
  CHECK(g.code == 0);
  auto summary = nlohmann::json::parse(g.output);
  CHECK(summary.at("suite") == "groups");
  CHECK(summary.at("passed") == true);
  CHECK(run("verify --suite companion").code == 0);
  Run bad = run("verify --suite nope");
  CHECK(bad.code == 2);
  CHECK(bad.output.find("--suite") != std::string::npos);
}

TEST_CASE("report") {
  const std::string spec = std::string(CRITLAB_SPECS) + "/haar_unitary.json";
  Run r = run("report --spec " + spec + " --out " + path("u.json") + " --raw " + path("u.csv"));
  CHECK(r.code == 0);
  auto report = nlohmann::json::parse(slurp(path("u.json")));
  CHECK(report.at("trends").at("radial_deficit") == "decreasing");

  const std::string pairs = std::string(CRITLAB_SPECS) + "/conjugate_pairs.json";
  CHECK(run("report --spec " + pairs + " --out " + path("p.json")).code == 0);
  auto pr = nlohmann::json::parse(slurp(path("p.json")));
  for (int m = 1; m <= 5; ++m)
    CHECK(pr.at("trends").at("crit_trig_moment_" + std::to_string(m)) == "decreasing");

  write("broken.json", "{\"model\": ");
  CHECK(run("report --spec " + path("broken.json")).code == 2);
  write("invalid.json",
        R"({"name":"x","model":"haar_u","sizes":[50,25],"trials":2,"seed":1,"statistics":["radial_deficit"]})");
  Run inv = run("report --spec " + path("invalid.json"));
  CHECK(inv.code == 2);
  CHECK(inv.output.find("sizes") != std::string::npos);
}

TEST_CASE("help on every subcommand") {
  for (const char* sub : {"sample", "critical", "figure", "verify", "report"})
    CHECK(run(std::string(sub) + " --help").code == 0);
}
