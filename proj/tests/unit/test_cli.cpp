#include "semiramsey/cli.hpp"
#include "semiramsey/serialization.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace semiramsey;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  TempDir() : path(fs::temp_directory_path() / ("semiramsey_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  fs::path path;
};

Json load(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("construct and solve the base instance") {
  TempDir tmp;
  const auto base = tmp.file("base3.json");
  auto r = run({"construct", "base", "--n", "3", "-o", base});
  CHECK(r.code == exit_code::pass);
  const Json j = load(base);
  CHECK(j["points"].size() == 8);
  CHECK(j["relation"]["arity"] == 3);
  CHECK(j["epsilon"] == "1/10");
  CHECK(r.out.find("\"N\":8") != std::string::npos);

  const auto base2 = tmp.file("base2.json");
  CHECK(run({"construct", "base", "--n", "2", "-o", base2}).code == 0);
  r = run({"solve", "brute", base2});
  CHECK(r.code == exit_code::pass);
  const Json res = Json::parse(r.out);
  CHECK(res["subset"] == Json::array({1, 2, 3}));
  CHECK(res["certified"] == true);
  CHECK(res["polarity"] == "in");
}

TEST_CASE("stepup and frankl-wilson files") {
  TempDir tmp;
  const auto base = tmp.file("base.json");
  const auto up = tmp.file("up.json");
  CHECK(run({"construct", "base", "--n", "3", "-o", base}).code == 0);
  CHECK(run({"construct", "stepup", "--input", base, "-o", up}).code == 0);
  const Json j = load(up);
  CHECK(j["points"].size() == 256);
  CHECK(j["points"][0].size() == 2);
  CHECK(j["relation"]["arity"] == 4);

  const auto r = run({"construct", "frankl-wilson", "--m", "6", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["points"].size() == 20);
}

TEST_CASE("greedy, monotone and spencer solvers") {
  TempDir tmp;
  const auto base = tmp.file("b.json");
  run({"construct", "base", "--n", "3", "-o", base});
  auto r = run({"solve", "greedy", base});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["certified"] == true);

  r = run({"solve", "spencer", base, "--seed", "7"});
  CHECK(r.code == 0);
  const Json s = Json::parse(r.out);
  CHECK(s["independent"] == true);
  CHECK(s["bound_met"] == true);

  const auto seq = tmp.file("seq.json");
  std::ofstream(seq) << R"([1, 3, 2, 4])";
  r = run({"solve", "monotone", seq});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["length"] == 3);

  const auto hg = tmp.file("h.json");
  std::ofstream(hg) << R"({"n": 6, "edges": [[1,2,3],[4,5,6]]})";
  r = run({"solve", "spencer", hg});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["size"].get<int>() >= 4);
}

TEST_CASE("verify checks") {
  TempDir tmp;
  CHECK(run({"verify", "properties-ab", "--N", "8"}).code == exit_code::pass);
  auto r = run({"verify", "transitive-ramsey", "--s", "4", "--n", "3"});
  CHECK(r.code == exit_code::pass);
  const Json j = Json::parse(r.out);
  CHECK(j["at_formula"]["verdict"] == "holds");
  CHECK(j["below_formula"]["verdict"] == "fails");
  CHECK(j["below_formula"].contains("red_triples"));

  r = run({"verify", "transitive-ramsey", "--s", "4", "--n", "3", "--N", "3"});
  CHECK(r.code == exit_code::fail);

  const auto base = tmp.file("b.json");
  run({"construct", "base", "--n", "3", "-o", base});
  CHECK(run({"verify", "eps-deep", "--input", base, "--samples", "100"}).code == exit_code::pass);

  Json loose = load(base);
  loose["epsilon"] = "1/1";
  const auto bad = tmp.file("loose.json");
  std::ofstream(bad) << loose.dump();
  r = run({"verify", "eps-deep", "--input", bad});
  CHECK(r.code == exit_code::fail);
  CHECK(Json::parse(r.out).contains("witness"));

  CHECK(run({"verify", "stepup-consistency", "--n", "1"}).code == exit_code::pass);
  CHECK(run({"verify", "sturm", "--trials", "200"}).code == exit_code::pass);
  CHECK(run({"verify", "milnor-thom", "--families", "5", "--samples", "200"}).code == exit_code::pass);
}

TEST_CASE("exit code contract") {
  auto r = run({"construct", "base", "--n", "0"});
  CHECK(r.code == exit_code::argument);
  CHECK(Json::parse(r.err)["error"]["kind"] == "argument");

  CHECK(run({"frobnicate"}).code == exit_code::argument);
  CHECK(run({}).code == exit_code::argument);
  CHECK(run({"solve", "brute", "/nonexistent/file.json"}).code == exit_code::argument);

  r = run({"--max-points", "4", "construct", "base", "--n", "3"});
  CHECK(r.code == exit_code::resource);
  CHECK(Json::parse(r.err)["error"]["kind"] == "resource");

  r = run({"verify", "transitive-ramsey", "--s", "4", "--n", "4", "--budget", "3"});
  CHECK(r.code == exit_code::inconclusive);

  TempDir tmp;
  const auto base = tmp.file("b.json");
  const auto up = tmp.file("up.json");
  run({"construct", "base", "--n", "2", "-o", base});
  run({"construct", "stepup", "--input", base, "-o", up});
  r = run({"solve", "brute", up, "--budget", "5"});
  CHECK(r.code == exit_code::resource);
  CHECK(Json::parse(r.out)["maximal"] == false);

  const auto sparse = tmp.file("sparse.json");
  std::ofstream(sparse) << R"({"n": 9, "edges": [[1,2,3]]})";
  r = run({"solve", "spencer", sparse});
  CHECK(r.code == exit_code::argument);
  CHECK(Json::parse(r.err)["error"]["kind"] == "precondition");

  CHECK(run({"--help"}).code == exit_code::pass);
}

TEST_CASE("identical configuration gives identical bytes") {
  TempDir tmp;
  for (const auto& kind : {"order-type", "one-sided"}) {
    const auto a = tmp.file("a.json");
    const auto b = tmp.file("b.json");
    CHECK(run({"construct", kind, "--d", "2", "--count", "6", "--seed", "5", "-o", a}).code == 0);
    CHECK(run({"construct", kind, "--d", "2", "--count", "6", "--seed", "5", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    const auto c = tmp.file("c.json");
    run({"construct", kind, "--d", "2", "--count", "6", "--seed", "6", "-o", c});
    CHECK(slurp(a) != slurp(c));
    const auto s1 = run({"solve", "brute", a});
    const auto s2 = run({"solve", "brute", b});
    CHECK(s1.out == s2.out);
  }
  const auto r1 = run({"verify", "milnor-thom", "--families", "3", "--samples", "100", "--seed", "9"});
  const auto r2 = run({"verify", "milnor-thom", "--families", "3", "--samples", "100", "--seed", "9"});
  CHECK(r1.out == r2.out);
}

TEST_CASE("output files round-trip through their parsers") {
  TempDir tmp;
  const auto base = tmp.file("b.json");
  run({"construct", "base", "--n", "2", "-o", base});
  const Json j = load(base);
  CHECK(to_json(instance_from_json(j)) == j);

  const auto os = tmp.file("os.json");
  run({"construct", "one-sided", "--d", "3", "--count", "5", "-o", os});
  const Json oj = load(os);
  CHECK(to_json(instance_file_from_json(oj)) == oj);
  CHECK(to_json(arrangement_from_json(oj["arrangement"])) == oj["arrangement"]);

  const auto res = tmp.file("r.json");
  run({"solve", "brute", base, "-o", res});
  const Json rj = load(res);
  const auto back = result_from_json(rj);
  CHECK(to_json(back)["subset"] == rj["subset"]);

  const auto arr = tmp.file("arr.json");
  std::ofstream(arr) << R"([{"a":["-1/1","1/1"],"b":"1/1"},{"a":["1","1"],"b":"3"},{"a":["0","1"],"b":"1"}])";
  auto r = run({"construct", "one-sided", "--input", arr});
  CHECK(r.code == 0);
  const auto inst = instance_file_from_json(Json::parse(r.out));
  CHECK(inst.points.size() == 3);
  CHECK(inst.points.dim() == 3);
}

TEST_CASE("report tables") {
  auto r = run({"report"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["transitive_ramsey"].size() == 16);
  bool saw_base4 = false;
  for (const auto& row : j["hom"])
    if (row["instance"] == "base n=4") {
      saw_base4 = true;
      CHECK(row["hom"] == 5);
    }
  CHECK(saw_base4);
  r = run({"report", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("transitive Ramsey") != std::string::npos);
}
