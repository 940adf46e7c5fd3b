#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "corpus.hpp"
#include "icsheaf/io.hpp"

using namespace icsheaf;
using namespace icsheaf::cli;

namespace {

std::string data(const std::string& f) { return std::string(ICSHEAF_TEST_DATA) + "/" + f; }

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(int (*cmd)(const JobOptions&, std::ostream&, std::ostream&), const JobOptions& o) {
  std::ostringstream out, err;
  int code = cmd(o, out, err);
  return {code, out.str(), err.str()};
}

JobOptions sphere_job(const std::string& strat) {
  JobOptions o;
  o.complex_path = data("sphere.json");
  o.strat_path = data(strat);
  return o;
}

// Compares against tests/golden/<name>, writing it on first use.
void check_golden(const std::string& name, const std::string& text) {
  std::filesystem::path path = std::filesystem::path(ICSHEAF_GOLDEN) / name;
  if (!std::filesystem::exists(path)) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << text;
    MESSAGE("wrote golden file " << path.string());
    return;
  }
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == text);
}

}  // namespace

TEST_CASE("json files") {
  CHECK(error_of([] { read_json_file(data("missing.json")); }).rfind("FileNotFound", 0) == 0);
  auto tmp = std::filesystem::temp_directory_path() / "icsheaf_bad.json";
  std::ofstream(tmp) << "{\"vertices\": [";
  CHECK(error_of([&] { read_json_file(tmp.string()); }).rfind("ParseError", 0) == 0);
  std::filesystem::remove(tmp);

  auto doc = read_json_file(data("sphere.json"));
  auto c = complex_from_json(doc);
  CHECK(c->size() == 14);
  auto again = complex_from_json(complex_to_json(*c));
  REQUIRE(again->size() == c->size());
  for (int id = 0; id < c->size(); ++id) CHECK(again->name(id) == c->name(id));

  auto st = complex_from_json(read_json_file(data("suspended_torus.json")));
  CHECK(st->size() == suspended_torus()->size());
  CHECK(st->dim() == 3);
}

TEST_CASE("stratification, sigma and local system documents") {
  auto c = complex_from_json(read_json_file(data("sphere.json")));
  auto s = stratification_from_json(c, read_json_file(data("sphere_point.json")));
  CHECK(s.depth(c->parse_name("v0")) == 2);
  CHECK(s.depth(c->parse_name("v1")) == 0);
  auto back = stratification_from_json(c, depth_to_json(s));
  CHECK(back.depths() == s.depths());
  CHECK(stratification_from_json(c, read_json_file(data("sphere_trivial.json"))).is_trivial());
  CHECK(error_of([&] { stratification_from_json(c, Json{{"depth", {{"v9", 2}}}}); }).rfind("SimplexNotFound", 0) == 0);

  auto sigma = sigma_from_json(*c, read_json_file(data("sigma_point.json")));
  CHECK(sigma.count() == 1);
  CHECK(sigma_from_json(*c, read_json_file(data("sigma_empty.json"))).empty());
  CHECK(sigma_from_json(*c, Json::array({Json::array({"v0", "v1"})})).count() == 3);

  auto two = stratification_from_json(c, read_json_file(data("sphere_two_points.json")));
  auto g = local_system_from_json<Rational>(read_json_file(data("twisted.json")), two);
  CHECK(g.rank == 1);
  CHECK(g.edges.size() == 1);
  CHECK_NOTHROW(to_sheaf(g, c));
  CHECK(error_of([&] { local_system_from_json<Rational>(Json{{"rank", 1}, {"edges", {{"v0,v1", {{1}}}}}}, two); })
            .rfind("ParseError", 0) == 0);
  CHECK(error_of([&] {
          local_system_from_json<Rational>(Json{{"rank", 2}, {"edges", {{"v0,v1<v0,v1,v2", {{1}}}}}}, two);
        }).rfind("ParseError", 0) == 0);
}

TEST_CASE("ih command") {
  auto o = sphere_job("sphere_point.json");
  auto r = run(cmd_ih, o);
  REQUIRE(r.code == 0);
  CHECK(r.json()["ih"] == Json::array({1, 0, 0}));
  CHECK(r.json()["field"] == "Q");
  CHECK(r.json()["perversity"]["class"] == "super");

  o = sphere_job("sphere_trivial.json");
  o.perversity = "zero";
  r = run(cmd_ih, o);
  REQUIRE(r.code == 0);
  CHECK(r.json()["ih"] == Json::array({1, 0, 1}));

  o = sphere_job("sphere_two_points.json");
  o.coeffs_path = data("twisted.json");
  CHECK(run(cmd_ih, o).json()["ih"] == Json::array({0, 0, 0}));
  o.field = "Fp:2";
  r = run(cmd_ih, o);
  CHECK(r.json()["field"] == "F2");
  CHECK(r.json()["ih"] == Json::array({1, 1, 0}));

  o = sphere_job("sphere_point.json");
  o.retain_stages = true;
  r = run(cmd_ih, o);
  CHECK(r.json()["stages"].size() == 3);

  o.output = "md";
  r = run(cmd_ih, o);
  CHECK(r.out.find("| 0 | 1 |") != std::string::npos);

  r = run(cmd_ih, sphere_job("bad_depth.json"));
  CHECK(r.code == 2);
  CHECK(r.err.find("NotClosed") != std::string::npos);

  o = sphere_job("sphere_point.json");
  o.field = "Fp:4";
  r = run(cmd_ih, o);
  CHECK(r.code == 2);
  CHECK(r.err.find("NotPrime(4)") != std::string::npos);

  JobOptions none;
  CHECK(run(cmd_ih, none).code == 2);
}

TEST_CASE("check command") {
  auto r = run(cmd_check, sphere_job("sphere_point.json"));
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["complex"]["simplices"] == 14);
  CHECK(j["stratification"]["sigma"] == Json::array({"v0"}));
  CHECK(j["stratification"]["warnings"] == 0);
}

TEST_CASE("compare command") {
  JobOptions o;
  o.complex_path = data("suspended_torus.json");
  o.sigma_path = data("sigma_cone_points.json");
  o.strat_paths = {data("susp_33.json"), data("susp_32.json"), data("susp_22.json")};
  o.perversity = "[0,1,1]";
  o.reduce = true;
  auto r = run(cmd_compare, o);
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["ih_equal"] == true);
  CHECK(j["stalks_equal"] == true);
  for (const auto& job : j["jobs"]) CHECK(job["ih"] == Json::array({1, 2, 0, 1}));

  JobOptions bad = sphere_job("");
  bad.sigma_path = data("sigma_empty.json");
  bad.strat_paths = {data("sphere_point.json")};
  r = run(cmd_compare, bad);
  CHECK(r.code == 2);
  CHECK(r.err.find("NotSubjectTo") != std::string::npos);

  bad.strat_paths.clear();
  CHECK(run(cmd_compare, bad).code == 2);
}

TEST_CASE("axioms command") {
  auto o = sphere_job("sphere_point.json");
  o.systems = {"AX2", "AX2'"};
  o.against_constant = true;
  auto r = run(cmd_axioms, o);
  REQUIRE(r.code == 0);
  auto j = r.json();
  REQUIRE(j["deligne"].size() == 2);
  REQUIRE(j["constant"].size() == 2);
  CHECK(j["deligne"][0]["pass"] == true);
  CHECK(j["deligne"][1]["pass"] == true);
  CHECK(j["constant"][0]["pass"] == true);
  CHECK(j["constant"][1]["pass"] == false);
  check_golden("axioms_sphere_point.json", r.out);

  o.output = "md";
  r = run(cmd_axioms, o);
  CHECK(r.out.find("### AX2': fail") != std::string::npos);

  o = sphere_job("sphere_trivial.json");
  r = run(cmd_axioms, o);
  CHECK(r.code == 0);

  o = sphere_job("sphere_point.json");
  o.systems = {"AX3"};
  r = run(cmd_axioms, o);
  CHECK(r.code == 0);
  CHECK(r.out.find("c = inf") != std::string::npos);

  o.systems = {"AX9"};
  CHECK(run(cmd_axioms, o).code == 2);
}

TEST_CASE("paper examples command") {
  JobOptions o;
  auto r = run(cmd_paper_examples, o);
  CHECK(r.code == 0);
  CHECK(r.json()["all_match"] == true);
  o.reduce = true;
  auto reduced = run(cmd_paper_examples, o);
  CHECK(reduced.code == 0);
  CHECK(reduced.json()["examples"] == r.json()["examples"]);
  o.field = "Fp:2";
  CHECK(run(cmd_paper_examples, o).code == 0);
}

TEST_CASE("output is deterministic") {
  auto o = sphere_job("sphere_point.json");
  o.systems = {"AX1", "AX2'", "AX3"};
  o.against_constant = true;
  auto a = run(cmd_axioms, o);
  o.serial = true;
  auto b = run(cmd_axioms, o);
  CHECK(a.out == b.out);
  CHECK(run(cmd_axioms, o).out == b.out);
}

TEST_CASE("sheaf dump golden") {
  auto x = tetrahedron_boundary();
  auto s = stratify(x, {{"v0", 2}});
  auto g = LocalSystem<Rational>::constant(s.open_part(1));
  auto p = extend(Perversity::preset("ultra", 2), 2);
  auto d = build_deligne(s, p, g, {true, false, Exec::serial}).result;
  auto dump = sheaf_dump(d);
  CHECK(dump["stalks"]["v0"]["cohomology"] == Json::array({1, 1, 0}));
  check_golden("deligne_sphere_point.json", dump.dump(2) + "\n");
}
