#include "icsheaf/io.hpp"

#include <fstream>
#include <sstream>

namespace icsheaf {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileNotFound", path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
}

namespace {

std::vector<std::string> name_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error("ParseError", std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (v.is_string()) out.push_back(v.get<std::string>());
    else if (v.is_number_integer()) out.push_back(std::to_string(v.get<long long>()));
    else throw Error("ParseError", std::string(what) + " entries must be names");
  }
  return out;
}

}  // namespace

ComplexPtr complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("maximal_simplices"))
    throw Error("ParseError", "complex needs vertices and maximal_simplices");
  auto vertices = name_list(j.at("vertices"), "vertices");
  std::vector<std::vector<std::string>> maximal;
  for (const auto& s : j.at("maximal_simplices")) maximal.push_back(name_list(s, "simplex"));
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(std::move(vertices), maximal));
}

Json complex_to_json(const SimplicialComplex& c) {
  Json maximal = Json::array();
  for (int id = 0; id < c.size(); ++id) {
    if (!c.cofaces(id).empty()) continue;
    Json s = Json::array();
    for (int v : c.simplex(id)) s.push_back(c.vertex_names()[v]);
    maximal.push_back(s);
  }
  return {{"vertices", c.vertex_names()}, {"maximal_simplices", maximal}};
}

Stratification stratification_from_json(ComplexPtr c, const Json& j) {
  const Json& d = (j.is_object() && j.contains("depth")) ? j.at("depth") : j;
  if (!d.is_object()) throw Error("ParseError", "depth must be an object");
  std::vector<int> depth(c->size(), 0);
  for (const auto& [key, v] : d.items()) {
    if (!v.is_number_integer()) throw Error("ParseError", "depth of " + key);
    depth[c->parse_name(key)] = v.get<int>();
  }
  return Stratification(std::move(c), std::move(depth));
}

Json depth_to_json(const Stratification& s) {
  Json d = Json::object();
  for (int id = 0; id < s.complex().size(); ++id)
    if (s.depth(id) != 0) d[s.complex().name(id)] = s.depth(id);
  return {{"depth", d}};
}

CellSet sigma_from_json(const SimplicialComplex& c, const Json& j) {
  const Json& list = (j.is_object() && j.contains("sigma")) ? j.at("sigma") : j;
  if (!list.is_array()) throw Error("ParseError", "sigma must be an array of simplices");
  CellSet s(c.size());
  for (const auto& simplex : list) {
    Simplex verts;
    for (const auto& name : name_list(simplex, "sigma simplex")) verts.push_back(c.vertex_index(name));
    std::sort(verts.begin(), verts.end());
    s.insert(c.id_of(verts));
  }
  return closure(c, s);
}

Json to_json(const ExtInt& x) {
  if (x.is_finite()) return x.value();
  return x.str();
}

Json to_json(const CohomologyResult& r, int first, int last) { return r.range(first, last); }

Json to_json(const Check& c) {
  Json j = Json::object();
  j["simplex"] = c.simplex.empty() ? Json(nullptr) : Json(c.simplex);
  j["degree"] = c.degree ? Json(*c.degree) : Json(nullptr);
  j["observed"] = to_json(c.observed);
  j["bound"] = to_json(c.bound);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const ClauseResult& c) {
  Json j = Json::object();
  j["id"] = c.id;
  j["pass"] = c.pass;
  if (!c.applicable) j["status"] = "not-applicable";
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  if (!c.checks.empty()) {
    Json checks = Json::array();
    for (const auto& k : c.checks)
      checks.push_back({{"degree", k.degree ? Json(*k.degree) : Json(nullptr)},
                        {"observed", to_json(k.observed)},
                        {"bound", to_json(k.bound)},
                        {"pass", k.pass}});
    j["checks"] = checks;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const AxiomReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) clauses.push_back(to_json(c));
  return {{"system", r.system}, {"pass", r.pass()}, {"clauses", clauses}};
}

Json to_json(const ComponentCheck& c) {
  Json j = {{"depth", c.depth}, {"first_cell", c.first_cell}, {"cells", c.cells},
            {"status", c.pass() ? "pass" : "warn"}};
  if (!c.warning.empty()) j["warning"] = c.warning;
  return j;
}

std::string to_markdown(const AxiomReport& r) {
  std::ostringstream out;
  out << "### " << r.system << ": " << (r.pass() ? "pass" : "fail") << "\n\n";
  out << "| clause | result | simplex | degree | observed | bound |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& c : r.clauses) {
    out << "| " << c.id << " | " << (!c.applicable ? "n/a" : c.pass ? "pass" : "fail") << " | ";
    if (c.witness) {
      const auto& w = *c.witness;
      out << (w.simplex.empty() ? "-" : w.simplex) << " | " << (w.degree ? std::to_string(*w.degree) : "-") << " | "
          << w.observed.str() << " | " << w.bound.str() << " |\n";
    } else {
      out << "- | - | - | - |\n";
    }
  }
  return out.str();
}

}  // namespace icsheaf
