#include "icsheaf/builtin.hpp"

#include "icsheaf/error.hpp"

namespace icsheaf {

namespace {

ComplexPtr make(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& maximal) {
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(std::move(vertices), maximal));
}

std::vector<std::vector<std::string>> torus_triangles() {
  std::vector<std::vector<std::string>> out;
  auto t = [](int i) { return "t" + std::to_string(i % 7); };
  for (int i = 0; i < 7; ++i) {
    out.push_back({t(i), t(i + 1), t(i + 3)});
    out.push_back({t(i), t(i + 2), t(i + 3)});
  }
  return out;
}

std::vector<std::string> torus_vertices() {
  std::vector<std::string> v;
  for (int i = 0; i < 7; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

}  // namespace

ComplexPtr tetrahedron_boundary() {
  return make({"v0", "v1", "v2", "v3"},
              {{"v0", "v1", "v2"}, {"v0", "v1", "v3"}, {"v0", "v2", "v3"}, {"v1", "v2", "v3"}});
}

ComplexPtr octahedron() {
  std::vector<std::vector<std::string>> tri;
  for (int i = 0; i < 4; ++i) {
    std::string a = "e" + std::to_string(i), b = "e" + std::to_string((i + 1) % 4);
    tri.push_back({"N", a, b});
    tri.push_back({"S", a, b});
  }
  return make({"N", "S", "e0", "e1", "e2", "e3"}, tri);
}

ComplexPtr torus7() { return make(torus_vertices(), torus_triangles()); }

ComplexPtr suspended_torus() {
  auto v = torus_vertices();
  v.push_back("a");
  v.push_back("b");
  std::vector<std::vector<std::string>> tet;
  for (const auto& t : torus_triangles())
    for (const char* apex : {"a", "b"}) {
      auto s = t;
      s.push_back(apex);
      tet.push_back(std::move(s));
    }
  return make(std::move(v), tet);
}

std::vector<std::string> builtin_names() { return {"tetrahedron-boundary", "octahedron", "torus7", "suspended-torus"}; }

ComplexPtr builtin_complex(const std::string& name) {
  if (name == "tetrahedron-boundary") return tetrahedron_boundary();
  if (name == "octahedron") return octahedron();
  if (name == "torus7") return torus7();
  if (name == "suspended-torus") return suspended_torus();
  throw Error("UnknownExample", name);
}

CellSet closed_cells(const SimplicialComplex& c, const std::vector<std::string>& names) {
  CellSet s(c.size());
  for (const auto& n : names) s.insert(c.parse_name(n));
  return closure(c, s);
}

CellSet closed_cells(const SimplicialComplex& c, std::initializer_list<std::string> names) {
  return closed_cells(c, std::vector<std::string>(names));
}

Stratification stratify(ComplexPtr c, const std::vector<std::pair<std::string, int>>& depths) {
  std::vector<int> d(c->size(), 0);
  for (const auto& [name, k] : depths) d[c->parse_name(name)] = k;
  return Stratification(std::move(c), std::move(d));
}

}  // namespace icsheaf
