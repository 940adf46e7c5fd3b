#include "icsheaf/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "icsheaf/error.hpp"

namespace icsheaf {

int CellSet::count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<int> CellSet::ids() const {
  std::vector<int> out;
  for (int i = 0; i < universe(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool CellSet::is_subset_of(const CellSet& other) const {
  for (int i = 0; i < universe(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

CellSet CellSet::operator&(const CellSet& o) const {
  CellSet r(universe());
  for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] && o.bits_[i];
  return r;
}

CellSet CellSet::operator|(const CellSet& o) const {
  CellSet r(universe());
  for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] || o.bits_[i];
  return r;
}

CellSet CellSet::operator-(const CellSet& o) const {
  CellSet r(universe());
  for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] && !o.bits_[i];
  return r;
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> vertex_names,
                                                  const std::vector<std::vector<std::string>>& maximal) {
  if (vertex_names.empty() || maximal.empty()) throw Error("EmptyComplex");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertex_names.size(); ++i)
    if (!index.emplace(vertex_names[i], static_cast<int>(i)).second) throw Error("DuplicateSimplex", vertex_names[i]);
  std::set<Simplex> seen;
  std::vector<Simplex> given;
  for (const auto& names : maximal) {
    if (names.empty()) throw Error("EmptyComplex");
    Simplex s;
    for (const auto& v : names) {
      auto it = index.find(v);
      if (it == index.end()) throw Error("UnknownVertex", v);
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("DuplicateSimplex", "repeated vertex");
    if (!seen.insert(s).second) throw Error("DuplicateSimplex", "listed twice");
    given.push_back(std::move(s));
  }
  return from_simplices(std::move(vertex_names), std::move(given));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertex_names,
                                                    std::vector<Simplex> simplices) {
  SimplicialComplex c;
  c.vertex_names_ = std::move(vertex_names);
  std::set<Simplex> all;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    int k = static_cast<int>(s.size());
    // Every nonempty subset.
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Simplex f;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      all.insert(std::move(f));
    }
  }
  c.build(std::vector<Simplex>(all.begin(), all.end()));
  return c;
}

void SimplicialComplex::build(std::vector<Simplex> all) {
  std::stable_sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  simplices_ = std::move(all);
  int n = size();
  dim_ = -1;
  for (const auto& s : simplices_) dim_ = std::max(dim_, static_cast<int>(s.size()) - 1);
  faces_.assign(n, {});
  cofaces_.assign(n, {});
  for (int id = 0; id < n; ++id) {
    const Simplex& s = simplices_[id];
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      int fid = id_of(f);
      faces_[id].push_back(fid);
      cofaces_[fid].push_back(id);
    }
  }
  for (auto& v : cofaces_) std::sort(v.begin(), v.end());
  // Upsets in reverse id order: cofaces come later, so their upsets exist.
  upsets_.assign(n, {});
  for (int id = n - 1; id >= 0; --id) {
    std::vector<int> u;
    for (int c : cofaces_[id]) {
      u.push_back(c);
      u.insert(u.end(), upsets_[c].begin(), upsets_[c].end());
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    upsets_[id] = std::move(u);
  }
  downsets_.assign(n, {});
  for (int id = 0; id < n; ++id)
    for (int c : upsets_[id]) downsets_[c].push_back(id);
}

std::optional<int> SimplicialComplex::find(const Simplex& s) const {
  auto less = [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s, less);
  if (it == simplices_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - simplices_.begin());
}

int SimplicialComplex::id_of(const Simplex& s) const {
  auto r = find(s);
  if (!r) {
    std::string text;
    for (int v : s) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw Error("SimplexNotFound", text);
  }
  return *r;
}

bool SimplicialComplex::is_face(int a, int b) const {
  const Simplex& sa = simplices_[a];
  const Simplex& sb = simplices_[b];
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

std::string SimplicialComplex::name(int id) const {
  std::string out;
  for (int v : simplices_[id]) {
    if (!out.empty()) out += ',';
    out += vertex_names_[v];
  }
  return out;
}

int SimplicialComplex::vertex_index(std::string_view name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertex_names_[i] == name) return i;
  throw Error("SimplexNotFound", std::string(name));
}

int SimplicialComplex::parse_name(std::string_view name) const {
  Simplex s;
  std::size_t start = 0;
  while (true) {
    auto comma = name.find(',', start);
    std::string_view part = name.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto b = part.find_first_not_of(' ');
    auto e = part.find_last_not_of(' ');
    if (b == std::string_view::npos) throw Error("SimplexNotFound", std::string(name));
    s.push_back(vertex_index(part.substr(b, e - b + 1)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(s.begin(), s.end());
  auto r = find(s);
  if (!r) throw Error("SimplexNotFound", std::string(name));
  return *r;
}

std::vector<int> SimplicialComplex::simplices_of_dim(int d) const {
  std::vector<int> out;
  for (int id = 0; id < size(); ++id)
    if (simplex_dim(id) == d) out.push_back(id);
  return out;
}

CellSet open_star(const SimplicialComplex& c, int id) {
  if (id < 0 || id >= c.size()) throw Error("SimplexNotFound", std::to_string(id));
  CellSet s(c.size());
  s.insert(id);
  for (int u : c.upset(id)) s.insert(u);
  return s;
}

CellSet deleted_star(const SimplicialComplex& c, int id) {
  CellSet s = open_star(c, id);
  s.erase(id);
  return s;
}

SimplicialComplex link(const SimplicialComplex& c, int id) {
  if (id < 0 || id >= c.size()) throw Error("SimplexNotFound", std::to_string(id));
  const Simplex& sigma = c.simplex(id);
  std::vector<Simplex> parts;
  for (int u : c.upset(id)) {
    Simplex rest;
    std::set_difference(c.simplex(u).begin(), c.simplex(u).end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    parts.push_back(std::move(rest));
  }
  return SimplicialComplex::from_simplices(c.vertex_names(), std::move(parts));
}

bool is_open(const SimplicialComplex& c, const CellSet& s) {
  for (int id = 0; id < c.size(); ++id)
    if (s.contains(id))
      for (int u : c.cofaces(id))
        if (!s.contains(u)) return false;
  return true;
}

bool is_closed(const SimplicialComplex& c, const CellSet& s) {
  for (int id = 0; id < c.size(); ++id)
    if (s.contains(id))
      for (int f : c.faces(id))
        if (!s.contains(f)) return false;
  return true;
}

CellSet closure(const SimplicialComplex& c, const CellSet& s) {
  CellSet r = s;
  for (int id = c.size() - 1; id >= 0; --id)
    if (r.contains(id))
      for (int f : c.faces(id)) r.insert(f);
  return r;
}

int max_dim(const SimplicialComplex& c, const CellSet& s) {
  int d = -1;
  for (int id = 0; id < c.size(); ++id)
    if (s.contains(id)) d = std::max(d, c.simplex_dim(id));
  return d;
}

}  // namespace icsheaf
