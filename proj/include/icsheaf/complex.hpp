#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icsheaf {

// Sorted vertex indices.
using Simplex = std::vector<int>;

// Subset of the simplices of a fixed complex, stored as a bitmask over ids.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int universe) : bits_(universe, false) {}
  static CellSet all(int universe) {
    CellSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(int id) const { return bits_[id]; }
  void insert(int id) { bits_[id] = true; }
  void erase(int id) { bits_[id] = false; }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> ids() const;
  bool is_subset_of(const CellSet& other) const;

  CellSet operator&(const CellSet& o) const;
  CellSet operator|(const CellSet& o) const;
  CellSet operator-(const CellSet& o) const;
  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<bool> bits_;
};

// Finite abstract simplicial complex. Simplex ids are ordered by dimension,
// then lexicographically by vertex index, so faces precede cofaces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Face closure of the given simplices. Throws DuplicateSimplex if a
  // simplex is listed twice or repeats a vertex, UnknownVertex for names not
  // in the vertex list, EmptyComplex if nothing is given.
  static SimplicialComplex from_maximal(std::vector<std::string> vertex_names,
                                        const std::vector<std::vector<std::string>>& maximal);
  // Face closure; may be empty.
  static SimplicialComplex from_simplices(std::vector<std::string> vertex_names, std::vector<Simplex> simplices);

  int size() const { return static_cast<int>(simplices_.size()); }
  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  const Simplex& simplex(int id) const { return simplices_[id]; }
  int simplex_dim(int id) const { return static_cast<int>(simplices_[id].size()) - 1; }
  std::optional<int> find(const Simplex& s) const;
  int id_of(const Simplex& s) const;  // throws SimplexNotFound

  // Codimension-one faces; entry i omits vertex position i (sign (-1)^i).
  std::span<const int> faces(int id) const { return faces_[id]; }
  // Codimension-one cofaces, ascending.
  std::span<const int> cofaces(int id) const { return cofaces_[id]; }
  // All strict cofaces, ascending.
  std::span<const int> upset(int id) const { return upsets_[id]; }
  // All strict faces, ascending.
  std::span<const int> downset(int id) const { return downsets_[id]; }
  bool is_face(int a, int b) const;  // a <= b

  // "v0,v1" style name built from vertex names.
  std::string name(int id) const;
  int parse_name(std::string_view name) const;  // throws SimplexNotFound
  int vertex_index(std::string_view name) const;

  std::vector<int> simplices_of_dim(int d) const;

 private:
  void build(std::vector<Simplex> all);

  std::vector<std::string> vertex_names_;
  std::vector<Simplex> simplices_;
  std::vector<std::vector<int>> faces_, cofaces_, upsets_, downsets_;
  int dim_ = -1;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Cofaces of a simplex including itself.
CellSet open_star(const SimplicialComplex& c, int id);
// Complement of the simplex in its open star.
CellSet deleted_star(const SimplicialComplex& c, int id);
SimplicialComplex link(const SimplicialComplex& c, int id);

bool is_open(const SimplicialComplex& c, const CellSet& s);    // closed under cofaces
bool is_closed(const SimplicialComplex& c, const CellSet& s);  // closed under faces
CellSet closure(const SimplicialComplex& c, const CellSet& s);
int max_dim(const SimplicialComplex& c, const CellSet& s);  // -1 if empty

}  // namespace icsheaf
