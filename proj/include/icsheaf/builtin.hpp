#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "icsheaf/stratification.hpp"

namespace icsheaf {

// Embedded example spaces.
ComplexPtr tetrahedron_boundary();  // S^2 on v0..v3
ComplexPtr octahedron();            // S^2 with equator e0 e1 e2 e3, poles N and S
ComplexPtr torus7();                // minimal torus on t0..t6
ComplexPtr suspended_torus();       // torus7 joined with the two points a and b

std::vector<std::string> builtin_names();
ComplexPtr builtin_complex(const std::string& name);  // throws UnknownExample

// Closure of the named simplices ("v0", "e0,e1", ...).
CellSet closed_cells(const SimplicialComplex& c, std::initializer_list<std::string> names);
CellSet closed_cells(const SimplicialComplex& c, const std::vector<std::string>& names);

// Depth map from named cells; everything else is at depth 0.
Stratification stratify(ComplexPtr c, const std::vector<std::pair<std::string, int>>& depths);

}  // namespace icsheaf
