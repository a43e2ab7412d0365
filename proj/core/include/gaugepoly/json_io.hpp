#pragma once

#include <json.hpp>

#include "gaugepoly/arrangement.hpp"
#include "gaugepoly/chain_complex.hpp"
#include "gaugepoly/exact_cube.hpp"
#include "gaugepoly/exact_polygon.hpp"
#include "gaugepoly/gibbons_hawking.hpp"
#include "gaugepoly/ribbon_tree.hpp"

namespace gp::io {

using json = nlohmann::ordered_json;

// Chain complexes: dimensions as integers keyed by degree, matrices as arrays
// of row bitstrings. Field order is fixed.
json complex_to_json(const f2::ChainComplex& c);
f2::ChainComplex complex_from_json(const json& j);

json matrix_to_json(const f2::Matrix& m);
f2::Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

// Chain maps ship their own source and target so a file stands alone.
json chainmap_to_json(const f2::ChainMap& f);
f2::ChainMap chainmap_from_json(const json& j);

// Exact n-gons: complexes by index, maps as flat block matrices.
json ngon_to_json(const ngon::NGon& g);
ngon::NGon ngon_from_json(const json& j);

// Exact n-cubes: complexes by subset mask, maps per path.
json cube_to_json(const ngon::NCube& q);
ngon::NCube cube_from_json(const json& j);

// Ribbon trees as nested lists with leaf labels.
json tree_to_json(const assoc::RibbonTree& t);
assoc::RibbonTree tree_from_json(const json& j);

// Arrangements as arrays of rational strings "p/q".
json arrangement_to_json(const assoc::Arrangement& a);
assoc::Arrangement arrangement_from_json(const json& j);

json kpoint_to_json(const assoc::KPoint& p);
assoc::KPoint kpoint_from_json(const json& j);

json gh_config_to_json(const gh::MonopoleConfig& cfg);
gh::MonopoleConfig gh_config_from_json(const json& j);

}  // namespace gp::io
