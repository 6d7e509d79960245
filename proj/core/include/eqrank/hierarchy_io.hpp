#pragma once

#include <iosfwd>
#include <string>

#include "eqrank/graph.hpp"
#include "eqrank/themes.hpp"

namespace eqrank {

/// JSON document describing a clustering:
///
///     { "format": "eqrank-clustering", "version": 1, "f_cut": 20,
///       "components": [ { "component": 0, "status": "clustered",
///           "vertices": [global ids...], "levels_count": n,
///           "orphans": [level-1 block ids], "actual_themes": k,
///           "levels": [ { "level": 0, "size": N, "edges": M },
///                       { "level": 1, "size": K, "edges": M1,
///                         "projection": [block of each parent vertex],
///                         "blocks": [[parent ids], ...] }, ... ] } ] }
///
/// Level graphs are not stored; they are rebuilt by factoring on load.
void save_clustering(std::ostream& out, const Clustering& c);
/// `g` must be the weighted level-0 graph the clustering was computed on.
Clustering load_clustering(std::istream& in, const WeightedDigraph& g);

}  // namespace eqrank
