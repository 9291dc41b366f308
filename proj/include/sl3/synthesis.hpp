#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "sl3/building.hpp"
#include "sl3/growth.hpp"
#include "sl3/hulls.hpp"
#include "sl3/webs.hpp"

namespace sl3 {

// Indices are 1-based positions of the first of three consecutive vertices.
std::optional<int> find_uturn(const GrowthDiagram& d);
std::optional<int> find_sharp(const GrowthDiagram& d);

// Removing vertices keeps the remaining ones in order; the new basepoint is the
// surviving vertex of smallest old index. The U-turn keeps vertex i (= i+2).
GrowthDiagram remove_uturn(const GrowthDiagram& d, int i);
GrowthDiagram remove_sharp(const GrowthDiagram& d, int i);

struct DoubleElbow {
    int index = 0;   // position of the first vertex
    int length = 0;  // number of vertices a
};
DoubleElbow find_double_elbow(const GrowthDiagram& d);
// Replaces vertex i+1 by the other common neighbour of vertices i and i+2.
GrowthDiagram elbow_move(const GrowthDiagram& d, int i);

struct Move {
    enum Kind { UTurnRemoval, SharpCornerRemoval, ElbowMove } kind;
    int index = 0;
    GrowthDiagram before;
};
using MoveLog = std::vector<Move>;

GrowthDiagram apply(const Move& m);

// Reduces to a 2-gon and assembles the triangulated disk. Boundary vertex
// k of the result is polygon vertex k+1.
Diskoid diskoid_from_diagram(const GrowthDiagram& d, MoveLog* log = nullptr);

template <class K>
struct RealizedPolygon {
    std::vector<LatticeClass<K>> classes;  // classes[0] is the standard lattice
    GrowthDiagram diagram;
    int attempts = 0;
};

// Every pairwise distance equals the diagram entry.
template <class K>
bool realizes(const std::vector<LatticeClass<K>>& classes, const GrowthDiagram& d);

template <class K>
RealizedPolygon<K> realize_polygon(const GrowthDiagram& d, std::mt19937_64& rng, int retry_cap = 1000);

// Realizes d and checks that the induced complex on conv of the vertices is
// the diskoid, with boundary vertices matched by polygon index.
template <class K>
bool cross_validate(const GrowthDiagram& d, std::mt19937_64& rng, int retry_cap = 1000);
template <class K>
bool cross_validate(const RealizedPolygon<K>& p);

// Independent stream per (seed, index).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sl3
