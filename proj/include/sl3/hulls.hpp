#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "sl3/building.hpp"

namespace sl3 {

template <class K>
using VertexSet = std::set<LatticeClass<K>>;

// Abstract flag complex on vertices 0..vertex_count-1; pairs and triples are sorted.
struct SimplicialComplex2 {
    int vertex_count = 0;
    std::set<std::pair<int, int>> edges;
    std::set<std::array<int, 3>> triangles;
};

template <class K>
struct InducedComplex {
    std::vector<LatticeClass<K>> vertices;
    SimplicialComplex2 complex;
};

template <class K>
VertexSet<K> minconv_pair(const LatticeClass<K>& x, const LatticeClass<K>& y);
template <class K>
VertexSet<K> maxconv_pair(const LatticeClass<K>& x, const LatticeClass<K>& y);
template <class K>
VertexSet<K> conv_pair(const LatticeClass<K>& x, const LatticeClass<K>& y);

template <class K>
VertexSet<K> minconv(const VertexSet<K>& s);
template <class K>
VertexSet<K> maxconv(const VertexSet<K>& s);
template <class K>
VertexSet<K> conv(const VertexSet<K>& s);

// Union of pairwise hulls; consecutive vertices (and the last and first when
// closed) must be adjacent.
template <class K>
VertexSet<K> path_hull_fastpath(const std::vector<LatticeClass<K>>& path, bool closed = false);

template <class K>
InducedComplex<K> induced_complex(const VertexSet<K>& s);

}  // namespace sl3
