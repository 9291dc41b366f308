#include "sl3/hulls.hpp"

#include <algorithm>
#include <iterator>

#include "sl3/errors.hpp"

namespace sl3 {

namespace {

// Shifts a for which L_x (op) t^a L_y runs through the whole geodesic; outside
// this window the class is constant and equal to an endpoint.
template <class K>
std::pair<int, int> shift_window(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    auto s = x.rep().relative_exponents(y.rep());
    return {-s.front(), -s.back()};
}

template <class K, class Op>
VertexSet<K> pair_hull(const LatticeClass<K>& x, const LatticeClass<K>& y, Op op) {
    VertexSet<K> out;
    auto [lo, hi] = shift_window(x, y);
    for (int a = lo; a <= hi; ++a) out.insert(LatticeClass<K>::of(op(x.rep(), y.rep().shifted(a))));
    return out;
}

template <class K, class PairHull>
VertexSet<K> closure(const VertexSet<K>& s, PairHull hull) {
    std::vector<LatticeClass<K>> all(s.begin(), s.end());
    VertexSet<K> seen(s.begin(), s.end());
    for (size_t j = 0; j < all.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            for (const auto& v : hull(all[i], all[j]))
                if (seen.insert(v).second) all.push_back(v);
    return seen;
}

}  // namespace

template <class K>
VertexSet<K> minconv_pair(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    return pair_hull(x, y, [](const Lattice<K>& a, const Lattice<K>& b) { return lattice_intersection(a, b); });
}

template <class K>
VertexSet<K> maxconv_pair(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    return pair_hull(x, y, [](const Lattice<K>& a, const Lattice<K>& b) { return lattice_sum(a, b); });
}

template <class K>
static VertexSet<K> intersect(const VertexSet<K>& a, const VertexSet<K>& b) {
    VertexSet<K> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

template <class K>
VertexSet<K> conv_pair(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    return intersect(minconv_pair(x, y), maxconv_pair(x, y));
}

template <class K>
VertexSet<K> minconv(const VertexSet<K>& s) {
    return closure(s, [](const auto& a, const auto& b) { return minconv_pair(a, b); });
}

template <class K>
VertexSet<K> maxconv(const VertexSet<K>& s) {
    return closure(s, [](const auto& a, const auto& b) { return maxconv_pair(a, b); });
}

template <class K>
VertexSet<K> conv(const VertexSet<K>& s) {
    return intersect(minconv(s), maxconv(s));
}

template <class K>
VertexSet<K> path_hull_fastpath(const std::vector<LatticeClass<K>>& path, bool closed) {
    const size_t n = path.size();
    for (size_t i = 0; i + 1 < n || (closed && i < n && n > 1); ++i) {
        const auto& a = path[i];
        const auto& b = path[(i + 1) % n];
        if (!adjacent(a, b))
            throw NotAPath("vertices " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                           " are not adjacent");
    }
    VertexSet<K> out(path.begin(), path.end());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto h = conv_pair(path[i], path[j]);
            out.insert(h.begin(), h.end());
        }
    return out;
}

template <class K>
InducedComplex<K> induced_complex(const VertexSet<K>& s) {
    InducedComplex<K> out;
    out.vertices.assign(s.begin(), s.end());
    const int n = static_cast<int>(out.vertices.size());
    out.complex.vertex_count = n;
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(out.vertices[i], out.vertices[j])) {
                adj[i][j] = adj[j][i] = true;
                out.complex.edges.insert({i, j});
            }
    for (auto [i, j] : out.complex.edges)
        for (int k = j + 1; k < n; ++k)
            if (adj[i][k] && adj[j][k]) out.complex.triangles.insert({i, j, k});
    return out;
}

#define SL3_INSTANTIATE(K)                                                                     \
    template VertexSet<K> minconv_pair(const LatticeClass<K>&, const LatticeClass<K>&);        \
    template VertexSet<K> maxconv_pair(const LatticeClass<K>&, const LatticeClass<K>&);        \
    template VertexSet<K> conv_pair(const LatticeClass<K>&, const LatticeClass<K>&);           \
    template VertexSet<K> minconv(const VertexSet<K>&);                                        \
    template VertexSet<K> maxconv(const VertexSet<K>&);                                        \
    template VertexSet<K> conv(const VertexSet<K>&);                                           \
    template VertexSet<K> path_hull_fastpath(const std::vector<LatticeClass<K>>&, bool);       \
    template InducedComplex<K> induced_complex(const VertexSet<K>&);

SL3_INSTANTIATE(Rational)
SL3_INSTANTIATE(Fp)

}  // namespace sl3
