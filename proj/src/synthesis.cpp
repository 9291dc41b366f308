#include "sl3/synthesis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sl3/errors.hpp"

namespace sl3 {

namespace {

DominantWeight wt(const Partition& p) { return weight_of(p); }

bool is_elbow(const GrowthDiagram& r) {
    return r.word()[0] != r.word()[1] && wt(r.at(1, 3)) == DominantWeight{{2, 1, 0}};
}

// Old positions (0-based) of the vertices of d.rotated(i-1) that survive
// when the positions in `removed` (relative to the rotation) are deleted.
std::vector<int> survivors(int n, int i, const std::vector<int>& removed) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
        if (std::find(removed.begin(), removed.end(), k) == removed.end()) out.push_back((i - 1 + k) % n);
    return out;
}

GrowthDiagram drop(const GrowthDiagram& d, int i, bool uturn) {
    const int n = d.n();
    const GrowthDiagram r = d.rotated(i - 1);
    const auto& row = r.first_row();
    const int c = row[2][2];
    std::vector<Partition> next{{0, 0, 0}};
    for (int j = uturn ? 4 : 3; j <= n + 1; ++j) {
        Partition p = row[static_cast<size_t>(j - 1)];
        for (int& x : p) x -= c;
        next.push_back(p);
    }
    GrowthDiagram out = GrowthDiagram::complete_from_row(next);
    if (out.n() == 0) return out;
    auto kept = survivors(n, i, uturn ? std::vector<int>{1, 2} : std::vector<int>{1});
    int first = static_cast<int>(std::min_element(kept.begin(), kept.end()) - kept.begin());
    return out.rotated(first);
}

void check_index(const GrowthDiagram& d, int i, int min_n) {
    if (d.n() < min_n || i < 1 || i > d.n())
        throw PreconditionViolated("index " + std::to_string(i) + " out of range for a " + std::to_string(d.n()) +
                                   "-gon");
}

}  // namespace

std::optional<int> find_uturn(const GrowthDiagram& d) {
    if (d.n() < 2) return std::nullopt;
    for (int i = 1; i <= d.n(); ++i)
        if (wt(d.at(i, i + 2)) == DominantWeight::zero()) return i;
    return std::nullopt;
}

std::optional<int> find_sharp(const GrowthDiagram& d) {
    if (d.n() < 3) return std::nullopt;
    for (int i = 1; i <= d.n(); ++i) {
        DominantWeight w = wt(d.at(i, i + 2));
        if (w == DominantWeight::omega1() || w == DominantWeight::omega2()) return i;
    }
    return std::nullopt;
}

GrowthDiagram remove_uturn(const GrowthDiagram& d, int i) {
    check_index(d, i, 2);
    if (wt(d.at(i, i + 2)) != DominantWeight::zero())
        throw PreconditionViolated("no U-turn at " + std::to_string(i));
    return drop(d, i, true);
}

GrowthDiagram remove_sharp(const GrowthDiagram& d, int i) {
    check_index(d, i, 3);
    DominantWeight w = wt(d.at(i, i + 2));
    if (w != DominantWeight::omega1() && w != DominantWeight::omega2())
        throw PreconditionViolated("no sharp corner at " + std::to_string(i));
    return drop(d, i, false);
}

DoubleElbow find_double_elbow(const GrowthDiagram& d) {
    const int n = d.n();
    for (int i = 1; i <= n && n >= 4; ++i) {
        GrowthDiagram r = d.rotated(i - 1);
        if (!is_elbow(r)) continue;
        const auto& w = r.word();
        int a = 0;
        for (int j = 4; j <= n; ++j)
            if (steps(wt(r.at(1, j))) == steps(wt(r.at(1, j - 1)))) {
                a = j;
                break;
            }
        if (a == 0) continue;
        // Letters 2..a-2 agree and the last three vertices form an elbow.
        bool straight = true;
        for (int j = 2; j < a - 2; ++j) straight = straight && w[j - 1] == w[j];
        if (!straight || !is_elbow(r.rotated(a - 3))) continue;
        return {i, a};
    }
    throw NoDoubleElbow("no double elbow in a diagram of type " + word_str(d.word()));
}

GrowthDiagram elbow_move(const GrowthDiagram& d, int i) {
    check_index(d, i, 3);
    GrowthDiagram r = d.rotated(i - 1);
    if (!is_elbow(r)) throw PreconditionViolated("no elbow at " + std::to_string(i));
    std::vector<Partition> row = r.first_row();
    row[1] = row[1] == Partition{1, 0, 0} ? Partition{1, 1, 0} : Partition{1, 0, 0};
    return GrowthDiagram::complete_from_row(row).rotated(d.n() - (i - 1));
}

GrowthDiagram apply(const Move& m) {
    switch (m.kind) {
        case Move::UTurnRemoval:
            return remove_uturn(m.before, m.index);
        case Move::SharpCornerRemoval:
            return remove_sharp(m.before, m.index);
        case Move::ElbowMove:
            return elbow_move(m.before, m.index);
    }
    throw PreconditionViolated("unknown move");
}

Diskoid diskoid_from_diagram(const GrowthDiagram& d, MoveLog* log) {
    const int n0 = d.n();
    Diskoid out;
    if (n0 == 0) return out;

    std::vector<int> lab(static_cast<size_t>(n0));
    std::iota(lab.begin(), lab.end(), 0);
    std::vector<int> parent = lab;
    auto fresh = [&] {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    };
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<std::pair<int, int>> raw_edges;
    std::vector<std::array<int, 3>> raw_tris;
    auto edge = [&](int a, int b, int letter) { raw_edges.push_back(letter == 1 ? std::pair{a, b} : std::pair{b, a}); };
    auto polygon_edges = [&](const GrowthDiagram& g) {
        const int n = g.n();
        for (int p = 0; p < n; ++p) edge(lab[p], lab[(p + 1) % n], g.word()[p]);
    };
    auto record = [&](Move::Kind k, int i, const GrowthDiagram& g) {
        if (log) log->push_back({k, i, g});
    };

    GrowthDiagram cur = d;
    int moves = 0;
    const int budget = n0 * n0;
    while (cur.n() > 2) {
        const int n = cur.n();
        polygon_edges(cur);
        if (auto u = find_uturn(cur)) {
            int i = *u, p = i - 1, q = i % n, r = (i + 1) % n;
            parent[find(lab[r])] = find(lab[p]);
            record(Move::UTurnRemoval, i, cur);
            cur = remove_uturn(cur, i);
            lab.erase(lab.begin() + std::max(q, r));
            lab.erase(lab.begin() + std::min(q, r));
            ++moves;
        } else if (auto s = find_sharp(cur)) {
            int i = *s, p = i - 1, q = i % n, r = (i + 1) % n;
            raw_tris.push_back({lab[p], lab[q], lab[r]});
            record(Move::SharpCornerRemoval, i, cur);
            cur = remove_sharp(cur, i);
            lab.erase(lab.begin() + q);
            ++moves;
        } else {
            DoubleElbow de = find_double_elbow(cur);
            for (int k = 0; k < de.length; ++k) {
                int i = (de.index - 1 + k) % n + 1, p = i - 1, q = i % n, r = (i + 1) % n;
                int v = fresh();
                raw_tris.push_back({lab[p], lab[q], v});
                raw_tris.push_back({lab[q], lab[r], v});
                edge(lab[q], v, cur.word()[p]);
                record(Move::ElbowMove, i, cur);
                cur = elbow_move(cur, i);
                lab[q] = v;
                polygon_edges(cur);
                ++moves;
                if (find_uturn(cur) || find_sharp(cur)) break;
            }
        }
        if (moves > budget) throw PreconditionViolated("reduction did not terminate within n^2 moves");
    }
    polygon_edges(cur);

    // Compact labels: boundary walk first, in order of appearance.
    std::map<int, int> order;
    int next = 0;
    auto number = [&](int v) {
        v = find(v);
        auto it = order.find(v);
        if (it != order.end()) return it->second;
        order.emplace(v, next);
        return next++;
    };
    for (int v = 0; v < n0; ++v) out.boundary.push_back(number(v));
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : raw_edges) {
        int x = number(a), y = number(b);
        if (x == y) throw MalformedDiskoid("edge collapsed to a point");
        if (edges.count({y, x})) throw MalformedDiskoid("edge " + std::to_string(x) + "-" + std::to_string(y) +
                                                        " received both directions");
        edges.insert({x, y});
    }
    std::set<std::array<int, 3>> seen;
    for (auto t : raw_tris) {
        std::array<int, 3> m{number(t[0]), number(t[1]), number(t[2])};
        std::array<int, 3> key = m;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) throw MalformedDiskoid("triangle added twice");
        out.triangles.push_back(m);
    }
    out.edges.assign(edges.begin(), edges.end());
    out.vertex_count = next;
    return out;
}

// ---------------------------------------------------------------------------
// Realization

namespace {

template <class K>
using Flag = std::array<KVec<K>, 3>;

template <class K>
bool independent_add(std::vector<KVec<K>>& basis, const KVec<K>& v) {
    // Row reduce a copy of the basis plus v; rank test over K.
    std::vector<KVec<K>> rows = basis;
    rows.push_back(v);
    int rank = 0;
    for (int c = 0; c < 3 && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            K f = rows[r][c] / rows[rank][c];
            for (int k = 0; k < 3; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
        }
        ++rank;
    }
    if (rank <= static_cast<int>(basis.size())) return false;
    basis.push_back(v);
    return true;
}

// Basis f of N/tN adapted to the flag cut out by the class x: span(f_1..f_k)
// runs through the images of N intersected with the scaled copies of x.
template <class K>
Flag<K> adapted_basis(const LatticeClass<K>& n, const LatticeClass<K>& x) {
    const Lattice<K>& N = n.rep();
    auto s = N.relative_exponents(x.rep());
    const int lo = *std::min_element(s.begin(), s.end()), hi = *std::max_element(s.begin(), s.end());
    Lattice<K> inner = x.rep().shifted(-lo);
    const LaurentMatrix<K> inv = inverse(N.basis());
    std::vector<KVec<K>> f;
    for (int c = 0; c <= hi - lo && f.size() < 3; ++c) {
        Lattice<K> piece = lattice_intersection(N, inner.shifted(-c));
        for (const auto& col : piece.basis().columns()) {
            auto coords = mat_vec(inv, col);
            KVec<K> r{coords[0].coeff(0), coords[1].coeff(0), coords[2].coeff(0)};
            independent_add(f, r);
        }
    }
    for (int i = 0; i < 3 && f.size() < 3; ++i) {
        KVec<K> e{K(0), K(0), K(0)};
        e[i] = K(1);
        independent_add(f, e);
    }
    return {f[0], f[1], f[2]};
}

template <class K>
KVec<K> axpy(const KVec<K>& y, const K& a, const KVec<K>& x) {
    return {y[0] + a * x[0], y[1] + a * x[1], y[2] + a * x[2]};
}

// Random neighbour of n in Schubert cell k (1 = special .. 3 = generic for a line).
template <class K>
LatticeClass<K> cell_sample(const LatticeClass<K>& n, const Flag<K>& f, bool line, int k, std::mt19937_64& rng) {
    std::vector<KVec<K>> residues;
    if (line) {
        KVec<K> v = f[static_cast<size_t>(k - 1)];
        for (int i = 0; i < k - 1; ++i) v = axpy(v, K::random(rng), f[static_cast<size_t>(i)]);
        residues.push_back(v);
    } else {
        // Plane = kernel of a functional that vanishes on f_1..f_{k-1} and is 1 on f_k.
        for (int i = 0; i < 3; ++i) {
            if (i < k - 1) residues.push_back(f[static_cast<size_t>(i)]);
            if (i > k - 1) residues.push_back(axpy(f[static_cast<size_t>(i)], -K::random(rng), f[static_cast<size_t>(k - 1)]));
        }
    }
    return LatticeClass<K>::of(sublattice_from_residues(n.rep(), residues));
}

}  // namespace

template <class K>
bool realizes(const std::vector<LatticeClass<K>>& classes, const GrowthDiagram& d) {
    const int n = d.n();
    if (static_cast<int>(classes.size()) != n) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j < i + n; ++j)
            if (distance(classes[i - 1], classes[(j - 1) % n]) != weight_of(d.at(i, j))) return false;
    return true;
}

template <class K>
RealizedPolygon<K> realize_polygon(const GrowthDiagram& d, std::mt19937_64& rng, int retry_cap) {
    if (retry_cap < 1) throw PreconditionViolated("retry cap must be positive");
    const int n = d.n();
    const LatticeClass<K> base = LatticeClass<K>::of(Lattice<K>());
    for (int attempt = 1; attempt <= retry_cap; ++attempt) {
        std::vector<LatticeClass<K>> cls{base};
        bool ok = n > 0;
        for (int j = 2; ok && j <= n + 1; ++j) {
            const LatticeClass<K>& m = cls.back();
            const bool line = d.word()[static_cast<size_t>(j - 2)] == 1;
            const DominantWeight target = weight_of(d.at(1, j));
            const Flag<K> f = adapted_basis(m, base);
            int cell = 0;
            std::optional<LatticeClass<K>> cand;
            for (int s = 0; s < 3 && !cand; ++s) {
                int k = line ? 3 - s : 1 + s;
                LatticeClass<K> y = cell_sample(m, f, line, k, rng);
                if (distance(base, y) == target) cell = k, cand = y;
            }
            if (!cand) {
                ok = false;
                break;
            }
            bool placed = false;
            for (int tries = 0; tries < 8 && !placed; ++tries) {
                if (tries > 0) cand = cell_sample(m, f, line, cell, rng);
                bool good = true;
                for (int i = 2; good && i < j; ++i)
                    good = distance(cls[static_cast<size_t>(i - 1)], *cand) == weight_of(d.at(i, j));
                if (good) {
                    cls.push_back(*cand);
                    placed = true;
                }
            }
            ok = placed;
        }
        if (!ok || cls.back() != base) continue;
        cls.pop_back();
        if (!realizes(cls, d)) continue;
        return {cls, d, attempt};
    }
    throw RealizationFailed("no generic polygon of type " + word_str(d.word()) + " after " +
                            std::to_string(retry_cap) + " attempts");
}

template <class K>
bool cross_validate(const RealizedPolygon<K>& p) {
    const Diskoid dk = diskoid_from_diagram(p.diagram);
    const VertexSet<K> hull = conv(VertexSet<K>(p.classes.begin(), p.classes.end()));
    const InducedComplex<K> ic = induced_complex(hull);
    const SimplicialComplex2 a = dk.complex();
    const SimplicialComplex2& b = ic.complex;
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size() ||
        a.triangles.size() != b.triangles.size())
        return false;

    std::vector<int> to(static_cast<size_t>(a.vertex_count), -1), from(static_cast<size_t>(b.vertex_count), -1);
    for (size_t k = 0; k < p.classes.size(); ++k) {
        int x = dk.boundary[k];
        int y = static_cast<int>(std::find(ic.vertices.begin(), ic.vertices.end(), p.classes[k]) - ic.vertices.begin());
        if ((to[x] >= 0 && to[x] != y) || (from[y] >= 0 && from[y] != x)) return false;
        to[x] = y;
        from[y] = x;
    }
    auto has = [](const SimplicialComplex2& c, int u, int v) {
        return c.edges.count({std::min(u, v), std::max(u, v)}) > 0;
    };
    std::vector<int> interior = dk.interior_vertices();
    // Backtrack over interior vertices, keeping adjacency among mapped vertices.
    std::function<bool(size_t)> place = [&](size_t k) -> bool {
        if (k == interior.size()) {
            for (auto t : a.triangles) {
                std::array<int, 3> m{to[t[0]], to[t[1]], to[t[2]]};
                std::sort(m.begin(), m.end());
                if (!b.triangles.count(m)) return false;
            }
            for (auto [u, v] : a.edges)
                if (!has(b, to[u], to[v])) return false;
            return true;
        }
        int x = interior[k];
        for (int y = 0; y < b.vertex_count; ++y) {
            if (from[y] >= 0) continue;
            bool fits = true;
            for (int z = 0; z < a.vertex_count && fits; ++z)
                if (to[z] >= 0) fits = has(a, x, z) == has(b, y, to[z]);
            if (!fits) continue;
            to[x] = y;
            from[y] = x;
            if (place(k + 1)) return true;
            to[x] = -1;
            from[y] = -1;
        }
        return false;
    };
    if (!place(0)) return false;
    for (auto [u, v] : dk.edges)
        if (distance(ic.vertices[to[u]], ic.vertices[to[v]]) != DominantWeight::omega1()) return false;
    return true;
}

template <class K>
bool cross_validate(const GrowthDiagram& d, std::mt19937_64& rng, int retry_cap) {
    return cross_validate(realize_polygon<K>(d, rng, retry_cap));
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 of the seed offset by the index
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

#define SL3_INSTANTIATE(K)                                                                           \
    template bool realizes(const std::vector<LatticeClass<K>>&, const GrowthDiagram&);               \
    template RealizedPolygon<K> realize_polygon(const GrowthDiagram&, std::mt19937_64&, int);        \
    template bool cross_validate(const RealizedPolygon<K>&);                                         \
    template bool cross_validate<K>(const GrowthDiagram&, std::mt19937_64&, int);

SL3_INSTANTIATE(Rational)
SL3_INSTANTIATE(Fp)

}  // namespace sl3
