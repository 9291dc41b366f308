#include "sl3/building.hpp"

#include <algorithm>

#include "sl3/errors.hpp"

namespace sl3 {

DominantWeight DominantWeight::normalize(std::array<int, 3> v) {
    std::sort(v.rbegin(), v.rend());
    return {{v[0] - v[2], v[1] - v[2], 0}};
}

std::string DominantWeight::str() const {
    return "(" + std::to_string(mu[0]) + "," + std::to_string(mu[1]) + "," + std::to_string(mu[2]) + ")";
}

DominantWeight dual_weight(const DominantWeight& w) {
    return DominantWeight::normalize({-w.mu[2], -w.mu[1], -w.mu[0]});
}

int steps(const DominantWeight& w) { return w.a() + w.b(); }

template <class K>
Lattice<K> Lattice<K>::from_matrix(const LaurentMatrix<K>& generators) {
    if (generators.rows() != 3) throw std::invalid_argument("lattices live in K^3");
    return from_canonical(hermite_over_O(generators));
}

template <class K>
Lattice<K> Lattice<K>::from_generators(const std::vector<Vec3<K>>& vectors) {
    if (vectors.empty()) throw RankDeficient("no generators");
    return from_matrix(LaurentMatrix<K>::from_columns(vectors));
}

template <class K>
bool Lattice<K>::contains(const Vec3<K>& v) const {
    for (const auto& x : mat_vec(inverse(b_), v))
        if (x.val() < 0) return false;
    return true;
}

template <class K>
bool Lattice<K>::contains(const Lattice& other) const {
    LaurentMatrix<K> c = inverse(b_) * other.b_;
    return c.min_val() >= 0;
}

template <class K>
int Lattice<K>::det_val() const {
    int s = 0;
    for (int i = 0; i < 3; ++i) s += b_(i, i).val();
    return s;
}

template <class K>
std::vector<int> Lattice<K>::relative_exponents(const Lattice& other) const {
    return smith_exponents(inverse(b_) * other.b_);
}

template <class K>
Lattice<K> Lattice<K>::dual() const {
    return from_matrix(inverse(b_).transpose());
}

template <class K>
Lattice<K> lattice_sum(const Lattice<K>& a, const Lattice<K>& b) {
    return Lattice<K>::from_matrix(a.basis().hconcat(b.basis()));
}

template <class K>
Lattice<K> lattice_intersection(const Lattice<K>& a, const Lattice<K>& b) {
    return lattice_sum(a.dual(), b.dual()).dual();
}

template <class K>
LatticeClass<K> LatticeClass<K>::of(const Lattice<K>& l) {
    LatticeClass c;
    c.rep_ = l.shifted(-l.basis().min_val());
    return c;
}

template <class K>
DominantWeight lattice_distance(const Lattice<K>& x, const Lattice<K>& y) {
    auto s = x.relative_exponents(y);
    return DominantWeight::normalize({-s[0], -s[1], -s[2]});
}

template <class K>
DominantWeight distance(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    return lattice_distance(x.rep(), y.rep());
}

template <class K>
bool adjacent(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    auto d = distance(x, y);
    return d == DominantWeight::omega1() || d == DominantWeight::omega2();
}

template <class K>
LatticeClass<K> meet(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    return LatticeClass<K>::of(lattice_intersection(x.rep(), y.rep()));
}

template <class K>
LatticeClass<K> join(const LatticeClass<K>& x, const LatticeClass<K>& y) {
    return LatticeClass<K>::of(lattice_sum(x.rep(), y.rep()));
}

template <class K>
LatticeClass<K> common_neighbor(const LatticeClass<K>& x, const LatticeClass<K>& y, const LatticeClass<K>& z) {
    const auto w1 = DominantWeight::omega1(), w2 = DominantWeight::omega2();
    auto dxy = distance(x, y), dyz = distance(y, z);
    if (!((dxy == w1 && dyz == w2) || (dxy == w2 && dyz == w1)))
        throw PreconditionViolated("common_neighbor needs steps (w1,w2) or (w2,w1), got " + dxy.str() + ", " +
                                   dyz.str());
    if (distance(x, z) != DominantWeight{{2, 1, 0}})
        throw PreconditionViolated("x and z must be distinct (no U-turn)");
    // In a common apartment x = (0,0,0), z = (2,1,0) after rescaling z to the
    // smallest representative containing x; the two remaining vertices of the
    // parallelogram are t^-1 M meet N and M + tN, one of which is y.
    const Lattice<K>& m = x.rep();
    const int k = -m.relative_exponents(z.rep()).front();
    const Lattice<K> n = z.rep().shifted(k);
    LatticeClass<K> a = LatticeClass<K>::of(lattice_intersection(m.shifted(-1), n));
    LatticeClass<K> b = LatticeClass<K>::of(lattice_sum(m, n.shifted(1)));
    LatticeClass<K> result = (a == y) ? b : a;
    if (result == y || !adjacent(result, x) || !adjacent(result, y) || !adjacent(result, z))
        throw std::logic_error("common_neighbor: parallelogram construction failed");
    return result;
}

template <class K>
Vec3<K> lift(const LaurentMatrix<K>& basis, const KVec<K>& coords) {
    Vec3<K> v(3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) v[i] += basis(i, j) * Laurent<K>(coords[j]);
    return v;
}

template <class K>
Lattice<K> sublattice_from_residues(const Lattice<K>& n, const std::vector<KVec<K>>& residues) {
    std::vector<Vec3<K>> gens;
    for (const auto& r : residues) gens.push_back(lift(n.basis(), r));
    for (int j = 0; j < 3; ++j) {
        Vec3<K> c = n.basis().column(j);
        for (auto& x : c) x = x.shift(1);
        gens.push_back(c);
    }
    return Lattice<K>::from_generators(gens);
}

template <class K>
static KVec<K> random_nonzero_vec(std::mt19937_64& rng) {
    for (;;) {
        KVec<K> v{K::random(rng), K::random(rng), K::random(rng)};
        if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero()) return v;
    }
}

template <class K>
LatticeClass<K> random_step(const LatticeClass<K>& x, const DominantWeight& w, std::mt19937_64& rng) {
    const Lattice<K>& n = x.rep();
    std::vector<KVec<K>> residues;
    if (w == DominantWeight::omega1()) {
        // A line of N/tN lifts to an omega1-neighbour.
        residues.push_back(random_nonzero_vec<K>(rng));
    } else if (w == DominantWeight::omega2()) {
        // A plane, given as the kernel of a random nonzero functional.
        KVec<K> f = random_nonzero_vec<K>(rng);
        int p = f[0].is_zero() ? (f[1].is_zero() ? 2 : 1) : 0;
        for (int j = 0; j < 3; ++j) {
            if (j == p) continue;
            KVec<K> v{K(0), K(0), K(0)};
            v[j] = K(1);
            v[p] = -(f[j] / f[p]);
            residues.push_back(v);
        }
    } else {
        throw PreconditionViolated("random_step needs w1 or w2");
    }
    return LatticeClass<K>::of(sublattice_from_residues(n, residues));
}

#define SL3_INSTANTIATE(K)                                                                                  \
    template class Lattice<K>;                                                                              \
    template class LatticeClass<K>;                                                                         \
    template Lattice<K> lattice_sum(const Lattice<K>&, const Lattice<K>&);                                  \
    template Lattice<K> lattice_intersection(const Lattice<K>&, const Lattice<K>&);                         \
    template DominantWeight distance(const LatticeClass<K>&, const LatticeClass<K>&);                       \
    template DominantWeight lattice_distance(const Lattice<K>&, const Lattice<K>&);                         \
    template bool adjacent(const LatticeClass<K>&, const LatticeClass<K>&);                                 \
    template LatticeClass<K> meet(const LatticeClass<K>&, const LatticeClass<K>&);                          \
    template LatticeClass<K> join(const LatticeClass<K>&, const LatticeClass<K>&);                          \
    template LatticeClass<K> common_neighbor(const LatticeClass<K>&, const LatticeClass<K>&,                \
                                             const LatticeClass<K>&);                                       \
    template Vec3<K> lift(const LaurentMatrix<K>&, const KVec<K>&);                                         \
    template Lattice<K> sublattice_from_residues(const Lattice<K>&, const std::vector<KVec<K>>&);           \
    template LatticeClass<K> random_step(const LatticeClass<K>&, const DominantWeight&, std::mt19937_64&);

SL3_INSTANTIATE(Rational)
SL3_INSTANTIATE(Fp)

}  // namespace sl3
