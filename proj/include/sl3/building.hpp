#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "sl3/laurent.hpp"

namespace sl3 {

// SL3 dominant weight (mu1 >= mu2 >= mu3 = 0).
struct DominantWeight {
    std::array<int, 3> mu{0, 0, 0};

    static DominantWeight zero() { return {}; }
    static DominantWeight omega1() { return {{1, 0, 0}}; }
    static DominantWeight omega2() { return {{1, 1, 0}}; }
    // Sorts descending and subtracts the last entry.
    static DominantWeight normalize(std::array<int, 3> v);

    int a() const { return mu[0] - mu[1]; }
    int b() const { return mu[1] - mu[2]; }
    std::string str() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
};

DominantWeight dual_weight(const DominantWeight& w);
int steps(const DominantWeight& w);

template <class K>
using Vec3 = std::vector<Laurent<K>>;

// An O-lattice in K^3 stored by its canonical basis.
template <class K>
class Lattice {
public:
    Lattice() : b_(LaurentMatrix<K>::identity(3)) {}
    static Lattice from_generators(const std::vector<Vec3<K>>& vectors);
    static Lattice from_matrix(const LaurentMatrix<K>& generators);
    // Caller guarantees the matrix is already canonical.
    static Lattice from_canonical(LaurentMatrix<K> basis) {
        Lattice l;
        l.b_ = std::move(basis);
        return l;
    }

    const LaurentMatrix<K>& basis() const { return b_; }
    Lattice shifted(int a) const { return from_canonical(b_.shifted(a)); }
    bool contains(const Vec3<K>& v) const;
    bool contains(const Lattice& other) const;
    int det_val() const;
    // Elementary exponents of the other lattice's basis expressed in this basis.
    std::vector<int> relative_exponents(const Lattice& other) const;
    Lattice dual() const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.b_ == b.b_; }
    friend bool operator<(const Lattice& a, const Lattice& b) { return a.b_ < b.b_; }

private:
    LaurentMatrix<K> b_;
};

template <class K>
Lattice<K> lattice_sum(const Lattice<K>& a, const Lattice<K>& b);
template <class K>
Lattice<K> lattice_intersection(const Lattice<K>& a, const Lattice<K>& b);

// A vertex of the building: the representative L with L in O^3 and not in tO^3.
template <class K>
class LatticeClass {
public:
    LatticeClass() = default;
    static LatticeClass of(const Lattice<K>& l);
    static LatticeClass from_generators(const std::vector<Vec3<K>>& vectors) {
        return of(Lattice<K>::from_generators(vectors));
    }

    const Lattice<K>& rep() const { return rep_; }
    const LaurentMatrix<K>& basis() const { return rep_.basis(); }
    std::string str() const { return rep_.basis().str(); }

    friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const LatticeClass& a, const LatticeClass& b) { return !(a == b); }
    friend bool operator<(const LatticeClass& a, const LatticeClass& b) { return a.rep_ < b.rep_; }

private:
    Lattice<K> rep_;
};

template <class K>
LatticeClass<K> class_from_generators(const std::vector<Vec3<K>>& vectors) {
    return LatticeClass<K>::from_generators(vectors);
}

template <class K>
DominantWeight distance(const LatticeClass<K>& x, const LatticeClass<K>& y);
template <class K>
DominantWeight lattice_distance(const Lattice<K>& x, const Lattice<K>& y);
template <class K>
bool adjacent(const LatticeClass<K>& x, const LatticeClass<K>& y);
template <class K>
LatticeClass<K> meet(const LatticeClass<K>& x, const LatticeClass<K>& y);
template <class K>
LatticeClass<K> join(const LatticeClass<K>& x, const LatticeClass<K>& y);
template <class K>
LatticeClass<K> common_neighbor(const LatticeClass<K>& x, const LatticeClass<K>& y, const LatticeClass<K>& z);

// Residue-space helpers: vectors of K^3 and their spans.
template <class K>
using KVec = std::array<K, 3>;

template <class K>
Vec3<K> lift(const LaurentMatrix<K>& basis, const KVec<K>& coords);

// The sublattice Y with tN in Y in N whose image in N/tN is spanned by the given vectors.
template <class K>
Lattice<K> sublattice_from_residues(const Lattice<K>& n, const std::vector<KVec<K>>& residues);

template <class K>
LatticeClass<K> random_step(const LatticeClass<K>& x, const DominantWeight& w, std::mt19937_64& rng);

}  // namespace sl3
