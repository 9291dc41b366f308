#pragma once

#include <random>
#include <vector>

#include "doctest.h"
#include "sl3/building.hpp"

namespace fx {

using namespace sl3;

template <class K = Rational>
Laurent<K> tp(int e, long c = 1) {
    return Laurent<K>::monomial(K(c), e);
}

template <class K = Rational>
Vec3<K> vec(Laurent<K> a, Laurent<K> b, Laurent<K> c) {
    return {a, b, c};
}

// The eight lattices of the worked octagon.
template <class K = Rational>
std::vector<Lattice<K>> octagon_lattices() {
    auto z = Laurent<K>();
    auto E = [&](int i, int e) {
        Vec3<K> v{z, z, z};
        v[i] = tp<K>(e);
        return v;
    };
    auto add = [](Vec3<K> a, const Vec3<K>& b) {
        for (int i = 0; i < 3; ++i) a[i] += b[i];
        return a;
    };
    std::vector<std::vector<Vec3<K>>> gens = {
        {E(0, 0), E(1, 0), E(2, 0)},
        {E(0, -1), E(1, 0), E(2, 0)},
        {E(0, -2), E(1, -1), E(2, 0)},
        {E(0, -2), E(1, -2), E(2, 0)},
        {E(0, -1), E(1, -2), E(2, 0)},
        {E(0, -1), E(1, -2), add(E(0, -2), E(2, -1))},
        {E(0, -1), E(1, -1), add(add(E(0, -2), E(1, -2)), E(2, -1))},
        {add(E(0, -1), E(1, -1)), E(1, 0), E(2, 0)},
    };
    std::vector<Lattice<K>> out;
    for (auto& g : gens) out.push_back(Lattice<K>::from_generators(g));
    return out;
}

template <class K = Rational>
std::vector<LatticeClass<K>> octagon() {
    std::vector<LatticeClass<K>> out;
    for (auto& l : octagon_lattices<K>()) out.push_back(LatticeClass<K>::of(l));
    return out;
}

template <class K>
Laurent<K> random_laurent(std::mt19937_64& rng, int lo, int hi, int max_terms = 2) {
    std::uniform_int_distribution<int> e(lo, hi), n(0, max_terms);
    std::vector<typename Laurent<K>::Term> terms;
    int count = n(rng);
    for (int i = 0; i < count; ++i) terms.emplace_back(e(rng), K::random(rng));
    return Laurent<K>::from_terms(terms);
}

// Random 3x3 matrix with nonzero determinant.
template <class K>
LaurentMatrix<K> random_nonsingular(std::mt19937_64& rng, int lo = -2, int hi = 2) {
    for (;;) {
        LaurentMatrix<K> m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = random_laurent<K>(rng, lo, hi);
        if (!determinant(m).is_zero()) return m;
    }
}

template <class K>
LatticeClass<K> random_class(std::mt19937_64& rng, int lo = -2, int hi = 2) {
    return LatticeClass<K>::of(Lattice<K>::from_matrix(random_nonsingular<K>(rng, lo, hi)));
}

// Random element of GL3(O): product of unitriangular factors and a unit diagonal.
template <class K>
LaurentMatrix<K> random_unimodular(std::mt19937_64& rng) {
    LaurentMatrix<K> lo = LaurentMatrix<K>::identity(3), up = LaurentMatrix<K>::identity(3),
                     d = LaurentMatrix<K>::identity(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            lo(i, j) = random_laurent<K>(rng, 0, 2);
            up(j, i) = random_laurent<K>(rng, 0, 2);
        }
        d(i, i) = Laurent<K>(random_nonzero<K>(rng)) + random_laurent<K>(rng, 1, 2);
    }
    return lo * d * up;
}

}  // namespace fx

namespace doctest {
template <class K>
struct StringMaker<sl3::LaurentMatrix<K>> {
    static String convert(const sl3::LaurentMatrix<K>& m) { return ("\n" + m.str()).c_str(); }
};
template <class K>
struct StringMaker<sl3::LatticeClass<K>> {
    static String convert(const sl3::LatticeClass<K>& c) { return ("\n" + c.str()).c_str(); }
};
template <class K>
struct StringMaker<sl3::Lattice<K>> {
    static String convert(const sl3::Lattice<K>& c) { return ("\n" + c.basis().str()).c_str(); }
};
template <>
struct StringMaker<sl3::DominantWeight> {
    static String convert(const sl3::DominantWeight& w) { return w.str().c_str(); }
};
}  // namespace doctest
