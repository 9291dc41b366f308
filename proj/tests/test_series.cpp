#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sl3/errors.hpp"

using namespace sl3;
using fx::tp;
using Q = Rational;
using L = Laurent<Q>;
using M = LaurentMatrix<Q>;

namespace {

// Membership of b in the O-span of the columns of a square G, via Cramer's rule.
template <class K>
bool in_span(const LaurentMatrix<K>& g, const std::vector<Laurent<K>>& b) {
    Laurent<K> det = determinant(g);
    for (int i = 0; i < 3; ++i) {
        LaurentMatrix<K> gi = g;
        for (int r = 0; r < 3; ++r) gi(r, i) = b[r];
        if (determinant(gi).val() < det.val()) return false;
    }
    return true;
}

template <class K>
bool same_module(const LaurentMatrix<K>& a, const LaurentMatrix<K>& b) {
    for (int j = 0; j < 3; ++j)
        if (!in_span(a, b.column(j)) || !in_span(b, a.column(j))) return false;
    return true;
}

M cols(std::vector<std::vector<L>> c) { return M::from_columns(c); }

}  // namespace

TEST_CASE("valuation") {
    CHECK(val(tp(-2) + tp(0)) == -2);
    CHECK(val(L()) == kInfiniteVal);
    CHECK(val(tp(3, 5)) == 3);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        L f = fx::random_laurent<Q>(rng, -3, 3, 3), g = fx::random_laurent<Q>(rng, -3, 3, 3);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(val(f * g) == val(f) + val(g));
        CHECK(val(f + g) >= std::min(val(f), val(g)));
        if (val(f) != val(g)) CHECK(val(f + g) == std::min(val(f), val(g)));
    }
}

TEST_CASE("text form round trip") {
    L f = tp(-2) + L::monomial(Q::parse("3/2"), 0);
    CHECK(f.str() == "1*t^-2 + 3/2*t^0");
    CHECK(L::parse(f.str()) == f);
    CHECK(L::parse("0").is_zero());
    CHECK(L::parse("-1*t^3 + 2").str() == "2*t^0 + -1*t^3");
}

TEST_CASE("series inverse") {
    L u = tp(0, 2) + tp(1, 3) + tp(4, -1);
    L inv = series_inverse(u, 7);
    CHECK((u * inv).truncated(7) == tp(0));
}

TEST_CASE("smith exponents examples") {
    CHECK(smith_exponents(M::diagonal({-2, -1, 0})) == std::vector<int>{0, -1, -2});
    CHECK(smith_exponents(M::identity(3)) == std::vector<int>{0, 0, 0});
    M l3 = M::diagonal({-2, -1, 0});
    CHECK(smith_exponents(inverse(M::identity(3)) * l3) == std::vector<int>{0, -1, -2});
    M singular = cols({{tp(0), tp(1), L()}, {tp(0), tp(1), L()}, {L(), L(), tp(0)}});
    CHECK_THROWS_AS(smith_exponents(singular), SingularMatrix);
}

TEST_CASE("smith exponents: unimodular invariance and determinant valuation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        M m = fx::random_nonsingular<Q>(rng);
        auto s = smith_exponents(m);
        CHECK(std::is_sorted(s.rbegin(), s.rend()));
        M u = fx::random_unimodular<Q>(rng), v = fx::random_unimodular<Q>(rng);
        CHECK(smith_exponents(u * m * v) == s);
        CHECK(determinant(m).val() == s[0] + s[1] + s[2]);
    }
}

TEST_CASE("smith exponents over Fp") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = fx::random_nonsingular<Fp>(rng);
        auto u = fx::random_unimodular<Fp>(rng);
        CHECK(smith_exponents(u * m) == smith_exponents(m));
    }
}

TEST_CASE("hermite examples") {
    CHECK(hermite_over_O(M::identity(3)) == M::identity(3));
    M g = cols({{tp(0), tp(0), L()}, {L(), tp(1), L()}, {L(), L(), tp(1)}});
    M h = hermite_over_O(g);
    CHECK(h == g);
    CHECK(same_module(h, g));
    M four = cols({{tp(0), L(), L()}, {tp(0), tp(0), L()}, {L(), tp(0), L()}, {L(), L(), tp(0)}});
    CHECK(hermite_over_O(four) == M::identity(3));
    M flat = cols({{tp(0), L(), L()}, {tp(1), L(), L()}, {L(), tp(0), L()}});
    CHECK_THROWS_AS(hermite_over_O(flat), RankDeficient);
}

TEST_CASE("hermite: membership oracle, idempotence, generator order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        M g = fx::random_nonsingular<Q>(rng);
        M h = hermite_over_O(g);
        CHECK(same_module(h, g));
        for (int i = 0; i < 3; ++i) {
            CHECK(h(i, i).terms().size() == 1);
            for (int r = 0; r < i; ++r) CHECK(h(r, i).is_zero());
            for (int r = i + 1; r < 3; ++r) CHECK(h(r, i).max_exp() < h(r, r).val());
        }
        CHECK(hermite_over_O(h) == h);
        auto c = g.columns();
        std::shuffle(c.begin(), c.end(), rng);
        // An extra O-combination of existing generators must not change the module.
        std::vector<L> extra(3);
        for (int i = 0; i < 3; ++i) extra[i] = c[0][i] * (tp(0) + tp(2)) + c[1][i] * tp(1, 3);
        c.push_back(extra);
        CHECK(hermite_over_O(M::from_columns(c)) == h);
    }
}
