#include <random>

#include "doctest.h"
#include "sl3/errors.hpp"
#include "sl3/webs.hpp"
#include "web_gen.hpp"

using namespace sl3;

namespace {

// Wheel with rim 0..n-1 and hub n; rim edges alternate direction.
Diskoid wheel(int n) {
    Diskoid d;
    d.vertex_count = n + 1;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        d.triangles.push_back({i, j, n});
        d.boundary.push_back(i);
        if (i % 2 == 0) {
            d.edges.emplace_back(i, j);
            d.edges.emplace_back(n, i);
        } else {
            d.edges.emplace_back(j, i);
            d.edges.emplace_back(i, n);
        }
    }
    return d;
}

Diskoid triangle() {
    Diskoid d;
    d.vertex_count = 3;
    d.triangles = {{0, 1, 2}};
    d.edges = {{0, 1}, {1, 2}, {2, 0}};
    d.boundary = {0, 1, 2};
    return d;
}

Web theta() {
    Web w(0);
    int u = w.add_vertex(), v = w.add_vertex();
    for (int i = 0; i < 3; ++i) w.add_edge(u, v);
    // Planarity needs the opposite cyclic order at the sink.
    auto parts = w;
    std::vector<std::vector<int>> rot = {w.rotation(0), {5, 3, 1}};
    std::vector<int> hv, ht;
    std::vector<char> ho;
    for (int h = 0; h < 6; ++h) {
        hv.push_back(w.he_vertex(h));
        ht.push_back(w.he_twin(h));
        ho.push_back(w.he_out(h));
    }
    return Web::from_parts(0, rot, hv, ht, ho, 0);
}

int euler_defect(const Web& w) {
    int v = w.vertex_count() - w.boundary_count() + (w.boundary_count() > 0 ? 1 : 0);
    int f = static_cast<int>(w.faces().size());
    return v - w.edge_count() + f - 2 * w.component_count();
}

}  // namespace

TEST_CASE("triangle dual") {
    Diskoid d = triangle();
    CHECK(d.boundary_type() == TypeWord{1, 1, 1});
    CHECK(is_cat0(d));
    Web w = dualize(d);
    CHECK(w.boundary_type() == TypeWord{1, 1, 1});
    CHECK(w.interior_vertex_count() == 1);
    CHECK(is_nonelliptic(w));
    CHECK(euler_defect(w) == 0);
    CHECK(iso(rotate(w, 3), w));
    CHECK(iso(rotate(w, 1), w));
}

TEST_CASE("wheel duals") {
    Diskoid oct = wheel(8);
    CHECK(oct.boundary_type() == TypeWord{1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(is_cat0(oct));
    Web w = dualize(oct);
    CHECK(w.interior_vertex_count() == 8);
    CHECK(w.edge_count() == 16);
    int internal = 0;
    for (auto& f : w.faces())
        if (!f.boundary) {
            ++internal;
            CHECK(f.darts.size() == 8);
        }
    CHECK(internal == 1);
    CHECK(is_nonelliptic(w));
    CHECK(euler_defect(w) == 0);
    CHECK(iso(rotate(w, 8), w));
    CHECK(iso(rotate(w, 2), w));
    CHECK_FALSE(iso(rotate(w, 1), w));  // boundary type shifts

    CHECK(is_cat0(wheel(6)));
    CHECK(is_nonelliptic(dualize(wheel(6))));
    CHECK_FALSE(is_cat0(wheel(4)));
    Web sq = dualize(wheel(4));
    CHECK_FALSE(is_nonelliptic(sq));
    WebCombination r = reduce(sq);
    CHECK(r.terms().size() == 2);
    for (auto& [k, t] : r.terms()) {
        CHECK(t.first == 1);
        CHECK(t.second.interior_vertex_count() == 0);
        CHECK(t.second.boundary_type() == TypeWord{1, 2, 1, 2});
    }
}

TEST_CASE("malformed diskoids") {
    Diskoid d = triangle();
    d.edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(dualize(d), MalformedDiskoid);
    d = triangle();
    d.edges = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(dualize(d), MalformedDiskoid);  // source and sink mixed
    d = wheel(6);
    d.boundary = {0, 2, 3, 4, 5};
    CHECK_THROWS_AS(d.boundary_type(), DomainError);
}

TEST_CASE("small evaluations") {
    Web circle(0);
    circle.add_loops(1);
    WebCombination c = reduce(circle);
    REQUIRE(c.terms().size() == 1);
    CHECK(c.terms().begin()->second.first == 3);
    CHECK(c.terms().begin()->second.second.vertex_count() == 0);

    Web th = theta();
    CHECK(euler_defect(th) == 0);
    WebCombination t = reduce(th);
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms().begin()->second.first == -6);

    Web bs = wg::bigon_strand();
    CHECK(euler_defect(bs) == 0);
    CHECK(bs.boundary_type() == TypeWord{1, 2});
    WebCombination b = reduce(bs);
    WebCombination expect;
    expect.add(-2, wg::strand(true));
    CHECK(b == expect);
    CHECK_FALSE(b == reduce(wg::strand(true)));
}

TEST_CASE("reduction is idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Web w = wg::random_web(rng, 10, 6, false);
        WebCombination r = reduce(w);
        for (auto& [k, t] : r.terms()) {
            CHECK(is_nonelliptic(t.second));
            WebCombination again = reduce(t.second);
            REQUIRE(again.terms().size() == 1);
            CHECK(again.terms().begin()->first == k);
            CHECK(again.terms().begin()->second.first == 1);
        }
    }
}

TEST_CASE("random webs are planar and rotate correctly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Web w = wg::random_web(rng, 12, 6, trial % 2 == 0);
        w.validate();
        CHECK(euler_defect(w) == 0);
        int nb = w.boundary_count();
        CHECK(iso(rotate(w, nb), w));
        if (nb > 0) {
            Web r = rotate(w, 1);
            TypeWord t = w.boundary_type(), tr = r.boundary_type();
            for (int i = 0; i < nb; ++i) CHECK(tr[i] == t[(i + 1) % nb]);
            CHECK(iso(rotate(r, nb - 1), w));
        }
        CHECK(iso(w.canonical(), w));
        CHECK(w.canonical().key() == w.key());
    }
}

TEST_CASE("rewrite order does not matter") {
    std::mt19937_64 rng(2024);
    int elliptic = 0;
    while (elliptic < 50) {
        Web w = wg::random_web(rng, 12, 6, false);
        if (!wg::elliptic(w)) continue;
        ++elliptic;
        std::mt19937_64 order(static_cast<unsigned>(elliptic));
        CHECK(reduce(w) == reduce_random(w, order));
    }
}

TEST_CASE("closed webs evaluate to colouring counts") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        Web w = wg::random_web(rng, 10, 6, true);
        CHECK(w.boundary_count() == 0);
        WebCombination r = reduce(w);
        long long expect = wg::tait_colourings(w);
        if (w.interior_vertex_count() / 2 % 2 == 1) expect = -expect;
        if (expect == 0) {
            CHECK(r.empty());
            continue;
        }
        REQUIRE(r.terms().size() == 1);
        CHECK(r.terms().begin()->second.second.vertex_count() == 0);
        CHECK(r.terms().begin()->second.first == expect);
    }
}
