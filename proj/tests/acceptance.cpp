// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#define DOCTEST_CONFIG_DISABLE

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "figures.hpp"
#include "fixtures.hpp"
#include "sl3/errors.hpp"
#include "sl3/synthesis.hpp"
#include "web_gen.hpp"

using namespace sl3;
using fx::tp;
using Q = Rational;
using W = DominantWeight;

namespace {

struct Check {
    int failures = 0;
    std::string first;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<TypeWord> words_of_length(int len) {
    std::vector<TypeWord> out;
    for (int mask = 0; mask < (1 << len); ++mask) {
        TypeWord w;
        for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 2 : 1);
        out.push_back(w);
    }
    return out;
}

std::vector<TypeWord> words_up_to(int n) {
    std::vector<TypeWord> out;
    for (int len = 1; len <= n; ++len)
        for (auto& w : words_of_length(len)) out.push_back(w);
    return out;
}

GrowthDiagram diagram(const std::vector<fig::Row>& rows) { return GrowthDiagram::complete_from_row(rows[0]); }

LatticeClass<Q> cls(std::vector<Vec3<Q>> g) { return LatticeClass<Q>::from_generators(g); }

// Diagrams of all words up to length 8 with their webs, shared by 2 to 4.
struct Sweep {
    struct Entry {
        GrowthDiagram d;
        Diskoid disk;
        Web web;
    };
    std::map<TypeWord, std::vector<Entry>> by_word;
    double seconds = 0;
};

Sweep sweep_all(int n) {
    Sweep s;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& w : words_up_to(n)) {
        auto& v = s.by_word[w];
        for (auto& d : enumerate_diagrams(w)) {
            Diskoid disk = diskoid_from_diagram(d);
            Web web = dualize(disk);
            v.push_back({d, disk, web});
        }
    }
    s.seconds = since(t0);
    return s;
}

Check octagon_golden() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    auto oct = fx::octagon<Q>();
    auto printed = fig::octagon();
    GrowthDiagram g = diagram(printed);
    // Distance matrix against every printed row.
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j <= 8; ++j)
            c.expect(distance(oct[static_cast<size_t>(i)], oct[static_cast<size_t>((i + j) % 8)]) ==
                         weight_of(printed[static_cast<size_t>(i)][static_cast<size_t>(j)]),
                     "distance matrix entry");
    for (int i = 0; i < 9; ++i) c.expect(g.row(i) == printed[static_cast<size_t>(i)], "completed row");
    c.expect(realizes(oct, g), "realizes");

    VertexSet<Q> p(oct.begin(), oct.end());
    auto z = Laurent<Q>();
    auto center = cls({{tp(-1), z, z}, {z, tp(-1), z}, {z, z, tp(0)}});
    VertexSet<Q> mn = p, mx = p, cv = p;
    mn.insert(cls({{tp(-1), z, z}, {z, tp(-1), z}, {tp(-2), z, tp(-1)}}));
    mn.insert(cls({{tp(-2), tp(-2), z}, {z, tp(-1), z}, {z, z, tp(0)}}));
    mn.insert(center);
    mx.insert(cls({{tp(0), z, z}, {z, tp(-1), z}, {z, z, tp(0)}}));
    mx.insert(cls({{tp(-2), z, z}, {z, tp(-1), z}, {z, tp(-2), tp(-1)}}));
    mx.insert(center);
    cv.insert(center);
    auto got = conv(p);
    c.expect(minconv(p) == mn, "minconv");
    c.expect(maxconv(p) == mx, "maxconv");
    c.expect(got == cv, "conv");

    // Wheel: hub adjacent to all eight, eight rim edges, eight triangles through the hub.
    auto cx = induced_complex(got);
    c.expect(cx.vertices.size() == 9 && cx.complex.edges.size() == 16 && cx.complex.triangles.size() == 8,
             "complex size");
    int hub = -1;
    for (size_t v = 0; v < cx.vertices.size(); ++v)
        if (cx.vertices[v] == center) hub = static_cast<int>(v);
    for (const auto& t : cx.complex.triangles)
        c.expect(std::find(t.begin(), t.end(), hub) != t.end(), "triangle misses hub");
    for (int i = 0; i < 8; ++i) {
        auto a = std::find(cx.vertices.begin(), cx.vertices.end(), oct[static_cast<size_t>(i)]) - cx.vertices.begin();
        auto b = std::find(cx.vertices.begin(), cx.vertices.end(), oct[static_cast<size_t>((i + 1) % 8)]) -
                 cx.vertices.begin();
        c.expect(cx.complex.edges.count({static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))}) == 1,
                 "rim edge");
    }
    double secs = since(t0);
    c.expect(secs < 1.0, "runtime");
    c.note = std::to_string(secs) + " s";
    return c;
}

Check counting(const Sweep& s) {
    Check c;
    int words = 0;
    std::size_t total = 0;
    for (const auto& [w, entries] : s.by_word) {
        ++words;
        std::set<std::string> keys;
        for (const auto& e : entries)
            if (is_nonelliptic(e.web)) keys.insert(e.web.key());
        c.expect(entries.size() == dim_inv(w), "count vs dim_inv for " + word_str(w));
        c.expect(keys.size() == entries.size(), "distinct webs for " + word_str(w));
        total += entries.size();
    }
    c.expect(words == 510, "word count");
    c.expect(s.seconds < 60, "runtime");
    c.note = std::to_string(words) + " words, " + std::to_string(total) + " diagrams, " + std::to_string(s.seconds) +
             " s";
    return c;
}

Check basis(const Sweep& s) {
    Check c;
    for (const auto& [w, entries] : s.by_word) {
        std::set<std::string> keys;
        for (const auto& e : entries) {
            c.expect(is_cat0(e.disk), "CAT(0) for " + word_str(w));
            c.expect(is_nonelliptic(e.web), "non-elliptic for " + word_str(w));
            c.expect(e.disk.boundary_type() == w && e.web.boundary_type() == w, "boundary type for " + word_str(w));
            c.expect(keys.insert(e.web.key()).second, "isomorphic webs for " + word_str(w));
        }
    }
    return c;
}

Check rotation(const Sweep& s) {
    Check c;
    int count = 0;
    for (const auto& [w, entries] : s.by_word)
        for (const auto& e : entries) {
            GrowthDiagram r = e.d.rotated(1);
            // The rotated diagram is the one promotion produces from the first row.
            c.expect(r.first_row() == promotion(e.d.first_row()), "promotion for " + word_str(w));
            c.expect(iso(dualize(diskoid_from_diagram(r)), rotate(e.web, 1)), "rotation for " + word_str(w));
            ++count;
        }
    c.note = std::to_string(count) + " diagrams";
    return c;
}

Check figures() {
    Check c;
    GrowthDiagram u = remove_uturn(diagram(fig::uturn()), 1);
    auto ue = fig::uturn_removed();
    c.expect(u.n() == 6, "U-turn size");
    for (size_t i = 0; i < ue.size() && u.n() == 6; ++i) c.expect(u.row(static_cast<int>(i)) == ue[i], "U-turn row");

    GrowthDiagram s = remove_sharp(diagram(fig::sharp()), 1);
    auto se = fig::sharp_removed();
    c.expect(s.n() == 12, "sharp size");
    for (size_t i = 0; i < se.size() && s.n() == 12; ++i) c.expect(s.row(static_cast<int>(i)) == se[i], "sharp row");

    GrowthDiagram e = elbow_move(diagram(fig::elbow()), 1);
    auto ee = fig::elbow_moved();
    // Three printed cells break the vertical-strip rule for the printed first
    // row; they are checked to be impossible and skipped, everything else must match.
    const auto& w = e.word();
    std::set<std::pair<int, int>> bad = {{1, 12}, {2, 8}, {2, 11}};
    c.expect(size(ee[1][13]) - size(ee[1][12]) != w[0], "printed cell (2,13) is consistent");
    c.expect(!is_vertical_strip(ee[2][7], ee[2][8]), "printed cell (3,9) is consistent");
    c.expect(size(ee[2][11]) - size(ee[2][10]) != w[12], "printed cell (3,12) is consistent");
    int compared = 0;
    for (int i = 0; i < 3; ++i)
        for (size_t j = 0; j < ee[static_cast<size_t>(i)].size(); ++j) {
            if (bad.count({i, static_cast<int>(j)})) continue;
            c.expect(e.row(i)[j] == ee[static_cast<size_t>(i)][j], "elbow entry");
            ++compared;
        }
    c.note = "elbow: " + std::to_string(compared) + " entries equal, 3 printed entries inconsistent";
    return c;
}

Check geometric() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    int components = 0, max_attempts = 0;
    long total_attempts = 0;
    std::uint64_t index = 0;
    auto run = [&](const GrowthDiagram& d, const std::string& label) {
        std::mt19937_64 rng(substream_seed(2024, index++));
        try {
            auto p = realize_polygon<Fp>(d, rng, 1000);
            ++components;
            total_attempts += p.attempts;
            max_attempts = std::max(max_attempts, p.attempts);
            c.expect(realizes(p.classes, d), "realization of " + label);
            c.expect(cross_validate(p), "cross validation of " + label);
        } catch (const DomainError& e) {
            c.expect(false, "realization of " + label + ": " + e.what());
        }
    };
    for (const auto& w : words_up_to(6)) {
        auto ds = enumerate_diagrams(w);
        for (size_t k = 0; k < ds.size(); ++k) run(ds[k], word_str(w) + "#" + std::to_string(k + 1));
    }
    int small = components;
    run(diagram(fig::octagon()), "octagon");
    std::mt19937_64 pick(substream_seed(2024, 1u << 20));
    auto words8 = words_of_length(8);
    int seeded = 0;
    while (seeded < 4) {
        TypeWord w = words8[pick() % words8.size()];
        auto ds = enumerate_diagrams(w);
        if (ds.empty()) continue;
        run(ds[pick() % ds.size()], word_str(w));
        ++seeded;
    }
    double secs = since(t0);
    c.expect(secs < 300, "runtime");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d components (n<=6: %d, n=8: %d), mean attempts %.2f, max %d, %.1f s",
                  components, small, components - small, components ? double(total_attempts) / components : 0.0,
                  max_attempts, secs);
    c.note = buf;
    return c;
}

template <class K>
std::vector<LatticeClass<K>> random_path(std::mt19937_64& rng, int length) {
    std::vector<LatticeClass<K>> p{fx::random_class<K>(rng, -1, 1)};
    std::bernoulli_distribution coin(0.5);
    while (static_cast<int>(p.size()) < length)
        p.push_back(random_step(p.back(), coin(rng) ? W::omega1() : W::omega2(), rng));
    return p;
}

Check hulls() {
    Check c;
    std::mt19937_64 rng(substream_seed(7, 7));
    int straight = 0, mixed = 0, short_pairs = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // Alternate generic pairs with walks of a single step type, which are often straight.
        LatticeClass<Fp> x, y;
        if (trial % 2 == 0) {
            x = fx::random_class<Fp>(rng);
            y = fx::random_class<Fp>(rng);
        } else {
            x = fx::random_class<Fp>(rng, -1, 1);
            y = x;
            W step = trial % 4 == 1 ? W::omega1() : W::omega2();
            for (int k = 0; k < 1 + trial % 5; ++k) y = random_step(y, step, rng);
        }
        W d = distance(x, y);
        auto mn = minconv_pair(x, y), mx = maxconv_pair(x, y), cv = conv_pair(x, y);
        c.expect(static_cast<int>(mn.size()) == steps(d) + 1, "minconv_pair size");
        c.expect(static_cast<int>(mx.size()) == steps(d) + 1, "maxconv_pair size");
        bool trivial = cv == VertexSet<Fp>{x, y};
        bool both = d.a() > 0 && d.b() > 0;
        // A pair at most one step apart has conv {x, y} whatever its type.
        if (steps(d) <= 1) {
            ++short_pairs;
            c.expect(trivial, "conv of a short pair");
        } else {
            (both ? mixed : straight)++;
            c.expect(trivial == both, "conv triviality");
        }

        auto path = random_path<Fp>(rng, 2 + trial % 5);
        VertexSet<Fp> s(path.begin(), path.end());
        auto pmn = minconv(s), pmx = maxconv(s);
        for (const auto& a : pmn)
            for (const auto& b : pmn) c.expect(pmn.count(meet(a, b)) == 1, "minconv meet closure");
        for (const auto& a : pmx)
            for (const auto& b : pmx) c.expect(pmx.count(join(a, b)) == 1, "maxconv join closure");
        c.expect(path_hull_fastpath(path) == conv(s), "fastpath");
    }
    c.note = std::to_string(mixed) + " mixed, " + std::to_string(straight) + " straight, " +
             std::to_string(short_pairs) + " adjacent or equal pairs";
    return c;
}

bool integer_multiple_of_empty(const WebCombination& r) {
    if (r.empty()) return true;
    if (r.terms().size() != 1) return false;
    const Web& w = r.terms().begin()->second.second;
    return w.vertex_count() == 0 && w.loops() == 0;
}

Check reduction() {
    Check c;
    Web circle(0);
    circle.add_loops(1);
    WebCombination three;
    three.add(3, Web(0));
    c.expect(reduce(circle) == three, "circle");
    WebCombination strand2;
    strand2.add(-2, wg::strand(true));
    c.expect(reduce(wg::bigon_strand()) == strand2, "bigon");

    std::mt19937_64 rng(substream_seed(8, 0));
    for (int trial = 0; trial < 50; ++trial) {
        Web w = wg::random_web(rng, 10, 6, false);
        WebCombination r = reduce(w);
        for (const auto& [k, t] : r.terms()) {
            WebCombination once;
            once.add(1, t.second);
            c.expect(reduce(t.second) == once, "idempotence");
        }
    }
    int elliptic = 0;
    while (elliptic < 50) {
        Web w = wg::random_web(rng, 12, 6, false);
        if (!wg::elliptic(w)) continue;
        std::mt19937_64 order(substream_seed(9, static_cast<std::uint64_t>(elliptic++)));
        c.expect(reduce(w) == reduce_random(w, order), "rewrite order");
    }
    for (int trial = 0; trial < 50; ++trial) {
        Web w = wg::random_web(rng, 10, 6, true);
        c.expect(integer_multiple_of_empty(reduce(w)), "closed web");
    }
    return c;
}

Check metric() {
    Check c;
    std::mt19937_64 rng(substream_seed(10, 0));
    for (int trial = 0; trial < 500; ++trial) {
        auto mx = fx::random_nonsingular<Fp>(rng), my = fx::random_nonsingular<Fp>(rng);
        auto x = LatticeClass<Fp>::of(Lattice<Fp>::from_matrix(mx));
        auto y = LatticeClass<Fp>::of(Lattice<Fp>::from_matrix(my));
        c.expect(distance(y, x) == dual_weight(distance(x, y)), "dual distance");

        auto e = smith_exponents(mx);
        auto u = fx::random_unimodular<Fp>(rng), v = fx::random_unimodular<Fp>(rng);
        c.expect(smith_exponents(u * mx * v) == e, "Smith exponents");

        auto g = mx.columns();
        std::shuffle(g.begin(), g.end(), rng);
        c.expect(LatticeClass<Fp>::from_generators(g) == x, "generator shuffle");
        // Right multiplication by a unit changes generators, not the lattice.
        c.expect(LatticeClass<Fp>::of(Lattice<Fp>::from_matrix(mx * v)) == x, "unit change of basis");
    }
    return c;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int n, const Check& c) {
        std::printf("criterion %d: %s", n, c.failures ? "FAIL" : "PASS");
        if (c.failures) std::printf(" (%d failures, first: %s)", c.failures, c.first.c_str());
        if (!c.note.empty()) std::printf(" [%s]", c.note.c_str());
        std::printf("\n");
        std::fflush(stdout);
        failed += c.failures ? 1 : 0;
    };
    report(1, octagon_golden());
    Sweep s = sweep_all(8);
    report(2, counting(s));
    report(3, basis(s));
    report(4, rotation(s));
    report(5, figures());
    report(6, geometric());
    report(7, hulls());
    report(8, reduction());
    report(9, metric());
    std::printf("%d of 9 criteria failed\n", failed);
    return failed ? 1 : 0;
}
