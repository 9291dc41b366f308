#include "sl3/io.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "sl3/errors.hpp"

namespace sl3 {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const Json::exception&) {
        throw ParseError(std::string("bad value for ") + what);
    }
}

std::string coeff_text(const Rational& c) {
    return c.value().get_num().get_str() + "/" + c.value().get_den().get_str();
}
std::string coeff_text(const Fp& c) { return c.str(); }

}  // namespace

template <class K>
Json scalar_to_json(const Laurent<K>& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) out.push_back({{"e", e}, {"c", coeff_text(c)}});
    return out;
}

template <class K>
Laurent<K> scalar_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("scalar must be a list of terms");
    std::vector<std::pair<int, K>> terms;
    for (const auto& t : j) {
        int e = get<int>(need(t, "e"), "exponent");
        const Json& c = need(t, "c");
        std::string text = c.is_string() ? c.get<std::string>() : c.dump();
        try {
            terms.emplace_back(e, K::parse(text));
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad coefficient \"" + text + "\"");
        }
    }
    return Laurent<K>::from_terms(std::move(terms));
}

std::string field_of(const Json& j, long* p) {
    std::string f = j.is_object() && j.contains("field") ? get<std::string>(j.at("field"), "field") : "Q";
    if (f != "Q" && f != "Fp") throw ParseError("field must be \"Q\" or \"Fp\"");
    if (p && f == "Fp" && j.contains("p")) *p = get<long>(j.at("p"), "p");
    return f;
}

template <class K>
Json lattice_to_json(const Lattice<K>& l) {
    Json cols = Json::array();
    for (const auto& col : l.basis().columns()) {
        Json c = Json::array();
        for (const auto& x : col) c.push_back(scalar_to_json(x));
        cols.push_back(c);
    }
    Json out;
    if constexpr (std::is_same_v<K, Fp>) {
        out["field"] = "Fp";
        out["p"] = Fp::modulus();
    } else {
        out["field"] = "Q";
    }
    out["columns"] = cols;
    return out;
}

template <class K>
Lattice<K> lattice_from_json(const Json& j) {
    const Json& cols = need(j, "columns");
    if (!cols.is_array() || cols.empty()) throw ParseError("columns must be a nonempty list");
    std::vector<Vec3<K>> gens;
    for (const auto& c : cols) {
        if (!c.is_array() || c.size() != 3) throw ParseError("each column needs three entries");
        Vec3<K> v;
        for (const auto& x : c) v.push_back(scalar_from_json<K>(x));
        gens.push_back(v);
    }
    return Lattice<K>::from_generators(gens);
}

Json diagram_to_json(const GrowthDiagram& d) {
    Json row = Json::array();
    for (const auto& p : d.first_row()) {
        Json parts = Json::array();
        for (int x : p)
            if (x > 0) parts.push_back(x);
        row.push_back(parts);
    }
    return {{"word", word_str(d.word())}, {"first_row", row}};
}

GrowthDiagram diagram_from_json(const Json& j) {
    const Json& row = need(j, "first_row");
    if (!row.is_array()) throw ParseError("first_row must be a list");
    std::vector<Partition> first;
    for (const auto& p : row) {
        auto parts = get<std::vector<int>>(p, "partition");
        if (parts.size() > 3) throw ParseError("partitions have at most three parts");
        Partition q{0, 0, 0};
        for (size_t i = 0; i < parts.size(); ++i) q[i] = parts[i];
        if (!is_partition(q)) throw ParseError("not a partition: " + p.dump());
        first.push_back(q);
    }
    GrowthDiagram d = GrowthDiagram::complete_from_row(first);
    if (j.contains("word") && get<std::string>(j.at("word"), "word") != word_str(d.word()))
        throw PreconditionViolated("word " + j.at("word").get<std::string>() + " does not match the first row (" +
                                   word_str(d.word()) + ")");
    return d;
}

Json web_to_json(const Web& w) {
    Json verts = Json::array(), twin = Json::array(), out = Json::array();
    for (int v = 0; v < w.vertex_count(); ++v) verts.push_back(w.rotation(v));
    for (int h = 0; h < 2 * w.edge_count(); ++h) {
        twin.push_back(w.he_twin(h));
        out.push_back(w.he_out(h));
    }
    return {{"boundary", w.boundary_count()}, {"loops", w.loops()}, {"vertices", verts}, {"twin", twin}, {"out", out}};
}

Web web_from_json(const Json& j) {
    int nb = get<int>(need(j, "boundary"), "boundary");
    int loops = j.contains("loops") ? get<int>(j.at("loops"), "loops") : 0;
    auto rot = get<std::vector<std::vector<int>>>(need(j, "vertices"), "vertices");
    auto twin = get<std::vector<int>>(need(j, "twin"), "twin");
    auto outs = get<std::vector<bool>>(need(j, "out"), "out");
    if (nb < 0 || loops < 0 || nb > static_cast<int>(rot.size())) throw ParseError("bad boundary or loop count");
    if (twin.size() != outs.size()) throw ParseError("twin and out lists differ in length");
    std::vector<int> hv(twin.size(), -1);
    for (size_t v = 0; v < rot.size(); ++v)
        for (int h : rot[v]) {
            if (h < 0 || h >= static_cast<int>(hv.size()) || hv[h] >= 0)
                throw MalformedWeb("half-edge " + std::to_string(h) + " listed badly");
            hv[h] = static_cast<int>(v);
        }
    for (int v : hv)
        if (v < 0) throw MalformedWeb("half-edge missing from every vertex");
    for (int t : twin)
        if (t < 0 || t >= static_cast<int>(twin.size())) throw MalformedWeb("twin out of range");
    std::vector<char> ho(outs.begin(), outs.end());
    Web w = Web::from_parts(nb, std::move(rot), std::move(hv), std::move(twin), std::move(ho), loops);
    w.validate();
    return w;
}

Json diskoid_to_json(const Diskoid& d) {
    Json edges = Json::array();
    for (auto [a, b] : d.edges) edges.push_back({a, b});
    return {{"vertex_count", d.vertex_count}, {"triangles", d.triangles}, {"edges", edges}, {"boundary", d.boundary}};
}

Diskoid diskoid_from_json(const Json& j) {
    Diskoid d;
    d.vertex_count = get<int>(need(j, "vertex_count"), "vertex_count");
    d.triangles = get<std::vector<std::array<int, 3>>>(need(j, "triangles"), "triangles");
    d.edges = get<std::vector<std::pair<int, int>>>(need(j, "edges"), "edges");
    d.boundary = get<std::vector<int>>(need(j, "boundary"), "boundary");
    auto in_range = [&](int v) { return v >= 0 && v < d.vertex_count; };
    for (auto& t : d.triangles)
        for (int v : t)
            if (!in_range(v)) throw MalformedDiskoid("triangle vertex out of range");
    for (auto [a, b] : d.edges)
        if (!in_range(a) || !in_range(b)) throw MalformedDiskoid("edge vertex out of range");
    for (int v : d.boundary)
        if (!in_range(v)) throw MalformedDiskoid("boundary vertex out of range");
    return d;
}

Json combination_to_json(const WebCombination& c) {
    Json out = Json::array();
    for (const auto& [k, t] : c.terms()) out.push_back({{"coeff", t.first}, {"web", web_to_json(t.second)}});
    return out;
}

// ---------------------------------------------------------------------------
// Emitters

std::string web_dot(const Web& w) {
    std::ostringstream s;
    s << "digraph web {\n";
    for (int v = 0; v < w.vertex_count(); ++v)
        s << "  v" << v << (v < w.boundary_count() ? " [shape=box,label=\"" + std::to_string(v + 1) + "\"]"
                                                   : " [shape=point]")
          << ";\n";
    for (int h = 0; h < 2 * w.edge_count(); ++h)
        if (w.he_out(h)) s << "  v" << w.he_vertex(h) << " -> v" << w.he_vertex(w.he_twin(h)) << ";\n";
    for (int i = 0; i < w.loops(); ++i) s << "  loop" << i << " [shape=circle,label=\"\"];\n";
    s << "}\n";
    return s.str();
}

std::string diskoid_dot(const Diskoid& d) {
    std::ostringstream s;
    std::set<int> bd(d.boundary.begin(), d.boundary.end());
    s << "digraph diskoid {\n";
    for (int v = 0; v < d.vertex_count; ++v)
        s << "  v" << v << (bd.count(v) ? " [shape=circle]" : " [shape=doublecircle]") << ";\n";
    for (auto [a, b] : d.edges) s << "  v" << a << " -> v" << b << ";\n";
    s << "}\n";
    return s.str();
}

namespace {

using Point = std::pair<double, double>;

// Tutte embedding: fixed vertices stay put, the rest solve the barycentre
// equations. Vertices not connected to anything fixed go on small circles.
std::vector<Point> tutte(int n, const std::vector<std::pair<int, int>>& adj, const std::map<int, Point>& fixed) {
    std::vector<Point> pos(static_cast<size_t>(n), {0.0, 0.0});
    std::vector<std::vector<int>> nb(static_cast<size_t>(n));
    for (auto [a, b] : adj) {
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    // Components.
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : nb[v])
                if (comp[u] < 0) comp[u] = nc, stack.push_back(u);
        }
        ++nc;
    }
    std::vector<bool> anchored(static_cast<size_t>(nc), false);
    for (auto& [v, p] : fixed) anchored[comp[v]] = true;
    int floating = 0;
    for (int c = 0; c < nc; ++c) {
        if (anchored[c]) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) vs.push_back(v);
        const double cx = 3.5 + 2.2 * floating++, r = 0.8;
        for (size_t k = 0; k < vs.size(); ++k) {
            double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(vs.size());
            pos[vs[k]] = {cx + r * std::cos(a), r * std::sin(a)};
        }
    }
    std::vector<int> free_idx(static_cast<size_t>(n), -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!fixed.count(v) && anchored[comp[v]]) free_idx[v] = m++;
    for (auto& [v, p] : fixed) pos[v] = p;
    if (m == 0) return pos;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, 2);
    for (int v = 0; v < n; ++v) {
        int i = free_idx[v];
        if (i < 0) continue;
        A(i, i) = static_cast<double>(nb[v].size());
        for (int u : nb[v]) {
            if (free_idx[u] >= 0)
                A(i, free_idx[u]) -= 1.0;
            else {
                B(i, 0) += pos[u].first;
                B(i, 1) += pos[u].second;
            }
        }
    }
    Eigen::MatrixXd X = A.colPivHouseholderQr().solve(B);
    for (int v = 0; v < n; ++v)
        if (free_idx[v] >= 0) pos[v] = {X(free_idx[v], 0), X(free_idx[v], 1)};
    return pos;
}

// Clockwise from the top.
Point on_circle(int k, int n, double r = 2.0) {
    double a = std::numbers::pi / 2 - 2 * std::numbers::pi * k / n;
    return {r * std::cos(a), r * std::sin(a)};
}

std::string fmt(double x) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << (std::abs(x) < 5e-4 ? 0.0 : x);
    return s.str();
}

std::string coord(const Point& p) { return "(" + fmt(p.first) + "," + fmt(p.second) + ")"; }

const char* kTikzHeader =
    "\\begin{tikzpicture}[mid/.style={postaction={decorate},decoration={markings,"
    "mark=at position .55 with {\\arrow{Stealth}}}}]\n";

}  // namespace

std::string web_tikz(const Web& w) {
    const int nb = w.boundary_count();
    std::map<int, Point> fixed;
    for (int b = 0; b < nb; ++b) fixed[b] = on_circle(b, nb);
    std::vector<std::pair<int, int>> adj;
    for (int h = 0; h < 2 * w.edge_count(); ++h)
        if (w.he_out(h)) adj.emplace_back(w.he_vertex(h), w.he_vertex(w.he_twin(h)));
    auto pos = tutte(w.vertex_count(), adj, fixed);
    std::ostringstream s;
    s << "% " << nb << " boundary points, " << w.interior_vertex_count() << " trivalent vertices\n" << kTikzHeader;
    if (nb > 0) s << "  \\draw[gray] (0,0) circle (2);\n";
    for (int v = 0; v < w.vertex_count(); ++v) {
        s << "  \\coordinate (v" << v << ") at " << coord(pos[v]) << ";\n";
        if (v < nb)
            s << "  \\node[font=\\scriptsize] at " << coord({pos[v].first * 1.12, pos[v].second * 1.12}) << " {"
              << v + 1 << "};\n";
        else
            s << "  \\fill (v" << v << ") circle (1.2pt);\n";
    }
    std::map<std::pair<int, int>, int> seen;
    for (auto [a, b] : adj) {
        int k = seen[{std::min(a, b), std::max(a, b)}]++;
        s << "  \\draw[mid] (v" << a << ") to";
        if (k > 0) s << "[bend left=" << 25 * k << "]";
        s << " (v" << b << ");\n";
    }
    for (int i = 0; i < w.loops(); ++i)
        s << "  \\draw[mid] " << coord({-3.2 - 1.2 * i, 0}) << " circle (0.45);\n";
    s << "\\end{tikzpicture}\n";
    return s.str();
}

std::string diskoid_tikz(const Diskoid& d) {
    const int n = static_cast<int>(d.boundary.size());
    std::map<int, Point> fixed;
    std::map<int, std::vector<Point>> spots;
    for (int k = 0; k < n; ++k) spots[d.boundary[k]].push_back(on_circle(k, n));
    for (auto& [v, ps] : spots) {
        Point c{0, 0};
        for (auto& p : ps) c.first += p.first / ps.size(), c.second += p.second / ps.size();
        fixed[v] = c;
    }
    auto pos = tutte(d.vertex_count, d.edges, fixed);
    std::ostringstream s;
    s << kTikzHeader;
    for (const auto& t : d.triangles)
        s << "  \\fill[gray!15] " << coord(pos[t[0]]) << " -- " << coord(pos[t[1]]) << " -- " << coord(pos[t[2]])
          << " -- cycle;\n";
    for (auto [a, b] : d.edges) s << "  \\draw[mid] " << coord(pos[a]) << " -- " << coord(pos[b]) << ";\n";
    for (int v = 0; v < d.vertex_count; ++v) s << "  \\fill " << coord(pos[v]) << " circle (1.5pt);\n";
    s << "\\end{tikzpicture}\n";
    return s.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

#define SL3_INSTANTIATE(K)                                 \
    template Json scalar_to_json(const Laurent<K>&);       \
    template Laurent<K> scalar_from_json(const Json&);     \
    template Json lattice_to_json(const Lattice<K>&);      \
    template Lattice<K> lattice_from_json(const Json&);

SL3_INSTANTIATE(Rational)
SL3_INSTANTIATE(Fp)

}  // namespace sl3
