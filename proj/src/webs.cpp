#include "sl3/webs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "sl3/errors.hpp"

namespace sl3 {

// ---------------------------------------------------------------------------
// Diskoids

TypeWord Diskoid::boundary_type() const {
    std::set<std::pair<int, int>> dir(edges.begin(), edges.end());
    TypeWord w;
    const size_t n = boundary.size();
    for (size_t i = 0; i < n; ++i) {
        int p = boundary[i], q = boundary[(i + 1) % n];
        if (dir.count({p, q}))
            w.push_back(1);
        else if (dir.count({q, p}))
            w.push_back(2);
        else
            throw MalformedDiskoid("boundary arc " + std::to_string(i) + " is not an edge");
    }
    return w;
}

std::vector<int> Diskoid::interior_vertices() const {
    std::vector<bool> on(static_cast<size_t>(vertex_count), false);
    for (int v : boundary) on[static_cast<size_t>(v)] = true;
    std::vector<int> out;
    for (int v = 0; v < vertex_count; ++v)
        if (!on[v]) out.push_back(v);
    return out;
}

int Diskoid::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

SimplicialComplex2 Diskoid::complex() const {
    SimplicialComplex2 c;
    c.vertex_count = vertex_count;
    for (auto [a, b] : edges) c.edges.insert({std::min(a, b), std::max(a, b)});
    for (auto t : triangles) {
        std::sort(t.begin(), t.end());
        c.triangles.insert(t);
    }
    return c;
}

bool is_cat0(const Diskoid& d) {
    for (int v : d.interior_vertices())
        if (d.degree(v) < 6) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Webs

Web::Web(int boundary_count) : nb_(boundary_count), rot_(static_cast<size_t>(boundary_count)) {}

int Web::add_vertex() {
    rot_.emplace_back();
    return vertex_count() - 1;
}

std::pair<int, int> Web::add_edge(int u, int v) {
    int hu = static_cast<int>(hv_.size()), hw = hu + 1;
    hv_.push_back(u);
    hv_.push_back(v);
    ht_.push_back(hw);
    ht_.push_back(hu);
    ho_.push_back(1);
    ho_.push_back(0);
    rot_[static_cast<size_t>(u)].push_back(hu);
    rot_[static_cast<size_t>(v)].push_back(hw);
    return {hu, hw};
}

Web Web::from_parts(int boundary_count, std::vector<std::vector<int>> rot, std::vector<int> he_vertex,
                    std::vector<int> he_twin, std::vector<char> he_out, int loops) {
    Web w;
    w.nb_ = boundary_count;
    w.rot_ = std::move(rot);
    w.hv_ = std::move(he_vertex);
    w.ht_ = std::move(he_twin);
    w.ho_ = std::move(he_out);
    w.loops_ = loops;
    return w;
}

TypeWord Web::boundary_type() const {
    TypeWord t;
    for (int b = 0; b < nb_; ++b) {
        if (rot_[b].size() != 1) throw MalformedWeb("boundary vertex " + std::to_string(b) + " is not univalent");
        t.push_back(he_out(rot_[b][0]) ? 1 : 2);
    }
    return t;
}

void Web::validate() const {
    const int nh = static_cast<int>(hv_.size());
    if (ht_.size() != hv_.size() || ho_.size() != hv_.size()) throw MalformedWeb("half-edge arrays disagree");
    std::vector<int> seen(static_cast<size_t>(nh), 0);
    for (int v = 0; v < vertex_count(); ++v) {
        const auto& r = rot_[v];
        if (v < nb_ && r.size() != 1) throw MalformedWeb("boundary vertex " + std::to_string(v) + " is not univalent");
        if (v >= nb_) {
            if (r.size() != 3) throw MalformedWeb("vertex " + std::to_string(v) + " is not trivalent");
            if (!(he_out(r[0]) == he_out(r[1]) && he_out(r[1]) == he_out(r[2])))
                throw MalformedWeb("vertex " + std::to_string(v) + " mixes in and out edges");
        }
        for (int h : r) {
            if (h < 0 || h >= nh || hv_[h] != v) throw MalformedWeb("rotation lists a foreign half-edge");
            ++seen[h];
        }
    }
    for (int h = 0; h < nh; ++h) {
        if (seen[h] != 1) throw MalformedWeb("half-edge " + std::to_string(h) + " not in exactly one rotation");
        int t = ht_[h];
        if (t < 0 || t >= nh || t == h || ht_[t] != h) throw MalformedWeb("twin pointers are inconsistent");
        if (ho_[h] == ho_[t]) throw MalformedWeb("edge direction is inconsistent");
    }
}

int Web::successor(int h) const {
    int v = hv_[h];
    if (v < nb_) {
        // Seen from the outside the boundary order is reversed.
        int prev = (v - 1 + nb_) % nb_;
        return rot_[prev][0];
    }
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), h);
    ++it;
    return it == r.end() ? r.front() : *it;
}

std::vector<Web::Face> Web::faces() const {
    std::vector<Face> out;
    std::vector<bool> used(hv_.size(), false);
    for (size_t start = 0; start < hv_.size(); ++start) {
        if (used[start]) continue;
        Face f;
        int h = static_cast<int>(start);
        while (!used[h]) {
            used[h] = true;
            f.darts.push_back(h);
            f.boundary = f.boundary || hv_[h] < nb_;
            h = successor(ht_[h]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

int Web::component_count() const {
    std::vector<int> parent(static_cast<size_t>(vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int b = 1; b < nb_; ++b) parent[find(b)] = find(0);
    for (size_t h = 0; h < hv_.size(); ++h) parent[find(hv_[h])] = find(hv_[ht_[h]]);
    std::set<int> roots;
    for (int v = 0; v < vertex_count(); ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

namespace {

struct Traversal {
    std::vector<int> order;  // vertices in label order
    std::vector<int> entry;  // per vertex: half-edge where its rotation starts
    std::vector<int> label;  // per vertex, -1 when not reached
};

int slot(const Web& w, int h, int entry) {
    const auto& r = w.rotation(w.he_vertex(h));
    int n = static_cast<int>(r.size());
    int ph = static_cast<int>(std::find(r.begin(), r.end(), h) - r.begin());
    int pe = static_cast<int>(std::find(r.begin(), r.end(), entry) - r.begin());
    return (ph - pe + n) % n;
}

// Breadth-first labelling from seeded vertices; encodes the visited part.
std::string traverse(const Web& w, Traversal& t, std::vector<std::pair<int, int>> seeds, int first_label) {
    std::string code;
    int next = first_label;
    size_t head = t.order.size();
    for (auto [v, e] : seeds) {
        t.label[v] = next++;
        t.entry[v] = e;
        t.order.push_back(v);
    }
    while (head < t.order.size()) {
        int v = t.order[head++];
        const auto& r = w.rotation(v);
        if (r.empty()) {
            code += "[]";
            continue;
        }
        int start = static_cast<int>(std::find(r.begin(), r.end(), t.entry[v]) - r.begin());
        code += "[";
        for (size_t k = 0; k < r.size(); ++k) {
            int h = r[(static_cast<size_t>(start) + k) % r.size()];
            int tw = w.he_twin(h), u = w.he_vertex(tw);
            if (t.label[u] < 0) {
                t.label[u] = next++;
                t.entry[u] = tw;
                t.order.push_back(u);
            }
            code += std::to_string(t.label[u] - first_label) + "." + std::to_string(slot(w, tw, t.entry[u])) +
                    (w.he_out(h) ? "o" : "i") + ",";
        }
        code += "]";
    }
    return code;
}

}  // namespace

std::vector<std::pair<std::vector<int>, std::string>> Web::component_keys() const {
    // Returns the traversal order of the boundary part followed by each closed
    // component (sorted by encoding); the first element's string is the boundary code.
    std::vector<std::pair<std::vector<int>, std::string>> out;
    Traversal t;
    t.entry.assign(static_cast<size_t>(vertex_count()), -1);
    t.label.assign(static_cast<size_t>(vertex_count()), -1);
    std::vector<std::pair<int, int>> seeds;
    for (int b = 0; b < nb_; ++b) seeds.emplace_back(b, rot_[b].empty() ? -1 : rot_[b][0]);
    std::string code = traverse(*this, t, seeds, 0);
    out.emplace_back(t.order, code);

    std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> closed;
    std::vector<int> reached = t.label;
    for (int v = nb_; v < vertex_count(); ++v) {
        if (reached[v] >= 0) continue;
        // Collect the component, then pick the smallest encoding over all starts.
        Traversal probe;
        probe.entry.assign(static_cast<size_t>(vertex_count()), -1);
        probe.label.assign(static_cast<size_t>(vertex_count()), -1);
        traverse(*this, probe, {{v, rot_[v].empty() ? -1 : rot_[v][0]}}, 0);
        std::string best;
        std::pair<int, int> best_seed{-1, -1};
        for (int u : probe.order) {
            reached[u] = 1;
            for (int h : rot_[u]) {
                Traversal trial;
                trial.entry.assign(static_cast<size_t>(vertex_count()), -1);
                trial.label.assign(static_cast<size_t>(vertex_count()), -1);
                std::string c = traverse(*this, trial, {{u, h}}, 0);
                if (best_seed.first < 0 || c < best) best = c, best_seed = {u, h};
            }
        }
        closed.push_back({best, {best_seed}});
    }
    std::sort(closed.begin(), closed.end());
    for (auto& [c, seed] : closed) {
        Traversal trial;
        trial.entry.assign(static_cast<size_t>(vertex_count()), -1);
        trial.label.assign(static_cast<size_t>(vertex_count()), -1);
        traverse(*this, trial, seed, 0);
        // Record the start half-edge by moving the seed vertex's rotation start.
        std::vector<int> order = trial.order;
        order.push_back(-1 - seed[0].second);
        out.emplace_back(order, c);
    }
    return out;
}

Web Web::canonical() const {
    auto parts = component_keys();
    std::vector<int> label(static_cast<size_t>(vertex_count()), -1), entry(static_cast<size_t>(vertex_count()), -1);
    std::vector<int> order;
    // Boundary part.
    {
        Traversal t;
        t.entry.assign(static_cast<size_t>(vertex_count()), -1);
        t.label.assign(static_cast<size_t>(vertex_count()), -1);
        std::vector<std::pair<int, int>> seeds;
        for (int b = 0; b < nb_; ++b) seeds.emplace_back(b, rot_[b].empty() ? -1 : rot_[b][0]);
        traverse(*this, t, seeds, 0);
        for (int v : t.order) label[v] = static_cast<int>(order.size()), entry[v] = t.entry[v], order.push_back(v);
    }
    for (size_t c = 1; c < parts.size(); ++c) {
        std::vector<int> ord = parts[c].first;
        int seed_h = -1 - ord.back();
        ord.pop_back();
        Traversal t;
        t.entry.assign(static_cast<size_t>(vertex_count()), -1);
        t.label.assign(static_cast<size_t>(vertex_count()), -1);
        traverse(*this, t, {{hv_[seed_h], seed_h}}, 0);
        for (int v : t.order) label[v] = static_cast<int>(order.size()), entry[v] = t.entry[v], order.push_back(v);
    }
    // Half-edges renumbered by (new vertex, rotation position from the entry).
    std::vector<int> new_he(hv_.size(), -1);
    std::vector<std::vector<int>> rot(order.size());
    std::vector<int> hv;
    int next = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        const auto& r = rot_[v];
        if (r.empty()) continue;
        int start = static_cast<int>(std::find(r.begin(), r.end(), entry[v]) - r.begin());
        for (size_t k = 0; k < r.size(); ++k) {
            int h = r[(static_cast<size_t>(start) + k) % r.size()];
            new_he[h] = next++;
            rot[i].push_back(new_he[h]);
            hv.push_back(static_cast<int>(i));
        }
    }
    std::vector<int> ht(hv.size());
    std::vector<char> ho(hv.size());
    for (size_t h = 0; h < hv_.size(); ++h) {
        ht[new_he[h]] = new_he[ht_[h]];
        ho[new_he[h]] = ho_[h];
    }
    return from_parts(nb_, std::move(rot), std::move(hv), std::move(ht), std::move(ho), loops_);
}

std::string Web::key() const {
    auto parts = component_keys();
    std::string k = "b" + std::to_string(nb_) + "l" + std::to_string(loops_) + ":" + parts[0].second;
    for (size_t c = 1; c < parts.size(); ++c) k += "|" + parts[c].second;
    return k;
}

Web Web::rotate(int r) const {
    if (nb_ == 0) return *this;
    r = ((r % nb_) + nb_) % nb_;
    auto remap = [&](int v) { return v < nb_ ? (v - r + nb_) % nb_ : v; };
    std::vector<std::vector<int>> rot(rot_.size());
    for (int v = 0; v < vertex_count(); ++v) rot[remap(v)] = rot_[v];
    std::vector<int> hv(hv_.size());
    for (size_t h = 0; h < hv_.size(); ++h) hv[h] = remap(hv_[h]);
    return from_parts(nb_, std::move(rot), std::move(hv), ht_, ho_, loops_);
}

Web rotate(const Web& w, int r) { return w.rotate(r); }

bool iso(const Web& a, const Web& b) { return a.key() == b.key(); }

bool is_nonelliptic(const Web& w) {
    if (w.loops() > 0) return false;
    if (w.component_count() > (w.boundary_count() > 0 ? 1 : 0)) return false;
    for (const auto& f : w.faces())
        if (!f.boundary && f.darts.size() < 6) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dualization

Web dualize(const Diskoid& d) {
    const int nb = static_cast<int>(d.boundary.size());
    std::map<std::pair<int, int>, int> dart;  // (p,q) -> half-edge id
    std::vector<int> owner;
    std::vector<std::pair<int, int>> dart_of;
    auto own = [&](int p, int q, int who) {
        if (p == q) throw MalformedDiskoid("degenerate edge at vertex " + std::to_string(p));
        if (!dart.emplace(std::make_pair(p, q), static_cast<int>(owner.size())).second)
            throw MalformedDiskoid("dart " + std::to_string(p) + "->" + std::to_string(q) + " owned twice");
        owner.push_back(who);
        dart_of.emplace_back(p, q);
    };
    std::vector<std::vector<int>> rot(static_cast<size_t>(nb) + d.triangles.size());
    for (int k = 0; k < nb; ++k) {
        own(d.boundary[(k + 1) % nb], d.boundary[k], k);
        rot[k].push_back(static_cast<int>(owner.size()) - 1);
    }
    for (size_t t = 0; t < d.triangles.size(); ++t) {
        auto [a, b, c] = d.triangles[t];
        int who = nb + static_cast<int>(t);
        own(a, b, who);
        own(b, c, who);
        own(c, a, who);
        int h = static_cast<int>(owner.size());
        rot[who] = {h - 3, h - 2, h - 1};
    }
    std::set<std::pair<int, int>> directed(d.edges.begin(), d.edges.end());
    if (directed.size() != d.edges.size()) throw MalformedDiskoid("repeated edge");
    if (dart.size() != 2 * d.edges.size()) throw MalformedDiskoid("darts do not match the edge list");
    std::vector<int> ht(owner.size());
    std::vector<char> ho(owner.size());
    for (size_t h = 0; h < owner.size(); ++h) {
        auto [p, q] = dart_of[h];
        auto it = dart.find({q, p});
        if (it == dart.end()) throw MalformedDiskoid("edge " + std::to_string(p) + "-" + std::to_string(q) +
                                                     " has only one side");
        bool forward = directed.count({p, q}) > 0, backward = directed.count({q, p}) > 0;
        if (forward == backward) throw MalformedDiskoid("edge " + std::to_string(p) + "-" + std::to_string(q) +
                                                        " has no single direction");
        ht[h] = it->second;
        // For a diskoid edge p->q the web edge runs from the owner of q->p to the owner of p->q.
        ho[h] = backward ? 1 : 0;
    }
    std::vector<int> hv(owner.begin(), owner.end());
    Web w = Web::from_parts(nb, std::move(rot), std::move(hv), std::move(ht), std::move(ho), 0);
    try {
        w.validate();
    } catch (const MalformedWeb& e) {
        throw MalformedDiskoid(std::string("dual is not a web: ") + e.what());
    }
    return w;
}

// ---------------------------------------------------------------------------
// Reduction

void WebCombination::add(std::int64_t coeff, const Web& w) {
    if (coeff == 0) return;
    Web c = w.canonical();
    std::string k = c.key();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, std::make_pair(coeff, c));
        return;
    }
    it->second.first += coeff;
    if (it->second.first == 0) terms_.erase(it);
}

bool operator==(const WebCombination& a, const WebCombination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second.first != ib->second.first) return false;
    return true;
}

std::string WebCombination::str() const {
    std::string s;
    for (const auto& [k, t] : terms_) s += std::to_string(t.first) + " * [" + k + "]\n";
    return s.empty() ? "0\n" : s;
}

class Rewriter {
public:
    // The face's vertices are deleted and the strands leaving through the
    // ports are joined according to `pairs` (indices into the face).
    static Web reconnect(const Web& w, const Web::Face& f, const std::vector<std::pair<int, int>>& pairs) {
        const size_t m = f.darts.size();
        std::vector<int> verts(m), port(m);
        std::vector<bool> dead(static_cast<size_t>(w.vertex_count()), false);
        for (size_t i = 0; i < m; ++i) {
            verts[i] = w.he_vertex(f.darts[i]);
            dead[verts[i]] = true;
        }
        for (size_t i = 0; i < m; ++i) {
            int in_face = w.he_twin(f.darts[(i + m - 1) % m]);
            for (int h : w.rotation(verts[i]))
                if (h != f.darts[i] && h != in_face) port[i] = h;
        }
        std::vector<int> partner(m);
        for (auto [a, b] : pairs) partner[a] = b, partner[b] = a;
        std::vector<int> port_index(w.hv_.size(), -1);
        for (size_t i = 0; i < m; ++i) port_index[port[i]] = static_cast<int>(i);

        std::vector<int> ht = w.ht_;
        int loops = w.loops_;
        std::vector<bool> done(m, false);
        for (size_t i = 0; i < m; ++i) {
            int outside = w.he_twin(port[i]);
            if (done[i] || dead[w.he_vertex(outside)]) continue;
            size_t cur = i;
            for (;;) {
                done[cur] = true;
                size_t other = static_cast<size_t>(partner[cur]);
                done[other] = true;
                int far = w.he_twin(port[other]);
                if (!dead[w.he_vertex(far)]) {
                    if (w.ho_[outside] == w.ho_[far]) throw MalformedWeb("reconnection breaks edge directions");
                    ht[outside] = far;
                    ht[far] = outside;
                    break;
                }
                cur = static_cast<size_t>(port_index[far]);
            }
        }
        for (size_t i = 0; i < m; ++i) {
            if (done[i]) continue;
            size_t cur = i;
            while (!done[cur]) {
                done[cur] = true;
                size_t other = static_cast<size_t>(partner[cur]);
                done[other] = true;
                cur = static_cast<size_t>(port_index[w.he_twin(port[other])]);
            }
            ++loops;
        }
        return compact(w, dead, ht, loops);
    }

    static Web without_loops(const Web& w) {
        Web c = w;
        c.loops_ = 0;
        return c;
    }

private:
    static Web compact(const Web& w, const std::vector<bool>& dead, const std::vector<int>& ht, int loops) {
        std::vector<int> vmap(static_cast<size_t>(w.vertex_count()), -1), hmap(w.hv_.size(), -1);
        int nv = 0, nh = 0;
        for (int v = 0; v < w.vertex_count(); ++v)
            if (!dead[v]) vmap[v] = nv++;
        for (size_t h = 0; h < w.hv_.size(); ++h)
            if (!dead[w.hv_[h]]) hmap[h] = nh++;
        std::vector<std::vector<int>> rot(static_cast<size_t>(nv));
        std::vector<int> hv(static_cast<size_t>(nh)), nht(static_cast<size_t>(nh));
        std::vector<char> ho(static_cast<size_t>(nh));
        for (int v = 0; v < w.vertex_count(); ++v)
            if (!dead[v])
                for (int h : w.rot_[v]) rot[vmap[v]].push_back(hmap[h]);
        for (size_t h = 0; h < w.hv_.size(); ++h) {
            if (hmap[h] < 0) continue;
            hv[hmap[h]] = vmap[w.hv_[h]];
            nht[hmap[h]] = hmap[ht[h]];
            ho[hmap[h]] = w.ho_[h];
        }
        return Web::from_parts(w.nb_, std::move(rot), std::move(hv), std::move(nht), std::move(ho), loops);
    }
};

namespace {

bool reducible(const Web& w, const Web::Face& f) {
    if (f.boundary || (f.darts.size() != 2 && f.darts.size() != 4)) return false;
    std::set<int> vs;
    for (int h : f.darts) vs.insert(w.he_vertex(h));
    return vs.size() == f.darts.size();
}

std::vector<std::pair<std::int64_t, Web>> rewrite(const Web& w, const Web::Face& f) {
    if (f.darts.size() == 2) return {{-2, Rewriter::reconnect(w, f, {{0, 1}})}};
    return {{1, Rewriter::reconnect(w, f, {{0, 1}, {2, 3}})}, {1, Rewriter::reconnect(w, f, {{1, 2}, {3, 0}})}};
}

template <class Choose>
WebCombination reduce_with(const Web& input, Choose choose) {
    input.validate();
    WebCombination out;
    std::vector<std::pair<std::int64_t, Web>> work{{1, input}};
    while (!work.empty()) {
        auto [coeff, w] = std::move(work.back());
        work.pop_back();
        w = w.canonical();
        for (int i = 0; i < w.loops(); ++i) coeff *= 3;
        w = Rewriter::without_loops(w);
        std::vector<Web::Face> candidates;
        for (auto& f : w.faces())
            if (reducible(w, f)) candidates.push_back(std::move(f));
        if (candidates.empty()) {
            out.add(coeff, w);
            continue;
        }
        for (auto& [c, next] : rewrite(w, choose(candidates))) work.emplace_back(coeff * c, std::move(next));
    }
    return out;
}

}  // namespace

WebCombination reduce(const Web& w) {
    return reduce_with(w, [](const std::vector<Web::Face>& fs) -> const Web::Face& {
        size_t best = 0;
        for (size_t i = 1; i < fs.size(); ++i)
            if (fs[i].darts.size() < fs[best].darts.size()) best = i;
        return fs[best];
    });
}

WebCombination reduce_random(const Web& w, std::mt19937_64& rng) {
    return reduce_with(w, [&rng](const std::vector<Web::Face>& fs) -> const Web::Face& {
        std::uniform_int_distribution<size_t> pick(0, fs.size() - 1);
        return fs[pick(rng)];
    });
}

}  // namespace sl3
