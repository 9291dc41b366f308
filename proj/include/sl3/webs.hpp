#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sl3/growth.hpp"
#include "sl3/hulls.hpp"

namespace sl3 {

// Triangulated disk with directed edges and a boundary closed walk.
struct Diskoid {
    int vertex_count = 0;
    // Oriented clockwise: walking a->b->c keeps the triangle on the right.
    std::vector<std::array<int, 3>> triangles;
    // tail -> head is an omega1 step.
    std::vector<std::pair<int, int>> edges;
    // Clockwise closed walk starting at the basepoint; arc i runs boundary[i] -> boundary[i+1].
    std::vector<int> boundary;

    TypeWord boundary_type() const;
    std::vector<int> interior_vertices() const;
    int degree(int v) const;
    SimplicialComplex2 complex() const;
};

bool is_cat0(const Diskoid& d);

// Directed planar trivalent graph stored as a rotation system. Vertices
// 0..boundary_count()-1 are the univalent boundary vertices in clockwise
// order starting at the basepoint; rotations are clockwise.
class Web {
public:
    struct Face {
        std::vector<int> darts;  // half-edges, each at the vertex it leaves
        bool boundary = false;   // touches the outside of the disk
    };

    Web() = default;
    explicit Web(int boundary_count);

    int add_vertex();
    // Edge directed u -> v; the new half-edges are appended to both rotations.
    std::pair<int, int> add_edge(int u, int v);
    void add_loops(int count) { loops_ += count; }

    int boundary_count() const { return nb_; }
    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int interior_vertex_count() const { return vertex_count() - nb_; }
    int edge_count() const { return static_cast<int>(hv_.size()) / 2; }
    int loops() const { return loops_; }
    const std::vector<int>& rotation(int v) const { return rot_[static_cast<size_t>(v)]; }
    int he_vertex(int h) const { return hv_[static_cast<size_t>(h)]; }
    int he_twin(int h) const { return ht_[static_cast<size_t>(h)]; }
    bool he_out(int h) const { return ho_[static_cast<size_t>(h)] != 0; }

    TypeWord boundary_type() const;
    // Throws MalformedWeb when a structural invariant fails.
    void validate() const;
    std::vector<Face> faces() const;
    // Number of connected components, counting the outside of the disk as one vertex.
    int component_count() const;

    // Basepoint moved r boundary positions forward.
    Web rotate(int r = 1) const;
    // Relabelled in canonical breadth-first order.
    Web canonical() const;
    // Encoding that is equal exactly for isomorphic webs.
    std::string key() const;

    // Low-level construction used by dualization, parsing and reduction.
    static Web from_parts(int boundary_count, std::vector<std::vector<int>> rot, std::vector<int> he_vertex,
                          std::vector<int> he_twin, std::vector<char> he_out, int loops);

private:
    friend class Rewriter;
    int successor(int h) const;
    std::vector<std::pair<std::vector<int>, std::string>> component_keys() const;

    int nb_ = 0;
    int loops_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<int> hv_, ht_;
    std::vector<char> ho_;
};

bool is_nonelliptic(const Web& w);
Web rotate(const Web& w, int r = 1);
bool iso(const Web& a, const Web& b);

Web dualize(const Diskoid& d);

// Integer combination of webs keyed by canonical encoding.
class WebCombination {
public:
    void add(std::int64_t coeff, const Web& w);
    const std::map<std::string, std::pair<std::int64_t, Web>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    friend bool operator==(const WebCombination& a, const WebCombination& b);
    std::string str() const;

private:
    std::map<std::string, std::pair<std::int64_t, Web>> terms_;
};

// Spider relations: loop = 3, bigon = -2 x strand, square = sum of the two
// reconnections. Rewrites a smallest reducible face first.
WebCombination reduce(const Web& w);
// Same relations, applied to a uniformly random reducible face each time.
WebCombination reduce_random(const Web& w, std::mt19937_64& rng);

}  // namespace sl3
