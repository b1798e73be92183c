// Immutable adjacency-list multigraph.  Parallel edges appear once per
// multiplicity in both endpoint lists; a self-loop appears once in its
// endpoint's list but contributes 2 to that vertex's degree.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cplab/degree_dist.hpp"
#include "cplab/rng.hpp"

namespace cplab {

struct Graph {
    std::vector<std::vector<uint32_t>> adjacency;
    std::vector<uint32_t> degrees;

    size_t n_vertices() const { return adjacency.size(); }

    uint32_t self_loops_at(uint32_t v) const {
        return degrees[v] - static_cast<uint32_t>(adjacency[v].size());
    }

    uint64_t degree_sum() const;
    uint32_t max_degree() const;

    // Throws std::logic_error if the multigraph invariants fail:
    // even degree sum, degrees[v] = |adjacency[v]| + loops(v), and the
    // adjacency multiset is symmetric.
    void validate() const;

    static Graph from_edges(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges);
    std::vector<std::pair<uint32_t, uint32_t>> edges() const;
};

// Star with center 0 and leaves 1..k.  Rejects k = 0.
Graph generate_star(uint32_t k);

// Star with center 0, leaves 1..k, and a chain of r extra vertices hung off
// the center (k+1 .. k+r).  Rejects k = 0 or r = 0.
Graph generate_star_chain(uint32_t k, uint32_t r);

Graph make_path(uint32_t n_vertices);
Graph make_cycle(uint32_t n_vertices);
Graph make_complete(uint32_t n_vertices);

// Configuration model on n vertices with i.i.d. degrees from dist.  The
// whole degree sequence is resampled until its sum is even (conditioning on
// the even-sum event, not patching one entry).  Half-edges are paired by a
// uniform perfect matching; self-loops and parallel edges are kept.
Graph generate_config_model(uint32_t n, const DegreeDistribution& dist, Rng& rng);

struct GWTree {
    Graph graph;
    uint32_t root = 0;
    // interior[v]: v's offspring were fully revealed.  Boundary vertices
    // (budget reached before their children were drawn) are excluded from
    // interior statistics.
    std::vector<uint8_t> interior;
    std::vector<uint32_t> depth;
    bool budget_reached = false;
};

// Breadth-first Galton-Watson tree under a vertex budget.  Once a vertex's
// offspring no longer fit in the budget, generation stops and all
// still-unprocessed vertices are marked boundary.
GWTree sample_gw_tree(const OffspringDistribution& offspring, size_t max_vertices, Rng& rng);

// Plain-text edge list: "# vertices=N" header, then "u v" per line
// (parallel edges repeated, self-loop as "u u").
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);

// BFS distance between two vertices; returns UINT32_MAX when disconnected.
uint32_t graph_distance(const Graph& g, uint32_t from, uint32_t to);

} // namespace cplab
