#include "cplab/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cplab {

uint64_t Graph::degree_sum() const {
    uint64_t s = 0;
    for (uint32_t d : degrees) s += d;
    return s;
}

uint32_t Graph::max_degree() const {
    uint32_t m = 0;
    for (uint32_t d : degrees) m = std::max(m, d);
    return m;
}

void Graph::validate() const {
    if (adjacency.size() != degrees.size())
        throw std::logic_error("graph: adjacency/degrees size mismatch");
    if (degree_sum() % 2 != 0) throw std::logic_error("graph: odd degree sum");
    std::map<std::pair<uint32_t, uint32_t>, int64_t> mult;
    for (uint32_t v = 0; v < adjacency.size(); ++v) {
        uint32_t loops = 0;
        for (uint32_t w : adjacency[v]) {
            if (w >= adjacency.size()) throw std::logic_error("graph: neighbor out of range");
            if (w == v) {
                ++loops;
            } else {
                mult[{v, w}] += 1;
            }
        }
        if (degrees[v] != adjacency[v].size() + loops)
            throw std::logic_error("graph: degree != |adjacency| + loops");
    }
    for (const auto& [e, m] : mult) {
        auto it = mult.find({e.second, e.first});
        if (it == mult.end() || it->second != m)
            throw std::logic_error("graph: adjacency multiset not symmetric");
    }
}

Graph Graph::from_edges(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    Graph g;
    g.adjacency.assign(n, {});
    g.degrees.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("from_edges: endpoint out of range");
        if (u == v) {
            g.adjacency[u].push_back(u);
            g.degrees[u] += 2;
        } else {
            g.adjacency[u].push_back(v);
            g.adjacency[v].push_back(u);
            g.degrees[u] += 1;
            g.degrees[v] += 1;
        }
    }
    return g;
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(degree_sum() / 2);
    for (uint32_t v = 0; v < adjacency.size(); ++v)
        for (uint32_t w : adjacency[v])
            if (w >= v) out.emplace_back(v, w); // loops listed once
    return out;
}

Graph generate_star(uint32_t k) {
    if (k == 0) throw std::invalid_argument("generate_star: k must be at least 1");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    e.reserve(k);
    for (uint32_t i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph::from_edges(static_cast<size_t>(k) + 1, e);
}

Graph generate_star_chain(uint32_t k, uint32_t r) {
    if (k == 0 || r == 0)
        throw std::invalid_argument("generate_star_chain: k and r must be at least 1");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    e.reserve(static_cast<size_t>(k) + r);
    for (uint32_t i = 1; i <= k; ++i) e.emplace_back(0, i);
    e.emplace_back(0, k + 1);
    for (uint32_t i = 1; i < r; ++i) e.emplace_back(k + i, k + i + 1);
    return Graph::from_edges(static_cast<size_t>(k) + r + 1, e);
}

Graph make_path(uint32_t n) {
    if (n == 0) throw std::invalid_argument("make_path: need at least one vertex");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph make_cycle(uint32_t n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need at least 3 vertices");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph make_complete(uint32_t n) {
    if (n == 0) throw std::invalid_argument("make_complete: need at least one vertex");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph generate_config_model(uint32_t n, const DegreeDistribution& dist, Rng& rng) {
    if (n < 2) throw std::invalid_argument("generate_config_model: n must be at least 2");
    std::vector<uint64_t> deg(n);
    uint64_t sum;
    do {
        sum = 0;
        for (uint32_t v = 0; v < n; ++v) {
            deg[v] = dist.sample(rng);
            sum += deg[v];
        }
    } while (sum % 2 != 0);

    std::vector<uint32_t> half_edges;
    half_edges.reserve(sum);
    for (uint32_t v = 0; v < n; ++v)
        for (uint64_t i = 0; i < deg[v]; ++i) half_edges.push_back(v);

    // Fisher-Yates shuffle, then pair consecutive entries: a uniform
    // perfect matching of the half-edges.
    for (size_t i = half_edges.size(); i > 1; --i) {
        size_t j = rng.below(i);
        std::swap(half_edges[i - 1], half_edges[j]);
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(half_edges.size() / 2);
    for (size_t i = 0; i + 1 < half_edges.size(); i += 2)
        edges.emplace_back(half_edges[i], half_edges[i + 1]);
    return Graph::from_edges(n, edges);
}

GWTree sample_gw_tree(const OffspringDistribution& offspring, size_t max_vertices, Rng& rng) {
    if (max_vertices < 1) throw std::invalid_argument("sample_gw_tree: budget must be positive");
    GWTree t;
    t.graph.adjacency.assign(1, {});
    t.graph.degrees.assign(1, 0);
    t.interior.assign(1, 0);
    t.depth.assign(1, 0);

    std::deque<uint32_t> frontier{0};
    while (!frontier.empty()) {
        uint32_t v = frontier.front();
        uint64_t c = offspring.sample(rng);
        if (t.graph.n_vertices() + c > max_vertices) {
            // Offspring no longer fit: v and everything still queued stay
            // boundary, with their children unrevealed.
            t.budget_reached = true;
            break;
        }
        frontier.pop_front();
        t.interior[v] = 1;
        for (uint64_t i = 0; i < c; ++i) {
            auto w = static_cast<uint32_t>(t.graph.n_vertices());
            t.graph.adjacency.emplace_back();
            t.graph.degrees.push_back(0);
            t.interior.push_back(0);
            t.depth.push_back(t.depth[v] + 1);
            t.graph.adjacency[v].push_back(w);
            t.graph.adjacency[w].push_back(v);
            t.graph.degrees[v] += 1;
            t.graph.degrees[w] += 1;
            frontier.push_back(w);
        }
    }
    return t;
}

void write_edge_list(const Graph& g, std::ostream& os) {
    os << "# vertices=" << g.n_vertices() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

Graph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("edge list: missing header");
    size_t n = 0;
    if (std::sscanf(line.c_str(), "# vertices=%zu", &n) != 1)
        throw std::invalid_argument("edge list: header must be '# vertices=N'");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        uint32_t u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("edge list: bad edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

uint32_t graph_distance(const Graph& g, uint32_t from, uint32_t to) {
    std::vector<uint32_t> dist(g.n_vertices(), UINT32_MAX);
    std::deque<uint32_t> q{from};
    dist[from] = 0;
    while (!q.empty()) {
        uint32_t v = q.front();
        q.pop_front();
        if (v == to) return dist[v];
        for (uint32_t w : g.adjacency[v])
            if (dist[w] == UINT32_MAX) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist[to];
}

} // namespace cplab
