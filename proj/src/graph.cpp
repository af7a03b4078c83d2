#include "noderel/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "noderel/errors.hpp"

namespace noderel {

namespace {

void require_order(std::size_t n) {
    if (n == 0) {
        throw InvalidOrderError("graph order must be at least 1");
    }
    if (n > std::size_t{UINT32_MAX}) {
        throw SizeLimitError("graph order exceeds 32-bit vertex indices", n, UINT32_MAX);
    }
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    require_order(n);
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw IndexError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
    require_order(adj.size());
    const auto n = adj.size();
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto& nb = adj[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        if (!nb.empty() && nb.back() >= n) {
            throw IndexError("neighbor " + std::to_string(nb.back()) + " of vertex " +
                             std::to_string(v) + " is out of range");
        }
        if (std::binary_search(nb.begin(), nb.end(), static_cast<Vertex>(v))) {
            throw SelfLoopError("self-loop at vertex " + std::to_string(v));
        }
        degree_sum += nb.size();
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (Vertex u : adj[v]) {
            if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<Vertex>(v))) {
                throw std::invalid_argument("adjacency is not symmetric between " +
                                            std::to_string(v) + " and " + std::to_string(u));
            }
        }
    }
    Graph g;
    g.adj_ = std::move(adj);
    g.edge_count_ = degree_sum / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    if (order() > 64) {
        throw SizeLimitError("neighbor masks need order <= 64", order(), 64);
    }
    std::uint64_t mask = 0;
    for (Vertex u : adj_.at(v)) {
        mask |= std::uint64_t{1} << u;
    }
    return mask;
}

Graph path(std::size_t n) {
    require_order(n);
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
    require_order(n);
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        adj[v].reserve(n - 1);
        for (Vertex u = 0; u < n; ++u) {
            if (u != v) {
                adj[v].push_back(u);
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph edgeless(std::size_t n) {
    require_order(n);
    return Graph::from_edge_list(n, {});
}

Graph lex_product_clique(const Graph& g, std::size_t l) {
    if (l == 0) {
        throw InvalidOrderError("clique size l must be at least 1");
    }
    const std::size_t n = g.order();
    require_order(n * l);
    std::vector<std::vector<Vertex>> adj(n * l);
    for (Vertex v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < l; ++i) {
            auto& row = adj[v * l + i];
            row.reserve(l - 1 + nb.size() * l);
            for (std::size_t j = 0; j < l; ++j) {
                if (j != i) {
                    row.push_back(static_cast<Vertex>(v * l + j));
                }
            }
            for (Vertex u : nb) {
                for (std::size_t j = 0; j < l; ++j) {
                    row.push_back(static_cast<Vertex>(u * l + j));
                }
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph add_isolated(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.order() + 1);
    for (Vertex v = 0; v < g.order(); ++v) {
        adj[v] = g.neighbors(v);
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph add_universal(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (Vertex v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v);
        adj[v].push_back(n);
        adj[n].push_back(v);
    }
    return Graph::from_adjacency(std::move(adj));
}

bool induced_connected(const Graph& g, std::span<const Vertex> s) {
    if (s.empty()) {
        return false;
    }
    std::vector<char> in_set(g.order(), 0);
    std::size_t members = 0;
    for (Vertex v : s) {
        if (v >= g.order()) {
            throw IndexError("vertex " + std::to_string(v) + " is out of range");
        }
        if (!in_set[v]) {
            in_set[v] = 1;
            ++members;
        }
    }
    std::vector<Vertex> stack{s.front()};
    in_set[s.front()] = 2;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (in_set[u] == 1) {
                in_set[u] = 2;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == members;
}

bool induced_connected_mask(std::span<const std::uint64_t> neighbor_masks, std::uint64_t s) noexcept {
    if (s == 0) {
        return false;
    }
    std::uint64_t reached = s & (~s + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
        std::uint64_t next = 0;
        while (frontier != 0) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= neighbor_masks[v];
        }
        next &= s & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == s;
}

bool is_connected(const Graph& g) {
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < all.size(); ++v) {
        all[v] = v;
    }
    return induced_connected(g, all);
}

}  // namespace noderel
