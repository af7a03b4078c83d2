#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace noderel {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor sets are stored sorted and deduplicated, so membership tests are
/// logarithmic and two graphs compare equal iff they have the same labeled
/// edge set. Instances are immutable once built.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; endpoints must be in range and distinct.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    /// Builds a graph from per-vertex neighbor lists. Lists are sorted and
    /// deduplicated; asymmetric adjacency or loops are rejected.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Neighbor bitmask of v. Only valid for order() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    Graph() = default;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph edgeless(std::size_t n);

/// G[K_l]: vertex v becomes the block {v*l, ..., v*l + l - 1}; each block is a
/// clique and blocks of adjacent vertices are completely joined.
Graph lex_product_clique(const Graph& g, std::size_t l);

/// G with a new vertex n of degree 0.
Graph add_isolated(const Graph& g);
/// G with a new vertex n adjacent to every vertex of G.
Graph add_universal(const Graph& g);

/// True iff s is nonempty and induces a connected subgraph. Vertices in s
/// must be in range; repeats are ignored.
bool induced_connected(const Graph& g, std::span<const Vertex> s);

/// Mask form of induced_connected for graphs of order <= 64, given the
/// per-vertex neighbor masks.
bool induced_connected_mask(std::span<const std::uint64_t> neighbor_masks, std::uint64_t s) noexcept;

bool is_connected(const Graph& g);

}  // namespace noderel
