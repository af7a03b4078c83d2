#pragma once

// Test-only oracles. They deliberately avoid the library's enumeration,
// composition and root-isolation code paths.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "noderel/graph.hpp"
#include "noderel/polynomial.hpp"

namespace noderel::testing {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

inline bool is_simple(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.adjacent(v, v)) {
            return false;
        }
        for (Vertex u : g.neighbors(v)) {
            if (!g.adjacent(u, v)) {
                return false;
            }
        }
    }
    return true;
}

/// Connectivity of the subgraph induced by `keep` via union-find over edges.
inline bool induced_connected_uf(const Graph& g, const std::vector<bool>& keep) {
    std::vector<std::size_t> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t components = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        components += keep[v] ? 1 : 0;
    }
    if (components == 0) {
        return false;
    }
    for (const auto& [u, v] : g.edges()) {
        if (keep[u] && keep[v]) {
            const auto a = find(u);
            const auto b = find(v);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

inline bool connected_by_union_find(const Graph& g) {
    return induced_connected_uf(g, std::vector<bool>(g.order(), true));
}

/// Rel(G; p) summed term by term: each connected subset S contributes
/// p^|S| (1 - p)^(n - |S|), expanded by repeated multiplication.
inline Polynomial brute_force_reliability(const Graph& g) {
    const std::size_t n = g.order();
    const Polynomial p{Integer(0), Integer(1)};
    const Polynomial q{Integer(1), Integer(-1)};
    std::vector<Polynomial> p_pow{Polynomial{Integer(1)}};
    std::vector<Polynomial> q_pow{Polynomial{Integer(1)}};
    for (std::size_t i = 1; i <= n; ++i) {
        p_pow.push_back(p_pow.back() * p);
        q_pow.push_back(q_pow.back() * q);
    }
    Polynomial total;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        std::vector<bool> keep(n);
        std::size_t size = 0;
        for (std::size_t v = 0; v < n; ++v) {
            keep[v] = (s >> v) & 1;
            size += keep[v] ? 1 : 0;
        }
        if (induced_connected_uf(g, keep)) {
            total += p_pow[size] * q_pow[n - size];
        }
    }
    return total;
}

/// Every labeled simple graph on n vertices (2^C(n,2) of them).
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1) {
                edges.push_back(slots[i]);
            }
        }
        out.push_back(Graph::from_edge_list(n, edges));
    }
    return out;
}

/// Number of sign changes of f over the grid k / samples, k = 1..samples-1,
/// skipping exact zeros. Dense-sampling oracle for root counts.
inline std::size_t sampled_sign_changes(const Polynomial& f, unsigned long samples) {
    std::size_t changes = 0;
    int last = 0;
    for (unsigned long k = 1; k < samples; ++k) {
        const Rational x(k, samples);
        const int s = sgn(evaluate(f, x));
        if (s != 0 && last != 0 && s != last) {
            ++changes;
        }
        if (s != 0) {
            last = s;
        }
    }
    return changes;
}

}  // namespace noderel::testing
