#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "noderel/graph.hpp"

namespace noderel {

inline constexpr std::uint64_t kDefaultRealizationCap = 1'000'000;

/// Expression tree over explicit base graphs with the unary operators
/// SubClique(l) (G -> G[K_l]), AddIsolated (F -> F u K_1) and AddUniversal
/// (F -> F + K_1).
///
/// Nodes are shared and immutable, so copying an expression is cheap and
/// subexpressions can be reused across candidate constructions.
class GraphExpr {
public:
    enum class Kind { Base, SubClique, AddIsolated, AddUniversal };

    /// Leaf. `label` is the DSL spelling of the leaf (e.g. "P5"); leave it
    /// empty for graphs that have no textual form.
    static GraphExpr base(Graph g, std::string label = {});

    GraphExpr sub_clique(std::size_t l) const;
    GraphExpr add_isolated() const;
    GraphExpr add_universal() const;

    Kind kind() const noexcept;
    /// Child of a unary node. Throws std::logic_error on a leaf.
    const GraphExpr& child() const;
    /// Clique size of a SubClique node. Throws std::logic_error otherwise.
    std::size_t clique_size() const;
    /// Base graph of a leaf. Throws std::logic_error otherwise.
    const Graph& graph() const;
    const std::string& label() const;

    /// Order of the realized graph, without realizing it. Throws
    /// SizeLimitError if it does not fit in 64 bits.
    std::uint64_t order() const;
    /// Number of operator nodes above the leaf.
    std::size_t depth() const;

private:
    struct Node;
    explicit GraphExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Explicit graph for an expression. Throws SizeLimitError carrying the
/// would-be order when it exceeds `cap`.
Graph realize(const GraphExpr& e, std::uint64_t cap = kDefaultRealizationCap);

}  // namespace noderel
