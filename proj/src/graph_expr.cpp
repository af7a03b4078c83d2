#include "noderel/graph_expr.hpp"

#include <optional>
#include <stdexcept>

#include "noderel/errors.hpp"

namespace noderel {

struct GraphExpr::Node {
    Kind kind;
    std::optional<Graph> graph;
    std::string label;
    std::optional<GraphExpr> child;
    std::size_t l = 1;
};

GraphExpr GraphExpr::base(Graph g, std::string label) {
    return GraphExpr(std::make_shared<const Node>(
        Node{Kind::Base, std::move(g), std::move(label), std::nullopt, 1}));
}

GraphExpr GraphExpr::sub_clique(std::size_t l) const {
    if (l == 0) {
        throw InvalidOrderError("SubClique needs l >= 1");
    }
    return GraphExpr(std::make_shared<const Node>(Node{Kind::SubClique, std::nullopt, {}, *this, l}));
}

GraphExpr GraphExpr::add_isolated() const {
    return GraphExpr(
        std::make_shared<const Node>(Node{Kind::AddIsolated, std::nullopt, {}, *this, 1}));
}

GraphExpr GraphExpr::add_universal() const {
    return GraphExpr(
        std::make_shared<const Node>(Node{Kind::AddUniversal, std::nullopt, {}, *this, 1}));
}

GraphExpr::Kind GraphExpr::kind() const noexcept { return node_->kind; }

const GraphExpr& GraphExpr::child() const {
    if (!node_->child) {
        throw std::logic_error("leaf expression has no child");
    }
    return *node_->child;
}

std::size_t GraphExpr::clique_size() const {
    if (node_->kind != Kind::SubClique) {
        throw std::logic_error("not a SubClique node");
    }
    return node_->l;
}

const Graph& GraphExpr::graph() const {
    if (!node_->graph) {
        throw std::logic_error("not a leaf expression");
    }
    return *node_->graph;
}

const std::string& GraphExpr::label() const { return node_->label; }

std::uint64_t GraphExpr::order() const {
    switch (node_->kind) {
        case Kind::Base:
            return node_->graph->order();
        case Kind::SubClique: {
            const std::uint64_t inner = child().order();
            std::uint64_t out = 0;
            if (__builtin_mul_overflow(inner, std::uint64_t{node_->l}, &out)) {
                throw SizeLimitError("expression order overflows 64 bits", UINT64_MAX, UINT64_MAX);
            }
            return out;
        }
        case Kind::AddIsolated:
        case Kind::AddUniversal: {
            const std::uint64_t inner = child().order();
            if (inner == UINT64_MAX) {
                throw SizeLimitError("expression order overflows 64 bits", UINT64_MAX, UINT64_MAX);
            }
            return inner + 1;
        }
    }
    return 0;
}

std::size_t GraphExpr::depth() const {
    return node_->kind == Kind::Base ? 0 : 1 + child().depth();
}

namespace {

Graph realize_unchecked(const GraphExpr& e) {
    switch (e.kind()) {
        case GraphExpr::Kind::Base:
            return e.graph();
        case GraphExpr::Kind::SubClique:
            if (e.clique_size() == 1) {
                return realize_unchecked(e.child());
            }
            return lex_product_clique(realize_unchecked(e.child()), e.clique_size());
        case GraphExpr::Kind::AddIsolated:
            return add_isolated(realize_unchecked(e.child()));
        case GraphExpr::Kind::AddUniversal:
            return add_universal(realize_unchecked(e.child()));
    }
    throw std::logic_error("unknown expression kind");
}

}  // namespace

Graph realize(const GraphExpr& e, std::uint64_t cap) {
    std::uint64_t order = 0;
    try {
        order = e.order();
    } catch (const SizeLimitError&) {
        throw SizeLimitError("realized order overflows 64 bits (cap " + std::to_string(cap) + ")",
                             UINT64_MAX, cap);
    }
    if (order > cap) {
        throw SizeLimitError("realized order " + std::to_string(order) +
                                 " exceeds the realization cap " + std::to_string(cap),
                             order, cap);
    }
    return realize_unchecked(e);
}

}  // namespace noderel
