#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "noderel/graph.hpp"
#include "noderel/graph_expr.hpp"
#include "noderel/polynomial.hpp"

namespace noderel {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Node reliability Rel(G; p) together with the order of G and whether G is
/// connected.
///
/// Construction checks Rel(0) = 0, Rel(1) = [connected] and degree <= order.
/// The range condition 0 <= Rel(p) <= 1 is a sampled property and is checked
/// separately by `within_unit_range`.
class ReliabilityPolynomial {
public:
    ReliabilityPolynomial(Polynomial poly, std::uint64_t order, bool connected);

    const Polynomial& poly() const noexcept { return poly_; }
    std::uint64_t order() const noexcept { return order_; }
    bool connected() const noexcept { return connected_; }

    friend bool operator==(const ReliabilityPolynomial&, const ReliabilityPolynomial&) = default;

private:
    Polynomial poly_;
    std::uint64_t order_;
    bool connected_;
};

/// True iff 0 <= Rel(p) <= 1 at the `samples` points k / (samples + 1).
bool within_unit_range(const ReliabilityPolynomial& r, std::size_t samples = 1000);

/// N_i, i = 1..n: the number of connected induced subgraphs on i vertices.
/// Stored 0-based, so counts[i - 1] = N_i.
struct SubgraphCountVector {
    std::vector<std::uint64_t> counts;
};

/// Counts by visiting every vertex subset. Throws SizeLimitError when the
/// order exceeds `cap` (at most 63).
SubgraphCountVector subgraph_counts(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// sum_i N_i p^i (1 - p)^(n - i).
Polynomial assemble(const SubgraphCountVector& counts);

/// Reliability by exhaustive enumeration (the reference oracle).
ReliabilityPolynomial rel_enumerate(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

// Single composition rules applied to the reliability of the child.
ReliabilityPolynomial apply_sub_clique(const ReliabilityPolynomial& r, std::size_t l);
ReliabilityPolynomial apply_add_isolated(const ReliabilityPolynomial& r);
ReliabilityPolynomial apply_add_universal(const ReliabilityPolynomial& r);

/// Reliability of an expression by the composition rules, bottom-up:
///   SubClique(l):  R(1 - (1 - p)^l)
///   AddIsolated:   p (1 - p)^(n - 1) + (1 - p) R(p),  n = order after adding
///   AddUniversal:  p + (1 - p) R(p)
/// Leaves are enumerated, subject to `cap`.
ReliabilityPolynomial rel_algebra(const GraphExpr& e, std::size_t cap = kDefaultEnumerationCap);

struct McEstimate {
    double estimate;
    double std_error;
};

/// Monte-Carlo estimate of Rel(G; p).
///
/// Each trial draws one uniform double per vertex from std::mt19937_64
/// seeded with `seed`, using the top 53 bits of each output
/// ((x >> 11) * 2^-53), and keeps the vertex iff the draw is below p.
/// The result is the fraction of trials whose kept set is connected and
/// nonempty, with binomial standard error sqrt(f (1 - f) / trials).
McEstimate mc_estimate(const Graph& g, const Rational& p, std::uint64_t trials,
                       std::uint64_t seed);

}  // namespace noderel
