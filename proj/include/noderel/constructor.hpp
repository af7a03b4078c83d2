#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "noderel/graph_expr.hpp"
#include "noderel/reliability.hpp"
#include "noderel/shape.hpp"

namespace noderel {

/// Candidate clique sizes: 1, 2, ..., soft_cap, then doubling
/// (2 soft_cap, 4 soft_cap, ...) while <= hard_cap.
struct SearchPolicy {
    std::size_t soft_cap = 64;
    std::size_t hard_cap = 4096;

    std::vector<std::size_t> candidates() const;
};

struct ConstructionConfig {
    SearchPolicy policy;
    Rational precision = default_precision();
    std::size_t enumeration_cap = kDefaultEnumerationCap;
};

enum class StepKind { Base, Isolated, Universal };

struct StepRecord {
    std::size_t index = 0;
    StepKind kind = StepKind::Base;
    std::size_t l = 1;  // clique size (1 for the base record)
    std::uint64_t order = 0;
    long degree = 0;
    std::size_t num_extrema = 0;
    std::size_t num_decrease_intervals = 0;
    std::size_t num_inflections = 0;
    std::vector<std::size_t> rejected;  // candidate l values that failed certification
    double wall_ms = 0;
};

struct ConstructionTrace {
    std::vector<StepRecord> steps;
};

/// Thrown when no candidate clique size up to the hard cap certifies. The
/// trace holds every step accepted before the failure and, last, the failed
/// step with all rejected candidates.
class SearchExhaustedError : public std::runtime_error {
public:
    SearchExhaustedError(const std::string& what, ConstructionTrace trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}

    const ConstructionTrace& trace() const noexcept { return trace_; }

private:
    ConstructionTrace trace_;
};

/// An expression with its exact reliability and the shape report certifying it.
struct CertifiedExpr {
    GraphExpr expr;
    ReliabilityPolynomial rel;
    ShapeReport shape;
};

struct StepResult {
    CertifiedExpr result;
    StepRecord record;
};

/// Certifies `e` as a construction input.
CertifiedExpr certify(const GraphExpr& e, const ConstructionConfig& config = {});

/// F -> F[K_l] u K_1 for the least l under the policy whose shape report has
/// the extrema of F (same kinds, same order) plus one trailing maximum.
/// Requires F connected with extrema max, min, ..., min. Throws
/// PreconditionError or SearchExhaustedError.
StepResult step_isolated(const CertifiedExpr& f, const ConstructionConfig& config = {});

/// F -> F[K_l] + K_1 for the least l whose shape report has the extrema of F
/// plus one trailing minimum. Requires F disconnected with extrema
/// max, min, ..., max.
StepResult step_universal(const CertifiedExpr& f, const ConstructionConfig& config = {});

struct Construction {
    CertifiedExpr certificate;
    ConstructionTrace trace;
};

/// Connected expression whose reliability has at least k certified maximal
/// intervals of decrease in (0, 1). Starts from P_5 and adds one interval per
/// (step_isolated, step_universal) pair. Throws DomainError for k = 0.
Construction construct_k_intervals(std::size_t k, const ConstructionConfig& config = {});

const char* to_string(StepKind kind);

}  // namespace noderel
