#include "noderel/constructor.hpp"

#include <chrono>
#include <functional>

#include "noderel/errors.hpp"

namespace noderel {

namespace {

std::vector<ExtremumKind> kinds_of(const ShapeReport& report) {
    std::vector<ExtremumKind> out;
    out.reserve(report.extrema.size());
    for (const auto& e : report.extrema) {
        out.push_back(e.kind);
    }
    return out;
}

bool alternates_from_max(const std::vector<ExtremumKind>& kinds) {
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (kinds[i] != (i % 2 == 0 ? ExtremumKind::Max : ExtremumKind::Min)) {
            return false;
        }
    }
    return true;
}

StepRecord record_for(const CertifiedExpr& c, StepKind kind, std::size_t l) {
    StepRecord r;
    r.kind = kind;
    r.l = l;
    r.order = c.rel.order();
    r.degree = c.rel.poly().degree();
    r.num_extrema = c.shape.extrema.size();
    r.num_decrease_intervals = c.shape.num_decrease_intervals();
    r.num_inflections = c.shape.num_inflections();
    return r;
}

// Shared l-search: try candidates in policy order and accept the first whose
// exact shape report has exactly the expected extremum kinds.
StepResult search(const CertifiedExpr& f, StepKind kind, ExtremumKind appended,
                  const ConstructionConfig& config,
                  const std::function<GraphExpr(const GraphExpr&)>& wrap,
                  const std::function<ReliabilityPolynomial(const ReliabilityPolynomial&)>& rule) {
    const auto start = std::chrono::steady_clock::now();
    auto expected = kinds_of(f.shape);
    expected.push_back(appended);

    std::vector<std::size_t> rejected;
    for (const std::size_t l : config.policy.candidates()) {
        ReliabilityPolynomial rel = rule(apply_sub_clique(f.rel, l));
        ShapeReport shape = analyze(rel, config.precision);
        if (kinds_of(shape) != expected) {
            rejected.push_back(l);
            continue;
        }
        CertifiedExpr result{wrap(f.expr.sub_clique(l)), std::move(rel), std::move(shape)};
        StepRecord record = record_for(result, kind, l);
        record.rejected = std::move(rejected);
        record.wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return {std::move(result), std::move(record)};
    }

    StepRecord failed = record_for(f, kind, 0);
    failed.rejected = std::move(rejected);
    failed.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    throw SearchExhaustedError(std::string("no clique size up to ") +
                                   std::to_string(config.policy.hard_cap) + " certifies the " +
                                   to_string(kind) + " step",
                               ConstructionTrace{{failed}});
}

}  // namespace

std::vector<std::size_t> SearchPolicy::candidates() const {
    if (soft_cap == 0 || hard_cap == 0) {
        throw DomainError("l-search caps must be positive");
    }
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= soft_cap && l <= hard_cap; ++l) {
        out.push_back(l);
    }
    for (std::size_t l = soft_cap * 2; l <= hard_cap; l *= 2) {
        out.push_back(l);
    }
    return out;
}

const char* to_string(StepKind kind) {
    switch (kind) {
        case StepKind::Base:
            return "base";
        case StepKind::Isolated:
            return "isolated";
        case StepKind::Universal:
            return "universal";
    }
    return "?";
}

CertifiedExpr certify(const GraphExpr& e, const ConstructionConfig& config) {
    ReliabilityPolynomial rel = rel_algebra(e, config.enumeration_cap);
    ShapeReport shape = analyze(rel, config.precision);
    return {e, std::move(rel), std::move(shape)};
}

StepResult step_isolated(const CertifiedExpr& f, const ConstructionConfig& config) {
    const auto kinds = kinds_of(f.shape);
    if (!f.rel.connected() || kinds.empty() || !alternates_from_max(kinds) ||
        kinds.back() != ExtremumKind::Min) {
        throw PreconditionError(
            "isolated-vertex step needs a connected graph whose extrema alternate max, min, ..., "
            "min");
    }
    return search(f, StepKind::Isolated, ExtremumKind::Max, config,
                  [](const GraphExpr& e) { return e.add_isolated(); }, apply_add_isolated);
}

StepResult step_universal(const CertifiedExpr& f, const ConstructionConfig& config) {
    const auto kinds = kinds_of(f.shape);
    if (f.rel.connected() || kinds.empty() || !alternates_from_max(kinds) ||
        kinds.back() != ExtremumKind::Max) {
        throw PreconditionError(
            "universal-vertex step needs a disconnected graph whose extrema alternate max, min, "
            "..., max");
    }
    return search(f, StepKind::Universal, ExtremumKind::Min, config,
                  [](const GraphExpr& e) { return e.add_universal(); }, apply_add_universal);
}

Construction construct_k_intervals(std::size_t k, const ConstructionConfig& config) {
    if (k == 0) {
        throw DomainError("k must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();
    Construction out{certify(GraphExpr::base(path(5), "P5"), config), {}};
    StepRecord base = record_for(out.certificate, StepKind::Base, 1);
    base.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.trace.steps.push_back(std::move(base));

    while (out.certificate.shape.num_decrease_intervals() < k) {
        for (auto* step : {&step_isolated, &step_universal}) {
            try {
                StepResult r = (*step)(out.certificate, config);
                r.record.index = out.trace.steps.size();
                out.trace.steps.push_back(std::move(r.record));
                out.certificate = std::move(r.result);
            } catch (const SearchExhaustedError& e) {
                ConstructionTrace partial = out.trace;
                for (auto record : e.trace().steps) {
                    record.index = partial.steps.size();
                    partial.steps.push_back(std::move(record));
                }
                throw SearchExhaustedError(e.what(), std::move(partial));
            }
        }
    }
    return out;
}

}  // namespace noderel
