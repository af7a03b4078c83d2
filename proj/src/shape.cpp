#include "noderel/shape.hpp"

#include "noderel/errors.hpp"

namespace noderel {

namespace {

void require_nonconstant(const Polynomial& f) {
    if (f.is_constant()) {
        throw DegenerateInputError("shape analysis needs a nonconstant polynomial");
    }
}

// Sign of f on the gap between two consecutive enclosures (or a boundary).
// Enclosure endpoints are never roots, so the shared endpoint works when the
// enclosures touch.
int gap_sign(const Polynomial& f, const Rational& left, const Rational& right) {
    return sign_at(f, left == right ? left : Rational((left + right) / 2));
}

std::vector<Extremum> extrema_from(const SignChanges& d) {
    std::vector<Extremum> out;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        out.push_back({d.roots[i], d.gap_signs[i] > 0 ? ExtremumKind::Max : ExtremumKind::Min});
    }
    return out;
}

std::vector<DecreaseInterval> decreases_from(const SignChanges& d) {
    std::vector<DecreaseInterval> out;
    for (std::size_t i = 0; i < d.gap_signs.size(); ++i) {
        if (d.gap_signs[i] >= 0) {
            continue;
        }
        DecreaseInterval interval;
        if (i > 0) {
            interval.start = d.roots[i - 1];
        }
        if (i < d.roots.size()) {
            interval.end = d.roots[i];
        }
        out.push_back(interval);
    }
    return out;
}

}  // namespace

SignChanges sign_changes(const Polynomial& f, const Rational& precision) {
    if (f.is_zero()) {
        throw DegenerateInputError("sign changes of the zero polynomial");
    }
    const auto roots = isolate_roots(f, precision);
    std::vector<int> signs;
    signs.reserve(roots.size() + 1);
    for (std::size_t i = 0; i <= roots.size(); ++i) {
        const Rational left = i == 0 ? Rational(0) : roots[i - 1].hi;
        const Rational right = i == roots.size() ? Rational(1) : roots[i].lo;
        signs.push_back(gap_sign(f, left, right));
    }

    SignChanges out;
    out.gap_signs.push_back(signs.front());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (signs[i + 1] != out.gap_signs.back()) {
            out.roots.push_back(roots[i]);
            out.gap_signs.push_back(signs[i + 1]);
        }
    }
    return out;
}

std::vector<Extremum> extrema(const Polynomial& f, const Rational& precision) {
    require_nonconstant(f);
    return extrema_from(sign_changes(derivative(f), precision));
}

std::vector<DecreaseInterval> decrease_intervals(const Polynomial& f, const Rational& precision) {
    require_nonconstant(f);
    return decreases_from(sign_changes(derivative(f), precision));
}

std::vector<IsolatingInterval> inflection_points(const Polynomial& f, const Rational& precision) {
    require_nonconstant(f);
    const Polynomial second = derivative(derivative(f));
    if (second.is_zero()) {
        return {};
    }
    return sign_changes(second, precision).roots;
}

ShapeReport analyze(const Polynomial& f, const Rational& precision) {
    require_nonconstant(f);
    const auto first = sign_changes(derivative(f), precision);
    ShapeReport report;
    report.extrema = extrema_from(first);
    report.decrease_intervals = decreases_from(first);
    report.inflections = inflection_points(f, precision);
    return report;
}

std::vector<Extremum> extrema(const ReliabilityPolynomial& r, const Rational& precision) {
    return extrema(r.poly(), precision);
}

std::vector<DecreaseInterval> decrease_intervals(const ReliabilityPolynomial& r,
                                                 const Rational& precision) {
    return decrease_intervals(r.poly(), precision);
}

std::vector<IsolatingInterval> inflection_points(const ReliabilityPolynomial& r,
                                                 const Rational& precision) {
    return inflection_points(r.poly(), precision);
}

ShapeReport analyze(const ReliabilityPolynomial& r, const Rational& precision) {
    return analyze(r.poly(), precision);
}

}  // namespace noderel
