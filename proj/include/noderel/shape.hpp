#pragma once

#include <optional>
#include <vector>

#include "noderel/reliability.hpp"
#include "noderel/roots.hpp"

namespace noderel {

enum class ExtremumKind { Max, Min };

struct Extremum {
    IsolatingInterval location;
    ExtremumKind kind;

    friend bool operator==(const Extremum&, const Extremum&) = default;
};

/// A maximal open subinterval of (0, 1) on which the derivative is negative.
/// Each end is the enclosure of the critical point where the decrease starts
/// or stops; an empty end is the boundary (0 on the left, 1 on the right).
struct DecreaseInterval {
    std::optional<IsolatingInterval> start;
    std::optional<IsolatingInterval> end;

    friend bool operator==(const DecreaseInterval&, const DecreaseInterval&) = default;
};

struct ShapeReport {
    std::vector<Extremum> extrema;
    std::vector<DecreaseInterval> decrease_intervals;
    std::vector<IsolatingInterval> inflections;

    std::size_t num_decrease_intervals() const { return decrease_intervals.size(); }
    std::size_t num_inflections() const { return inflections.size(); }

    friend bool operator==(const ShapeReport&, const ShapeReport&) = default;
};

/// Roots in (0, 1) at which f changes sign, with the sign of f on each of the
/// gaps they cut (0, 1) into. `gap_signs` has one more entry than `roots`;
/// roots of even multiplicity are absorbed into their gap.
struct SignChanges {
    std::vector<IsolatingInterval> roots;
    std::vector<int> gap_signs;
};

/// Throws DegenerateInputError if f is zero.
SignChanges sign_changes(const Polynomial& f, const Rational& precision = default_precision());

// All of the following throw DegenerateInputError for a constant polynomial.

std::vector<Extremum> extrema(const Polynomial& f, const Rational& precision = default_precision());
std::vector<DecreaseInterval> decrease_intervals(const Polynomial& f,
                                                 const Rational& precision = default_precision());
std::vector<IsolatingInterval> inflection_points(const Polynomial& f,
                                                 const Rational& precision = default_precision());
ShapeReport analyze(const Polynomial& f, const Rational& precision = default_precision());

std::vector<Extremum> extrema(const ReliabilityPolynomial& r,
                              const Rational& precision = default_precision());
std::vector<DecreaseInterval> decrease_intervals(const ReliabilityPolynomial& r,
                                                 const Rational& precision = default_precision());
std::vector<IsolatingInterval> inflection_points(const ReliabilityPolynomial& r,
                                                 const Rational& precision = default_precision());
ShapeReport analyze(const ReliabilityPolynomial& r, const Rational& precision = default_precision());

}  // namespace noderel
