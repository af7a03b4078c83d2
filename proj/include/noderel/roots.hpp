#pragma once

#include <cstddef>
#include <vector>

#include "noderel/polynomial.hpp"

namespace noderel {

/// 10^-6, the default width of refined root enclosures.
Rational default_precision();

/// Rational interval (lo, hi) enclosing exactly one distinct real root of
/// some polynomial. Endpoints produced by isolate_roots are dyadic and never
/// roots themselves.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo < x && x < hi; }

    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Primitive gcd over Z[p], positive leading coefficient.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// a / b for b dividing a exactly in Z[p]; throws std::domain_error otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Primitive square-free part a / gcd(a, a').
Polynomial square_free_part(const Polynomial& a);

/// Sturm chain of the square-free part of a polynomial, built from a
/// sign-preserving primitive pseudo-remainder sequence so that all
/// arithmetic stays in integers.
class SturmChain {
public:
    /// Throws DegenerateInputError for the zero polynomial.
    explicit SturmChain(const Polynomial& a);

    const Polynomial& square_free() const { return chain_.front(); }
    const std::vector<Polynomial>& chain() const { return chain_; }

    /// Sign variations of the chain at x (zeros skipped).
    std::size_t variations(const Rational& x) const;

    /// Distinct real roots in the half-open interval (lo, hi].
    std::size_t count(const Rational& lo, const Rational& hi) const;

    /// Distinct real roots in the open interval (lo, hi).
    std::size_t count_open(const Rational& lo, const Rational& hi) const;

private:
    std::vector<Polynomial> chain_;
};

/// Number of distinct real roots of a in (lo, hi]. Requires lo < hi; throws
/// DegenerateInputError for the zero polynomial.
std::size_t sturm_count(const Polynomial& a, const Rational& lo, const Rational& hi);

/// Disjoint enclosures, sorted ascending, of every distinct root of a in the
/// open interval (0, 1), each refined to width <= precision. Roots exactly
/// at 0 or 1 are not reported.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& a,
                                             const Rational& precision = default_precision());
std::vector<IsolatingInterval> isolate_roots(const SturmChain& chain, const Rational& precision);

}  // namespace noderel
