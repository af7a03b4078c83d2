#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "noderel/rational.hpp"

namespace noderel {

/// Dense univariate polynomial with exact coefficients, stored ascending.
///
/// The representation is always normalized: no trailing zero coefficients,
/// so the zero polynomial has an empty coefficient list and degree -1.
template <class Scalar>
class BasicPolynomial {
public:
    BasicPolynomial() = default;
    explicit BasicPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    BasicPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

    static BasicPolynomial constant(Scalar c) { return BasicPolynomial(std::vector<Scalar>{std::move(c)}); }
    static BasicPolynomial monomial(Scalar c, std::size_t k) {
        std::vector<Scalar> v(k + 1);
        v[k] = std::move(c);
        return BasicPolynomial(std::move(v));
    }
    /// The indeterminate p.
    static BasicPolynomial identity() { return monomial(Scalar(1), 1); }

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of p^k (zero beyond the degree).
    Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    const Scalar& leading() const { return coeffs_.back(); }

    BasicPolynomial& operator+=(const BasicPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    BasicPolynomial& operator-=(const BasicPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }
    BasicPolynomial& operator*=(const Scalar& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
    friend BasicPolynomial operator-(BasicPolynomial a) {
        for (auto& x : a.coeffs_) {
            x = -x;
        }
        return a;
    }
    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return BasicPolynomial(std::move(out));
    }
    friend BasicPolynomial operator*(BasicPolynomial a, const Scalar& c) { return a *= c; }

    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Scalar> coeffs_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

template <class Scalar>
BasicPolynomial<Scalar> add(const BasicPolynomial<Scalar>& a, const BasicPolynomial<Scalar>& b) {
    return a + b;
}

template <class Scalar>
BasicPolynomial<Scalar> mul(const BasicPolynomial<Scalar>& a, const BasicPolynomial<Scalar>& b) {
    return a * b;
}

template <class Scalar>
BasicPolynomial<Scalar> scale(const BasicPolynomial<Scalar>& a, const Scalar& c) {
    return a * c;
}

/// Rational multiple of an integer polynomial.
RationalPolynomial scale(const Polynomial& a, const Rational& c);

/// outer(inner(p)), by Horner's scheme over polynomials.
template <class Scalar>
BasicPolynomial<Scalar> compose(const BasicPolynomial<Scalar>& outer,
                                const BasicPolynomial<Scalar>& inner) {
    BasicPolynomial<Scalar> acc;
    const auto& c = outer.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * inner + BasicPolynomial<Scalar>::constant(c[i]);
    }
    return acc;
}

template <class Scalar>
BasicPolynomial<Scalar> derivative(const BasicPolynomial<Scalar>& a) {
    const auto& c = a.coeffs();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<Scalar> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out[i - 1] = c[i] * static_cast<unsigned long>(i);
    }
    return BasicPolynomial<Scalar>(std::move(out));
}

/// Exact value at a rational point.
Rational evaluate(const Polynomial& a, const Rational& x);
Rational evaluate(const RationalPolynomial& a, const Rational& x);

/// Sign (-1, 0, +1) of a at x, computed in integers without forming the
/// rational value.
int sign_at(const Polynomial& a, const Rational& x);

/// 1 - (1 - p)^l, expanded with binomial coefficients.
Polynomial power_one_minus_q(std::size_t l);

/// (1 - p)^n.
Polynomial one_minus_p_pow(std::size_t n);

/// Largest positive integer dividing every coefficient (0 for the zero
/// polynomial).
Integer content(const Polynomial& a);

/// a / content(a), with a positive leading coefficient.
Polynomial primitive_part(const Polynomial& a);

/// Positive multiple of a with integer coefficients and no common factor.
Polynomial clear_denominators(const RationalPolynomial& a);

RationalPolynomial to_rational(const Polynomial& a);

/// "3p^5-12p^4+21p^3-16p^2+5p" (descending powers; "0" for zero).
std::string to_pretty(const Polynomial& a, char var = 'p');

}  // namespace noderel
