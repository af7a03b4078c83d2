#include <doctest.h>

#include <random>

#include "noderel/polynomial.hpp"

using namespace noderel;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return Polynomial(std::move(v));
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<std::size_t> degree(0, max_degree);
    std::vector<Integer> v(degree(rng) + 1);
    for (auto& x : v) {
        x = coeff(rng);
    }
    return Polynomial(std::move(v));
}

const Polynomial kP5 = poly({0, 5, -16, 21, -12, 3});

}  // namespace

TEST_CASE("normalization") {
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(poly({0, 0}).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().coeffs().empty());
}

TEST_CASE("ring operations") {
    const Polynomial q = poly({1, -1});
    CHECK(add(kP5, Polynomial()) == kP5);
    CHECK(mul(q, q) == poly({1, -2, 1}));
    CHECK(scale(poly({0, 0, 1}), Integer(0)).is_zero());
    CHECK(scale(poly({0, 0, 1}), Rational(0)).is_zero());
    CHECK(scale(poly({2, 4}), Rational(1, 2)) == RationalPolynomial{Rational(1), Rational(2)});
    CHECK(kP5 - kP5 == Polynomial());
    CHECK(-q == poly({-1, 1}));
}

TEST_CASE("compose") {
    const Polynomial x2 = poly({0, 0, 1});
    CHECK(compose(x2, power_one_minus_q(2)) == poly({0, 0, 4, -4, 1}));
    const Polynomial inner = poly({3, -1, 7});
    CHECK(compose(Polynomial::identity(), inner) == inner);
    CHECK(compose(kP5, Polynomial::identity()) == kP5);
    CHECK(compose(poly({5}), inner) == poly({5}));
}

TEST_CASE("derivative and evaluation") {
    CHECK(derivative(kP5) == poly({5, -32, 63, -48, 15}));
    CHECK(derivative(poly({7})).is_zero());
    CHECK(evaluate(kP5, Rational(1)) == 1);
    CHECK(evaluate(kP5, Rational(0)) == 0);
    CHECK(evaluate(kP5, Rational(1, 2)) == Rational(15, 32));
    CHECK(evaluate(to_rational(kP5), Rational(1, 2)) == Rational(15, 32));
    CHECK(sign_at(kP5, Rational(1, 2)) == 1);
    CHECK(sign_at(poly({-1, 2}), Rational(1, 2)) == 0);
    CHECK(sign_at(poly({-1, 2}), Rational(1, 3)) == -1);
}

TEST_CASE("power_one_minus_q") {
    CHECK(power_one_minus_q(1) == Polynomial::identity());
    CHECK(power_one_minus_q(2) == poly({0, 2, -1}));
    CHECK(power_one_minus_q(3) == poly({0, 3, -3, 1}));
    for (std::size_t l = 1; l <= 40; ++l) {
        const auto f = power_one_minus_q(l);
        CHECK(evaluate(f, Rational(0)) == 0);
        CHECK(evaluate(f, Rational(1)) == 1);
        CHECK(f.degree() == static_cast<long>(l));
    }
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly(rng, 6);
        const auto b = random_poly(rng, 6);
        const auto c = random_poly(rng, 6);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(compose(a, Polynomial::identity()) == a);
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
        if (!a.is_constant() && !b.is_constant()) {
            CHECK(compose(a, b).degree() == a.degree() * b.degree());
        }
        // compose agrees with pointwise evaluation
        const Rational x(static_cast<long>(trial % 7) - 3, 5);
        CHECK(evaluate(compose(a, b), x) == evaluate(a, evaluate(b, x)));
    }
}

TEST_CASE("content and primitive part") {
    CHECK(content(poly({4, -6, 8})) == 2);
    CHECK(primitive_part(poly({4, -6, -8})) == poly({-2, 3, 4}));
    CHECK(clear_denominators(RationalPolynomial{Rational(1, 2), Rational(1, 3)}) == poly({3, 2}));
}

TEST_CASE("pretty printing") {
    CHECK(to_pretty(kP5) == "3p^5-12p^4+21p^3-16p^2+5p");
    CHECK(to_pretty(Polynomial::identity()) == "p");
    CHECK(to_pretty(poly({1, -1})) == "-p+1");
    CHECK(to_pretty(poly({0, 3, -4, 2})) == "2p^3-4p^2+3p");
    CHECK(to_pretty(Polynomial()) == "0");
    CHECK(to_pretty(poly({-7})) == "-7");
}
