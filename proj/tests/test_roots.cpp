#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "noderel/errors.hpp"
#include "noderel/roots.hpp"
#include "test_support.hpp"

using namespace noderel;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return Polynomial(std::move(v));
}

// den * p - num, the primitive linear factor with root num/den.
Polynomial linear(const Rational& root) {
    return Polynomial(std::vector<Integer>{-root.get_num(), root.get_den()});
}

const Polynomial kP5Derivative = poly({5, -32, 63, -48, 15});

}  // namespace

TEST_CASE("gcd, exact quotient and square-free part") {
    const auto a = linear(Rational(1, 2)) * linear(Rational(1, 3));
    const auto b = linear(Rational(1, 2)) * linear(Rational(2, 3));
    CHECK(gcd(a, b) == linear(Rational(1, 2)));
    CHECK(gcd(a, poly({7})) == poly({1}));
    CHECK(exact_quotient(a, linear(Rational(1, 3))) == linear(Rational(1, 2)));
    CHECK_THROWS(exact_quotient(a, linear(Rational(1, 5))));

    const auto squared = a * a * linear(Rational(3, 4));
    CHECK(square_free_part(squared) == primitive_part(a * linear(Rational(3, 4))));
    CHECK_THROWS_AS(square_free_part(Polynomial()), DegenerateInputError);
}

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(poly({-1, 0, 4}), Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(kP5Derivative, Rational(0), Rational(1)) == 2);
    CHECK(sturm_count(poly({1, 0, 1}), Rational(0), Rational(1)) == 0);
    CHECK_THROWS_AS(sturm_count(Polynomial(), Rational(0), Rational(1)), DegenerateInputError);
    CHECK_THROWS(sturm_count(kP5Derivative, Rational(1), Rational(0)));
}

TEST_CASE("sturm_count agrees with a dense sign-sampling oracle on P5'") {
    // P5' has simple roots only, so sign changes on a fine grid count them.
    CHECK(testing::sampled_sign_changes(kP5Derivative, 10000) == 2);
}

TEST_CASE("half-open counting convention") {
    const auto f = linear(Rational(1, 2));
    CHECK(sturm_count(f, Rational(0), Rational(1, 2)) == 1);
    CHECK(sturm_count(f, Rational(1, 2), Rational(1)) == 0);
    CHECK(SturmChain(f).count_open(Rational(0), Rational(1, 2)) == 0);
}

TEST_CASE("isolate_roots examples") {
    const auto half = isolate_roots(poly({-1, 2}), default_precision());
    REQUIRE(half.size() == 1);
    CHECK(half[0].contains(Rational(1, 2)));
    CHECK(half[0].width() <= default_precision());

    const auto p5 = isolate_roots(kP5Derivative, Rational(1, 1000));
    REQUIRE(p5.size() == 2);
    // Reference critical points from an independent computer-algebra run.
    CHECK(p5[0].lo <= Rational(2827, 10000));
    CHECK(p5[0].hi >= Rational(2826, 10000));
    CHECK(p5[1].lo <= Rational(5879, 10000));
    CHECK(p5[1].hi >= Rational(5878, 10000));
    for (const auto& i : p5) {
        CHECK(i.width() <= Rational(1, 1000));
        CHECK(sign_at(kP5Derivative, i.lo) * sign_at(kP5Derivative, i.hi) < 0);
    }

    CHECK(isolate_roots(poly({0, -1, 1}), default_precision()).empty());
    CHECK_THROWS_AS(isolate_roots(Polynomial(), default_precision()), DegenerateInputError);
    CHECK(isolate_roots(poly({3}), default_precision()).empty());
}

TEST_CASE("exact dyadic roots get a proper enclosure") {
    // Roots at 1/2, 1/4 and 3/4 are hit exactly by bisection midpoints.
    const auto f = linear(Rational(1, 2)) * linear(Rational(1, 4)) * linear(Rational(3, 4));
    const auto roots = isolate_roots(f, Rational(1, 64));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].contains(Rational(1, 4)));
    CHECK(roots[1].contains(Rational(1, 2)));
    CHECK(roots[2].contains(Rational(3, 4)));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(sign_at(f, roots[i].lo) != 0);
        CHECK(sign_at(f, roots[i].hi) != 0);
        if (i > 0) {
            CHECK(roots[i - 1].hi <= roots[i].lo);
        }
    }
}

TEST_CASE("planted roots are recovered exactly") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> den_dist(2, 40);
    std::uniform_int_distribution<int> count_dist(1, 6);
    std::uniform_int_distribution<int> mult_dist(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<Rational> inside;
        Polynomial f = poly({1});
        const int factors = count_dist(rng);
        for (int i = 0; i < factors; ++i) {
            const long den = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(-den, 2 * den);
            Rational root(num_dist(rng), den);
            root.canonicalize();
            const int m = mult_dist(rng);
            for (int j = 0; j < m; ++j) {
                f = f * linear(root);
            }
            if (root > 0 && root < 1) {
                inside.insert(root);
            }
        }
        CHECK(SturmChain(f).count_open(Rational(0), Rational(1)) == inside.size());
        const auto roots = isolate_roots(f, Rational(1, 1 << 20));
        REQUIRE(roots.size() == inside.size());
        std::size_t i = 0;
        for (const auto& r : inside) {
            CHECK(roots[i].contains(r));
            CHECK(roots[i].width() <= Rational(1, 1 << 20));
            CHECK(SturmChain(f).count(roots[i].lo, roots[i].hi) == 1);
            ++i;
        }
    }
}

TEST_CASE("determinism") {
    CHECK(isolate_roots(kP5Derivative) == isolate_roots(kP5Derivative));
}
