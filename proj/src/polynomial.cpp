#include "noderel/polynomial.hpp"

namespace noderel {

RationalPolynomial scale(const Polynomial& a, const Rational& c) { return to_rational(a) * c; }

Rational evaluate(const Polynomial& a, const Rational& x) {
    if (a.is_zero()) {
        return Rational(0);
    }
    // Homogenized Horner: sum c_i num^i den^(d-i), then divide by den^d.
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    const auto& c = a.coeffs();
    Integer acc = c.back();
    Integer den_pow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        acc += c[i] * den_pow;
    }
    Rational out(acc, den_pow);
    out.canonicalize();
    return out;
}

Rational evaluate(const RationalPolynomial& a, const Rational& x) {
    Rational acc = 0;
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

int sign_at(const Polynomial& a, const Rational& x) {
    if (a.is_zero()) {
        return 0;
    }
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    const auto& c = a.coeffs();
    Integer acc = c.back();
    Integer den_pow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        acc += c[i] * den_pow;
    }
    return sgn(acc);
}

Polynomial one_minus_p_pow(std::size_t n) {
    std::vector<Integer> c(n + 1);
    Integer binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = (k % 2 == 0) ? binom : Integer(-binom);
        binom *= static_cast<unsigned long>(n - k);
        binom /= static_cast<unsigned long>(k + 1);
    }
    return Polynomial(std::move(c));
}

Polynomial power_one_minus_q(std::size_t l) {
    return Polynomial::constant(1) - one_minus_p_pow(l);
}

Integer content(const Polynomial& a) {
    Integer g = 0;
    for (const auto& x : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

Polynomial primitive_part(const Polynomial& a) {
    if (a.is_zero()) {
        return a;
    }
    Integer g = content(a);
    if (a.leading() < 0) {
        g = -g;
    }
    std::vector<Integer> c = a.coeffs();
    for (auto& x : c) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return Polynomial(std::move(c));
}

Polynomial clear_denominators(const RationalPolynomial& a) {
    Integer lcm = 1;
    for (const auto& x : a.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) {
        c.push_back(x.get_num() * (lcm / x.get_den()));
    }
    Polynomial out(std::move(c));
    if (out.is_zero()) {
        return out;
    }
    const Integer g = content(out);
    std::vector<Integer> reduced = out.coeffs();
    for (auto& x : reduced) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return Polynomial(std::move(reduced));
}

RationalPolynomial to_rational(const Polynomial& a) {
    std::vector<Rational> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) {
        c.emplace_back(x);
    }
    return RationalPolynomial(std::move(c));
}

std::string to_pretty(const Polynomial& a, char var) {
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = a.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        const bool negative = c[k] < 0;
        const Integer magnitude = abs(c[k]);
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (k == 0 || magnitude != 1) {
            out += magnitude.get_str();
        }
        if (k >= 1) {
            out += var;
        }
        if (k >= 2) {
            out += '^' + std::to_string(k);
        }
    }
    return out;
}

}  // namespace noderel
