#include "noderel/roots.hpp"

#include <stdexcept>

#include "noderel/errors.hpp"

namespace noderel {

namespace {

// Positive multiple of (a mod b). b must have a positive leading coefficient,
// so every reduction step multiplies by a positive factor.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Integer& lb = bc.back();
    while (r.size() > db && !r.empty()) {
        const Integer lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& x : r) {
            x *= lb;
        }
        for (std::size_t i = 0; i <= db; ++i) {
            r[shift + i] -= lr * bc[i];
        }
        while (!r.empty() && r.back() == 0) {
            r.pop_back();
        }
        // Keep coefficients small; dividing by a positive content preserves sign.
        Integer g = 0;
        for (const auto& x : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
        if (g > 1) {
            for (auto& x : r) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            }
        }
    }
    return Polynomial(std::move(r));
}

Polynomial positive_leading(Polynomial a) {
    if (!a.is_zero() && a.leading() < 0) {
        return -a;
    }
    return a;
}

}  // namespace

Rational default_precision() { return Rational(1, 1'000'000); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = primitive_part(a);
    Polynomial y = primitive_part(b);
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        Polynomial r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) {
        return x;
    }
    if (x.degree() == 0) {
        return Polynomial::constant(1);
    }
    return x;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        if (a.is_zero()) {
            return {};
        }
        throw std::domain_error("divisor does not divide dividend");
    }
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer& lead = r[k + db];
        if (lead == 0) {
            continue;
        }
        if (!mpz_divisible_p(lead.get_mpz_t(), bc.back().get_mpz_t())) {
            throw std::domain_error("divisor does not divide dividend");
        }
        q[k] = lead / bc.back();
        for (std::size_t i = 0; i <= db; ++i) {
            r[k + i] -= q[k] * bc[i];
        }
    }
    for (const auto& x : r) {
        if (x != 0) {
            throw std::domain_error("divisor does not divide dividend");
        }
    }
    return Polynomial(std::move(q));
}

Polynomial square_free_part(const Polynomial& a) {
    if (a.is_zero()) {
        throw DegenerateInputError("square-free part of the zero polynomial");
    }
    const Polynomial pa = primitive_part(a);
    if (pa.degree() <= 0) {
        return Polynomial::constant(1);
    }
    return exact_quotient(pa, gcd(pa, derivative(pa)));
}

SturmChain::SturmChain(const Polynomial& a) {
    if (a.is_zero()) {
        throw DegenerateInputError("Sturm chain of the zero polynomial");
    }
    chain_.push_back(square_free_part(a));
    if (chain_.front().degree() <= 0) {
        return;
    }
    chain_.push_back(primitive_part(derivative(chain_.front())));
    while (chain_.back().degree() > 0) {
        const Polynomial& prev = chain_[chain_.size() - 2];
        const Polynomial& cur = chain_.back();
        Polynomial r = pseudo_remainder(prev, positive_leading(cur));
        if (r.is_zero()) {
            break;
        }
        // Divide by the positive content only, then negate: -rem(prev, cur).
        const Integer g = content(r);
        std::vector<Integer> c = r.coeffs();
        for (auto& x : c) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            x = -x;
        }
        chain_.emplace_back(std::move(c));
    }
}

std::size_t SturmChain::variations(const Rational& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& f : chain_) {
        const int s = sign_at(f, x);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

std::size_t SturmChain::count(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) {
        throw std::invalid_argument("Sturm count needs lo < hi");
    }
    const auto vlo = variations(lo);
    const auto vhi = variations(hi);
    return vlo >= vhi ? vlo - vhi : 0;
}

std::size_t SturmChain::count_open(const Rational& lo, const Rational& hi) const {
    const auto n = count(lo, hi);
    return (n > 0 && sign_at(square_free(), hi) == 0) ? n - 1 : n;
}

std::size_t sturm_count(const Polynomial& a, const Rational& lo, const Rational& hi) {
    return SturmChain(a).count(lo, hi);
}

namespace {

class Isolator {
public:
    Isolator(const SturmChain& chain, const Rational& precision)
        : chain_(chain), f_(chain.square_free()), precision_(precision) {}

    std::vector<IsolatingInterval> run() {
        const Rational zero(0);
        const Rational one(1);
        split(zero, one, chain_.count_open(zero, one));
        return std::move(out_);
    }

private:
    bool is_root(const Rational& x) const { return sign_at(f_, x) == 0; }

    // Emit every root in the open interval (a, b), which holds `c` of them.
    void split(const Rational& a, const Rational& b, std::size_t c) {
        if (c == 0) {
            return;
        }
        if (c == 1) {
            refine(a, b);
            return;
        }
        const Rational m = (a + b) / 2;
        const std::size_t left = chain_.count_open(a, m);
        if (is_root(m)) {
            split(a, m, left);
            const Rational left_edge = out_.empty() || !(out_.back().hi > a) ? a : out_.back().hi;
            const std::size_t before = out_.size();
            split(m, b, c - left - 1);
            const Rational right_edge = out_.size() > before ? out_[before].lo : b;
            out_.insert(out_.begin() + static_cast<std::ptrdiff_t>(before),
                        around_exact_root(m, left_edge, right_edge));
            return;
        }
        split(a, m, left);
        split(m, b, c - left);
    }

    // (a, b) holds exactly one root; bisect until narrow enough with
    // nonvanishing endpoints.
    void refine(Rational a, Rational b) {
        while (b - a > precision_ || is_root(a) || is_root(b)) {
            const Rational m = (a + b) / 2;
            if (is_root(m)) {
                out_.push_back(around_exact_root(m, a, b));
                return;
            }
            if (chain_.count_open(a, m) == 1) {
                b = m;
            } else {
                a = m;
            }
        }
        out_.push_back({a, b});
    }

    // Dyadic enclosure (m - w, m + w) of the exact root m inside (lo, hi).
    IsolatingInterval around_exact_root(const Rational& m, const Rational& lo,
                                        const Rational& hi) const {
        Rational w = precision_ / 2;
        const Rational room = std::min(m - lo, hi - m);
        Rational dyadic(1);
        while (dyadic >= w || dyadic >= room) {
            dyadic /= 2;
        }
        w = dyadic;
        while (is_root(m - w) || is_root(m + w) || chain_.count_open(m - w, m + w) != 1) {
            w /= 2;
        }
        return {m - w, m + w};
    }

    const SturmChain& chain_;
    const Polynomial& f_;
    Rational precision_;
    std::vector<IsolatingInterval> out_;
};

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const SturmChain& chain, const Rational& precision) {
    if (precision <= 0) {
        throw std::invalid_argument("isolation precision must be positive");
    }
    if (chain.square_free().degree() <= 0) {
        return {};
    }
    return Isolator(chain, precision).run();
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial& a, const Rational& precision) {
    return isolate_roots(SturmChain(a), precision);
}

}  // namespace noderel
