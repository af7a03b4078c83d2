#include "noderel/reliability.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "noderel/errors.hpp"

namespace noderel {

ReliabilityPolynomial::ReliabilityPolynomial(Polynomial poly, std::uint64_t order, bool connected)
    : poly_(std::move(poly)), order_(order), connected_(connected) {
    if (order_ == 0) {
        throw InvalidOrderError("reliability polynomial of an empty graph");
    }
    if (poly_.coeff(0) != 0) {
        throw std::logic_error("reliability polynomial must vanish at p = 0");
    }
    if (poly_.degree() > static_cast<long>(std::min<std::uint64_t>(order_, LONG_MAX))) {
        throw std::logic_error("reliability polynomial degree exceeds the graph order");
    }
    Integer at_one = 0;
    for (const auto& c : poly_.coeffs()) {
        at_one += c;
    }
    if (at_one != (connected_ ? 1 : 0)) {
        throw std::logic_error("reliability at p = 1 is " + at_one.get_str() +
                               ", inconsistent with the connectivity flag");
    }
}

bool within_unit_range(const ReliabilityPolynomial& r, std::size_t samples) {
    // R(k/m) = acc / m^d with acc = sum c_i k^i m^(d-i); compare without reducing.
    const auto& c = r.poly().coeffs();
    if (c.empty()) {
        return true;
    }
    // Small polynomials: sum |c_i| m^d < 2^120 means every partial Horner value fits in 128 bits.
    long double bound = 0;
    bool small = true;
    for (const auto& x : c) {
        small = small && x.fits_slong_p();
        bound += std::fabs(x.get_d());
    }
    bound *= std::pow(static_cast<long double>(samples + 1), static_cast<long double>(c.size() - 1));
    if (small && bound < std::ldexp(1.0L, 120)) {
        const __int128 m = static_cast<__int128>(samples + 1);
        for (std::size_t k = 1; k <= samples; ++k) {
            __int128 acc = c.back().get_si();
            __int128 m_pow = 1;
            for (std::size_t i = c.size() - 1; i-- > 0;) {
                m_pow *= m;
                acc = acc * static_cast<__int128>(k) + static_cast<__int128>(c[i].get_si()) * m_pow;
            }
            if (acc < 0 || acc > m_pow) {
                return false;
            }
        }
        return true;
    }
    const Integer m(static_cast<unsigned long>(samples + 1));
    for (std::size_t k = 1; k <= samples; ++k) {
        const Integer num(static_cast<unsigned long>(k));
        Integer acc = c.back();
        Integer m_pow = 1;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            m_pow *= m;
            acc *= num;
            acc += c[i] * m_pow;
        }
        if (sgn(acc) < 0 || acc > m_pow) {
            return false;
        }
    }
    return true;
}

SubgraphCountVector subgraph_counts(const Graph& g, std::size_t cap) {
    const std::size_t n = g.order();
    const std::size_t limit = std::min<std::size_t>(cap, 63);
    if (n > limit) {
        throw SizeLimitError("graph order " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(limit),
                             n, limit);
    }
    std::vector<std::uint64_t> masks(n);
    for (Vertex v = 0; v < n; ++v) {
        masks[v] = g.neighbor_mask(v);
    }
    SubgraphCountVector out{std::vector<std::uint64_t>(n, 0)};
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < end; ++s) {
        if (induced_connected_mask(masks, s)) {
            ++out.counts[static_cast<std::size_t>(std::popcount(s)) - 1];
        }
    }
    return out;
}

Polynomial assemble(const SubgraphCountVector& counts) {
    const std::size_t n = counts.counts.size();
    Polynomial out;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::uint64_t c = counts.counts[i - 1];
        if (c == 0) {
            continue;
        }
        const Integer coefficient(static_cast<unsigned long>(c));
        out += Polynomial::monomial(coefficient, i) * one_minus_p_pow(n - i);
    }
    return out;
}

ReliabilityPolynomial rel_enumerate(const Graph& g, std::size_t cap) {
    const auto counts = subgraph_counts(g, cap);
    return ReliabilityPolynomial(assemble(counts), g.order(), counts.counts.back() == 1);
}

ReliabilityPolynomial apply_sub_clique(const ReliabilityPolynomial& r, std::size_t l) {
    if (l == 0) {
        throw InvalidOrderError("clique size l must be at least 1");
    }
    std::uint64_t order = 0;
    if (__builtin_mul_overflow(r.order(), std::uint64_t{l}, &order)) {
        throw SizeLimitError("expression order overflows 64 bits", UINT64_MAX, UINT64_MAX);
    }
    return ReliabilityPolynomial(compose(r.poly(), power_one_minus_q(l)), order, r.connected());
}

// The isolated-vertex term uses the order n of the result: p (1 - p)^(n - 1).
ReliabilityPolynomial apply_add_isolated(const ReliabilityPolynomial& r) {
    const std::uint64_t n = r.order() + 1;
    return ReliabilityPolynomial(Polynomial::identity() * one_minus_p_pow(n - 1) +
                                     one_minus_p_pow(1) * r.poly(),
                                 n, false);
}

ReliabilityPolynomial apply_add_universal(const ReliabilityPolynomial& r) {
    return ReliabilityPolynomial(Polynomial::identity() + one_minus_p_pow(1) * r.poly(),
                                 r.order() + 1, true);
}

ReliabilityPolynomial rel_algebra(const GraphExpr& e, std::size_t cap) {
    switch (e.kind()) {
        case GraphExpr::Kind::Base:
            return rel_enumerate(e.graph(), cap);
        case GraphExpr::Kind::SubClique:
            return apply_sub_clique(rel_algebra(e.child(), cap), e.clique_size());
        case GraphExpr::Kind::AddIsolated:
            return apply_add_isolated(rel_algebra(e.child(), cap));
        case GraphExpr::Kind::AddUniversal:
            return apply_add_universal(rel_algebra(e.child(), cap));
    }
    throw std::logic_error("unknown expression kind");
}

McEstimate mc_estimate(const Graph& g, const Rational& p, std::uint64_t trials,
                       std::uint64_t seed) {
    if (p < 0 || p > 1) {
        throw DomainError("probability " + p.get_str() + " is outside [0, 1]");
    }
    if (trials == 0) {
        throw DomainError("Monte-Carlo estimation needs at least one trial");
    }
    const double threshold = p.get_d();
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    const std::size_t n = g.order();
    std::uint64_t hits = 0;
    if (n <= 64) {
        std::vector<std::uint64_t> masks(n);
        for (Vertex v = 0; v < n; ++v) {
            masks[v] = g.neighbor_mask(v);
        }
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::uint64_t s = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (uniform() < threshold) {
                    s |= std::uint64_t{1} << v;
                }
            }
            hits += induced_connected_mask(masks, s) ? 1 : 0;
        }
    } else {
        std::vector<Vertex> kept;
        for (std::uint64_t t = 0; t < trials; ++t) {
            kept.clear();
            for (Vertex v = 0; v < n; ++v) {
                if (uniform() < threshold) {
                    kept.push_back(v);
                }
            }
            hits += induced_connected(g, kept) ? 1 : 0;
        }
    }
    const double f = static_cast<double>(hits) / static_cast<double>(trials);
    return {f, std::sqrt(f * (1.0 - f) / static_cast<double>(trials))};
}

}  // namespace noderel
