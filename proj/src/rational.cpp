#include "noderel/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace noderel {

namespace {

Integer pow10(unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
    return out;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            bad(text);
        }
        const Integer d{std::string(den)};
        if (d == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        out = Rational(Integer(std::string(num)), d);
        out.canonicalize();
    } else {
        long exponent = 0;
        if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) {
                bad(text);
            }
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) {
                exponent = -exponent;
            }
            s = s.substr(0, e);
        }
        std::string digits;
        if (const auto dot = s.find('.'); dot != std::string_view::npos) {
            const auto whole = s.substr(0, dot);
            const auto frac = s.substr(dot + 1);
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
                (whole.empty() && frac.empty())) {
                bad(text);
            }
            digits = std::string(whole) + std::string(frac);
            exponent -= static_cast<long>(frac.size());
        } else {
            if (!all_digits(s)) {
                bad(text);
            }
            digits = std::string(s);
        }
        const Integer mantissa(digits.empty() ? std::string("0") : digits);
        if (exponent >= 0) {
            out = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
        } else {
            out = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
            out.canonicalize();
        }
    }
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int significant) {
    if (significant < 1) {
        throw std::invalid_argument("significant digits must be positive");
    }
    if (q == 0) {
        return "0";
    }
    const bool negative = q < 0;
    const Rational x = abs(q);

    // Decimal exponent e with 10^e <= x < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
    auto power = [](long k) {
        return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                      : Rational(Integer(1), pow10(static_cast<unsigned long>(-k)));
    };
    while (x < power(e)) {
        --e;
    }
    while (x >= power(e + 1)) {
        ++e;
    }

    // Round x * 10^(significant-1-e) half away from zero.
    long shift = significant - 1 - e;
    Rational scaled = x * power(shift);
    Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    if (rounded == pow10(static_cast<unsigned long>(significant))) {
        rounded /= 10;
        --shift;
    }

    std::string digits = rounded.get_str();
    std::string out;
    if (shift <= 0) {
        out = digits + std::string(static_cast<std::size_t>(-shift), '0');
    } else if (static_cast<std::size_t>(shift) >= digits.size()) {
        out = "0." + std::string(static_cast<std::size_t>(shift) - digits.size(), '0') + digits;
    } else {
        out = digits.substr(0, digits.size() - static_cast<std::size_t>(shift)) + "." +
              digits.substr(digits.size() - static_cast<std::size_t>(shift));
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') {
            out.pop_back();
        }
        if (out.back() == '.') {
            out.pop_back();
        }
    }
    return negative ? "-" + out : out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace noderel
