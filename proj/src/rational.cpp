#include "hyperlab/rational.hpp"

#include <cctype>
#include <sstream>

namespace hyperlab {

bool is_integer(const Rational& q) { return den(q) == 1; }

bool is_positive_integer(const Rational& q) { return den(q) == 1 && num(q) > 0; }

long to_long(const Rational& q) {
    if (!is_integer(q)) throw DomainError("not an integer: " + to_string(q));
    Integer n = num(q);
    if (n > Integer(std::numeric_limits<long>::max()) ||
        n < Integer(std::numeric_limits<long>::min()))
        throw DomainError("integer out of range: " + to_string(q));
    return static_cast<long>(n);
}

Rational pochhammer(const Rational& x, long n) {
    Rational result(1);
    if (n >= 0) {
        for (long t = 0; t < n; ++t) result *= x + t;
        return result;
    }
    // (x)_{-m} = 1 / ((x-1)(x-2)...(x-m))
    for (long t = 1; t <= -n; ++t) {
        Rational factor = x - t;
        if (factor == 0)
            throw PoleError("pochhammer(" + to_string(x) + ", " + std::to_string(n) +
                            "): factor " + to_string(x) + "-" + std::to_string(t) + " vanishes");
        result /= factor;
    }
    return result;
}

Rational harmonic(unsigned long m, unsigned p) {
    Rational sum(0);
    for (unsigned long t = 1; t <= m; ++t) {
        Integer tp(t);
        Integer power(1);
        for (unsigned e = 0; e < p; ++e) power *= tp;
        sum += Rational(Integer(1), power);
    }
    return sum;
}

Integer factorial(unsigned long n) {
    Integer result(1);
    for (unsigned long t = 2; t <= n; ++t) result *= t;
    return result;
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    unsigned long kk = static_cast<unsigned long>(k);
    if (kk > n - kk) kk = n - kk;
    Integer result(1);
    for (unsigned long t = 1; t <= kk; ++t) {
        result *= Integer(n - kk + t);
        result /= Integer(t);
    }
    return result;
}

Rational gamma_ratio(const Rational& a, const Rational& b) {
    Rational diff = a - b;
    if (!is_integer(diff))
        throw RestrictionError("gamma ratio with non-integral shift: " + to_string(a) + " vs " +
                               to_string(b));
    long n = to_long(diff);
    if (n >= 0) {
        // Gamma(b+n)/Gamma(b) = (b)_n; a zero factor means the denominator
        // gamma has a pole while the numerator one does not, so the ratio is 0.
        return pochhammer(b, n);
    }
    Rational p = pochhammer(a, -n);
    if (p == 0)
        throw PoleError("gamma ratio has a pole: Gamma(" + to_string(a) + ")/Gamma(" +
                        to_string(b) + ")");
    return 1 / p;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw PoleError("0 raised to a negative power");
    Rational result(1);
    Rational b = base;
    unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    while (m > 0) {
        if (m & 1) result *= b;
        b *= b;
        m >>= 1;
    }
    return e < 0 ? Rational(1) / result : result;
}

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << num(q);
    if (den(q) != 1) out << "/" << den(q);
    return out.str();
}

std::string to_fraction_string(const Rational& q) {
    std::ostringstream out;
    out << num(q) << "/" << den(q);
    return out.str();
}

Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational { throw FormatError("malformed rational: '" + text + "'"); };
    if (text.empty()) return fail();
    auto slash = text.find('/');
    std::string num_part = text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!valid_int(num_part) || !valid_int(den_part)) return fail();
    Integer n(num_part), d(den_part);
    if (d == 0) return fail();
    return Rational(n, d);
}

std::string decimal_string(const Rational& q, int significant_digits, bool round_up) {
    if (significant_digits < 1) significant_digits = 1;
    if (q == 0) return "0";
    bool negative = q < 0;
    Rational a = negative ? Rational(-q) : q;

    // Find exponent e with 10^e <= a < 10^(e+1).
    long e = 0;
    Rational ten(10);
    Rational scale(1);
    while (scale * ten <= a) {
        scale *= ten;
        ++e;
    }
    while (a < scale) {
        scale /= ten;
        --e;
    }

    // digits = floor/ceil of a * 10^(significant_digits-1-e)
    Rational shifted = a * pow_rational(ten, significant_digits - 1 - e);
    Integer digits = num(shifted) / den(shifted);
    if (round_up && Rational(digits) != shifted) ++digits;
    std::ostringstream ds;
    ds << digits;
    std::string s = ds.str();
    // Rounding up may add a digit (e.g. 999 -> 1000).
    if (static_cast<int>(s.size()) > significant_digits) {
        s = s.substr(0, significant_digits);
        ++e;
    }
    std::string mantissa = s.substr(0, 1);
    if (s.size() > 1) {
        std::string rest = s.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) mantissa += "." + rest;
    }
    std::ostringstream out;
    if (negative) out << "-";
    out << mantissa << "e" << e;
    return out.str();
}

}  // namespace hyperlab
