#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cvos {

// Exact rational scalar used for edge lengths and length ratios.  Logarithms
// are taken only when a value leaves the library (reports, CLI output).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// log of a positive rational, stable for values far outside double range.
inline double log_rational(const Rational& q) {
    if (sgn(q) <= 0) throw std::domain_error("log_rational: nonpositive value");
    signed long en = 0, ed = 0;
    const double n = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    const double d = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(n) - std::log(d) + (static_cast<double>(en) - static_cast<double>(ed)) * std::log(2.0);
}

inline std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q(mpz_class(s), 1);
            q.canonicalize();
            return q;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

// Best continued-fraction approximation of x with denominator <= max_den.
inline Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
    if (max_den < 1) throw std::invalid_argument("rationalize: max_den < 1");
    const bool neg = x < 0;
    double v = neg ? -x : x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double fa = std::floor(v);
        if (fa > 9e18) break;
        mpz_class a(static_cast<long>(fa));
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double rem = v - fa;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) { p1 = p0; q1 = q0; }
    Rational q(neg ? mpz_class(-p1) : p1, q1);
    q.canonicalize();
    return q;
}

}  // namespace cvos
