#pragma once

#include <string>

#include "schurlab/util.hpp"

namespace schurlab::loglin {

// Exact number q0 + q1*log2(3) + q2*log2(5) with rational coefficients.
// Since 2^a 3^b 5^c = 1 only for a = b = c = 0, the representation is unique
// and the value is zero exactly when all coefficients are zero.
struct LogLin {
    Rational q0, q1, q2;

    LogLin() : q0(0), q1(0), q2(0) {}
    explicit LogLin(const Rational& r) : q0(r), q1(0), q2(0) {}
    LogLin(Rational a, Rational b, Rational c)
        : q0(std::move(a)), q1(std::move(b)), q2(std::move(c)) {}

    bool is_zero() const { return q0 == 0 && q1 == 0 && q2 == 0; }
    bool is_rational() const { return q1 == 0 && q2 == 0; }

    LogLin operator+(const LogLin& o) const { return {q0 + o.q0, q1 + o.q1, q2 + o.q2}; }
    LogLin operator-(const LogLin& o) const { return {q0 - o.q0, q1 - o.q1, q2 - o.q2}; }
    LogLin operator-() const { return {-q0, -q1, -q2}; }
    LogLin& operator+=(const LogLin& o) {
        q0 += o.q0;
        q1 += o.q1;
        q2 += o.q2;
        return *this;
    }
    LogLin& operator-=(const LogLin& o) {
        q0 -= o.q0;
        q1 -= o.q1;
        q2 -= o.q2;
        return *this;
    }
    bool operator==(const LogLin& o) const { return q0 == o.q0 && q1 == o.q1 && q2 == o.q2; }
};

// Rational scaling (the space is closed under rational linear combinations only).
LogLin scale(const LogLin& v, const Rational& r);

// Product, defined only when at least one factor is rational; throws otherwise.
LogLin mul(const LogLin& a, const LogLin& b);

// Exact sign in {-1, 0, +1}. Zero is decided from the coefficients alone;
// nonzero values are decided by interval evaluation at escalating precision.
int sign(const LogLin& v);

inline bool less(const LogLin& a, const LogLin& b) { return sign(a - b) < 0; }
inline bool leq(const LogLin& a, const LogLin& b) { return sign(a - b) <= 0; }

// log2(i) for 5-smooth i; throws InputError for other prime factors.
LogLin log_int(unsigned long i);

struct Interval {
    Rational lo, hi;
};

// Enclosing interval of width <= 2^(1-precision_bits) * (1 + |v|).
Interval to_real(const LogLin& v, unsigned precision_bits);

// Rational enclosures of the two irrational basis constants, computed from
// atanh series with exact rational partial sums and a geometric tail bound;
// no platform math routine is involved. Cached write-once per precision.
Interval log2_3(unsigned precision_bits);
Interval log2_5(unsigned precision_bits);

// Enclosure of log2(i) for any positive integer (series-based as above).
Interval log2_of(unsigned long i, unsigned precision_bits);

// Canonical text form "q0 + q1*log3 + q2*log5" (zero terms dropped, "0" for
// zero); round-trips bit-exactly through parse().
std::string to_string(const LogLin& v);
LogLin parse(const std::string& text);

// Decimal rendering with the given number of significant digits, correctly
// rounded from an enclosure tightened until the rounding is unambiguous.
std::string decimal_str(const LogLin& v, unsigned sig_digits);

double to_double(const LogLin& v);

}  // namespace schurlab::loglin
