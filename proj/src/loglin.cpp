#include "schurlab/loglin.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace schurlab::loglin {

namespace {

constexpr unsigned kStartBits = 64;
constexpr unsigned kMaxBits = 4096;

// atanh(x) = sum x^(2k+1)/(2k+1); returns [sum_N, sum_N + tail_bound] where
// tail_bound = x^(2N+1)/(2N+1) * 1/(1-x^2) majorises the dropped terms.
Interval atanh_series(const Rational& x, unsigned terms) {
    Rational x2 = x * x;
    Rational power = x;
    Rational sum = 0;
    for (unsigned k = 0; k < terms; ++k) {
        sum += power / Rational(2 * k + 1);
        power *= x2;
    }
    Rational tail = (power / Rational(2 * terms + 1)) / (Rational(1) - x2);
    return {sum, sum + tail};
}

struct LnConstants {
    Interval ln2, ln3, ln5;
};

// ln2 = 2*atanh(1/3), ln3 = 2*atanh(1/2), ln5 = 2*ln2 + 2*atanh(1/9).
LnConstants ln_constants(unsigned bits) {
    unsigned t2 = bits / 3 + 8;
    unsigned t3 = bits / 2 + 8;
    unsigned t5 = bits / 6 + 8;
    Interval a2 = atanh_series(ratio(1, 3), t2);
    Interval a3 = atanh_series(ratio(1, 2), t3);
    Interval a5 = atanh_series(ratio(1, 9), t5);
    LnConstants c;
    c.ln2 = {2 * a2.lo, 2 * a2.hi};
    c.ln3 = {2 * a3.lo, 2 * a3.hi};
    c.ln5 = {2 * c.ln2.lo + 2 * a5.lo, 2 * c.ln2.hi + 2 * a5.hi};
    return c;
}

struct ConstCache {
    std::mutex mu;
    std::map<unsigned, Interval> l3, l5;
};

ConstCache& cache() {
    static ConstCache c;
    return c;
}

Interval cached(unsigned bits, bool want5) {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto& slot = want5 ? c.l5 : c.l3;
    auto it = slot.find(bits);
    if (it != slot.end()) return it->second;
    LnConstants ln = ln_constants(bits);
    // positive/positive interval quotient, outward
    Interval v3{ln.ln3.lo / ln.ln2.hi, ln.ln3.hi / ln.ln2.lo};
    Interval v5{ln.ln5.lo / ln.ln2.hi, ln.ln5.hi / ln.ln2.lo};
    c.l3.emplace(bits, v3);
    c.l5.emplace(bits, v5);
    return want5 ? v5 : v3;
}

// [lo,hi] scaled by an exact rational, endpoints swapped for negative scale.
Interval scale_iv(const Interval& iv, const Rational& q) {
    if (sgn(q) >= 0) return {q * iv.lo, q * iv.hi};
    return {q * iv.hi, q * iv.lo};
}

Interval eval(const LogLin& v, unsigned bits) {
    Interval out{v.q0, v.q0};
    if (v.q1 != 0) {
        Interval t = scale_iv(log2_3(bits), v.q1);
        out.lo += t.lo;
        out.hi += t.hi;
    }
    if (v.q2 != 0) {
        Interval t = scale_iv(log2_5(bits), v.q2);
        out.lo += t.lo;
        out.hi += t.hi;
    }
    return out;
}

Rational abs_rational(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// floor(r) as an integer
BigInt floor_big(const Rational& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace

LogLin scale(const LogLin& v, const Rational& r) { return {v.q0 * r, v.q1 * r, v.q2 * r}; }

LogLin mul(const LogLin& a, const LogLin& b) {
    if (a.is_rational()) return scale(b, a.q0);
    if (b.is_rational()) return scale(a, b.q0);
    throw InputError("product of two irrational log-linear values leaves the space");
}

Interval log2_3(unsigned precision_bits) { return cached(precision_bits, false); }
Interval log2_5(unsigned precision_bits) { return cached(precision_bits, true); }

Interval log2_of(unsigned long i, unsigned precision_bits) {
    if (i == 0) throw InputError("log of zero");
    unsigned long k = 0;
    unsigned long m = i;
    while (m > 1) {
        m >>= 1;
        ++k;
    }
    // i = 2^k * t with t = i / 2^k in [1, 2); log2(i) = k + ln(t)/ln(2)
    Rational t = ratio(BigInt(static_cast<unsigned long>(i)), BigInt(1) << k);
    if (t == 1) return {Rational(static_cast<long>(k)), Rational(static_cast<long>(k))};
    Rational x = (t - 1) / (t + 1);  // in (0, 1/3]
    Interval at = atanh_series(x, precision_bits / 3 + 8);
    LnConstants ln = ln_constants(precision_bits);
    Interval ln_t{2 * at.lo, 2 * at.hi};
    Rational kq(static_cast<long>(k));
    return {kq + ln_t.lo / ln.ln2.hi, kq + ln_t.hi / ln.ln2.lo};
}

int sign(const LogLin& v) {
    if (v.is_zero()) return 0;
    if (v.is_rational()) return sgn(v.q0);
    for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
        Interval iv = eval(v, bits);
        if (sgn(iv.lo) > 0) return 1;
        if (sgn(iv.hi) < 0) return -1;
    }
    // unreachable for genuinely nonzero inputs at sane coefficient sizes
    throw std::runtime_error("sign undecided at precision cap: " + to_string(v));
}

LogLin log_int(unsigned long i) {
    if (i == 0) throw InputError("log of zero");
    long a = 0, b = 0, c = 0;
    while (i % 2 == 0) {
        i /= 2;
        ++a;
    }
    while (i % 3 == 0) {
        i /= 3;
        ++b;
    }
    while (i % 5 == 0) {
        i /= 5;
        ++c;
    }
    if (i != 1)
        throw InputError("log_int requires a 5-smooth argument (leftover factor " +
                         std::to_string(i) + ")");
    return {Rational(a), Rational(b), Rational(c)};
}

Interval to_real(const LogLin& v, unsigned precision_bits) {
    if (precision_bits < 16) throw InputError("to_real needs at least 16 bits");
    if (v.is_rational()) return {v.q0, v.q0};
    Rational bound = abs_rational(v.q0) + abs_rational(v.q1) * 3 + abs_rational(v.q2) * 3 + 1;
    for (unsigned bits = precision_bits; bits <= kMaxBits; bits *= 2) {
        Interval iv = eval(v, bits);
        Rational width = iv.hi - iv.lo;
        // target: width <= 2^(1-precision_bits) * (1 + |v|); 1 is a safe floor of 1+|v|
        Rational target(1);
        target <<= 1;
        target /= Rational(BigInt(1) << precision_bits);
        if (width <= target) return iv;
        (void)bound;
    }
    throw std::runtime_error("to_real failed to reach requested width");
}

std::string to_string(const LogLin& v) {
    if (v.is_zero()) return "0";
    std::string out;
    auto append = [&out](const Rational& q, const char* sym) {
        if (q == 0) return;
        Rational a = abs_rational(q);
        std::string term = rational_str(a);
        if (sym[0] != '\0') {
            term += "*";
            term += sym;
        }
        if (out.empty()) {
            out = (sgn(q) < 0 ? "-" : "") + term;
        } else {
            out += (sgn(q) < 0 ? " - " : " + ") + term;
        }
    };
    append(v.q0, "");
    append(v.q1, "log3");
    append(v.q2, "log5");
    return out;
}

LogLin parse(const std::string& text) {
    LogLin out;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty log-linear literal");
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign_term = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign_term = (s[pos] == '-') ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw InputError("expected + or - in log-linear literal: " + text);
        }
        first = false;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty()) throw InputError("dangling sign in log-linear literal: " + text);
        Rational coeff(1);
        int slot = 0;
        std::size_t star = term.find('*');
        std::string head = term, tail;
        if (star != std::string::npos) {
            head = term.substr(0, star);
            tail = term.substr(star + 1);
        }
        if (tail.empty() && (head == "log3" || head == "log5")) {
            slot = head == "log3" ? 1 : 2;
        } else {
            coeff = parse_rational(head);
            if (tail == "log3")
                slot = 1;
            else if (tail == "log5")
                slot = 2;
            else if (!tail.empty())
                throw InputError("unknown symbol in log-linear literal: " + tail);
        }
        if (sign_term < 0) coeff = -coeff;
        if (slot == 0)
            out.q0 += coeff;
        else if (slot == 1)
            out.q1 += coeff;
        else
            out.q2 += coeff;
    }
    return out;
}

std::string decimal_str(const LogLin& v, unsigned sig_digits) {
    if (sig_digits == 0) throw InputError("need at least one digit");
    if (v.is_zero()) return "0";
    int sg = sign(v);
    LogLin a = sg < 0 ? -v : v;
    for (unsigned bits = 128; bits <= kMaxBits; bits *= 2) {
        Interval iv = eval(a, bits);
        if (sgn(iv.lo) <= 0) continue;
        // decimal exponent: 10^e <= value < 10^(e+1)
        long e = 0;
        Rational ten(10);
        Rational probe = iv.lo;
        while (probe >= 10) {
            probe /= ten;
            ++e;
        }
        while (probe < 1) {
            probe *= ten;
            --e;
        }
        // scale so that sig_digits digits sit left of the point, then round
        long shift = static_cast<long>(sig_digits) - 1 - e;
        Rational scale_q = 1;
        for (long i = 0; i < shift; ++i) scale_q *= ten;
        for (long i = 0; i > shift; --i) scale_q /= ten;
        BigInt n_lo = floor_big(iv.lo * scale_q + ratio(1, 2));
        BigInt n_hi = floor_big(iv.hi * scale_q + ratio(1, 2));
        if (n_lo != n_hi) continue;  // rounding still ambiguous; escalate
        std::string digits = n_lo.get_str();
        // rounding can carry to one digit more than sig_digits; re-anchor the point
        long int_digits = e + 1 + static_cast<long>(digits.size()) - static_cast<long>(sig_digits);
        std::string body;
        if (int_digits >= static_cast<long>(digits.size())) {
            body = digits + std::string(int_digits - digits.size(), '0');
        } else if (int_digits > 0) {
            body = digits.substr(0, int_digits) + "." + digits.substr(int_digits);
        } else {
            body = "0." + std::string(-int_digits, '0') + digits;
        }
        return (sg < 0 ? "-" : "") + body;
    }
    throw std::runtime_error("decimal rendering failed to stabilise");
}

double to_double(const LogLin& v) {
    Interval iv = to_real(v, 64);
    Rational mid = (iv.lo + iv.hi) / 2;
    return mid.get_d();
}

}  // namespace schurlab::loglin
