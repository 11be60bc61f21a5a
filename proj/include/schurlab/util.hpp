#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace schurlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown on bad user input (malformed literals, out-of-range arguments).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an enumeration or search exceeds its configured ceiling.
struct CeilingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The two-argument mpq_class constructor does not reduce; every quotient
// built from variables must go through here.
inline Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}
inline Rational ratio(long num, long den) { return ratio(BigInt(num), BigInt(den)); }

// Parses "p/q" or a plain integer, exactly. Rejects q = 0 and garbage.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, else "p/q"; always lowest terms.
std::string rational_str(const Rational& q);

BigInt pow_big(const BigInt& base, unsigned long exp);

// Deterministic splitmix-style RNG helper: bounded values without the
// implementation-defined behaviour of std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);
    // uniform in [lo, hi] inclusive
    long range(long lo, long hi);

private:
    std::uint64_t state_;
};

// Runs fn(chunk) over a contiguous partition of [0, total) on up to `jobs`
// threads and merges the per-chunk results in index order, so the combined
// result is independent of scheduling for associative merges.
template <typename Result>
Result parallel_chunks(std::size_t total, unsigned jobs,
                       const std::function<Result(std::size_t, std::size_t)>& fn,
                       const std::function<void(Result&, Result&&)>& merge) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    if (total == 0) return Result{};
    std::size_t nchunks = std::min<std::size_t>(jobs, total);
    std::size_t step = (total + nchunks - 1) / nchunks;
    std::vector<Result> results(nchunks);
    if (nchunks == 1) {
        results[0] = fn(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nchunks);
        for (std::size_t c = 0; c < nchunks; ++c) {
            std::size_t lo = c * step;
            std::size_t hi = std::min(total, lo + step);
            pool.emplace_back([&results, &fn, c, lo, hi] { results[c] = fn(lo, hi); });
        }
        for (auto& t : pool) t.join();
    }
    Result out = std::move(results[0]);
    for (std::size_t c = 1; c < nchunks; ++c) merge(out, std::move(results[c]));
    return out;
}

}  // namespace schurlab
