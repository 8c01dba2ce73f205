#pragma once

// Exact integer combinatorics used by the bound engine: factorials, binomials,
// derangement numbers, ball volumes in the Hamming metric on permutations and
// on binary words, prime-power utilities, and directed-rounding log2.
//
// All arithmetic is exact (GMP). Nothing here ever rounds silently: the only
// floating-point results are log2_lower/log2_upper, which are guaranteed to
// sit on the stated side of the true value.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permbound {

// Arbitrary-precision nonnegative integer.
using Count = mpz_class;

// Raised when an input exceeds a configured enumeration limit. The message
// names the limit so callers can tell a capacity refusal from a domain error.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Count factorial(unsigned n) {
    Count r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k); zero outside 0 <= k <= n.
inline Count binomial(unsigned n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

// Number of derangements of k points, by the exact recurrence
// D_k = (k-1)(D_{k-1} + D_{k-2}), D_0 = 1, D_1 = 0.
inline Count derangement_count(unsigned k) {
    if (k == 0) return 1;
    if (k == 1) return 0;
    Count prev2 = 1, prev = 0;
    for (unsigned i = 2; i <= k; ++i) {
        Count cur = (i - 1) * (prev + prev2);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

// Permutations within Hamming distance r of a fixed permutation of n points:
// V(n, r) = sum_{i=0}^{r} C(n, i) * D_i.
inline Count ball_volume(unsigned n, unsigned r) {
    if (r > n) throw std::domain_error("ball_volume: radius exceeds length");
    Count total = 0;
    for (unsigned i = 0; i <= r; ++i) total += binomial(n, static_cast<long>(i)) * derangement_count(i);
    return total;
}

// Binary Hamming ball: V2(n, r) = sum_{i=0}^{r} C(n, i).
inline Count binary_ball_volume(unsigned n, unsigned r) {
    if (r > n) throw std::domain_error("binary_ball_volume: radius exceeds length");
    Count total = 0;
    for (unsigned i = 0; i <= r; ++i) total += binomial(n, static_cast<long>(i));
    return total;
}

struct PrimePowerFactorization {
    unsigned long n = 0;
    // (prime, multiplicity) pairs in increasing prime order.
    std::vector<std::pair<unsigned long, unsigned>> factors;
};

inline PrimePowerFactorization factorization(unsigned long n) {
    if (n < 2) throw std::domain_error("factorization: n must be >= 2");
    PrimePowerFactorization f;
    f.n = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        unsigned c = 0;
        while (m % p == 0) { m /= p; ++c; }
        f.factors.emplace_back(p, c);
    }
    if (m > 1) f.factors.emplace_back(m, 1u);
    return f;
}

// Smallest maximal prime-power component of n: min over p^c in the
// factorization p1^c1 * ... * pt^ct.
inline Count theta(unsigned long n) {
    auto f = factorization(n);
    Count best = 0;
    for (auto [p, c] : f.factors) {
        Count pc = 1;
        for (unsigned i = 0; i < c; ++i) pc *= static_cast<unsigned long>(p);
        if (best == 0 || pc < best) best = pc;
    }
    return best;
}

// (p, k) with q = p^k, or nullopt when q is not a prime power.
inline std::optional<std::pair<unsigned long, unsigned>> prime_power(unsigned long q) {
    if (q < 2) return std::nullopt;
    auto f = factorization(q);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

namespace detail {

inline double log2_directed(const Count& x, mpfr_rnd_t dir) {
    if (sgn(x) <= 0) throw std::domain_error("log2: argument must be positive");
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_z(t, x.get_mpz_t(), dir);
    mpfr_log2(t, t, dir);
    double r = mpfr_get_d(t, dir);
    mpfr_clear(t);
    return r;
}

} // namespace detail

// Directed approximations of log2(x): the result is guaranteed to be
// <= (resp. >=) the true value, within 2^-40 of it.
inline double log2_lower(const Count& x) { return detail::log2_directed(x, MPFR_RNDD); }
inline double log2_upper(const Count& x) { return detail::log2_directed(x, MPFR_RNDU); }

// ceil(a / b) for nonnegative exact integers, b > 0.
inline Count ceil_div(const Count& a, const Count& b) {
    Count q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Count floor_div(const Count& a, const Count& b) {
    Count q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact ceiling of a rational.
inline Count ceil_rational(const mpq_class& x) {
    Count q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

} // namespace permbound
