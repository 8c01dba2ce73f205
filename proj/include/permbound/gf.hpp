#pragma once

// GF(p^k) arithmetic with a deterministic modulus choice, permutation
// polynomial testing/counting by exhaustive evaluation, and the classification
// of normalized permutation polynomials of degree <= 5 with exact class sizes.
//
// Field elements are encoded as integers in [0, q): the base-p digits of the
// encoding are the coefficients of the element in the polynomial basis.

#include "count.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace permbound {

class Field {
public:
    // q must be a prime power <= 2^16. For k > 1 the modulus is the
    // lexicographically smallest monic irreducible of degree k over GF(p)
    // (smallest when coefficient vectors are read as base-p integers,
    // low-order digit first); k = 1 short-circuits to plain mod-p arithmetic.
    static Field make(unsigned long q) {
        if (q > 65536) throw std::domain_error("field: q exceeds 2^16");
        auto pk = prime_power(q);
        if (!pk) throw std::domain_error("field: q = " + std::to_string(q) + " is not a prime power");
        Field f;
        f.q_ = static_cast<unsigned>(q);
        f.p_ = static_cast<unsigned>(pk->first);
        f.k_ = pk->second;
        if (f.k_ == 1) {
            f.modulus_ = {0, 1}; // x
            return f;
        }
        for (unsigned long low = 0;; ++low) {
            std::vector<unsigned> cand = f.digits_of(low);
            cand.push_back(1);
            if (f.poly_irreducible(cand)) {
                f.modulus_ = std::move(cand);
                return f;
            }
        }
    }

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    // Modulus coefficients, constant term first; {0, 1} (i.e. x) when k = 1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    unsigned add(unsigned a, unsigned b) const {
        if (k_ == 1) return (a + b) % p_;
        unsigned r = 0, mul = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((a + b) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }

    unsigned neg(unsigned a) const {
        if (k_ == 1) return (p_ - a) % p_;
        unsigned r = 0, mul = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((p_ - a % p_) % p_) * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }

    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

    unsigned mul(unsigned a, unsigned b) const {
        if (k_ == 1) return (a * b) % p_;
        // schoolbook product of digit vectors, reduced by the monic modulus
        std::array<unsigned, 64> prod{};
        auto da = digits_of(a), db = digits_of(b);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int deg = static_cast<int>(2 * k_ - 2); deg >= static_cast<int>(k_); --deg) {
            unsigned lead = prod[static_cast<std::size_t>(deg)];
            if (!lead) continue;
            prod[static_cast<std::size_t>(deg)] = 0;
            for (unsigned i = 0; i < k_; ++i) {
                auto at = static_cast<std::size_t>(deg) - k_ + i;
                prod[at] = (prod[at] + (p_ - lead % p_) * modulus_[i]) % p_;
            }
        }
        unsigned r = 0, mul10 = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += prod[i] * mul10;
            mul10 *= p_;
        }
        return r;
    }

    unsigned pow(unsigned a, unsigned long e) const {
        unsigned r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    unsigned inv(unsigned a) const {
        if (a == 0) throw std::domain_error("field: inverse of zero");
        return pow(a, q_ - 2);
    }

private:
    std::vector<unsigned> digits_of(unsigned long v) const {
        std::vector<unsigned> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = static_cast<unsigned>(v % p_);
            v /= p_;
        }
        return d;
    }

    // Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
    bool poly_irreducible(const std::vector<unsigned>& poly) const {
        auto deg = static_cast<unsigned>(poly.size() - 1);
        for (unsigned dd = 1; dd <= deg / 2; ++dd) {
            unsigned long count = 1;
            for (unsigned i = 0; i < dd; ++i) count *= p_;
            for (unsigned long low = 0; low < count; ++low) {
                std::vector<unsigned> div;
                unsigned long v = low;
                for (unsigned i = 0; i < dd; ++i) {
                    div.push_back(static_cast<unsigned>(v % p_));
                    v /= p_;
                }
                div.push_back(1);
                // remainder of poly mod div
                std::vector<unsigned> rem = poly;
                while (rem.size() >= div.size()) {
                    unsigned lead = rem.back();
                    if (lead) {
                        auto off = rem.size() - div.size();
                        for (std::size_t i = 0; i < div.size(); ++i)
                            rem[off + i] = (rem[off + i] + (p_ - lead % p_) * div[i]) % p_;
                    }
                    rem.pop_back();
                }
                bool zero = true;
                for (auto c : rem) zero = zero && (c == 0);
                if (zero) return false;
            }
        }
        return true;
    }

    unsigned q_ = 0, p_ = 0, k_ = 0;
    std::vector<unsigned> modulus_;
};

// Polynomial over a field, coefficients constant-term first, normalized so the
// last coefficient is nonzero (the zero polynomial keeps one zero entry).
struct Poly {
    std::vector<unsigned> coeffs;

    explicit Poly(std::vector<unsigned> c) : coeffs(std::move(c)) {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(0);
    }

    int degree() const { return coeffs.size() == 1 && coeffs[0] == 0 ? -1 : static_cast<int>(coeffs.size()) - 1; }

    unsigned eval(const Field& f, unsigned x) const {
        unsigned acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
        return acc;
    }
};

// f permutes the field iff its value set has no repeats.
inline bool is_permutation_poly(const Poly& f, const Field& field) {
    std::vector<bool> seen(field.q(), false);
    for (unsigned x = 0; x < field.q(); ++x) {
        unsigned y = f.eval(field, x);
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

// Exhaustive count of permutation polynomials by exact degree 1..max_deg
// (all of them, or monic only). Enumeration size q^(max_deg+1) is checked
// against the budget before any work happens.
inline std::map<int, Count> count_pps_by_degree(const Field& field, int max_deg, bool monic_only = false,
                                                unsigned long long budget = 100'000'000ULL) {
    if (max_deg < 1 || max_deg > 5) throw std::domain_error("count_pps_by_degree: degree must be in 1..5");
    const unsigned q = field.q();
    unsigned long long size = 1;
    for (int i = 0; i <= max_deg; ++i) {
        if (size > budget / q)
            throw CapacityError("count_pps_by_degree: q^(max_deg+1) exceeds budget " + std::to_string(budget));
        size *= q;
    }

    std::map<int, Count> out;
    std::vector<bool> seen(q, false);
    for (int d = 1; d <= max_deg; ++d) {
        Count cnt = 0;
        std::vector<unsigned> coeffs(static_cast<std::size_t>(d) + 1, 0);
        unsigned long long lowers = 1;
        for (int i = 0; i < d; ++i) lowers *= q;
        for (unsigned lead = 1; lead < (monic_only ? 2u : q); ++lead) {
            coeffs[static_cast<std::size_t>(d)] = lead;
            for (unsigned long long low = 0; low < lowers; ++low) {
                unsigned long long v = low;
                for (int i = 0; i < d; ++i) {
                    coeffs[static_cast<std::size_t>(i)] = static_cast<unsigned>(v % q);
                    v /= q;
                }
                // inline evaluation sweep (Horner), abandoning on first repeat
                std::fill(seen.begin(), seen.end(), false);
                bool ok = true;
                for (unsigned x = 0; x < q && ok; ++x) {
                    unsigned acc = 0;
                    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
                    if (seen[acc]) ok = false;
                    seen[acc] = true;
                }
                if (ok) cnt += 1;
            }
        }
        out[d] = cnt;
    }
    return out;
}

// One row of the normalized-class table: which polynomials of degree <= 5
// permute the field, per-class restrictions on q, and the exact number of
// polynomials in the class. Two classes (x^3, x^5) have a size that depends
// on the characteristic; they carry both candidates and are marked ambiguous.
struct PpClassRow {
    std::string label;
    int degree;
    bool applicable;
    bool ambiguous;
    Count total;     // class size (candidate 1 when ambiguous)
    Count total_alt; // candidate 2 when ambiguous, else 0
    // true when this class contains another listed class as a special case
    // (the degree-5 "a arbitrary" family contains x^5 at a = 0)
    bool subsumes_power_row = false;
};

inline std::vector<PpClassRow> pp_class_totals(unsigned long q, int max_deg) {
    if (max_deg < 1 || max_deg > 5) throw std::domain_error("pp_class_totals: degree must be in 1..5");
    auto pk = prime_power(q);
    if (!pk) throw std::domain_error("pp_class_totals: q is not a prime power");
    Count Q(static_cast<unsigned long>(q));
    std::vector<PpClassRow> rows;
    auto row = [&](std::string label, int deg, bool app, Count total) {
        rows.push_back({std::move(label), deg, app, false, std::move(total), 0, false});
    };

    row("x", 1, true, Q * (Q - 1));
    if (max_deg >= 2) row("x^2", 2, q % 2 == 0, Q * (Q - 1));
    if (max_deg >= 3) {
        rows.push_back({"x^3", 3, q % 3 != 1, true, Q * Q * (Q - 1), Q * (Q - 1), false});
        row("x^3-ax (a non-square)", 3, q % 3 == 0, Q * (Q - 1) * (Q - 1) / 2);
    }
    if (max_deg >= 4) {
        row("x^4+-3x", 4, q == 7, 2 * Q * Q * (Q - 1));
        row("x^4+a1*x^2+a2*x (0 the only root)", 4, q % 2 == 0, Q * (Q - 1) * (Q * Q + 2) / 3);
    }
    if (max_deg >= 5) {
        rows.push_back({"x^5", 5, q % 5 != 1, true, Q * Q * (Q - 1), Q * (Q - 1), false});
        row("x^5-ax (a not a 4th power)", 5, q % 5 == 0, 3 * Q * (Q - 1) * (Q - 1) / 4);
        row("x^5+ax (a^2 = 2)", 5, q == 9, 2 * Q * Q * (Q - 1));
        row("x^5+-2x^2", 5, q == 7, 2 * Q * Q * (Q - 1));
        row("x^5+ax^3+-x^2+3a^2x (a non-square)", 5, q == 7, Q * Q * (Q - 1) * (Q - 1));
        rows.push_back({"x^5+ax^3+(1/5)a^2x (a arbitrary)", 5, q % 5 == 2 || q % 5 == 3, false, Q * Q * Q * (Q - 1),
                        0, true});
        row("x^5+ax^3+3a^2x (a non-square)", 5, q == 13, Q * Q * (Q - 1) * (Q - 1) / 2);
        row("x^5-2ax^3+a^2x (a non-square)", 5, q % 5 == 0, Q * Q * (Q - 1) * (Q - 1) / 2);
    }
    return rows;
}

// N_d(q) from the class table, with ambiguous rows taken at the given bias.
// The "a arbitrary" family subsumes the x^5 class, so x^5 is skipped when
// that family applies; otherwise q = 7 would give more degree-<=5 classes
// than there are permutations.
enum class AmbiguityBias { smaller, larger };

inline Count pp_count_from_classes(unsigned long q, int degree, AmbiguityBias bias = AmbiguityBias::smaller) {
    auto rows = pp_class_totals(q, 5);
    bool arbitrary_family_applies = false;
    for (const auto& r : rows)
        if (r.subsumes_power_row && r.applicable) arbitrary_family_applies = true;
    Count total = 0;
    for (const auto& r : rows) {
        if (r.degree != degree || !r.applicable) continue;
        if (r.label == "x^5" && arbitrary_family_applies) continue;
        if (!r.ambiguous) {
            total += r.total;
        } else {
            const Count& lo = r.total_alt < r.total ? r.total_alt : r.total;
            const Count& hi = r.total_alt < r.total ? r.total : r.total_alt;
            total += (bias == AmbiguityBias::smaller) ? lo : hi;
        }
    }
    return total;
}

} // namespace permbound
