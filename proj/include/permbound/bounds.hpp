#pragma once

// Bound formulas on P(n, d), the maximum size of a length-n permutation array
// with minimum Hamming distance d, and on the companion anticode quantity
// P[n, d-1]. Every operation returns an auditable BoundRecord carrying value,
// method tag, and input chain.
//
// Rounding discipline: lower bounds are ceilings of under-approximations,
// upper bounds are floors of over-approximations. The only floating-point
// step in the whole module is the directed log2 pair inside graph_lower.

#include "constructions.hpp"
#include "count.hpp"
#include "gf.hpp"
#include "permutation.hpp"

#include <memory>
#include <string>
#include <vector>

namespace permbound {

struct BoundRecord;
using BoundRecordPtr = std::shared_ptr<const BoundRecord>;

struct BoundRecord {
    enum class Sense { lower, upper };

    int n = 0;
    int d = 0;
    Sense sense = Sense::lower;
    Count value = 0;
    std::string method;
    std::vector<BoundRecordPtr> inputs;
    std::string note;          // substitution remarks and the like
    bool constructive = false; // backed by an explicit witness
};

inline const char* to_string(BoundRecord::Sense s) { return s == BoundRecord::Sense::lower ? "lower" : "upper"; }

// One line per record: n, d, sense, value, method, parent methods.
inline std::string serialize(const BoundRecord& r) {
    std::string parents;
    for (const auto& in : r.inputs) {
        if (!parents.empty()) parents += ';';
        parents += in->method;
    }
    if (parents.empty()) parents = "-";
    return std::to_string(r.n) + ", " + std::to_string(r.d) + ", " + to_string(r.sense) + ", " +
           r.value.get_str() + ", " + r.method + ", " + parents;
}

namespace detail {

inline void require_nd(int n, int d, int d_min = 1) {
    if (n < 1 || d < d_min || d > n)
        throw std::domain_error("bound: need " + std::to_string(d_min) + " <= d <= n, got n=" + std::to_string(n) +
                                " d=" + std::to_string(d));
}

} // namespace detail

// Sphere-covering quotient: P(n, d) >= n! / V(n, d-1). d = 1 gives n!.
inline BoundRecord gv_lower(int n, int d) {
    detail::require_nd(n, d);
    Count v = ceil_div(factorial(static_cast<unsigned>(n)), ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d - 1)));
    return {n, d, BoundRecord::Sense::lower, std::move(v), "gv"};
}

// Upper bound on the number of weight-j permutations within distance < d of a
// fixed weight-i permutation: sum over k (shared moved points) and l (extra
// coincidences) of C(i,k) C(n-i,j-k) C(k,l) (l+j-k)!.
inline Count neighbor_bound(int n, int d, int i, int j) {
    if (i < 0 || j < 0 || i > n || j > n || d < 1 || d > n) throw std::domain_error("neighbor_bound: out of range");
    int k_lo = i + j - d + 1;
    k_lo = k_lo <= 0 ? 0 : (k_lo + 1) / 2;
    Count total = 0;
    for (int k = k_lo; k <= std::min(i, j); ++k) {
        int l_hi = std::min(d + 2 * k - i - j - 1, k);
        for (int l = 0; l <= l_hi; ++l)
            total += binomial(static_cast<unsigned>(i), k) * binomial(static_cast<unsigned>(n - i), j - k) *
                     binomial(static_cast<unsigned>(k), l) * factorial(static_cast<unsigned>(l + j - k));
    }
    return total;
}

namespace detail {

// (1/6) sum_{i,j=2}^{d-1} C(n,i) D_i L_{i,j}, exactly.
inline mpq_class sphere_edge_exact(int n, int d) {
    Count s = 0;
    for (int i = 2; i <= d - 1; ++i)
        for (int j = 2; j <= d - 1; ++j)
            s += binomial(static_cast<unsigned>(n), i) * derangement_count(static_cast<unsigned>(i)) *
                 neighbor_bound(n, d, i, j);
    mpq_class e(s, 6);
    e.canonicalize();
    return e;
}

// Guaranteed >= log2 of the exact rational.
inline double log2_upper_rational(const mpq_class& x) {
    return log2_upper(Count(x.get_num())) - log2_lower(Count(x.get_den()));
}

} // namespace detail

// Edge-count bound for the sphere graph, reported as a ceiling; the exact
// rational drives graph_lower. Empty sum (d <= 2) is zero.
inline Count sphere_edge_quantity(int n, int d) {
    detail::require_nd(n, d);
    return ceil_rational(detail::sphere_edge_exact(n, d));
}

// Sphere-graph counting bound:
// P(n,d) >= n!/(10 V) * (log2 V - 1/2 log2 E), evaluated with directed
// rounding so the result under-approximates before the final ceiling. Falls
// back to the plain quotient when the edge term degenerates.
inline BoundRecord graph_lower(int n, int d) {
    detail::require_nd(n, d);
    Count v = ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d - 1));
    mpq_class e = detail::sphere_edge_exact(n, d);
    if (e == 0) {
        auto gv = gv_lower(n, d);
        return {n, d, BoundRecord::Sense::lower, std::move(gv.value), "sphere-graph-gv-fallback", {},
                "edge quantity is zero"};
    }
    double term = log2_lower(v) - 0.5 * detail::log2_upper_rational(e);
    if (term <= 0) {
        auto gv = gv_lower(n, d);
        return {n, d, BoundRecord::Sense::lower, std::move(gv.value), "sphere-graph-gv-fallback", {},
                "log term not positive"};
    }
    mpq_class scale(factorial(static_cast<unsigned>(n)), 10 * v);
    scale.canonicalize();
    mpq_class x = scale * mpq_class(term); // double converts to an exact rational
    return {n, d, BoundRecord::Sense::lower, ceil_rational(x), "sphere-graph", {},
            "directed rounding, result is an under-approximation before ceiling"};
}

struct SphereGraphStats {
    Count edges;            // T: edge count of the permutation sphere graph
    Count vertices;         // D = V(n, d-1) - 1
    Count binary_edges;     // T': edge count of the binary sphere graph
    Count binary_vertices;  // D' = V2(n, d-1) - 1
};

// Exact sphere-graph statistics by enumeration. The permutation sphere holds
// the permutations at distance 1..d-1 from a fixed center (none exist at
// distance 1), the binary sphere the words at weight 1..d-1; edges join
// vertices at distance <= d-1.
inline SphereGraphStats sphere_graph_stats(int n, int d) {
    detail::require_nd(n, d);
    if (n > 7) throw CapacityError("sphere_graph_stats: n=" + std::to_string(n) + " exceeds enumeration limit 7");

    std::vector<Permutation> verts;
    {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        do {
            Permutation p{std::vector<std::uint8_t>(img)};
            int w = weight(p);
            if (w >= 2 && w <= d - 1) verts.push_back(std::move(p));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    unsigned long t = 0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (detail::distance_capped(verts[a], verts[b], d) <= d - 1) ++t;

    std::vector<unsigned> words;
    for (unsigned m = 1; m < (1u << n); ++m) {
        int w = __builtin_popcount(m);
        if (w >= 1 && w <= d - 1) words.push_back(m);
    }
    unsigned long t2 = 0;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b)
            if (__builtin_popcount(words[a] ^ words[b]) <= d - 1) ++t2;

    return {Count(t), ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d - 1)) - 1, Count(t2),
            binary_ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d - 1)) - 1};
}

// Lower bound on the anticode maximum P[n, d-1] (largest set with pairwise
// distances <= d-1): max of (d-1)!, the half-radius ball, and the even-d
// refinement.
inline BoundRecord pband_lower(int n, int d) {
    detail::require_nd(n, d, 2);
    Count best = factorial(static_cast<unsigned>(d - 1));
    Count half = ball_volume(static_cast<unsigned>(n), static_cast<unsigned>((d - 1) / 2));
    if (half > best) best = half;
    if (d % 2 == 0) {
        Count even = ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d / 2 - 1)) +
                     binomial(static_cast<unsigned>(n - 1), d / 2 - 1) * derangement_count(static_cast<unsigned>(d / 2));
        if (even > best) best = even;
    }
    return {n, d, BoundRecord::Sense::lower, std::move(best), "pband-lower", {},
            "bounds the anticode maximum P[n,d-1], not P(n,d)"};
}

// Upper bound on P[n, d-1]: max over anchor weights i of the neighbor-bound
// row sums. d = 2 is forced exact: only one permutation fits in a radius-1
// set, while the generic row sum would give 3.
inline BoundRecord pband_upper(int n, int d) {
    detail::require_nd(n, d, 2);
    if (d == 2)
        return {n, d, BoundRecord::Sense::upper, 1, "pband-upper", {},
                "bounds the anticode maximum P[n,1] = 1 exactly (distance 1 is impossible)"};
    Count best = 0;
    for (int i = (d - 1) / 2; i <= d - 1; ++i) {
        Count row = 0;
        for (int j = 0; j <= i; ++j) row += neighbor_bound(n, d, i, j);
        if (row > best) best = row;
    }
    return {n, d, BoundRecord::Sense::upper, std::move(best), "pband-upper", {},
            "bounds the anticode maximum P[n,d-1], not P(n,d)"};
}

// Double-counting bound P(n,d) >= 2 n! / (V(n,d-1) + P[n,d-1]), with the
// anticode upper bound substituted for P[n,d-1]; any over-estimate there only
// weakens the result, so the bound stays valid.
inline BoundRecord ball_intersect_lower(int n, int d) {
    detail::require_nd(n, d, 2);
    auto pu = std::make_shared<const BoundRecord>(pband_upper(n, d));
    Count den = ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d - 1)) + pu->value;
    Count v = ceil_div(2 * factorial(static_cast<unsigned>(n)), den);
    return {n, d, BoundRecord::Sense::lower, std::move(v), "ball-intersect", {pu},
            "anticode upper bound substituted for the anticode maximum"};
}

// Covered-union bound P(n,d) >= n! M / |union of radius-(d-1) balls around
// the witness members|. Small n only (the union is enumerated).
inline BoundRecord anchor_pa_lower(const Witness& w, int enumeration_limit = 10) {
    const int n = w.claim.n;
    const int d = w.claim.d;
    detail::require_nd(n, d);
    if (w.pa.size() == 0) throw std::invalid_argument("anchor_pa_lower: empty witness");
    Count covered = covered_union_size(w.pa, d, enumeration_limit);
    Count v = ceil_div(factorial(static_cast<unsigned>(n)) * Count(static_cast<unsigned long>(w.pa.size())), covered);
    BoundRecord r{n, d, BoundRecord::Sense::lower, std::move(v), "anchor-union", {}, "witness " + w.construction};
    r.constructive = true;
    return r;
}

namespace detail {

// Best upper bound derivable from the elementary identities alone.
inline Count elementary_upper_value(int n, int d) {
    if (d == n) return Count(n);
    if (d <= 2) return factorial(static_cast<unsigned>(n));
    if (d == 3) return factorial(static_cast<unsigned>(n)) / 2;
    Count best = floor_div(factorial(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(d - 1)));
    Count rec = n * elementary_upper_value(n - 1, d);
    return rec < best ? rec : best;
}

} // namespace detail

// The elementary identities: exact values at d in {1, 2, 3, n} (as matched
// lower+upper pairs) plus the factorial-quotient and deletion-recursion upper
// bounds.
inline std::vector<BoundRecord> elementary(int n, int d) {
    detail::require_nd(n, d);
    std::vector<BoundRecord> out;
    auto exact_pair = [&](Count v) {
        out.push_back({n, d, BoundRecord::Sense::lower, v, "exact"});
        out.push_back({n, d, BoundRecord::Sense::upper, v, "exact"});
    };
    if (d <= 2) exact_pair(factorial(static_cast<unsigned>(n)));
    else if (d == 3) exact_pair(factorial(static_cast<unsigned>(n)) / 2);
    else if (d == n) exact_pair(Count(n));
    out.push_back({n, d, BoundRecord::Sense::upper,
                   floor_div(factorial(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(d - 1))),
                   "upper-factorial"});
    if (d < n)
        out.push_back({n, d, BoundRecord::Sense::upper, n * detail::elementary_upper_value(n - 1, d),
                       "upper-recursive", {}, "n times the best elementary upper bound one point shorter"});
    return out;
}

// P(n, n-1) >= n (theta(n) - 1) where theta is the smallest maximal
// prime-power component of n.
inline BoundRecord klove_lower(int n) {
    if (n < 2) throw std::domain_error("klove_lower: n must be >= 2");
    return {n, n - 1, BoundRecord::Sense::lower, n * (theta(static_cast<unsigned long>(n)) - 1), "kloeve"};
}

namespace detail {

inline Count pp_total_upto(unsigned long q, int max_deg, bool monic, unsigned long long budget, bool& enumerated) {
    unsigned long long size = 1;
    bool feasible = true;
    for (int i = 0; i <= max_deg; ++i) {
        if (size > budget / q) { feasible = false; break; }
        size *= q;
    }
    Count total = 0;
    if (feasible) {
        enumerated = true;
        Field f = Field::make(q);
        auto counts = count_pps_by_degree(f, max_deg, monic, budget);
        for (auto& [deg, c] : counts) total += c;
    } else {
        enumerated = false;
        // conservative class totals: ambiguous rows taken at their smaller size
        for (int i = 1; i <= max_deg; ++i) total += pp_count_from_classes(q, i, AmbiguityBias::smaller);
        if (monic) total /= static_cast<unsigned long>(q - 1); // every class is closed under scaling
    }
    return total;
}

} // namespace detail

// P(q, q-d) >= number of permutation polynomials of degree <= d over GF(q):
// two distinct ones agree on at most d points, so the induced permutations
// are at distance >= q - d.
inline BoundRecord pp_sum_lower(unsigned long q, int d, unsigned long long budget = 100'000'000ULL) {
    if (!prime_power(q)) throw std::domain_error("pp_sum_lower: q must be a prime power");
    if (d < 1 || d > 5) throw std::domain_error("pp_sum_lower: degree must be in 1..5");
    if (static_cast<long>(q) - d < 2) throw std::domain_error("pp_sum_lower: target distance below 2");
    bool enumerated = false;
    Count total = detail::pp_total_upto(q, d, false, budget, enumerated);
    return {static_cast<int>(q), static_cast<int>(q) - d, BoundRecord::Sense::lower, std::move(total), "pp-sum", {},
            enumerated ? "exhaustive enumeration" : "class-formula totals, conservative ambiguity"};
}

// P(q, q-d) >= number of monic permutation polynomials of degree <= d+1.
inline BoundRecord pp_monic_lower(unsigned long q, int d, unsigned long long budget = 100'000'000ULL) {
    if (!prime_power(q)) throw std::domain_error("pp_monic_lower: q must be a prime power");
    if (d < 1 || d > 4) throw std::domain_error("pp_monic_lower: degree must be in 1..4");
    if (static_cast<long>(q) - d < 2) throw std::domain_error("pp_monic_lower: target distance below 2");
    bool enumerated = false;
    Count total = detail::pp_total_upto(q, d + 1, true, budget, enumerated);
    return {static_cast<int>(q), static_cast<int>(q) - d, BoundRecord::Sense::lower, std::move(total), "pp-monic", {},
            enumerated ? "exhaustive enumeration" : "class-formula totals, conservative ambiguity"};
}

// P(q, q-2) >= q^2 for q a prime power with q != 1 mod 3 (cube maps join the
// linear ones).
inline BoundRecord pp_square_lower(unsigned long q) {
    if (!prime_power(q)) throw std::domain_error("pp_square_lower: q must be a prime power");
    if (q % 3 == 1) throw std::domain_error("pp_square_lower: requires q != 1 mod 3");
    if (q < 4) throw std::domain_error("pp_square_lower: target distance below 2");
    return {static_cast<int>(q), static_cast<int>(q) - 2, BoundRecord::Sense::lower, Count(q) * Count(q), "pp-square"};
}

// Value-level distance reductions (the witness-level versions live in the
// constructions module). Sources must be lower bounds.

// P(n-1, d-3) >= P(n, d).
inline BoundRecordPtr reduce_d3(const BoundRecordPtr& src) {
    if (!src || src->sense != BoundRecord::Sense::lower) throw std::invalid_argument("reduce_d3: need a lower bound");
    if (src->d <= 3) throw std::domain_error("reduce_d3: needs d > 3");
    return std::make_shared<const BoundRecord>(
        BoundRecord{src->n - 1, src->d - 3, BoundRecord::Sense::lower, src->value, "reduce-d3", {src}});
}

// P(n-1, d-2) >= ceil(2 P(n, d) / n).
inline BoundRecordPtr reduce_d2(const BoundRecordPtr& src) {
    if (!src || src->sense != BoundRecord::Sense::lower) throw std::invalid_argument("reduce_d2: need a lower bound");
    if (src->d <= 2) throw std::domain_error("reduce_d2: needs d > 2");
    return std::make_shared<const BoundRecord>(BoundRecord{
        src->n - 1, src->d - 2, BoundRecord::Sense::lower, ceil_div(2 * src->value, Count(src->n)), "reduce-d2", {src}});
}

// P(n-1, d) >= ceil(P(n, d) / n), the deletion inequality read downward.
inline BoundRecordPtr divide_n(const BoundRecordPtr& src) {
    if (!src || src->sense != BoundRecord::Sense::lower) throw std::invalid_argument("divide_n: need a lower bound");
    if (src->d > src->n - 1) throw std::domain_error("divide_n: d exceeds n-1");
    return std::make_shared<const BoundRecord>(
        BoundRecord{src->n - 1, src->d, BoundRecord::Sense::lower, ceil_div(src->value, Count(src->n)), "divide-n", {src}});
}

// The four lower bounds obtained by puncturing the sharply 3-transitive
// family of size (q+1)q(q-1): P(q,q-4) and P(q,q-3) directly, then
// P(q-1,q-4) by deletion and P(q-1,q-6) by a second distance cut. Lines whose
// target distance falls below 2 are suppressed.
inline std::vector<BoundRecordPtr> pgl_reduction_family(unsigned long q) {
    if (!prime_power(q)) throw std::domain_error("pgl_reduction_family: q must be a prime power");
    auto base = std::make_shared<const BoundRecord>(
        BoundRecord{static_cast<int>(q) + 1, static_cast<int>(q) - 1, BoundRecord::Sense::lower,
                    Count(q + 1) * Count(q) * Count(q - 1), "pgl-exact"});
    std::vector<BoundRecordPtr> out;
    int iq = static_cast<int>(q);
    if (iq - 3 >= 2) out.push_back(reduce_d2(base));
    if (iq - 4 >= 2) {
        auto qq4 = reduce_d3(base);
        out.push_back(qq4);
        out.push_back(divide_n(qq4));
        if (iq - 6 >= 2) out.push_back(reduce_d2(qq4));
    }
    return out;
}

// P(n, d) <= n! / P[n, d-1], with the anticode lower bound in the
// denominator.
inline BoundRecord tarnanen_upper(int n, int d) {
    detail::require_nd(n, d, 2);
    auto pl = std::make_shared<const BoundRecord>(pband_lower(n, d));
    Count v = floor_div(factorial(static_cast<unsigned>(n)), pl->value);
    return {n, d, BoundRecord::Sense::upper, std::move(v), "tarnanen", {pl},
            "anticode lower bound substituted for the anticode maximum"};
}

} // namespace permbound
