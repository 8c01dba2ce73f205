#pragma once

// Constructions that produce verified permutation arrays: affine maps and
// fractional linear maps over GF(q), arrays from mutually orthogonal latin
// squares, the two Mathieu groups, the two distance-reduction maps that drop
// the top symbol, a greedy sphere-covering scan, and a branch-and-bound
// clique search.
//
// Every construction returns a Witness whose claim has been checked: fully
// pairwise, by group structure, or by seeded sampling when the pair count is
// out of reach. The verification mode is recorded, never implied.

#include "count.hpp"
#include "gf.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace permbound {

enum class VerifyMode { full, group, sampled };

inline const char* to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::full: return "full";
        case VerifyMode::group: return "group";
        case VerifyMode::sampled: return "sampled";
    }
    return "?";
}

struct Verification {
    VerifyMode mode = VerifyMode::full;
    std::uint64_t seed = 0;
    std::uint64_t pairs = 0; // sampled mode only
};

struct Claim {
    int n = 0;
    Count m = 0;
    int d = 0;
};

struct Witness {
    PermutationArray pa;
    Claim claim;
    std::string construction; // tag with parameters, e.g. "pgl2(q=8)"
    Verification verification;
};

namespace detail {

inline void verify_full(const PermutationArray& pa, int d, const std::string& who, int threads = 1) {
    auto md = min_distance(pa, threads);
    if (pa.size() >= 2 && (!md || *md < d))
        throw std::runtime_error(who + ": claimed distance " + std::to_string(d) + " fails full verification" +
                                 (md ? " (found " + std::to_string(*md) + ")" : ""));
}

inline Verification verify_sampled(const PermutationArray& pa, int d, std::uint64_t seed, std::uint64_t pairs,
                                   const std::string& who) {
    std::mt19937_64 rng(seed);
    const auto m = pa.size();
    if (m < 2) return {VerifyMode::sampled, seed, 0};
    for (std::uint64_t t = 0; t < pairs;) {
        auto i = static_cast<std::size_t>(rng() % m);
        auto j = static_cast<std::size_t>(rng() % m);
        if (i == j) continue;
        if (hamming_distance(pa[i], pa[j]) < d)
            throw std::runtime_error(who + ": claimed distance " + std::to_string(d) +
                                     " violated by sampled pair");
        ++t;
    }
    return {VerifyMode::sampled, seed, pairs};
}

} // namespace detail

// x -> ux + v over GF(q), u != 0: a (q, q(q-1), q-1) array under the
// canonical element indexing. Fully verified.
inline Witness affine_pa(unsigned long q) {
    Field f = Field::make(q);
    PermutationArray pa(static_cast<int>(q));
    for (unsigned u = 1; u < q; ++u)
        for (unsigned v = 0; v < q; ++v) {
            std::vector<std::uint8_t> img(q);
            for (unsigned x = 0; x < q; ++x) img[x] = static_cast<std::uint8_t>(f.add(f.mul(u, x), v));
            pa.push_back(Permutation(std::move(img)));
        }
    pa.sort_members();
    int d = static_cast<int>(q) - 1;
    detail::verify_full(pa, d, "affine_pa");
    return {std::move(pa), {static_cast<int>(q), Count(static_cast<unsigned long>(q * (q - 1))), d},
            "affine(q=" + std::to_string(q) + ")", {VerifyMode::full}};
}

struct MolsSet {
    int n = 0;
    // squares[s][i][j] in [0, n)
    std::vector<std::vector<std::vector<int>>> squares;
};

// The classical prime-power family L_u(i, j) = u*i + j over GF(q), u != 0.
inline MolsSet standard_mols(unsigned long q, int count) {
    if (count < 1 || static_cast<unsigned long>(count) > q - 1)
        throw std::domain_error("standard_mols: count must be in 1..q-1");
    Field f = Field::make(q);
    MolsSet m;
    m.n = static_cast<int>(q);
    for (unsigned u = 1; u <= static_cast<unsigned>(count); ++u) {
        std::vector<std::vector<int>> sq(q, std::vector<int>(q));
        for (unsigned i = 0; i < q; ++i)
            for (unsigned j = 0; j < q; ++j) sq[i][j] = static_cast<int>(f.add(f.mul(u, i), j));
        m.squares.push_back(std::move(sq));
    }
    return m;
}

// For each square and each symbol s, the permutation i -> j with L(i, j) = s.
// m squares of order n yield an (n, m*n, n-1) array; orthogonality caps any
// two of the permutations at one agreement. Fully verified.
inline Witness pa_from_mols(const MolsSet& mols) {
    const int n = mols.n;
    if (n < 2 || mols.squares.empty()) throw std::invalid_argument("pa_from_mols: need at least one square");
    for (const auto& sq : mols.squares) {
        if (static_cast<int>(sq.size()) != n) throw std::invalid_argument("pa_from_mols: square size mismatch");
        for (int i = 0; i < n; ++i) {
            std::vector<bool> row(static_cast<std::size_t>(n), false), col(static_cast<std::size_t>(n), false);
            for (int j = 0; j < n; ++j) {
                int rv = sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                int cv = sq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (rv < 0 || rv >= n || cv < 0 || cv >= n) throw std::invalid_argument("pa_from_mols: symbol out of range");
                if (row[static_cast<std::size_t>(rv)] || col[static_cast<std::size_t>(cv)])
                    throw std::invalid_argument("pa_from_mols: square is not latin");
                row[static_cast<std::size_t>(rv)] = col[static_cast<std::size_t>(cv)] = true;
            }
        }
    }
    for (std::size_t a = 0; a < mols.squares.size(); ++a)
        for (std::size_t b = a + 1; b < mols.squares.size(); ++b) {
            std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto key = static_cast<std::size_t>(mols.squares[a][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                                   static_cast<std::size_t>(n) +
                               static_cast<std::size_t>(mols.squares[b][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    if (seen[key]) throw std::invalid_argument("pa_from_mols: squares are not orthogonal");
                    seen[key] = true;
                }
        }

    PermutationArray pa(n);
    for (const auto& sq : mols.squares)
        for (int s = 0; s < n; ++s) {
            std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == s)
                        img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
            pa.push_back(Permutation(std::move(img)));
        }
    pa.sort_members();
    int d = n - 1;
    detail::verify_full(pa, d, "pa_from_mols");
    return {std::move(pa),
            {n, Count(static_cast<unsigned long>(mols.squares.size()) * static_cast<unsigned long>(n)), d},
            "mols(n=" + std::to_string(n) + ",m=" + std::to_string(mols.squares.size()) + ")",
            {VerifyMode::full}};
}

// Fractional linear maps x -> (ax+b)/(cx+d), ad-bc != 0, acting on
// GF(q) ∪ {∞} with ∞ indexed as point q. Canonical representatives
// (c=0, a=1) and (c=1) cover each map exactly once:
// (q+1)q(q-1) permutations, distance q-1, verified via group structure.
inline Witness pgl2_pa(unsigned long q) {
    if (q < 3) throw std::domain_error("pgl2_pa: q must be a prime power >= 3");
    Field f = Field::make(q);
    const unsigned inf = static_cast<unsigned>(q);
    PermutationArray pa(static_cast<int>(q) + 1);
    auto emit = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
        std::vector<std::uint8_t> img(q + 1);
        for (unsigned x = 0; x <= q; ++x) {
            unsigned y;
            if (x == inf) {
                y = c ? f.mul(a, f.inv(c)) : inf;
            } else {
                unsigned den = f.add(f.mul(c, x), d);
                y = den ? f.mul(f.add(f.mul(a, x), b), f.inv(den)) : inf;
            }
            img[x] = static_cast<std::uint8_t>(y);
        }
        pa.push_back(Permutation(std::move(img)));
    };
    for (unsigned b = 0; b < q; ++b)
        for (unsigned d = 1; d < q; ++d) emit(1, b, 0, d);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned d = 0; d < q; ++d)
            for (unsigned b = 0; b < q; ++b)
                if (f.sub(f.mul(a, d), b) != 0) emit(a, b, 1, d);
    pa.sort_members();

    int n = static_cast<int>(q) + 1;
    int dist = static_cast<int>(q) - 1;
    int got = group_min_weight(pa); // throws if not closed
    if (got != dist)
        throw std::runtime_error("pgl2_pa: expected min weight " + std::to_string(dist) + ", got " +
                                 std::to_string(got));
    return {std::move(pa), {n, Count(static_cast<unsigned long>((q + 1) * q * (q - 1))), dist},
            "pgl2(q=" + std::to_string(q) + ")", {VerifyMode::group}};
}

// Standard generator sets; validated by closure order on every call.
inline std::vector<Permutation> mathieu11_generators() {
    return {Permutation({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0}),
            Permutation({0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7})};
}

inline std::vector<Permutation> mathieu12_generators() {
    return {Permutation({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11}),
            Permutation({0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11}),
            Permutation({11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0})};
}

// Closure of the given (or standard) generators. which must be 11 or 12; the
// closure order must come out 7920 resp. 95040 or the generator set is
// rejected. Min weight 8 is established by group structure.
inline Witness mathieu_pa(int which, std::vector<Permutation> generators = {}) {
    if (which != 11 && which != 12) throw std::domain_error("mathieu_pa: which must be 11 or 12");
    if (generators.empty()) generators = which == 11 ? mathieu11_generators() : mathieu12_generators();
    const std::size_t expect = which == 11 ? 7920 : 95040;
    for (const auto& g : generators)
        if (g.size() != which) throw std::invalid_argument("mathieu_pa: generator length mismatch");

    PermutationArray pa(which);
    pa.push_back(Permutation::identity(which));
    std::vector<Permutation> frontier = pa.members();
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                auto y = compose(x, g);
                if (!pa.contains(y)) {
                    pa.push_back(y);
                    if (pa.size() > expect)
                        throw std::runtime_error("mathieu_pa: closure exceeds expected order " +
                                                 std::to_string(expect) + " (bad generator configuration)");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    if (pa.size() != expect)
        throw std::runtime_error("mathieu_pa: closure order " + std::to_string(pa.size()) + ", expected " +
                                 std::to_string(expect) + " (bad generator configuration)");
    pa.sort_members();
    int got = group_min_weight(pa);
    if (got != 8) throw std::runtime_error("mathieu_pa: min weight " + std::to_string(got) + ", expected 8");
    return {std::move(pa), {which, Count(static_cast<unsigned long>(expect)), 8},
            "mathieu(" + std::to_string(which) + ")", {VerifyMode::group}};
}

namespace detail {

constexpr std::uint64_t kFullPairOpsD3 = 1'000'000'000ULL; // M^2 * n cutoff, spec'd for the d-3 map
constexpr std::uint64_t kFullPairOpsD2 = 4'000'000'000ULL; // covers the 15840-member reduction
constexpr std::uint64_t kSamplePairs = 1'000'000ULL;

inline Verification verify_reduced(const PermutationArray& pa, int d, std::uint64_t cutoff, std::uint64_t seed,
                                   const std::string& who, int threads) {
    auto m = static_cast<std::uint64_t>(pa.size());
    auto cost = m * m * static_cast<std::uint64_t>(pa.n());
    if (cost <= cutoff) {
        verify_full(pa, d, who, threads);
        return {VerifyMode::full};
    }
    return verify_sampled(pa, d, seed, kSamplePairs, who);
}

} // namespace detail

// Drop the top symbol by re-routing it through the last position:
// psi(x) = phi(x) unless phi(x) = n-1, in which case phi(n-1). Turns an
// (n, M, d) array into an (n-1, M, d-3) one.
inline Witness puncture_d3(const Witness& in, std::uint64_t seed = 0, int threads = 1) {
    const int n = in.claim.n;
    const int d = in.claim.d;
    if (d <= 3) throw std::domain_error("puncture_d3: needs claimed distance > 3");
    if (n < d) throw std::domain_error("puncture_d3: needs n >= d");
    PermutationArray out(n - 1);
    for (const auto& phi : in.pa) {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n) - 1);
        for (int x = 0; x < n - 1; ++x) {
            auto v = phi[x];
            img[static_cast<std::size_t>(x)] = (v == n - 1) ? phi[n - 1] : v;
        }
        out.push_back(Permutation(std::move(img))); // duplicate members rejected here
    }
    auto verification = detail::verify_reduced(out, d - 3, detail::kFullPairOpsD3, seed, "puncture_d3", threads);
    return {std::move(out), {n - 1, Count(static_cast<unsigned long>(in.pa.size())), d - 3},
            "puncture_d3(" + in.construction + ")", verification};
}

// Keep only the two largest buckets of members sending position s (resp. t)
// to the top symbol, drop position s, and patch the t-bucket at position t
// with the value from s. Turns (n, M, d) into (n-1, M1+M2, d-2) with
// M1+M2 >= ceil(2M/n). Domain positions are relabeled order-preservingly.
inline Witness puncture_d2(const Witness& in, std::uint64_t seed = 0, int threads = 1) {
    const int n = in.claim.n;
    const int d = in.claim.d;
    if (d <= 2) throw std::domain_error("puncture_d2: needs claimed distance > 2");
    if (n < d) throw std::domain_error("puncture_d2: needs n >= d");

    std::vector<std::vector<const Permutation*>> buckets(static_cast<std::size_t>(n));
    for (const auto& phi : in.pa)
        for (int x = 0; x < n; ++x)
            if (phi[x] == n - 1) {
                buckets[static_cast<std::size_t>(x)].push_back(&phi);
                break;
            }
    int s = 0, t = -1;
    for (int i = 1; i < n; ++i)
        if (buckets[static_cast<std::size_t>(i)].size() > buckets[static_cast<std::size_t>(s)].size()) s = i;
    for (int i = 0; i < n; ++i) {
        if (i == s) continue;
        if (t < 0 || buckets[static_cast<std::size_t>(i)].size() > buckets[static_cast<std::size_t>(t)].size()) t = i;
    }

    std::vector<int> domain;
    for (int x = 0; x < n; ++x)
        if (x != s) domain.push_back(x);

    PermutationArray out(n - 1);
    for (const Permutation* phi : buckets[static_cast<std::size_t>(s)]) {
        std::vector<std::uint8_t> img;
        img.reserve(domain.size());
        for (int x : domain) img.push_back((*phi)[x]);
        out.push_back(Permutation(std::move(img)));
    }
    for (const Permutation* phi : buckets[static_cast<std::size_t>(t)]) {
        std::vector<std::uint8_t> img;
        img.reserve(domain.size());
        for (int x : domain) img.push_back(x == t ? (*phi)[s] : (*phi)[x]);
        out.push_back(Permutation(std::move(img)));
    }

    auto m_out = out.size();
    auto verification = detail::verify_reduced(out, d - 2, detail::kFullPairOpsD2, seed, "puncture_d2", threads);
    return {std::move(out), {n - 1, Count(static_cast<unsigned long>(m_out)), d - 2},
            "puncture_d2(" + in.construction + ")", verification};
}

enum class GreedyOrder { lex, shuffled };

// Scan S_n in the given order, keeping each permutation at distance >= d from
// everything kept so far. The result is maximal, hence at least
// n! / V(n, d-1) members. Verified in full by the scan itself.
inline Witness greedy_gv(int n, int d, GreedyOrder order = GreedyOrder::lex, std::uint64_t seed = 0,
                         int enumeration_limit = 10) {
    if (n < 2 || d < 1 || d > n) throw std::domain_error("greedy_gv: need 2 <= d <= n or d = 1");
    if (n > enumeration_limit)
        throw CapacityError("greedy_gv: n=" + std::to_string(n) + " exceeds enumeration limit " +
                            std::to_string(enumeration_limit));

    PermutationArray pa(n);
    auto try_keep = [&](const Permutation& x) {
        for (const auto& y : pa)
            if (detail::distance_capped(x, y, d) < d) return;
        pa.push_back(x);
    };

    if (order == GreedyOrder::lex) {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        do {
            try_keep(Permutation(std::vector<std::uint8_t>(img)));
        } while (std::next_permutation(img.begin(), img.end()));
    } else {
        auto total = factorial(static_cast<unsigned>(n)).get_ui();
        std::vector<std::uint32_t> ranks(total);
        for (std::uint64_t r = 0; r < total; ++r) ranks[r] = static_cast<std::uint32_t>(r);
        // explicit Fisher-Yates so the order is pinned down by the seed alone
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = total - 1; i > 0; --i) {
            auto j = rng() % (i + 1);
            std::swap(ranks[i], ranks[j]);
        }
        for (auto r : ranks) try_keep(unrank(n, Count(static_cast<unsigned long>(r))));
    }

    auto m = pa.size();
    std::string tag = order == GreedyOrder::lex ? "greedy(lex)" : "greedy(shuffled,seed=" + std::to_string(seed) + ")";
    return {std::move(pa), {n, Count(static_cast<unsigned long>(m)), d}, tag, {VerifyMode::full, seed}};
}

namespace detail {

// Fixed-capacity bitset over the candidate vertices of one clique search.
struct VertexSet {
    std::vector<std::uint64_t> w;
    explicit VertexSet(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return w[i >> 6] >> (i & 63) & 1; }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
};

struct CliqueSearch {
    int m = 0;
    std::vector<VertexSet> adj;
    std::uint64_t budget = 0;
    std::uint64_t expansions = 0;
    bool out_of_budget = false;
    std::vector<int> best, cur;

    // Tomita-style expansion: greedy-color the candidates in index order,
    // then branch in reverse color order with |cur| + color as the bound.
    void expand(VertexSet cand) {
        if (++expansions >= budget) {
            out_of_budget = true;
            return;
        }
        std::vector<int> order, bound;
        int colors = 0;
        VertexSet left = cand;
        while (left.any()) {
            ++colors;
            VertexSet cls = left;
            for (int v = 0; v < m; ++v) {
                if (!cls.test(static_cast<std::size_t>(v))) continue;
                order.push_back(v);
                bound.push_back(colors);
                left.reset(static_cast<std::size_t>(v));
                for (std::size_t w0 = 0; w0 < cls.w.size(); ++w0)
                    cls.w[w0] &= ~adj[static_cast<std::size_t>(v)].w[w0];
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur.size()) + bound[static_cast<std::size_t>(i)] <= static_cast<int>(best.size()))
                return;
            int v = order[static_cast<std::size_t>(i)];
            cur.push_back(v);
            VertexSet next(static_cast<std::size_t>(m));
            bool nonempty = false;
            for (std::size_t w0 = 0; w0 < next.w.size(); ++w0) {
                next.w[w0] = cand.w[w0] & adj[static_cast<std::size_t>(v)].w[w0];
                nonempty = nonempty || next.w[w0];
            }
            if (nonempty) {
                expand(next);
                if (out_of_budget) {
                    // keep the better of cur/best before unwinding
                    if (cur.size() > best.size()) best = cur;
                    cur.pop_back();
                    return;
                }
            } else if (cur.size() > best.size()) {
                best = cur;
            }
            cur.pop_back();
            cand.reset(static_cast<std::size_t>(v));
        }
    }
};

} // namespace detail

// Best clique found in the distance->=d graph on S_n within a deterministic
// node-expansion budget. The identity is pinned into the clique (any clique
// can be right-translated onto it), so the search runs on permutations of
// weight >= d. Result is a fully verified witness, best-effort in size.
inline Witness clique_lower(int n, int d, std::uint64_t node_budget = 100'000'000ULL) {
    if (n < 2 || n > 7 || d < 2 || d > n) throw std::domain_error("clique_lower: need 2 <= d <= n <= 7");

    std::vector<Permutation> verts;
    {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        Permutation ident = Permutation::identity(n);
        do {
            Permutation p{std::vector<std::uint8_t>(img)};
            if (hamming_distance(p, ident) >= d) verts.push_back(std::move(p));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    const int m = static_cast<int>(verts.size());

    detail::CliqueSearch search;
    search.m = m;
    search.budget = node_budget ? node_budget : 1;
    search.adj.assign(static_cast<std::size_t>(m), detail::VertexSet(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (hamming_distance(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]) >= d) {
                search.adj[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                search.adj[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
            }

    // deterministic multi-start greedy for the initial incumbent
    for (std::uint64_t restart = 0; restart < 64; ++restart) {
        std::vector<int> order(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
        if (restart > 0) {
            std::mt19937_64 rng(restart);
            for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
        }
        std::vector<int> clique;
        detail::VertexSet open(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) open.set(static_cast<std::size_t>(i));
        for (int v : order) {
            if (!open.test(static_cast<std::size_t>(v))) continue;
            clique.push_back(v);
            for (std::size_t w0 = 0; w0 < open.w.size(); ++w0)
                open.w[w0] &= search.adj[static_cast<std::size_t>(v)].w[w0];
        }
        if (clique.size() > search.best.size()) search.best = clique;
    }

    detail::VertexSet all(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) all.set(static_cast<std::size_t>(i));
    search.expand(all);

    PermutationArray pa(n);
    pa.push_back(Permutation::identity(n));
    std::vector<int> chosen = search.best;
    std::sort(chosen.begin(), chosen.end());
    for (int v : chosen) pa.push_back(verts[static_cast<std::size_t>(v)]);
    detail::verify_full(pa, d, "clique_lower");
    auto sz = pa.size();
    return {std::move(pa), {n, Count(static_cast<unsigned long>(sz)), d},
            "clique(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                ",budget=" + std::to_string(node_budget) + ")",
            {VerifyMode::full}};
}

} // namespace permbound
