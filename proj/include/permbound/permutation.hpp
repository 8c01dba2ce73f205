#pragma once

// Permutations of {0..n-1} under the Hamming metric, arrays of them, the
// Lehmer rank/unrank bijection, ball enumeration, and the plain-text array
// file format.
//
// Distance facts the rest of the library leans on: d(x, y) counts disagreeing
// positions, is right-invariant (d(xz, yz) = d(x, y)), equals the weight
// (number of unfixed points) of x∘y^{-1}, and is never 1 for distinct
// permutations.

#include "count.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace permbound {

class Permutation {
public:
    // Validates that images form a bijection on {0..n-1}.
    explicit Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
        if (img_.size() > 128) throw std::domain_error("permutation: length exceeds 128");
        std::vector<bool> seen(img_.size(), false);
        for (auto v : img_) {
            if (v >= img_.size() || seen[v]) throw std::invalid_argument("permutation: images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return Permutation(unchecked{}, std::move(img));
    }

    int size() const { return static_cast<int>(img_.size()); }
    std::uint8_t operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    struct unchecked {};
    Permutation(unchecked, std::vector<std::uint8_t> images) : img_(std::move(images)) {}

    std::vector<std::uint8_t> img_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
    friend Permutation unrank(int, const Count&);
    template <typename Visit> friend void for_each_in_ball(const Permutation&, int, Visit&&);
};

// (x ∘ y)(i) = x(y(i)).
inline Permutation compose(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("compose: length mismatch");
    std::vector<std::uint8_t> img(x.images().size());
    for (int i = 0; i < x.size(); ++i) img[static_cast<std::size_t>(i)] = x[y[i]];
    return Permutation(Permutation::unchecked{}, std::move(img));
}

inline Permutation inverse(const Permutation& x) {
    std::vector<std::uint8_t> img(x.images().size());
    for (int i = 0; i < x.size(); ++i) img[x[i]] = static_cast<std::uint8_t>(i);
    return Permutation(Permutation::unchecked{}, std::move(img));
}

inline int hamming_distance(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (int i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

// Unfixed points; equals d(x, identity).
inline int weight(const Permutation& x) {
    int w = 0;
    for (int i = 0; i < x.size(); ++i) w += (x[i] != static_cast<std::uint8_t>(i));
    return w;
}

namespace detail {

// Lehmer rank into 64 bits; valid for n <= 20.
inline std::uint64_t rank_u64(const std::vector<std::uint8_t>& img) {
    const int n = static_cast<int>(img.size());
    std::uint64_t r = 0;
    std::uint64_t fact = 1;
    // Horner-style accumulation: r = sum L_i * (n-1-i)!
    std::vector<std::uint64_t> facts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        facts[static_cast<std::size_t>(i)] = fact;
        fact *= static_cast<std::uint64_t>(i + 1);
    }
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += (img[static_cast<std::size_t>(j)] < img[static_cast<std::size_t>(i)]);
        r += static_cast<std::uint64_t>(smaller) * facts[static_cast<std::size_t>(n - 1 - i)];
    }
    return r;
}

} // namespace detail

// Lexicographic rank in [0, n!): identity ranks 0.
inline Count rank(const Permutation& x) {
    if (x.size() <= 20) return Count(static_cast<unsigned long>(detail::rank_u64(x.images())));
    const int n = x.size();
    Count r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += (x[j] < x[i]);
        r += smaller * factorial(static_cast<unsigned>(n - 1 - i));
    }
    return r;
}

inline Permutation unrank(int n, const Count& r) {
    if (n < 1) throw std::domain_error("unrank: n must be positive");
    if (sgn(r) < 0 || r >= factorial(static_cast<unsigned>(n))) throw std::domain_error("unrank: rank out of range");
    Count rem = r;
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Count f = factorial(static_cast<unsigned>(i));
        Count idx = floor_div(rem, f);
        rem -= idx * f;
        auto at = static_cast<std::size_t>(idx.get_ui());
        img.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    return Permutation(Permutation::unchecked{}, std::move(img));
}

namespace detail {

// Enumerate derangements of the index set support[0..k): assignments where no
// position maps to itself, visiting images as a map position -> image.
template <typename Fn>
void derangements_on(const std::vector<int>& support, std::vector<int>& image, std::vector<bool>& used, std::size_t at,
                     Fn&& emit) {
    if (at == support.size()) {
        emit();
        return;
    }
    for (std::size_t v = 0; v < support.size(); ++v) {
        if (used[v] || support[v] == support[at]) continue;
        used[v] = true;
        image[at] = support[v];
        derangements_on(support, image, used, at + 1, emit);
        used[v] = false;
    }
}

} // namespace detail

// Visits every permutation y with d(center, y) <= radius exactly once, as
// y = sigma ∘ center over all sigma of weight 0..radius: choose the deranged
// support of sigma, then a derangement on it.
template <typename Visit>
void for_each_in_ball(const Permutation& center, int radius, Visit&& visit) {
    const int n = center.size();
    if (radius < 0 || radius > n) throw std::domain_error("ball enumeration: radius out of range");
    std::vector<std::uint8_t> sigma(static_cast<std::size_t>(n));
    auto emit_current = [&]() {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = sigma[center[i]];
        visit(Permutation(Permutation::unchecked{}, std::move(img)));
    };

    for (int i = 0; i <= radius; ++i) {
        if (i == 1) continue; // no permutation moves exactly one point
        // choose support subset of size i
        std::vector<int> support(static_cast<std::size_t>(i));
        std::function<void(int, int)> choose = [&](int start, int chosen) {
            if (chosen == i) {
                std::vector<int> image(static_cast<std::size_t>(i));
                std::vector<bool> used(static_cast<std::size_t>(i), false);
                for (int p = 0; p < n; ++p) sigma[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p);
                detail::derangements_on(support, image, used, 0, [&]() {
                    for (int t = 0; t < i; ++t)
                        sigma[static_cast<std::size_t>(support[static_cast<std::size_t>(t)])] =
                            static_cast<std::uint8_t>(image[static_cast<std::size_t>(t)]);
                    emit_current();
                });
                return;
            }
            for (int v = start; v < n; ++v) {
                support[static_cast<std::size_t>(chosen)] = v;
                choose(v + 1, chosen + 1);
            }
        };
        if (i == 0) {
            for (int p = 0; p < n; ++p) sigma[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p);
            emit_current();
        } else {
            choose(0, 0);
        }
    }
}

// Ordered, duplicate-free collection of same-length permutations.
class PermutationArray {
public:
    PermutationArray() = default;
    explicit PermutationArray(int n) : n_(n) {}

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const Permutation& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Permutation>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    void push_back(Permutation p) {
        if (n_ == 0 && members_.empty()) n_ = p.size();
        if (p.size() != n_) throw std::invalid_argument("permutation array: length mismatch");
        if (n_ <= 20) {
            auto r = detail::rank_u64(p.images());
            if (!ranks_.insert(r).second) throw std::invalid_argument("permutation array: duplicate member");
        } else {
            for (const auto& m : members_)
                if (m == p) throw std::invalid_argument("permutation array: duplicate member");
        }
        members_.push_back(std::move(p));
    }

    bool contains(const Permutation& p) const {
        if (p.size() != n_) return false;
        if (n_ <= 20) return ranks_.count(detail::rank_u64(p.images())) > 0;
        return std::find(members_.begin(), members_.end(), p) != members_.end();
    }

    void sort_members() {
        std::sort(members_.begin(), members_.end());
    }

private:
    int n_ = 0;
    std::vector<Permutation> members_;
    std::unordered_set<std::uint64_t> ranks_;
};

namespace detail {

// Distance with early exit: returns cap as soon as at least cap positions
// disagree.
inline int distance_capped(const Permutation& x, const Permutation& y, int cap) {
    int d = 0;
    for (int i = 0; i < x.size(); ++i) {
        d += (x[i] != y[i]);
        if (d >= cap) return cap;
    }
    return d;
}

} // namespace detail

// Minimum pairwise distance; nullopt when fewer than two members. Splits rows
// across threads when asked to; the reduction is a plain min so the result is
// identical for every thread count.
inline std::optional<int> min_distance(const PermutationArray& c, int threads = 1) {
    if (c.size() < 2) return std::nullopt;
    const auto m = c.size();
    auto scan = [&](std::size_t lo, std::size_t hi, int seed_best) {
        int best = seed_best;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                int d = detail::distance_capped(c[i], c[j], best);
                if (d < best) best = d;
            }
        return best;
    };
    int start = c.n() + 1;
    if (threads <= 1 || m < 512) return scan(0, m, start);

    std::vector<std::thread> pool;
    std::vector<int> results(static_cast<std::size_t>(threads), start);
    // interleave rows so the triangular workload balances
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            int best = start;
            for (std::size_t i = static_cast<std::size_t>(t); i < m; i += static_cast<std::size_t>(threads))
                for (std::size_t j = i + 1; j < m; ++j) {
                    int d = detail::distance_capped(c[i], c[j], best);
                    if (d < best) best = d;
                }
            results[static_cast<std::size_t>(t)] = best;
        });
    }
    for (auto& th : pool) th.join();
    return *std::min_element(results.begin(), results.end());
}

// True when C is closed under composition (hence a group: C is finite).
// Incremental generator closure: grow S until <S> covers C or a product
// escapes C; each closure pass multiplies by the small generating set only.
inline bool is_group_closed(const PermutationArray& c) {
    if (c.size() == 0) return false;
    const int n = c.n();
    if (!c.contains(Permutation::identity(n))) return false;
    std::vector<Permutation> gens;
    PermutationArray generated(n);
    generated.push_back(Permutation::identity(n));
    std::size_t cursor = 0;
    while (generated.size() < c.size()) {
        // adopt the first member not yet generated as a new generator
        while (cursor < c.size() && generated.contains(c[cursor])) ++cursor;
        if (cursor == c.size()) break;
        gens.push_back(c[cursor]);
        std::vector<Permutation> frontier = generated.members();
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    auto y = compose(x, g);
                    if (!c.contains(y)) return false;
                    if (!generated.contains(y)) {
                        generated.push_back(y);
                        next.push_back(std::move(y));
                    }
                }
            frontier = std::move(next);
        }
    }
    return generated.size() == c.size();
}

// Minimum nonzero weight of a member; for a group this equals min_distance.
inline int group_min_weight(const PermutationArray& c) {
    if (c.size() < 2) throw std::invalid_argument("group_min_weight: need at least two members");
    if (!is_group_closed(c)) throw std::invalid_argument("group_min_weight: set is not closed under composition");
    int best = c.n() + 1;
    for (const auto& x : c) {
        int w = weight(x);
        if (w > 0 && w < best) best = w;
    }
    return best;
}

// |union of balls of radius d-1 around the members|, by marking Lehmer ranks.
inline Count covered_union_size(const PermutationArray& c, int d, int enumeration_limit = 10) {
    const int n = c.n();
    if (n > enumeration_limit)
        throw CapacityError("covered_union_size: n=" + std::to_string(n) + " exceeds enumeration limit " +
                            std::to_string(enumeration_limit));
    if (d < 1 || d > n) throw std::domain_error("covered_union_size: d out of range");
    Count nf = factorial(static_cast<unsigned>(n));
    std::vector<bool> hit(nf.get_ui(), false);
    std::uint64_t covered = 0;
    for (const auto& center : c) {
        for_each_in_ball(center, d - 1, [&](const Permutation& y) {
            auto r = detail::rank_u64(y.images());
            if (!hit[r]) {
                hit[r] = true;
                ++covered;
            }
        });
    }
    return Count(static_cast<unsigned long>(covered));
}

// ---- plain-text array format ----
//
// Line 1: "n M". Then M lines, each n space-separated images (0-indexed).
// Writing then reading is byte-exact for canonical files.

inline void write_pa(std::ostream& os, const PermutationArray& c) {
    os << c.n() << ' ' << c.size() << '\n';
    for (const auto& p : c) {
        for (int i = 0; i < p.size(); ++i) {
            if (i) os << ' ';
            os << static_cast<int>(p[i]);
        }
        os << '\n';
    }
}

inline PermutationArray read_pa(std::istream& is) {
    int n = 0;
    std::size_t m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("array file: bad header");
    if (n < 1 || n > 128) throw std::invalid_argument("array file: length out of range");
    PermutationArray c(n);
    for (std::size_t row = 0; row < m; ++row) {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int v = -1;
            if (!(is >> v)) throw std::invalid_argument("array file: truncated row");
            if (v < 0 || v >= n) throw std::invalid_argument("array file: image out of range");
            img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
        c.push_back(Permutation(std::move(img))); // validates bijection, rejects duplicates
    }
    return c;
}

} // namespace permbound
