#include "permbound/constructions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace permbound;

TEST_CASE("affine arrays") {
    for (unsigned long q : {3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
        auto w = affine_pa(q);
        CAPTURE(q);
        CHECK(w.claim.n == static_cast<int>(q));
        CHECK(w.claim.m == Count(static_cast<unsigned long>(q * (q - 1))));
        CHECK(w.claim.d == static_cast<int>(q) - 1);
        CHECK(w.pa.size() == q * (q - 1));
        CHECK(w.verification.mode == VerifyMode::full);
        CHECK(min_distance(w.pa, 2) == static_cast<int>(q) - 1);
    }
    SECTION("affine maps form a group") {
        auto w = affine_pa(5);
        CHECK(is_group_closed(w.pa));
        CHECK(group_min_weight(w.pa) == 4);
    }
    CHECK_THROWS_AS(affine_pa(6), std::domain_error);
}

TEST_CASE("latin square arrays") {
    auto mols = standard_mols(5, 4);
    REQUIRE(mols.squares.size() == 4);
    auto w = pa_from_mols(mols);
    CHECK(w.claim.n == 5);
    CHECK(w.claim.m == 20);
    CHECK(w.claim.d == 4);
    CHECK(min_distance(w.pa) == 4);

    SECTION("fewer squares still work") {
        auto w2 = pa_from_mols(standard_mols(7, 3));
        CHECK(w2.claim.m == 21);
        CHECK(w2.claim.d == 6);
        CHECK(min_distance(w2.pa) == 6);
    }
    SECTION("a non-latin square is rejected") {
        auto bad = standard_mols(4, 2);
        bad.squares[0][0][0] = bad.squares[0][0][1];
        CHECK_THROWS_AS(pa_from_mols(bad), std::invalid_argument);
    }
    SECTION("non-orthogonal squares are rejected") {
        auto bad = standard_mols(4, 1);
        bad.squares.push_back(bad.squares[0]);
        CHECK_THROWS_AS(pa_from_mols(bad), std::invalid_argument);
    }
    CHECK_THROWS_AS(standard_mols(5, 5), std::domain_error);
    CHECK_THROWS_AS(standard_mols(5, 0), std::domain_error);
}

TEST_CASE("fractional linear arrays") {
    for (unsigned long q : {3ul, 4ul, 5ul, 7ul, 8ul}) {
        auto w = pgl2_pa(q);
        CAPTURE(q);
        CHECK(w.claim.n == static_cast<int>(q) + 1);
        CHECK(w.claim.m == Count(static_cast<unsigned long>((q + 1) * q * (q - 1))));
        CHECK(w.claim.d == static_cast<int>(q) - 1);
        CHECK(w.pa.size() == (q + 1) * q * (q - 1));
        CHECK(w.verification.mode == VerifyMode::group);
    }
    SECTION("claimed distance is the true minimum distance") {
        for (unsigned long q : {3ul, 4ul, 5ul}) {
            auto w = pgl2_pa(q);
            CHECK(min_distance(w.pa, 2) == static_cast<int>(q) - 1);
        }
    }
    SECTION("q = 3 gives all of S4") {
        auto w = pgl2_pa(3);
        CHECK(w.pa.size() == 24);
        CHECK(is_group_closed(w.pa));
    }
    CHECK_THROWS_AS(pgl2_pa(2), std::domain_error);
    CHECK_THROWS_AS(pgl2_pa(6), std::domain_error);
}

TEST_CASE("mathieu groups") {
    auto m11 = mathieu_pa(11);
    CHECK(m11.claim.n == 11);
    CHECK(m11.claim.m == 7920);
    CHECK(m11.claim.d == 8);
    CHECK(m11.pa.contains(Permutation::identity(11)));
    CHECK(m11.verification.mode == VerifyMode::group);
    SECTION("the group claim survives a full pairwise check") {
        CHECK(min_distance(m11.pa, 4) == 8);
    }

    auto m12 = mathieu_pa(12);
    CHECK(m12.claim.n == 12);
    CHECK(m12.claim.m == 95040);
    CHECK(m12.claim.d == 8);
    SECTION("closure spot check") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 50; ++t) {
            const auto& a = m12.pa[rng() % m12.pa.size()];
            const auto& b = m12.pa[rng() % m12.pa.size()];
            CHECK(m12.pa.contains(compose(a, b)));
        }
    }

    CHECK_THROWS_AS(mathieu_pa(10), std::domain_error);
    SECTION("wrong generators are rejected") {
        CHECK_THROWS_AS(mathieu_pa(11, {Permutation::identity(11)}), std::runtime_error);
        // transposition + full cycle generate all of S11, overshooting 7920
        CHECK_THROWS_AS(mathieu_pa(11, {Permutation({1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
                                        Permutation({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0})}),
                        std::runtime_error);
    }
}

TEST_CASE("distance reduction by three") {
    SECTION("small input, full verification") {
        auto in = affine_pa(7); // (7, 42, 6)
        auto out = puncture_d3(in);
        CHECK(out.claim.n == 6);
        CHECK(out.claim.m == 42);
        CHECK(out.claim.d == 3);
        CHECK(out.pa.size() == 42);
        CHECK(out.verification.mode == VerifyMode::full);
        auto md = min_distance(out.pa);
        REQUIRE(md.has_value());
        CHECK(*md >= 3);
    }
    SECTION("large input falls back to sampled verification") {
        auto in = mathieu_pa(12); // (12, 95040, 8)
        auto out = puncture_d3(in, 0, 4);
        CHECK(out.claim.n == 11);
        CHECK(out.claim.m == 95040);
        CHECK(out.claim.d == 5);
        CHECK(out.pa.size() == 95040);
        CHECK(out.verification.mode == VerifyMode::sampled);
        CHECK(out.verification.pairs == 1'000'000);
    }
    CHECK_THROWS_AS(puncture_d3(affine_pa(4)), std::domain_error); // d = 3 too small
}

TEST_CASE("distance reduction by two") {
    SECTION("small input, full verification") {
        auto in = affine_pa(7); // (7, 42, 6), buckets are uniform with 6 members
        auto out = puncture_d2(in);
        CHECK(out.claim.n == 6);
        CHECK(out.claim.m == 12); // ceil(2 * 42 / 7)
        CHECK(out.claim.d == 4);
        CHECK(out.verification.mode == VerifyMode::full);
        auto md = min_distance(out.pa);
        REQUIRE(md.has_value());
        CHECK(*md >= 4);
    }
    SECTION("keeps at least ceil(2M/n) members") {
        for (unsigned long q : {5ul, 7ul, 9ul}) {
            auto in = pgl2_pa(q);
            auto out = puncture_d2(in);
            Count floor_members = ceil_div(2 * in.claim.m, Count(in.claim.n));
            CHECK(out.claim.m >= floor_members);
        }
    }
    SECTION("the full mathieu reduction is verified pair by pair") {
        auto in = mathieu_pa(12);
        auto out = puncture_d2(in, 0, 4);
        CHECK(out.claim.n == 11);
        CHECK(out.claim.m == 15840); // two full buckets of 7920
        CHECK(out.claim.d == 6);
        CHECK(out.verification.mode == VerifyMode::full);
    }
    CHECK_THROWS_AS(puncture_d2(affine_pa(3)), std::domain_error); // d = 2 too small
}

TEST_CASE("greedy sphere-covering scan") {
    SECTION("lexicographic order") {
        auto w = greedy_gv(4, 3);
        CHECK(w.claim.m == 12);
        CHECK(min_distance(w.pa) == 3);
        auto w65 = greedy_gv(6, 5);
        CHECK(w65.claim.m == 15);
        CHECK(*min_distance(w65.pa) >= 5);
    }
    SECTION("the kept set is maximal, so it meets the volume quotient") {
        for (int n : {4, 5}) {
            for (int d = 2; d <= n; ++d) {
                auto w = greedy_gv(n, d);
                // every permutation must be within d-1 of a kept one
                std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
                do {
                    Permutation p{std::vector<std::uint8_t>(img)};
                    bool covered = false;
                    for (const auto& k : w.pa)
                        covered = covered || (hamming_distance(p, k) <= d - 1);
                    CHECK(covered);
                } while (std::next_permutation(img.begin(), img.end()));
                Count quotient = ceil_div(factorial(static_cast<unsigned>(n)),
                                          ball_volume(static_cast<unsigned>(n), static_cast<unsigned>(d - 1)));
                CHECK(w.claim.m >= quotient);
            }
        }
    }
    SECTION("shuffled order is reproducible from the seed") {
        auto a = greedy_gv(5, 3, GreedyOrder::shuffled, 1);
        auto b = greedy_gv(5, 3, GreedyOrder::shuffled, 1);
        REQUIRE(a.pa.size() == b.pa.size());
        for (std::size_t i = 0; i < a.pa.size(); ++i) CHECK(a.pa[i] == b.pa[i]);
        CHECK(*min_distance(a.pa) >= 3);
        CHECK(a.claim.m >= ceil_div(factorial(5), ball_volume(5, 2)));
    }
    CHECK_THROWS_AS(greedy_gv(11, 4), CapacityError);
    CHECK_NOTHROW(greedy_gv(8, 7, GreedyOrder::lex, 0, 8));
    CHECK_THROWS_AS(greedy_gv(4, 0), std::domain_error);
}

TEST_CASE("clique search") {
    SECTION("recovers the exact optimum for small cells") {
        auto w43 = clique_lower(4, 3, 100'000);
        CHECK(w43.claim.m == 12);
        CHECK(*min_distance(w43.pa) >= 3);
        auto w54 = clique_lower(5, 4, 2'000'000);
        CHECK(w54.claim.m == 20);
        CHECK(*min_distance(w54.pa) >= 4);
        auto wnn = clique_lower(5, 5, 100'000);
        CHECK(wnn.claim.m == 5);
    }
    SECTION("deterministic for a fixed budget") {
        auto a = clique_lower(6, 5, 50'000);
        auto b = clique_lower(6, 5, 50'000);
        CHECK(a.claim.m == b.claim.m);
        REQUIRE(a.pa.size() == b.pa.size());
        for (std::size_t i = 0; i < a.pa.size(); ++i) CHECK(a.pa[i] == b.pa[i]);
        CHECK(a.claim.m >= 14); // multi-start greedy incumbent alone reaches this
    }
    CHECK_THROWS_AS(clique_lower(8, 4), std::domain_error);
    CHECK_THROWS_AS(clique_lower(4, 1), std::domain_error);
}
