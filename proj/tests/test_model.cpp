#include <complex>
#include <random>

#include "doctest.h"
#include "shimrel/model.hpp"

using namespace shimrel;
using quatalg::HashimotoModel;
using quatalg::SingularRelation;

TEST_CASE("find_models locates the reference triples") {
    auto one = model::find_models({.d0 = 6, .n_level = 1, .p_bound = 10});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == HashimotoModel{6, 1, 5, 2, 5, 3});

    auto two = model::find_models({.d0 = 26, .n_level = 1, .p_bound = 10});
    REQUIRE(two.size() == 1);
    CHECK(two[0] == HashimotoModel{26, 1, 5, 2, 21, 3});

    auto all = model::find_models({.d0 = 26, .n_level = 1, .p_bound = 150, .require_all = true});
    CHECK(std::find(all.begin(), all.end(), HashimotoModel{26, 1, 5, 2, 21, 3}) != all.end());
    CHECK(std::find(all.begin(), all.end(), HashimotoModel{26, 1, 7, 2, 15, 3}) != all.end());
    CHECK(std::find(all.begin(), all.end(), HashimotoModel{26, 1, 149, 19, 63, 3}) != all.end());
    // ascending p, and every hit validates
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].p < all[i + 1].p);
    for (const auto& m : all) {
        auto r = model::validate_model(m.d0, m.n_level, m.p, m.a, m.b, m.k);
        CAPTURE(m.p);
        CAPTURE(r.diagnostic);
        CHECK(r.valid);
    }
}

TEST_CASE("find_models residue options") {
    // mod 5 both square roots of -1/6 appear with all_residues
    auto both = model::find_models({.d0 = 6, .n_level = 1, .p_bound = 10, .all_residues = true});
    REQUIRE(both.size() == 2);
    CHECK(both[0] == HashimotoModel{6, 1, 5, 2, 5, 3});
    CHECK(both[1] == HashimotoModel{6, 1, 5, 3, 11, 3});

    CHECK(model::find_models({.d0 = 6, .n_level = 1, .p_bound = 3}).empty());
    CHECK_THROWS_AS(model::find_models({.d0 = 4, .n_level = 1, .p_bound = 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(model::find_models({.d0 = 30, .n_level = 1, .p_bound = 10}),
                    std::invalid_argument);
}

TEST_CASE("validate_model accepts the reference triples") {
    CHECK(model::validate_model(6, 1, 5, 2, 5).valid);
    CHECK(model::validate_model(26, 1, 5, 2, 21).valid);
    CHECK(model::validate_model(26, 1, 149, 19, 63).valid);
    CHECK(model::validate_model(6, 1, 11, 3, 5).valid);  // p = 3 (mod 4) is allowed
    CHECK(model::validate_model(6, 1, 5, 2, 5).diagnostic.empty());
}

TEST_CASE("validate_model diagnostics name the first failure") {
    auto diag = [](long d0, long n, long p, long a, long b, long k = 3) {
        auto r = model::validate_model(d0, n, p, a, b, k);
        REQUIRE_FALSE(r.valid);
        return r.diagnostic;
    };
    CHECK(diag(6, 1, 5, 2, 6) == "a^2 d + 1 = b p fails");
    CHECK(diag(4, 1, 5, 2, 5) == "d0 must be squarefree");
    CHECK(diag(2, 1, 5, 2, 5) == "d0 must be 1 or have an even number of prime factors");
    CHECK(diag(30, 1, 7, 1, 1) == "d0 must be 1 or have an even number of prime factors");
    CHECK(diag(6, 2, 5, 2, 5) == "n_level must be coprime to d0");
    CHECK(diag(6, 1, 9, 2, 5) == "p must be prime");
    CHECK(diag(6, 1, 3, 2, 5) == "p must be odd and coprime to d");
    CHECK(diag(6, 1, 5, -2, 5) == "a must be nonnegative");
    CHECK(diag(6, 1, 5, 2, 0) == "b must be positive");
    CHECK(diag(0, 1, 5, 2, 5) == "d0 must be positive");
    CHECK(diag(6, 0, 5, 2, 5) == "n_level must be positive");
    // arithmetic holds for (7,1,1) over d=6 but the ramification pattern fails
    CHECK(diag(6, 1, 7, 1, 1) ==
          "hilbert symbol pattern fails: (-d,p) must ramify exactly at primes dividing d0");
    CHECK(diag(6, 1, 5, 2, 5, 4) == "k must be a positive odd integer");
    CHECK(diag(6, 1, 5, 2, 5, -3) == "k must be a positive odd integer");
    CHECK(diag(6, 5, 11, 2, 11, 15) == "k must be coprime to 2 n_level");
}

TEST_CASE("make_model throws with the diagnostic") {
    CHECK_NOTHROW(model::make_model(6, 1, 5, 2, 5));
    CHECK_THROWS_WITH_AS(model::make_model(6, 1, 5, 2, 6),
                         "invalid model: a^2 d + 1 = b p fails", std::invalid_argument);
}

TEST_CASE("curve singular relations") {
    auto m = model::make_model(6, 1, 5, 2, 5);
    auto [v1, v2] = model::curve_singular_relations(m);
    CHECK(v1 == SingularRelation{1, 1, -1, 0, 0});
    CHECK(v2 == SingularRelation{0, 24, 0, 1, 114});
    CHECK(quatalg::humbert_invariant(v1) == m.p);
    CHECK(quatalg::humbert_invariant(v2) == 4 * mpz_class(m.b) * m.d());

    auto m2 = model::make_model(26, 1, 149, 19, 63);
    auto [w1, w2] = model::curve_singular_relations(m2);
    CHECK(w1 == SingularRelation{1, 1, -37, 0, 0});
    CHECK(quatalg::humbert_invariant(w1) == 149);
    CHECK(quatalg::humbert_invariant(w2) == 4 * mpz_class(63) * 26);

    // valid model with p = 3 (mod 4): the relation pair is undefined
    auto m3 = model::make_model(6, 1, 11, 3, 5);
    CHECK_THROWS_AS(model::curve_singular_relations(m3), std::domain_error);
}

TEST_CASE("psi embedding satisfies the singular relations") {
    auto m = model::make_model(6, 1, 5, 2, 5);
    for (std::complex<double> tau : {std::complex<double>{0, 1},
                                     {0.5, 1.5},
                                     {-0.3, 0.08},
                                     {2.0, 3.0}}) {
        auto e = model::psi_embed(m, tau);
        CAPTURE(tau.real());
        CAPTURE(tau.imag());
        CHECK(e.residual1 < 1e-9);
        CHECK(e.residual2 < 1e-9);
        CHECK(e.within_tolerance);
    }
    auto m2 = model::make_model(26, 1, 5, 2, 21);
    auto e2 = model::psi_embed(m2, {0.25, 0.9});
    CHECK(e2.within_tolerance);

    CHECK_THROWS_AS(model::psi_embed(m, {0.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(model::psi_embed(m, {0.5, -1.0}), std::invalid_argument);
    // tolerance is honored rather than clamped
    auto strict = model::psi_embed(m, {0, 1}, 1e-20);
    CHECK_FALSE(strict.within_tolerance);
}

TEST_CASE("rs extraction") {
    auto m = model::make_model(6, 1, 5, 2, 5);
    auto z = model::rs_from_relation(m, SingularRelation{0, 0, 0, 0, 0});
    CHECK(z.r == 0);
    CHECK(z.s == 0);
    CHECK(z.s1 == 0);

    auto one = model::rs_from_relation(m, SingularRelation{0, 1, 0, 0, 9});
    CHECK(one.r == 1);
    CHECK(one.s == 6);
    CHECK(one.s1 == 3);

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> c(-50, 50);
    for (const auto& mm : {m, model::make_model(26, 1, 149, 19, 63)}) {
        for (int it = 0; it < 200; ++it) {
            SingularRelation v{c(rng), c(rng), c(rng), c(rng), c(rng)};
            auto rs = model::rs_from_relation(mm, v);
            CHECK(rs.s % 2 == 0);
            CHECK(rs.s1 == mm.p * (rs.s / 2) - mpz_class(mm.a) * mm.d() * rs.r);
        }
    }
    CHECK_THROWS_AS(model::rs_from_relation(m, SingularRelation{0, 1, 0, 0, 9}, 0),
                    std::invalid_argument);
}
