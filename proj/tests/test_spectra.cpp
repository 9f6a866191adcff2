#include <doctest.h>

#include <random>

#include "adsig/distance.hpp"
#include "adsig/spectra.hpp"

using namespace adsig;

TEST_CASE("structured determinant, degenerate shapes") {
    // 1x1: the determinant is alpha regardless of beta, gamma.
    StructuredParams one{1, 1, make_rat(7, 3), Rat(99), Rat(-5)};
    CHECK(structured_det(one) == make_rat(7, 3));
    CHECK(det_exact(structured_matrix(one)) == make_rat(7, 3));

    // r=2, m=1, alpha=beta=0, gamma=1: the 2x2 swap matrix, determinant -1.
    StructuredParams swap{2, 1, Rat(0), Rat(0), Rat(1)};
    CHECK(structured_det(swap) == -1);
    CHECK(det_exact(structured_matrix(swap)) == -1);
}

TEST_CASE("structured determinant equals the assembled matrix determinant") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 6);
    auto draw = [&] { return make_rat(num(rng), den(rng)); };

    for (long r = 1; r <= 4; ++r)
        for (long m = 1; m <= 4; ++m) {
            for (int trial = 0; trial < 6; ++trial) {
                StructuredParams p{r, m, draw(), draw(), draw()};
                CHECK(structured_det(p) == det_exact(structured_matrix(p)));
            }
            // Degenerate draws: alpha = beta, beta = gamma, gamma = 0, all equal.
            Rat a = draw();
            StructuredParams same_ab{r, m, a, a, draw()};
            CHECK(structured_det(same_ab) == det_exact(structured_matrix(same_ab)));
            StructuredParams same_bg{r, m, draw(), a, a};
            CHECK(structured_det(same_bg) == det_exact(structured_matrix(same_bg)));
            StructuredParams zero_g{r, m, draw(), draw(), Rat(0)};
            CHECK(structured_det(zero_g) == det_exact(structured_matrix(zero_g)));
            StructuredParams all_same{r, m, a, a, a};
            CHECK(structured_det(all_same) == det_exact(structured_matrix(all_same)));
        }
}

TEST_CASE("parameter derivation accepts only admissible orders") {
    DesignParams p = params_from_order(3, 1);
    CHECK(p == DesignParams{9, 12, 4, 3, 1, 3, 1});
    CHECK_THROWS_AS(params_from_order(3, 2), DesignError);  // lambda = 5/2
    CHECK_THROWS_AS(params_from_order(1, 1), DesignError);
    CHECK(params_from_order(4, 4).v == 64);
}

TEST_CASE("factor coefficients at small orders") {
    CharPolyFactors f21 = factor_coefficients(2, 1);
    CHECK(f21.linear_root == 0);
    CHECK(f21.linear_mult == 2);
    CHECK(f21.quad_rep == IntPoly({Int(0), Int(6), Int(1)}));  // x^2 + 6x
    CHECK(f21.quad_rep_mult == 3);
    CHECK(f21.e1 == 18);
    CHECK(f21.e0 == 24);
    CHECK(f21.quad_tail == IntPoly({Int(-24), Int(-18), Int(1)}));

    CharPolyFactors f31 = factor_coefficients(3, 1);
    CHECK(f31.linear_root == 2);
    CHECK(f31.linear_mult == 3);
    CHECK(f31.quad_rep == IntPoly({Int(-4), Int(6), Int(1)}));  // x^2 + 6x - 4
    CHECK(f31.quad_rep_mult == 8);
    CHECK(f31.e1 == 42);

    // Degrees always assemble to v + b.
    for (long long n = 2; n <= 6; ++n)
        for (long long mu = 1; mu <= 6; ++mu) {
            if ((n * mu - 1) % (n - 1) != 0) continue;
            CharPolyFactors f = factor_coefficients(n, mu);
            CHECK(f.linear_mult + 2 * f.quad_rep_mult + 2 == f.params.v + f.params.b);
            CHECK(f.e0 > 0);
        }
}

TEST_CASE("closed-form characteristic polynomial at (2,1)") {
    // x^5 (x + 6)^3 (x^2 - 18x - 24) expanded.
    IntPoly expected({Int(0), Int(0), Int(0), Int(0), Int(0), Int(-5184), Int(-6480),
                      Int(-2160), Int(-240), Int(0), Int(1)});
    IntPoly predicted = predicted_charpoly(2, 1);
    CHECK(predicted == expected);
    CHECK(predicted.degree() == 10);

    CHECK(predicted_charpoly(3, 1).degree() == 21);

    for (long long n = 2; n <= 5; ++n) {
        IntPoly p = predicted_charpoly(n, 1);
        CHECK(p.leading() == 1);
        CHECK(p.coeff(static_cast<std::size_t>(p.degree() - 1)) == 0);  // trace is zero
    }
}

TEST_CASE("computed charpoly of AG(2,2) matches the closed form and the determinant route") {
    Design d = build_affine_geometry(2, 2, 1);
    IntMatrix dist = bfs_distances(incidence_matrix(d));
    IntPoly computed = char_poly(dist);
    CHECK(computed == predicted_charpoly(2, 1));

    // Cross-check at 11 integer points against the Bareiss determinant.
    for (long t = -5; t <= 5; ++t) {
        IntMatrix shifted = IntMatrix::identity(10) * Int(t) - dist;
        CHECK(computed.eval(Int(t)) == det_exact(shifted));
    }
}

TEST_CASE("case-form signatures") {
    CHECK(case_signature(2, 1) == Signature{1, 4, 5});
    CHECK(case_signature(2, 3) == Signature{12, 11, 10});
    CHECK(case_signature(3, 1) == Signature{12, 9, 0});
}

TEST_CASE("factor-derived signatures") {
    CHECK(signature_from_factors(2, 1) == Signature{1, 4, 5});
    CHECK(signature_from_factors(3, 1) == Signature{12, 9, 0});
    CHECK(signature_from_factors(2, 2) == Signature{8, 8, 6});

    // n = 2, mu >= 2 is the only disagreement with the case form.
    for (long long n = 2; n <= 7; ++n)
        for (long long mu = 1; mu <= 7; ++mu) {
            if ((n * mu - 1) % (n - 1) != 0) continue;
            Signature derived = signature_from_factors(n, mu);
            DesignParams p = params_from_order(n, mu);
            CHECK(derived.n_plus + derived.n_minus + derived.n_zero == p.v + p.b);
            if (n == 2 && mu >= 2)
                CHECK(derived != case_signature(n, mu));
            else
                CHECK(derived == case_signature(n, mu));
        }
}

TEST_CASE("verify AG(2,2): everything passes") {
    VerifyReport report = verify_design(build_affine_geometry(2, 2, 1));
    CHECK(report.signature_computed == Signature{1, 4, 5});
    CHECK(report.charpoly_match);
    CHECK(report.signature_matches_factors);
    CHECK(report.signature_matches_case_form);
    CHECK(report.all_pass());
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.pass);
    }
}

TEST_CASE("verify AG(2,3): the generic case") {
    VerifyReport report = verify_design(build_affine_geometry(2, 3, 1));
    CHECK(report.signature_computed == Signature{12, 9, 0});
    CHECK(report.all_pass());
}

TEST_CASE("verify the order-8 Hadamard design: case form misses by one") {
    VerifyReport report =
        verify_design(hadamard_to_affine_design(build_hadamard_sylvester(3)));
    CHECK(report.signature_computed == Signature{8, 8, 6});
    CHECK(report.charpoly_match);
    CHECK(report.signature_matches_factors);
    CHECK_FALSE(report.signature_matches_case_form);
    CHECK(report.signature_case_form == Signature{8, 7, 6});
    CHECK_FALSE(report.all_pass());

    // Every identity check still passes; only the case-form flag trips.
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.pass);
    }
}

TEST_CASE("report JSON is stable and carries the verdicts") {
    Design d = build_affine_geometry(2, 2, 1);
    std::string a = report_to_json(verify_design(d));
    std::string b = report_to_json(verify_design(d));
    CHECK(a == b);
    CHECK(a.find("\"all_pass\": true") != std::string::npos);
    CHECK(a.find("\"-5184\"") != std::string::npos);  // coefficients as decimal strings
}

TEST_CASE("signature sweep marks the disagreement cells") {
    auto rows = sweep_signatures(4, 4);
    CHECK(rows.size() == 12);
    long mismatches = 0;
    for (const auto& row : rows) {
        if (!row.admissible) continue;
        if (!row.match) {
            ++mismatches;
            CHECK(row.n == 2);
            CHECK(row.mu >= 2);
        }
    }
    CHECK(mismatches == 3);

    // Inadmissible cells carry no comparison: (3,2), (3,4), (4,2), (4,3).
    long inadmissible = 0;
    for (const auto& row : rows)
        if (!row.admissible) ++inadmissible;
    CHECK(inadmissible == 4);
}
