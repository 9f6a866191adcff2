#include "adsig/spectra.hpp"

#include <nlohmann/json.hpp>

#include "adsig/distance.hpp"

namespace adsig {

RatMatrix structured_matrix(const StructuredParams& p) {
    if (p.r < 1 || p.m < 1) throw std::invalid_argument("structured matrix needs r, m >= 1");
    const auto r = static_cast<std::size_t>(p.r);
    const auto m = static_cast<std::size_t>(p.m);
    RatMatrix out(r * m, r * m, p.gamma);
    for (std::size_t block = 0; block < r; ++block)
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
                out(block * m + s, block * m + t) = s == t ? p.alpha : p.beta;
    return out;
}

Rat structured_det(const StructuredParams& p) {
    const Rat within = p.alpha + Rat(p.m - 1) * p.beta;
    const Rat full = within + Rat(p.m) * rat_from(p.r - 1) * p.gamma;
    const Rat parallel = within - Rat(p.m) * p.gamma;
    const Rat distinct = p.alpha - p.beta;
    return full * pow_rat(parallel, static_cast<unsigned long>(p.r - 1)) *
           pow_rat(distinct, static_cast<unsigned long>(p.r) * static_cast<unsigned long>(p.m - 1));
}

DesignParams params_from_order(long long n, long long mu) {
    if (n < 2 || mu < 1)
        throw DesignError(DesignDefect::ParameterMismatch, "need n >= 2 and mu >= 1");
    if ((n * mu - 1) % (n - 1) != 0)
        throw DesignError(DesignDefect::ParameterMismatch,
                          "lambda = (n mu - 1)/(n - 1) not integral");
    DesignParams p;
    p.n = n;
    p.mu = mu;
    p.v = n * n * mu;
    p.k = n * mu;
    p.lambda = (n * mu - 1) / (n - 1);
    p.r = (n * n * mu - 1) / (n - 1);  // integral whenever lambda is
    p.b = p.v + p.r - 1;
    return p;
}

CharPolyFactors factor_coefficients(long long n, long long mu) {
    CharPolyFactors f;
    f.params = params_from_order(n, mu);
    const Int N = int_from(n), MU = int_from(mu);

    Int e1_num = Int(2) * (Int(2) * N * N * N * MU - MU * N * N + N * N - Int(5) * N + Int(3));
    Int e0_num = (MU * N * N - Int(1)) *
                 (Int(5) * N * N * N * MU - Int(12) * MU * N * N + Int(4) * MU * N -
                  Int(4) * N * N + Int(16) * N - Int(8));
    Int den = int_from(n - 1);
    if (e1_num % den != 0 || e0_num % den != 0)
        throw std::logic_error("factor coefficients not integral");
    f.e1 = e1_num / den;
    f.e0 = e0_num / den;
    if (f.e0 <= 0) throw std::logic_error("tail factor constant term not positive");

    f.linear_root = 2 * n - 4;
    f.linear_mult = f.params.r - 1;
    f.quad_rep = IntPoly({int_from(8 - 4 * n * mu), Int(6), Int(1)});
    f.quad_rep_mult = f.params.v - 1;
    f.quad_tail = IntPoly({-f.e0, -f.e1, Int(1)});
    return f;
}

IntPoly predicted_charpoly(long long n, long long mu) {
    CharPolyFactors f = factor_coefficients(n, mu);
    IntPoly linear = IntPoly::linear_root(int_from(f.linear_root));
    return linear.pow(static_cast<unsigned long>(f.linear_mult)) *
           f.quad_rep.pow(static_cast<unsigned long>(f.quad_rep_mult)) * f.quad_tail;
}

Signature case_signature(long long n, long long mu) {
    DesignParams p = params_from_order(n, mu);
    if (n == 2 && mu == 1) return {1, 4, 5};
    if (n == 2) return {4 * mu, 4 * mu - 1, 4 * mu - 2};
    return {p.b, p.v, 0};
}

Signature signature_from_factors(long long n, long long mu) {
    CharPolyFactors f = factor_coefficients(n, mu);
    Signature sig;

    // (x - (2n-4))^(r-1): the root is nonnegative for n >= 2.
    if (f.linear_root > 0)
        sig.n_plus += f.linear_mult;
    else if (f.linear_root == 0)
        sig.n_zero += f.linear_mult;
    else
        sig.n_minus += f.linear_mult;

    // x^2 + 6x + c with c = 8 - 4 n mu: discriminant 4 + 16 n mu > 0, so two
    // distinct real roots; their signs follow from c (product) and -6 (sum).
    const Int c = f.quad_rep.coeff(0);
    if (c < 0) {
        sig.n_plus += f.quad_rep_mult;
        sig.n_minus += f.quad_rep_mult;
    } else if (c == 0) {
        sig.n_zero += f.quad_rep_mult;
        sig.n_minus += f.quad_rep_mult;
    } else {
        sig.n_minus += 2 * f.quad_rep_mult;
    }

    // x^2 - e1 x - e0 with e0 > 0: root product -e0 < 0, one of each sign.
    sig.n_plus += 1;
    sig.n_minus += 1;

    if (sig.n_plus + sig.n_minus + sig.n_zero != f.params.v + f.params.b)
        throw std::logic_error("factor signature does not sum to v + b");
    return sig;
}

bool VerifyReport::all_pass() const {
    if (!charpoly_match || !signature_matches_factors || !signature_matches_case_form)
        return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

// alpha, beta, gamma of the Schur complement of xI - D at a fixed x, from
// the incidence parameters. Valid whenever x is not -2 or 2v-2.
struct SchurEntries {
    Rat alpha, beta, gamma;
};

SchurEntries schur_entries(const DesignParams& p, const Rat& x) {
    const Rat v = rat_from(p.v), k = rat_from(p.k), mu = rat_from(p.mu);
    const Rat shared = (Rat(8) * k * k + Rat(9) * v * x + Rat(18) * v - Rat(12) * k * x -
                        Rat(24) * k) /
                       ((x + 2) * (x - Rat(2) * v + 2));
    SchurEntries e;
    e.alpha = x - Rat(4) * k / (x + 2) - shared;
    e.beta = -(Rat(4) + shared);
    e.gamma = -(Rat(2) + Rat(4) * mu / (x + 2) + shared);
    return e;
}

}  // namespace

VerifyReport verify_design(const Design& d) {
    VerifyReport report;
    report.params = validate_affine(d);
    const DesignParams& p = report.params;
    const IntMatrix n = incidence_matrix(d);

    const auto v = static_cast<std::size_t>(p.v);
    const auto b = static_cast<std::size_t>(p.b);
    const auto r = static_cast<std::size_t>(p.r);
    const auto nsz = static_cast<std::size_t>(p.n);

    auto add_check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
    };

    // Incidence identities.
    const IntMatrix jv = IntMatrix::ones(v, v);
    const IntMatrix nt = n.transpose();
    add_check("point gram: N N^t = r I + lambda (J - I)",
              n * nt == IntMatrix::identity(v) * int_from(p.r) +
                            (jv - IntMatrix::identity(v)) * int_from(p.lambda));
    add_check("block gram: N^t N = k I_r x I_n + mu (J_r - I_r) x J_n",
              nt * n ==
                  kron(IntMatrix::identity(r), IntMatrix::identity(nsz)) * int_from(p.k) +
                      kron(IntMatrix::ones(r, r) - IntMatrix::identity(r),
                           IntMatrix::ones(nsz, nsz)) *
                          int_from(p.mu));
    add_check("column sums: J_v N = k J", jv * n == IntMatrix::ones(v, b) * int_from(p.k));
    add_check("column sums transposed: N^t J_v = k J",
              nt * jv == IntMatrix::ones(b, v) * int_from(p.k));
    add_check("row sums: N J_b = r J",
              n * IntMatrix::ones(b, b) == IntMatrix::ones(v, b) * int_from(p.r));
    add_check("row sums transposed: J_b N^t = r J",
              IntMatrix::ones(b, b) * nt == IntMatrix::ones(b, v) * int_from(p.r));

    // Distance matrix, both routes.
    const IntMatrix dist = bfs_distances(n);
    const IntMatrix dist_closed = closed_form_distance_matrix(p, n);
    add_check("distance matrix: BFS equals block closed form", dist == dist_closed);
    add_check("diameter = 4", diameter(dist) == 4, "diameter " + std::to_string(diameter(dist)));
    add_check("trace D = 0", dist.trace() == 0);

    try {
        stratify(n);
        add_check("distance stratification identities", true);
    } catch (const std::exception& e) {
        add_check("distance stratification identities", false, e.what());
    }

    // Characteristic polynomial, computed vs closed form.
    report.charpoly_computed = char_poly(dist);
    report.charpoly_closed_form = predicted_charpoly(p.n, p.mu);
    report.charpoly_match = report.charpoly_computed == report.charpoly_closed_form;

    // Exact inertia vs both predictions.
    report.signature_computed = inertia(dist);
    report.signature_from_factors = signature_from_factors(p.n, p.mu);
    report.signature_case_form = case_signature(p.n, p.mu);
    report.signature_matches_factors =
        report.signature_computed == report.signature_from_factors;
    report.signature_matches_case_form =
        report.signature_computed == report.signature_case_form;

    // Block determinant identities at spot values of x (avoiding -2 and
    // 2v-2, where the upper-left block is singular).
    const CharPolyFactors factors = factor_coefficients(p.n, p.mu);
    for (long xi : {0L, 1L, 3L}) {
        const Rat x(xi);
        const std::string at = " [x=" + std::to_string(xi) + "]";

        RatMatrix c0 = to_rational(IntMatrix::identity(v) * Int(xi + 2) - jv * Int(2));
        RatMatrix c1 = to_rational(n * Int(2) - IntMatrix::ones(v, b) * Int(3));
        IntMatrix lower =
            kron(IntMatrix::ones(r, r) - IntMatrix::identity(r), IntMatrix::ones(nsz, nsz)) *
                Int(2) +
            kron(IntMatrix::identity(r),
                 IntMatrix::ones(nsz, nsz) - IntMatrix::identity(nsz)) *
                Int(4);
        RatMatrix c2 = to_rational(IntMatrix::identity(b) * Int(xi) - lower);

        const Rat det_c0 = det_exact(c0);
        const Rat det_c0_closed =
            (x - Rat(2) * rat_from(p.v) + 2) * pow_rat(x + 2, static_cast<unsigned long>(p.v - 1));
        add_check("det C0 closed form" + at, det_c0 == det_c0_closed);

        RatMatrix c0_inv_closed =
            (to_rational(IntMatrix::identity(v)) * (x - Rat(2) * rat_from(p.v) + 2) +
             to_rational(jv) * Rat(2)) *
            (Rat(1) / ((x + 2) * (x - Rat(2) * rat_from(p.v) + 2)));
        add_check("C0 inverse closed form" + at,
                  c0 * c0_inv_closed == to_rational(IntMatrix::identity(v)));

        const RatMatrix schur = schur_complement(c0, c1, c2);
        const SchurEntries entries = schur_entries(p, x);
        StructuredParams sp{static_cast<long>(p.r), static_cast<long>(p.n), entries.alpha,
                            entries.beta, entries.gamma};
        add_check("Schur complement has the structured form" + at,
                  schur == structured_matrix(sp));
        add_check("structured determinant closed form" + at,
                  det_exact(schur) == structured_det(sp));

        const Int char_at_x = det_exact(IntMatrix::identity(v + b) * Int(xi) - dist);
        add_check("det(xI - D) = det C0 * det(Schur complement)" + at,
                  Rat(char_at_x) == det_c0 * det_exact(schur));

        // Factor-level relations behind the closed-form polynomial.
        add_check("alpha - beta = x + 4 - 4 n mu/(x+2)" + at,
                  entries.alpha - entries.beta ==
                      x + 4 - Rat(4) * rat_from(p.n) * rat_from(p.mu) / (x + 2));
        add_check("alpha + (n-1) beta - n gamma = x - 2n + 4" + at,
                  entries.alpha + rat_from(p.n - 1) * entries.beta - rat_from(p.n) * entries.gamma ==
                      x - Rat(2) * rat_from(p.n) + 4);
        const Rat tail = entries.alpha + rat_from(p.n - 1) * entries.beta +
                         rat_from(p.n) * rat_from(p.r - 1) * entries.gamma;
        const Rat tail_closed = (x * x - Rat(factors.e1) * x - Rat(factors.e0)) /
                                (x - Rat(2) * rat_from(p.v) + 2);
        add_check("tail factor relation" + at, tail == tail_closed);
    }

    return report;
}

std::vector<SweepRow> sweep_signatures(long long n_max, long long mu_max) {
    if (n_max < 2 || mu_max < 1) throw std::invalid_argument("sweep needs n_max >= 2, mu_max >= 1");
    std::vector<SweepRow> rows;
    for (long long n = 2; n <= n_max; ++n)
        for (long long mu = 1; mu <= mu_max; ++mu) {
            SweepRow row;
            row.n = n;
            row.mu = mu;
            try {
                params_from_order(n, mu);
                row.admissible = true;
            } catch (const DesignError&) {
                row.admissible = false;
            }
            if (row.admissible) {
                row.from_factors = signature_from_factors(n, mu);
                row.case_form = case_signature(n, mu);
                row.match = row.from_factors == row.case_form;
            }
            rows.push_back(row);
        }
    return rows;
}

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json signature_json(const Signature& s) {
    return ordered_json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

ordered_json params_json(const DesignParams& p) {
    return ordered_json{{"v", p.v}, {"b", p.b},     {"r", p.r}, {"k", p.k},
                        {"lambda", p.lambda}, {"n", p.n}, {"mu", p.mu}};
}

}  // namespace

std::vector<std::string> poly_to_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

std::string report_to_json(const VerifyReport& report) {
    ordered_json j;
    j["params"] = params_json(report.params);
    j["signature"] = ordered_json{
        {"computed", signature_json(report.signature_computed)},
        {"predicted_from_factors", signature_json(report.signature_from_factors)},
        {"predicted_case_form", signature_json(report.signature_case_form)},
        {"matches_factors", report.signature_matches_factors},
        {"matches_case_form", report.signature_matches_case_form},
    };
    j["charpoly"] = ordered_json{
        {"computed", poly_to_strings(report.charpoly_computed)},
        {"closed_form", poly_to_strings(report.charpoly_closed_form)},
        {"match", report.charpoly_match},
    };
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    j["checks"] = checks;
    j["all_pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

std::string sweep_to_json(const std::vector<SweepRow>& rows, long long n_max, long long mu_max) {
    ordered_json j;
    j["n_max"] = n_max;
    j["mu_max"] = mu_max;
    ordered_json out_rows = ordered_json::array();
    long long discrepancies = 0;
    for (const auto& row : rows) {
        ordered_json entry{{"n", row.n}, {"mu", row.mu}, {"admissible", row.admissible}};
        if (row.admissible) {
            entry["signature_from_factors"] = signature_json(row.from_factors);
            entry["signature_case_form"] = signature_json(row.case_form);
            entry["match"] = row.match;
            if (!row.match) ++discrepancies;
        }
        out_rows.push_back(entry);
    }
    j["rows"] = out_rows;
    j["discrepancies"] = discrepancies;
    return j.dump(2) + "\n";
}

}  // namespace adsig
