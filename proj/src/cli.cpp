#include "adsig/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adsig/distance.hpp"
#include "adsig/spectra.hpp"

namespace adsig {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json signature_json(const Signature& s) {
    return ordered_json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

ordered_json params_json(const DesignParams& p) {
    return ordered_json{{"v", p.v}, {"b", p.b},     {"r", p.r}, {"k", p.k},
                        {"lambda", p.lambda}, {"n", p.n}, {"mu", p.mu}};
}

Design design_from_source(const std::vector<std::string>& source) {
    if (source.empty()) throw std::invalid_argument("missing --source");
    const std::string& kind = source[0];
    auto want = [&](std::size_t n, const char* usage) {
        if (source.size() != n)
            throw std::invalid_argument(std::string("--source ") + kind + " expects " + usage);
    };
    auto as_int = [](const std::string& s) {
        std::size_t pos = 0;
        long long value = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
        return value;
    };
    if (kind == "ag") {
        want(4, "3 integers: m p k");
        return build_affine_geometry(static_cast<int>(as_int(source[1])),
                                     static_cast<unsigned>(as_int(source[2])),
                                     static_cast<unsigned>(as_int(source[3])));
    }
    if (kind == "sylvester") {
        want(2, "1 integer: t");
        return hadamard_to_affine_design(build_hadamard_sylvester(static_cast<int>(as_int(source[1]))));
    }
    if (kind == "paley") {
        want(2, "1 integer: q");
        return hadamard_to_affine_design(build_hadamard_paley(static_cast<unsigned>(as_int(source[1]))));
    }
    if (kind == "file") {
        want(2, "1 path");
        std::ifstream in(source[1]);
        if (!in) throw std::invalid_argument("cannot read design file: " + source[1]);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return design_from_json(buffer.str());
    }
    throw std::invalid_argument("unknown source kind '" + kind +
                                "' (expected ag | sylvester | paley | file)");
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot write output file: " + out_path);
    file << text;
}

std::string distance_csv(const IntMatrix& d) {
    std::string csv;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (j > 0) csv += ',';
            csv += d(i, j).get_str();
        }
        csv += '\n';
    }
    return csv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact distance-spectrum checks for affine resolvable designs"};
    app.require_subcommand(1);

    std::vector<std::string> source;
    std::string out_path;
    long long n_max = 0, mu_max = 0;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--source", source,
                        "design source: ag M P K | sylvester T | paley Q | file PATH")
            ->required()
            ->expected(1, 4);
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "construct a design and emit its JSON");
    add_source(cmd_build);
    CLI::App* cmd_validate =
        app.add_subcommand("validate", "check the affine design axioms and print the parameters");
    add_source(cmd_validate);
    CLI::App* cmd_distmat =
        app.add_subcommand("distmat", "emit the incidence-graph distance matrix as CSV");
    add_source(cmd_distmat);
    CLI::App* cmd_charpoly = app.add_subcommand(
        "charpoly", "characteristic polynomial of the distance matrix, computed and closed form");
    add_source(cmd_charpoly);
    CLI::App* cmd_signature = app.add_subcommand(
        "signature", "exact inertia of the distance matrix with both predictions");
    add_source(cmd_signature);
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run every identity and spectrum check; emit a report");
    add_source(cmd_verify);
    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "compare the predicted signatures over a parameter grid");
    cmd_sweep->add_option("--n-max", n_max, "largest class size n")->required();
    cmd_sweep->add_option("--mu-max", mu_max, "largest intersection number mu")->required();
    cmd_sweep->add_option("--out", out_path, "write output to this file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("adsig");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_build)) {
            Design d = design_from_source(source);
            validate_affine(d);
            write_output(design_to_json(d), out_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_validate)) {
            Design d = design_from_source(source);
            DesignParams p = validate_affine(d);  // DesignError -> exit 2 below
            write_output(params_json(p).dump(2) + "\n", out_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_distmat)) {
            Design d = design_from_source(source);
            DesignParams p = validate_affine(d);
            IntMatrix dist = closed_form_distance_matrix(p, incidence_matrix(d));
            write_output(distance_csv(dist), out_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_charpoly)) {
            Design d = design_from_source(source);
            DesignParams p = validate_affine(d);
            IntMatrix dist = bfs_distances(incidence_matrix(d));
            IntPoly computed = char_poly(dist);
            IntPoly closed = predicted_charpoly(p.n, p.mu);
            ordered_json j{{"params", params_json(p)},
                           {"computed", poly_to_strings(computed)},
                           {"closed_form", poly_to_strings(closed)},
                           {"match", computed == closed}};
            write_output(j.dump(2) + "\n", out_path, out);
            return computed == closed ? 0 : 1;
        }
        if (app.got_subcommand(cmd_signature)) {
            Design d = design_from_source(source);
            DesignParams p = validate_affine(d);
            Signature computed = inertia(bfs_distances(incidence_matrix(d)));
            Signature from_factors = signature_from_factors(p.n, p.mu);
            Signature case_form = case_signature(p.n, p.mu);
            ordered_json j{{"params", params_json(p)},
                           {"computed", signature_json(computed)},
                           {"predicted_from_factors", signature_json(from_factors)},
                           {"predicted_case_form", signature_json(case_form)},
                           {"matches_factors", computed == from_factors},
                           {"matches_case_form", computed == case_form}};
            write_output(j.dump(2) + "\n", out_path, out);
            return computed == from_factors && computed == case_form ? 0 : 1;
        }
        if (app.got_subcommand(cmd_verify)) {
            Design d = design_from_source(source);
            VerifyReport report = verify_design(d);
            write_output(report_to_json(report), out_path, out);
            return report.all_pass() ? 0 : 1;
        }
        if (app.got_subcommand(cmd_sweep)) {
            auto rows = sweep_signatures(n_max, mu_max);
            write_output(sweep_to_json(rows, n_max, mu_max), out_path, out);
            bool clean = true;
            for (const auto& row : rows)
                if (row.admissible && !row.match) clean = false;
            return clean ? 0 : 1;
        }
    } catch (const DesignError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace adsig
