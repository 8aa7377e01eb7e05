// SPDX-License-Identifier: Apache-2.0
// bmh: apply Blaschke-Minkowski homomorphisms, list multipliers, run the
// verification suites and solve Minkowski problems from the command line.
//
// Exit codes: 0 success, 1 failed checks, 2 usage or parse error,
// 3 degenerate body, 4 infeasible measure, 5 numerical failure (e.g. the
// Minkowski solver did not converge).

#include <bmh/bmh.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace bmh;

namespace {

enum Exit { ok = 0, checks_failed = 1, usage = 2, degenerate = 3, infeasible = 4, no_convergence = 5 };

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// A kernel argument is inline JSON when it starts with '{', else a file.
ZonalProfile load_kernel(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{')
        return parse_kernel(parse_json_text(arg, "--kernel"));
    return parse_kernel(read_json_file(arg));
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

struct GridFlags {
    int theta = 64;
    int phi = 128;
    int max_degree = 12;

    void attach(CLI::App* app) {
        app->add_option("--grid-theta", theta, "Gauss nodes in the polar angle")
            ->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--grid-phi", phi, "uniform azimuth nodes")
            ->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--max-degree", max_degree, "harmonic degree")
            ->capture_default_str()->check(CLI::NonNegativeNumber);
    }
};

int cmd_apply(const std::string& body_path, const std::string& kernel_arg,
              const std::string& prefix, const GridFlags& gf) {
    Body body = parse_body(read_json_file(body_path));
    BMHomomorphism phi(load_kernel(kernel_arg), gf.max_degree);
    SphereGrid grid(gf.theta, gf.phi);

    SupportSampleBody samples;
    Polytope3 realized;
    bool exact = false;
    double mismatch = 0;
    if (const auto* p = std::get_if<Polytope3>(&body)) {
        auto mu = surface_measure(*p);   // DimensionError for flat bodies
        samples = phi.apply(mu, grid);
        auto r = phi.realize(mu, grid);
        realized = std::move(r.body);
        exact = r.exact;
        mismatch = r.mismatch;
    } else {
        SpectralBody image = phi.apply_spectral(spectral_body(body, gf.max_degree, grid), 0);
        samples = SupportSampleBody::sample(image, grid);
        auto r = body_from_support_samples(samples);
        realized = std::move(r.body);
        mismatch = r.mismatch;
    }

    json out = to_json(realized);
    out["kernel"] = phi.label();
    out["exact"] = exact;
    out["sample_mismatch"] = mismatch;
    out["environment"] = {{"grid_theta", gf.theta}, {"grid_phi", gf.phi},
                          {"max_degree", gf.max_degree}, {"version", version}};
    write_text(prefix + ".body.json", out.dump(2) + "\n");

    std::string csv = "u1,u2,u3,h\n";
    for (size_t i = 0; i < samples.values.size(); ++i) {
        const Vec3& u = samples.directions[i];
        csv += fmt(u[0]) + "," + fmt(u[1]) + "," + fmt(u[2]) + "," + fmt(samples.values[i]) + "\n";
    }
    write_text(prefix + ".csv", csv);
    std::cout << "wrote " << prefix << ".body.json and " << prefix << ".csv\n";
    return ok;
}

int cmd_multipliers(const std::string& kernel_arg, int n, int max_degree, const std::string& path) {
    auto c = legendre_coefficients(load_kernel(kernel_arg), n, max_degree);
    std::string csv = "k,c_k,error\n";
    for (int k = 0; k <= c.max_degree(); ++k)
        csv += std::to_string(k) + "," + fmt(c.c[k]) + "," + fmt(c.error[k]) + "\n";
    write_text(path, csv);
    return ok;
}

int cmd_check(const std::string& suite, const SuiteConfig& cfg, std::string path) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "bmh: unknown suite '" << suite << "' (identities, inequalities, "
                  << "endomorphisms, roundtrip)\n";
        return usage;
    }
    Report rep = run_suite(suite, cfg);
    if (path.empty())
        path = "bmh_" + suite + ".json";
    write_text(path, to_json(rep).dump(2) + "\n");
    std::cout << "suite " << suite << ": " << rep.checks.size() << " checks, " << rep.failures()
              << " failed -> " << path << "\n";
    for (const auto& c : rep.checks)
        if (c.failed())
            std::cout << "  FAIL " << c.id << " lhs=" << fmt(c.lhs) << " rhs=" << fmt(c.rhs)
                      << " slack=" << fmt(c.slack) << " tol=" << fmt(c.tol) << "\n";
    return rep.passed() ? ok : checks_failed;
}

json solution_json(const MinkowskiSolution& sol) {
    json out = to_json(sol.body);
    json support = json::array(), residual = json::array();
    for (size_t i = 0; i < sol.support.size(); ++i) {
        support.push_back({{"normal", to_json(sol.normals[i])}, {"h", sol.support[i]}});
        residual.push_back(sol.residual[i]);
    }
    out["support_numbers"] = support;
    out["metadata"] = {{"residual", residual},
                       {"max_relative_residual", sol.max_relative_residual},
                       {"iterations", static_cast<int>(sol.log.size()) - 1},
                       {"steiner_point", to_json(Vec3::Zero())},
                       {"version", version}};
    return out;
}

int cmd_reconstruct(const std::string& measure_path, const std::string& path) {
    auto mu = parse_measure(read_json_file(measure_path));
    try {
        auto sol = solve_minkowski(mu);
        write_text(path, solution_json(sol).dump(2) + "\n");
        return ok;
    } catch (const InstanceError& e) {
        std::cerr << "bmh: infeasible measure: " << e.what() << "\n";
        return infeasible;
    } catch (const ConvergenceError& e) {
        std::cerr << "bmh: " << e.what() << "; writing the best iterate\n";
        write_text(path, solution_json(e.best_iterate()).dump(2) + "\n");
        return no_convergence;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blaschke-Minkowski homomorphisms of convex bodies in R^3"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    GridFlags apply_grid, check_grid;

    auto* apply = app.add_subcommand("apply", "apply a homomorphism to a body");
    std::string body_path, kernel_arg, prefix = "bmh_apply";
    apply->add_option("body", body_path, "body JSON file")->required();
    apply->add_option("-k,--kernel", kernel_arg, "kernel JSON file or inline JSON")->required();
    apply->add_option("-o,--output", prefix, "output prefix for .body.json and .csv")
        ->capture_default_str();
    apply_grid.attach(apply);

    auto* mult = app.add_subcommand("multipliers", "Legendre multipliers of a kernel");
    std::string mult_kernel, mult_out = "-";
    int mult_n = 3, mult_degree = 12;
    mult->add_option("kernel", mult_kernel, "kernel JSON file or inline JSON")->required();
    mult->add_option("--n", mult_n, "ambient dimension")->capture_default_str();
    mult->add_option("--max-degree", mult_degree, "largest degree")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    mult->add_option("-o,--output", mult_out, "CSV path, - for stdout")->capture_default_str();

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string suite, report_path;
    SuiteConfig cfg;
    double tol = 0;
    check->add_option("suite", suite, "identities, inequalities, endomorphisms or roundtrip")
        ->required();
    check->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    check->add_option("--count", cfg.count, "number of random bodies")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    auto* tol_opt = check->add_option("--tol", tol, "override every check tolerance")
                        ->check(CLI::PositiveNumber);
    check->add_option("-o,--output", report_path, "report path (default bmh_<suite>.json)");
    check_grid.attach(check);

    auto* recon = app.add_subcommand("reconstruct", "polytope from a surface area measure");
    std::string measure_path, recon_out = "-";
    recon->add_option("measure", measure_path, "measure JSON file")->required();
    recon->add_option("-o,--output", recon_out, "body JSON path, - for stdout")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*apply)
            return cmd_apply(body_path, kernel_arg, prefix, apply_grid);
        if (*mult)
            return cmd_multipliers(mult_kernel, mult_n, mult_degree, mult_out);
        if (*check) {
            cfg.grid_theta = check_grid.theta;
            cfg.grid_phi = check_grid.phi;
            cfg.max_degree = check_grid.max_degree;
            if (tol_opt->count())
                cfg.tol = tol;
            return cmd_check(suite, cfg, report_path);
        }
        if (*recon)
            return cmd_reconstruct(measure_path, recon_out);
    } catch (const DimensionError& e) {
        std::cerr << "bmh: degenerate body: " << e.what() << "\n";
        return degenerate;
    } catch (const InputError& e) {
        std::cerr << "bmh: " << e.what() << "\n";
        return usage;
    } catch (const NumericError& e) {
        std::cerr << "bmh: numerical failure: " << e.what() << "\n";
        return no_convergence;
    } catch (const std::exception& e) {
        std::cerr << "bmh: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
