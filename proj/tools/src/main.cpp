#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>

#include "commands.hpp"

using namespace wcauchy::cli;

int main(int argc, char** argv) {
    CLI::App app{"Weighted Cauchy transform checks on Bergman spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with the same keys as the long flags");

    RunConfig cfg;
    std::string format = "json";
    std::optional<int> random_degree;
    std::optional<double> radius, tol;

    app.add_option("--weight", cfg.weight, "const | pow:<a> | expexp | table:<csv>")->capture_default_str();
    app.add_option("--map", cfg.map, "identity | poly:c1,c2,... | scale:l | moebius:a,l")->capture_default_str();
    app.add_option("--series", cfg.series, "JSON [[re,im],...] inline or a file path");
    app.add_option("--random", random_degree, "use a seeded random series of this degree (window size for dirichlet)");
    app.add_flag("--pullback", cfg.pullback, "treat --series as g on G and pull it back to the disk");
    app.add_option("--zeta", cfg.zeta, "evaluation points, e.g. 2 1.5i -2+1i");
    app.add_option("--kmax", cfg.kmax, "largest moment index");
    app.add_option("--n-list", cfg.n_list, "cutoff indices; 'inf' adds the uncut row");
    app.add_option("--radius", radius, "radius of the test circle (default 2 max|phi|)");
    app.add_option("--window", cfg.window, "Fourier window K");
    app.add_option("--shape", cfg.shape, "cutoff shape: linear | smooth")->capture_default_str();
    app.add_option("--boundary", cfg.boundary, "pair: JSON Laurent coefficients c_-1, c_-2, ...");
    app.add_option("--format", format, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for random inputs")->capture_default_str();
    app.add_option("--tol", tol, "tolerance for the pass flags");

    const std::map<std::string, std::pair<std::string, std::function<Report(const RunConfig&)>>> commands = {
        {"moments", {"moments, inverse moments and M_k ratios", run_moments}},
        {"transform", {"transform by quadrature against the closed form", run_transform}},
        {"isometry", {"norm of g against norm of its transform", run_isometry}},
        {"approx", {"truncated transforms and their convergence bound", run_approx}},
        {"check-weight", {"consolidated weight diagnostics", run_check_weight}},
        {"dirichlet", {"Dirichlet-type norm and per-term ratios", run_dirichlet}},
        {"pair", {"boundary pairing against its Cauchy-Schwarz bound", run_pair}},
    };
    for (const auto& [name, entry] : commands) app.add_subcommand(name, entry.first);

    CLI11_PARSE(app, argc, argv);
    cfg.random_degree = random_degree;
    cfg.radius = radius;
    cfg.tol = tol;
    const Format fmt = format == "csv" ? Format::csv : format == "table" ? Format::table : Format::json;

    try {
        const auto* sub = app.get_subcommands().front();
        const Report report = commands.at(sub->get_name()).second(cfg);
        std::fputs(render(report, fmt).c_str(), stdout);
        return report.pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
