#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kslope/cli.hpp"

int main(int argc, char** argv) {
    using namespace kslope::cli;

    CLI::App app{"Exact slope-stability invariants of polarized varieties along subschemes"};
    app.require_subcommand(1);

    CommandRequest req;
    std::string c_text, eps_text, width_text, model_path, out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("model", model_path, "model document (JSON)")->required();
        sub->add_option("--out", out_path, "write the report to this file");
    };

    auto* analyze = app.add_subcommand("analyze", "alpha polynomials, slopes and destabilizing intervals");
    add_common(analyze);
    analyze->add_option("--c", c_text, "level c as p/q");
    analyze->add_option("--width", width_text, "root isolation width, 2^-k or p/q");

    auto* scan = app.add_subcommand("scan", "CSV of mu, mu_c and sign(Q) on a c-grid");
    add_common(scan);
    scan->add_option("--steps", req.steps, "grid size");

    auto* verify = app.add_subcommand("verify", "lattice-point oracle check of the DF formula");
    add_common(verify);
    verify->add_option("--c", c_text, "single level c as p/q (default eps/4, eps/2, 3eps/4, eps)");
    verify->add_option("--max-m", req.max_m, "largest m to sample");

    auto* limit = app.add_subcommand("limit", "mu - mu_c for L + eps H and the eps -> 0 value");
    add_common(limit);
    limit->add_option("--c", c_text, "level c as p/q (default eps/2)");
    limit->add_option("--eps", eps_text, "comma-separated perturbation sizes");

    auto* exporter = app.add_subcommand("export-table", "intersection table of a toric model");
    add_common(exporter);
    exporter->add_flag("--mixed", req.mixed, "export the two-polarization table against H");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return validation_error;
    }

    try {
        req.command = *parse_command(app.get_subcommands().front()->get_name());
        req.model = model_path;
        if (!out_path.empty()) req.out = out_path;
        if (!c_text.empty()) req.c = kslope::Rational::parse(c_text);
        if (!eps_text.empty()) req.eps = parse_rational_list(eps_text);
        if (!width_text.empty()) req.width = parse_width(width_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return validation_error;
    }
    return run(req, std::cout, std::cerr);
}
