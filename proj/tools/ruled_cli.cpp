// Command-line front end: construct, witness, refute, cover, export-plot.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ruled/commands.hpp"
#include "ruled/io.hpp"

int main(int argc, char** argv) {
    using namespace ruled;

    CLI::App app{"Exact construction and refutation tools for the z = xy transversal family"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string delta_text = "1/2";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--delta", delta_text, "measure lower bound delta in (0,1), as num/den")->capture_default_str();
        sub->add_option("--out", cfg.out, "output file (directory for export-plot); stdout when omitted");
        sub->add_flag("--verify", cfg.verify, "reload the output and recheck it with the exact predicates");
    };

    auto* construct = app.add_subcommand("construct", "write the first N bodies as JSON lines");
    common(construct);
    construct->add_option("-N,--count", cfg.count, "number of bodies")->capture_default_str();

    auto* witness = app.add_subcommand("witness", "find a ruling x = r meeting t bodies of a family file");
    common(witness);
    witness->add_option("--t", cfg.t, "number of bodies to pierce")->capture_default_str();
    witness->add_option("--family", cfg.family, "family file")->required();

    auto* refute = app.add_subcommand("refute", "find a body missed by every line of a lines file");
    common(refute);
    refute->add_option("--lines", cfg.lines, "lines file")->required();
    refute->add_option("--nmax", cfg.nmax, "stream elements to examine")->capture_default_str();

    auto* cover = app.add_subcommand("cover", "minimum cover of a family file by a pool of lines");
    common(cover);
    cover->add_option("--family", cfg.family, "family file")->required();
    cover->add_option("--lines", cfg.lines, "lines file")->required();

    auto* plot = app.add_subcommand("export-plot", "CSV samples of bodies and the surface for plotting");
    common(plot);
    plot->add_option("--family", cfg.family, "family file")->required();
    plot->add_option("--precision", cfg.precision, "significant digits")->capture_default_str();
    plot->add_option("--samples", cfg.samples, "arc samples per body")->capture_default_str();
    plot->add_option("--grid", cfg.grid, "surface grid points per axis")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        cfg.delta = Rational::parse(delta_text);
    } catch (const std::exception& e) {
        std::cerr << "input error: --delta: " << e.what() << '\n';
        return kExitInputError;
    }

    if (construct->parsed()) return cmd_construct(cfg, std::cout, std::cerr);
    if (witness->parsed()) return cmd_witness(cfg, std::cout, std::cerr);
    if (refute->parsed()) return cmd_refute(cfg, std::cout, std::cerr);
    if (cover->parsed()) return cmd_cover(cfg, std::cout, std::cerr);
    return cmd_export_plot(cfg, std::cout, std::cerr);
}
