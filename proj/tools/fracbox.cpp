#include <iostream>

#include <CLI11.hpp>

#include "fracbox/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"boxicity, fractional boxicity and s-fold boxicity of small graphs"};
    app.require_subcommand(1);

    fracbox::RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "input file; omit or '-' for stdin");
        sub->add_option("--format", cfg.format, "graph6 or edgelist (default: by extension)")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
        sub->add_flag("--json", cfg.json, "machine-readable JSON output");
        sub->add_option("--max-n", cfg.max_n, "largest accepted vertex count")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-cedges", cfg.max_cedges, "largest accepted complement edge count")
            ->envname("FRACBOX_MAX_CEDGES")
            ->check(CLI::PositiveNumber);
    };

    add_common(app.add_subcommand("box", "boxicity with a covering certificate"));
    add_common(app.add_subcommand("boxf", "fractional boxicity with LP certificates"));
    auto* boxs = app.add_subcommand("boxs", "s-fold boxicity");
    boxs->add_option("--s", cfg.s, "fold parameter")->check(CLI::PositiveNumber);
    add_common(boxs);
    add_common(app.add_subcommand("bounds", "lower bound, fractional and integer values"));
    add_common(app.add_subcommand("completions", "minimal interval completions and hyperedges"));
    add_common(app.add_subcommand("hypergraph", "covering system rows, columns and matrix"));
    add_common(app.add_subcommand("interval", "interval recognition with witness"));
    auto* analyze = app.add_subcommand("analyze", "full report");
    analyze->add_option("--smax", cfg.s_max, "largest s in the s-fold table")
        ->check(CLI::PositiveNumber);
    add_common(analyze);
    auto* batch = app.add_subcommand("batch", "graph6 lines in, JSON reports out");
    batch->add_option("--smax", cfg.s_max, "largest s in the s-fold table")
        ->check(CLI::PositiveNumber);
    add_common(batch);

    CLI11_PARSE(app, argc, argv);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return fracbox::run(cfg, std::cin, std::cout, std::cerr);
}
