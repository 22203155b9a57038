#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "mlasym/cli.hpp"

namespace {

void add_common(CLI::App* sub, mlasym::RunConfig& cfg) {
    sub->add_option("--kmax", cfg.kmax, "series truncation depth of the B-sum")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--digits", cfg.digits, "requested significant digits (>= 16)");
    std::map<std::string, mlasym::RunConfig::Format> fmts{
        {"json", mlasym::RunConfig::Format::json},
        {"csv", mlasym::RunConfig::Format::csv},
        {"text", mlasym::RunConfig::Format::text}};
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(fmts, CLI::ignore_case));
    sub->add_option_function<std::string>(
        "--out", [&cfg](const std::string& path) { cfg.output_path = path; },
        "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mlasym: Mittag-Leffler E_a(-x) via a certified series oracle and the "
        "erfc-smoothed exponentially small expansion at optimal truncation"};
    app.require_subcommand(1);

    mlasym::RunConfig cfg;
    std::string theta;

    auto* eval = app.add_subcommand("eval", "evaluate E_a(-x), script-E and R_M");
    eval->add_option("--a", cfg.a, "order parameter (decimal or p/q)")->required();
    eval->add_option("--x", cfg.x, "argument magnitude")->required();
    eval->add_option("--theta", theta, "also report the one-sided J at arg z = theta*pi");
    add_common(eval, cfg);

    auto* cmp = app.add_subcommand("compare", "R_M at every truncation level vs script-E");
    cmp->add_option("--a", cfg.a, "order parameter")->required();
    cmp->add_option("--x", cfg.x, "argument magnitude")->required();
    add_common(cmp, cfg);

    auto* t1 = app.add_subcommand("repro-table1", "recompute the B_{2k}(pi) coefficient table");
    add_common(t1, cfg);
    auto* t2 = app.add_subcommand("repro-table2", "recompute the convergence table");
    add_common(t2, cfg);
    auto* t3 = app.add_subcommand("repro-table3", "recompute the parameter sweep table");
    add_common(t3, cfg);

    auto* fig = app.add_subcommand("fig1-locus", "emit the c(theta) locus over (0, 3 pi a)");
    fig->add_option("--a", cfg.a, "order parameter")->required();
    fig->add_option("--samples", cfg.samples, "interior sample count");
    add_common(fig, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (eval->parsed()) cfg.command = mlasym::RunConfig::Command::eval;
    if (cmp->parsed()) cfg.command = mlasym::RunConfig::Command::compare;
    if (t1->parsed()) cfg.command = mlasym::RunConfig::Command::repro_table1;
    if (t2->parsed()) cfg.command = mlasym::RunConfig::Command::repro_table2;
    if (t3->parsed()) cfg.command = mlasym::RunConfig::Command::repro_table3;
    if (fig->parsed()) cfg.command = mlasym::RunConfig::Command::fig1_locus;
    if (!theta.empty()) cfg.theta_over_pi = theta;

    mlasym::CliResult res = mlasym::run_command(cfg);
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    if (!res.document.empty()) {
        if (cfg.output_path) {
            std::ofstream out(*cfg.output_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open " << *cfg.output_path << "\n";
                return 2;
            }
            out << res.document;
        } else {
            std::cout << res.document;
        }
    }
    return res.exit_code;
}
