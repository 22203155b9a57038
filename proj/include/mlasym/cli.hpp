#pragma once

#include <optional>
#include <string>

#include "mlasym/precision.hpp"

namespace mlasym {

// Parsed command-line request. String-typed numeric inputs keep the decimal
// values exact ("0.99" stays 99/100 at every internal precision).
struct RunConfig {
    enum class Command {
        eval,
        compare,
        repro_table1,
        repro_table2,
        repro_table3,
        fig1_locus,
    };
    enum class Format { json, csv, text };

    Command command = Command::eval;
    std::string a;
    std::string x;
    std::optional<std::string> theta_over_pi;  // phase of z as a multiple of pi
    long kmax = 6;
    long digits = 0;  // 0 = per-command default
    long samples = 400;
    Format format = Format::text;
    std::optional<std::string> output_path;
};

struct CliResult {
    int exit_code = 0;        // 0 ok, 1 table mismatch, 2 usage, 3 precision budget
    std::string document;     // the report (json/csv/text)
    std::string error;        // non-empty on usage/budget errors
};

CliResult run_command(const RunConfig& cfg);

}  // namespace mlasym
