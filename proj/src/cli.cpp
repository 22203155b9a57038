#include "mlasym/cli.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>

#include "mlasym/algebraic.hpp"
#include "mlasym/ml_oracle.hpp"
#include "mlasym/stokes.hpp"
#include "mlasym/tables.hpp"

namespace mlasym {

using json = nlohmann::ordered_json;

namespace {

constexpr long kDefaultEvalDigits = 30;
constexpr long kDefaultTable1Digits = 60;
constexpr long kDefaultTableDigits = 25;

long effective_digits(const RunConfig& cfg) {
    if (cfg.digits > 0) return cfg.digits;
    switch (cfg.command) {
        case RunConfig::Command::repro_table1: return kDefaultTable1Digits;
        case RunConfig::Command::repro_table2:
        case RunConfig::Command::repro_table3: return kDefaultTableDigits;
        default: return kDefaultEvalDigits;
    }
}

std::string fmt(const BigReal& v, long sig) { return format_scientific(v, static_cast<int>(sig)); }

// Partial reassembly of an expansion report at truncation level k.
BigReal remainder_level(const ExpansionReport& rep, const Rational& a, long level,
                        long work) {
    PrecisionGuard guard(work);
    BigComplex acc = rep.erfc_term;
    for (long j = 0; j <= level && j < static_cast<long>(rep.series_terms.size()); ++j)
        acc += rep.series_terms[static_cast<std::size_t>(j)];
    BigReal val;
    val = 2 / to_real(a, work) * acc.re;
    return val;
}

struct EvalData {
    Rational a;
    Rational x;
    TruncationData trunc;
    BigReal oracle;
    BigReal partial_sum;
    BigReal script_e;
    ExpansionReport rep;
    BigReal rel_dev;
    long digits;
};

EvalData compute_eval(const RunConfig& cfg) {
    EvalData d;
    d.digits = effective_digits(cfg);
    d.a = rational_from_string(cfg.a);
    d.x = rational_from_string(cfg.x);
    if (!(d.a > 0) || d.a > 1) throw std::invalid_argument("--a must satisfy 0 < a <= 1");
    if (!(d.x > 0)) throw std::invalid_argument("--x must be positive");
    PrecisionContext ctx(d.digits, 10);
    d.trunc = optimal_truncation(d.a, d.x, ctx);
    d.oracle = ml_negative_axis(d.a, d.x, d.digits);
    d.partial_sum = algebraic_partial_sum(d.a, d.x, d.trunc.M, ctx);
    d.script_e = script_E(d.a, d.x, ctx);
    d.rep = exp_small_remainder(d.a, d.x, cfg.kmax, ctx);
    PrecisionGuard guard(d.digits + 10);
    BigReal dev;
    dev = abs(BigReal(d.script_e - d.rep.value.re)) / abs(d.script_e);
    d.rel_dev = dev;
    return d;
}

json eval_to_json(const RunConfig& cfg, const EvalData& d) {
    json terms = json::array();
    {
        PrecisionGuard guard(d.digits + 10);
        BigReal two_over_a;
        two_over_a = 2 / to_real(d.a, d.digits + 10);
        for (const BigComplex& t : d.rep.series_terms) {
            BigReal contrib;
            contrib = two_over_a * t.re;
            terms.push_back(fmt(contrib, d.digits));
        }
    }
    json j;
    j["command"] = "eval";
    j["inputs"] = {{"a", cfg.a}, {"x", cfg.x}, {"kmax", cfg.kmax}, {"digits", d.digits}};
    j["truncation"] = {{"M", d.trunc.M},
                       {"nu", fmt(d.trunc.nu, d.digits)},
                       {"X", fmt(d.trunc.X, d.digits)}};
    json results;
    results["oracle"] = fmt(d.oracle, d.digits);
    results["partial_sum"] = fmt(d.partial_sum, d.digits);
    results["script_E"] = fmt(d.script_e, d.digits);
    results["R_M"] = fmt(d.rep.value.re, d.digits);
    {
        PrecisionGuard guard(d.digits + 10);
        BigReal two_over_a;
        two_over_a = 2 / to_real(d.a, d.digits + 10);
        BigReal erfc_contrib;
        erfc_contrib = two_over_a * d.rep.erfc_term.re;
        results["erfc_term"] = fmt(erfc_contrib, d.digits);
    }
    results["terms"] = terms;
    results["est_error"] = fmt(d.rep.est_error, 3);
    results["rel_dev"] = fmt(d.rel_dev, 3);
    results["kmax_used"] = d.rep.kmax_used;
    results["validity_warning"] = d.rep.validity_warning;
    j["results"] = results;

    if (cfg.theta_over_pi) {
        Rational th = rational_from_string(*cfg.theta_over_pi);
        ExpansionReport rj = exp_small_general_theta(d.a, d.x, Angle::pi_multiple(th),
                                                     cfg.kmax, PrecisionContext(d.digits, 10));
        j["general_theta"] = {{"theta_over_pi", *cfg.theta_over_pi},
                              {"J_re", fmt(rj.value.re, d.digits)},
                              {"J_im", fmt(rj.value.im, d.digits)},
                              {"est_error", fmt(rj.est_error, 3)}};
    }
    j["digits_claimed"] = d.digits;
    return j;
}

json compare_to_json(const RunConfig& cfg, const EvalData& d) {
    json rows = json::array();
    PrecisionGuard guard(d.digits + 10);
    for (long k = 0; k <= d.rep.kmax_used; ++k) {
        BigReal level = remainder_level(d.rep, d.a, k, d.digits + 10);
        BigReal dev;
        dev = abs(BigReal(d.script_e - level)) / abs(d.script_e);
        rows.push_back(
            {{"k", k}, {"R_M", fmt(level, d.digits)}, {"rel_dev", fmt(dev, 3)}});
    }
    json j;
    j["command"] = "compare";
    j["inputs"] = {{"a", cfg.a}, {"x", cfg.x}, {"kmax", cfg.kmax}, {"digits", d.digits}};
    j["truncation"] = {{"M", d.trunc.M},
                       {"nu", fmt(d.trunc.nu, d.digits)},
                       {"X", fmt(d.trunc.X, d.digits)}};
    j["results"] = {{"script_E", fmt(d.script_e, d.digits)},
                    {"levels", rows},
                    {"est_error", fmt(d.rep.est_error, 3)}};
    j["digits_claimed"] = d.digits;
    return j;
}

json cell_report(const std::string& label, const BigReal& computed,
                 const tables::Cell& cell, bool& all_pass) {
    tables::CellCheck chk = tables::check_cell(computed, cell);
    if (!chk.pass) all_pass = false;
    json j;
    j["cell"] = label;
    j["computed"] = fmt(computed, cell.printed_digits() + 2);
    j["expected"] = cell.printed;
    j["required_digits"] = chk.required;
    j["matched_digits"] = chk.matched;
    if (cell.bold_pos > 0) j["bold_pos"] = cell.bold_pos;
    if (chk.sign_flip_applied) j["sign_inconsistency_in_source"] = true;
    j["pass"] = chk.pass;
    return j;
}

json repro_table1(const RunConfig& cfg, bool& pass) {
    const long digits = effective_digits(cfg);
    PrecisionContext ctx(digits, 10);
    Rational a = rational_from_string("0.99");
    Rational x(40);
    TruncationData t = optimal_truncation(a, x, ctx);
    StokesGeometry geom = make_geometry(Angle::pi(), a, ctx);
    CoefficientSet cs = f_coefficients(a, t.nu, geom, 6, ctx);

    bool all = true;
    json cells = json::array();
    for (const tables::CoeffRow& row : tables::table1_rows()) {
        const BigComplex& b = cs.B[static_cast<std::size_t>(row.k)];
        cells.push_back(cell_report("B_" + std::to_string(2 * row.k) + ".re", b.re, row.re, all));
        cells.push_back(cell_report("B_" + std::to_string(2 * row.k) + ".im", b.im, row.im, all));
    }
    pass = all;
    json j;
    j["command"] = "repro-table1";
    j["inputs"] = {{"a", "0.99"}, {"x", "40"}, {"digits", digits}};
    j["truncation"] = {{"M", t.M}, {"nu", fmt(t.nu, 20)}, {"X", fmt(t.X, 20)}};
    j["cells"] = cells;
    j["notes"] = json::array(
        {"the printed real part at k=2 carries the opposite sign of the value implied by "
         "the source's own coefficient formulas and convergence table; magnitude matching "
         "is reported for that cell"});
    j["pass"] = all;
    j["digits_claimed"] = digits;
    return j;
}

json repro_column(const tables::RemainderColumn& col, long digits, bool resolve_x,
                  bool& pass) {
    Rational a = rational_from_string(col.a);
    json j;
    j["a"] = col.a;
    j["caption_x"] = col.caption_x;

    std::string x_used = col.x;
    if (resolve_x) {
        // Try the caption x and the alternative; keep whichever reproduces
        // the printed script-E value.
        json hypotheses = json::array();
        std::string best;
        int best_matched = -1;
        for (const std::string& cand : {std::string("40"), std::string("20")}) {
            BigReal se = script_E(a, rational_from_string(cand), PrecisionContext(digits, 10));
            int m = tables::matched_digits(se, col.script_E);
            hypotheses.push_back({{"x", cand}, {"script_E", fmt(se, 16)}, {"matched_digits", m}});
            if (m > best_matched) {
                best_matched = m;
                best = cand;
            }
        }
        j["hypotheses"] = hypotheses;
        if (best_matched < 13) {
            j["resolved_x"] = nullptr;
            j["pass"] = false;
            pass = false;
            return j;
        }
        x_used = best;
        j["resolved_x"] = x_used;
    } else {
        j["x"] = x_used;
    }

    Rational x = rational_from_string(x_used);
    PrecisionContext ctx(digits, 10);
    ExpansionReport rep = exp_small_remainder(a, x, 6, ctx);
    BigReal se = script_E(a, x, ctx);

    bool all = true;
    json cells = json::array();
    for (std::size_t k = 0; k < col.levels.size(); ++k) {
        BigReal level = remainder_level(rep, a, static_cast<long>(k), digits + 20);
        cells.push_back(
            cell_report("R_k" + std::to_string(k), level, col.levels[k], all));
    }
    {
        // criterion: the oracle composite is reproduced to 15 significant digits
        const tables::Cell& se_cell = col.script_E;
        int required = 15 < se_cell.printed_digits() ? 15 : se_cell.printed_digits();
        int m = tables::matched_digits(se, se_cell);
        bool ok = m >= required;
        json cj;
        cj["cell"] = "script_E";
        cj["computed"] = fmt(se, se_cell.printed_digits() + 2);
        cj["expected"] = se_cell.printed;
        cj["required_digits"] = required;
        cj["matched_digits"] = m;
        cj["pass"] = ok;
        if (!ok) all = false;
        cells.push_back(cj);
    }
    j["M"] = rep.trunc.M;
    j["M_printed"] = col.M;
    j["cells"] = cells;
    j["pass"] = all;
    if (!all) pass = false;
    return j;
}

json repro_table2(const RunConfig& cfg, bool& pass) {
    const long digits = effective_digits(cfg);
    bool all = true;
    json j;
    j["command"] = "repro-table2";
    j["inputs"] = {{"digits", digits}};
    json cols = json::array();
    {
        bool col_pass = true;
        cols.push_back(repro_column(tables::table2_col1(), digits, false, col_pass));
        if (!col_pass) all = false;
    }
    {
        bool col_pass = true;
        cols.push_back(repro_column(tables::table2_col2(), digits, true, col_pass));
        if (!col_pass) all = false;
    }
    j["columns"] = cols;
    j["notes"] = json::array(
        {"the source caption states x = 40 for both columns; column (ii) reproduces "
         "under x = 20 (M = 20, printed magnitude ~ e^{-X} with X ~ 20.3)"});
    j["pass"] = all;
    j["digits_claimed"] = digits;
    pass = all;
    return j;
}

json repro_table3(const RunConfig& cfg, bool& pass) {
    const long digits = effective_digits(cfg);
    PrecisionContext ctx(digits, 10);
    bool all = true;
    json rows = json::array();
    for (const tables::SweepRow& row : tables::table3_rows()) {
        Rational a = rational_from_string(row.a);
        Rational x = rational_from_string(row.x);
        TruncationData t = optimal_truncation(a, x, ctx);
        BigReal se = script_E(a, x, ctx);
        ExpansionReport rep = exp_small_remainder(a, x, 5, ctx);

        json r;
        r["a"] = row.a;
        r["x"] = row.x;
        r["M"] = t.M;
        r["M_printed"] = row.M_printed;
        if (t.M != row.M_printed)
            r["note"] = "printed truncation index is inconsistent with aM = X + nu; "
                        "printed values reproduce under the computed index";
        bool row_pass = true;
        json cells = json::array();
        cells.push_back(cell_report("script_E", se, row.script_E, row_pass));
        cells.push_back(cell_report("R_M", rep.value.re, row.remainder, row_pass));
        r["cells"] = cells;
        r["validity_warning"] = rep.validity_warning;
        if (rep.validity_warning != row.out_of_validity) row_pass = false;
        r["pass"] = row_pass;
        if (!row_pass) all = false;
        rows.push_back(r);
    }
    json j;
    j["command"] = "repro-table3";
    j["inputs"] = {{"kmax", 5}, {"digits", digits}};
    j["rows"] = rows;
    j["pass"] = all;
    j["digits_claimed"] = digits;
    pass = all;
    return j;
}

json fig1_locus(const RunConfig& cfg) {
    const long digits = effective_digits(cfg);
    Rational a = rational_from_string(cfg.a);
    if (!(a > 0) || a > 1) throw std::invalid_argument("--a must satisfy 0 < a <= 1");
    const long n = cfg.samples;
    if (n < 2) throw std::invalid_argument("--samples must be >= 2");
    PrecisionContext ctx(digits, 10);

    json rows = json::array();
    for (long jdx = 1; jdx <= n; ++jdx) {
        Rational frac = Rational(3 * jdx, n + 1) * a;  // theta/pi in (0, 3a)
        StokesGeometry g = make_geometry(Angle::pi_multiple(frac), a, ctx);
        json r;
        r["theta"] = fmt(g.theta_value, digits);
        r["re_c"] = fmt(g.c.re, digits);
        r["im_c"] = fmt(g.c.im, digits);
        if (g.c.is_zero()) {
            r["arg_c"] = "undefined";
        } else {
            r["arg_c"] = fmt(arg(g.c), digits);
        }
        rows.push_back(r);
    }
    json j;
    j["command"] = "fig1-locus";
    j["inputs"] = {{"a", cfg.a}, {"samples", n}, {"digits", digits}};
    j["rows"] = rows;
    j["digits_claimed"] = digits;
    return j;
}

std::string to_csv(const json& j) {
    std::ostringstream out;
    if (j.contains("rows") && j["command"] == "fig1-locus") {
        out << "theta,re_c,im_c,arg_c\n";
        for (const auto& r : j["rows"])
            out << r["theta"].get<std::string>() << ',' << r["re_c"].get<std::string>() << ','
                << r["im_c"].get<std::string>() << ',' << r["arg_c"].get<std::string>() << '\n';
        return out.str();
    }
    // generic flattening: key,value rows
    out << "key,value\n";
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array()) {
                std::size_t i = 0;
                for (const auto& item : node) walk(item, prefix + "[" + std::to_string(i++) + "]");
            } else {
                out << prefix << ',' << (node.is_string() ? node.get<std::string>() : node.dump())
                    << '\n';
            }
        };
    walk(j, "");
    return out.str();
}

std::string to_text(const json& j) {
    std::ostringstream out;
    std::function<void(const json&, int)> walk = [&](const json& node, int depth) {
        std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it) {
                if (it.value().is_object() || it.value().is_array()) {
                    out << pad << it.key() << ":\n";
                    walk(it.value(), depth + 1);
                } else {
                    out << pad << it.key() << " = "
                        << (it.value().is_string() ? it.value().get<std::string>()
                                                   : it.value().dump())
                        << "\n";
                }
            }
        } else if (node.is_array()) {
            std::size_t i = 0;
            for (const auto& item : node) {
                out << pad << "- [" << i++ << "]\n";
                walk(item, depth + 1);
            }
        } else {
            out << pad << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
        }
    };
    walk(j, 0);
    return out.str();
}

std::string render(const RunConfig& cfg, const json& j) {
    switch (cfg.format) {
        case RunConfig::Format::json: return j.dump(2) + "\n";
        case RunConfig::Format::csv: return to_csv(j);
        case RunConfig::Format::text: return to_text(j);
    }
    return j.dump(2) + "\n";
}

}  // namespace

CliResult run_command(const RunConfig& cfg) {
    CliResult res;
    try {
        if (cfg.digits != 0 && cfg.digits < 16) {
            res.exit_code = 2;
            res.error = "--digits must be >= 16";
            return res;
        }
        if (cfg.kmax < 0) {
            res.exit_code = 2;
            res.error = "--kmax must be >= 0";
            return res;
        }
        json j;
        bool pass = true;
        switch (cfg.command) {
            case RunConfig::Command::eval: {
                if (cfg.a.empty() || cfg.x.empty())
                    throw std::invalid_argument("eval requires --a and --x");
                j = eval_to_json(cfg, compute_eval(cfg));
                break;
            }
            case RunConfig::Command::compare: {
                if (cfg.a.empty() || cfg.x.empty())
                    throw std::invalid_argument("compare requires --a and --x");
                j = compare_to_json(cfg, compute_eval(cfg));
                break;
            }
            case RunConfig::Command::repro_table1: j = repro_table1(cfg, pass); break;
            case RunConfig::Command::repro_table2: j = repro_table2(cfg, pass); break;
            case RunConfig::Command::repro_table3: j = repro_table3(cfg, pass); break;
            case RunConfig::Command::fig1_locus: {
                if (cfg.a.empty())
                    throw std::invalid_argument("fig1-locus requires --a");
                j = fig1_locus(cfg);
                break;
            }
        }
        res.document = render(cfg, j);
        res.exit_code = pass ? 0 : 1;
    } catch (const PrecisionBudgetExceeded& e) {
        res.exit_code = 3;
        res.error = e.what();
    } catch (const TruncationOverflow& e) {
        res.exit_code = 3;
        res.error = e.what();
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = e.what();
    }
    return res;
}

}  // namespace mlasym
