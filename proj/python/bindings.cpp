#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlasym/algebraic.hpp"
#include "mlasym/cli.hpp"
#include "mlasym/ml_oracle.hpp"
#include "mlasym/specfun.hpp"
#include "mlasym/stokes.hpp"

namespace py = pybind11;
using namespace mlasym;

namespace {

// Numeric inputs cross the boundary as strings ("0.99", "1/3") so the exact
// decimal/rational value survives every internal precision escalation;
// results come back as decimal strings.
Rational rat(const std::string& s) { return rational_from_string(s); }

std::string fmt(const BigReal& v, long digits) {
    return format_scientific(v, static_cast<int>(digits));
}

py::dict trunc_dict(const TruncationData& t, long digits) {
    py::dict d;
    d["M"] = t.M;
    d["nu"] = fmt(t.nu, digits);
    d["X"] = fmt(t.X, digits);
    return d;
}

py::dict report_dict(const ExpansionReport& rep, long digits) {
    py::dict d;
    d["value_re"] = fmt(rep.value.re, digits);
    d["value_im"] = fmt(rep.value.im, digits);
    d["erfc_term"] = py::make_tuple(fmt(rep.erfc_term.re, digits), fmt(rep.erfc_term.im, digits));
    py::list terms;
    for (const BigComplex& t : rep.series_terms)
        terms.append(py::make_tuple(fmt(t.re, digits), fmt(t.im, digits)));
    d["series_terms"] = terms;
    d["kmax_used"] = rep.kmax_used;
    d["est_error"] = fmt(rep.est_error, 3);
    d["validity_warning"] = rep.validity_warning;
    d["near_one_tables_used"] = rep.near_one_tables_used;
    d["truncation"] = trunc_dict(rep.trunc, digits);
    return d;
}

}  // namespace

PYBIND11_MODULE(mlasym, m) {
    m.doc() =
        "Arbitrary-precision Mittag-Leffler E_a(-x): certified series oracle, "
        "optimally truncated algebraic expansion, and the erfc-smoothed "
        "exponentially small remainder. Numeric arguments are decimal or p/q "
        "strings; results are decimal strings.";

    m.def(
        "ml",
        [](const std::string& a, const std::string& x, long digits) {
            return fmt(ml_negative_axis(rat(a), rat(x), digits), digits);
        },
        py::arg("a"), py::arg("x"), py::arg("digits") = 30,
        "E_a(-x) by the direct series at the requested precision");

    m.def(
        "ml_complex",
        [](const std::string& a, const std::string& b, const std::string& x,
           const std::string& theta_over_pi, long digits) {
            MLParams p;
            p.a = rat(a);
            p.b = rat(b);
            p.z = MLPoint{rat(x), rat(theta_over_pi)};
            BigComplex v = eval_ml_series(p, digits);
            return py::make_tuple(fmt(v.re, digits), fmt(v.im, digits));
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("theta_over_pi"),
        py::arg("digits") = 30,
        "E_{a,b}(x e^{i pi q}) by the direct series; returns (re, im)");

    m.def(
        "cancellation_digits",
        [](const std::string& a, const std::string& x) {
            return cancellation_digits(rat(a), rat(x));
        },
        py::arg("a"), py::arg("x"));

    m.def(
        "optimal_truncation",
        [](const std::string& a, const std::string& x, long digits) {
            TruncationData t = optimal_truncation(rat(a), rat(x), PrecisionContext(digits, 10));
            return trunc_dict(t, digits);
        },
        py::arg("a"), py::arg("x"), py::arg("digits") = 30,
        "optimal index M, offset nu and X = x^(1/a)");

    m.def(
        "script_E",
        [](const std::string& a, const std::string& x, long digits) {
            return fmt(script_E(rat(a), rat(x), PrecisionContext(digits, 10)), digits);
        },
        py::arg("a"), py::arg("x"), py::arg("digits") = 20,
        "E_a(-x) minus its optimally truncated algebraic expansion");

    m.def(
        "recursion_check",
        [](const std::string& a, const std::string& x, long M, long digits) {
            return fmt(recursion_check(rat(a), rat(x), M, PrecisionContext(digits, 10)), digits);
        },
        py::arg("a"), py::arg("x"), py::arg("M"), py::arg("digits") = 20,
        "remainder R_M(a;-x) = (-x)^{-M} E_{a,1-aM}(-x) by direct series");

    m.def(
        "exp_small_remainder",
        [](const std::string& a, const std::string& x, long kmax, long digits) {
            ExpansionReport rep =
                exp_small_remainder(rat(a), rat(x), kmax, PrecisionContext(digits, 10));
            py::dict d = report_dict(rep, digits);
            d["value"] = d["value_re"];
            return d;
        },
        py::arg("a"), py::arg("x"), py::arg("kmax") = 6, py::arg("digits") = 30,
        "erfc-smoothed exponentially small expansion of R_M(a;-x)");

    m.def(
        "exp_small_general_theta",
        [](const std::string& a, const std::string& x, const std::string& theta_over_pi,
           long kmax, long digits) {
            ExpansionReport rep = exp_small_general_theta(
                rat(a), rat(x), Angle::pi_multiple(rat(theta_over_pi)), kmax,
                PrecisionContext(digits, 10));
            return report_dict(rep, digits);
        },
        py::arg("a"), py::arg("x"), py::arg("theta_over_pi"), py::arg("kmax") = 6,
        py::arg("digits") = 30,
        "one-sided expansion J at arg z = theta; valid for 0 < theta < 3 pi a");

    m.def(
        "leading_order_estimate",
        [](const std::string& a, const std::string& x, long digits) {
            LeadingOrderEstimate lo =
                leading_order_estimate(rat(a), rat(x), PrecisionContext(digits, 10));
            py::dict d;
            d["value"] = fmt(lo.value, digits);
            d["omega_x_small"] = lo.omega_x_small;
            return d;
        },
        py::arg("a"), py::arg("x"), py::arg("digits") = 30,
        "closed-form estimate of the remainder for a near 1; exactly e^{-x} at a = 1");

    m.def(
        "gamma",
        [](const std::string& y, long digits) {
            PrecisionGuard guard(digits + 10);
            return fmt(gamma_hp(BigReal(y.c_str()), PrecisionContext(digits, 10)), digits);
        },
        py::arg("y"), py::arg("digits") = 30);

    m.def(
        "erfc",
        [](const std::string& re, const std::string& im, long digits) {
            PrecisionGuard guard(digits + 10);
            BigComplex w(BigReal(re.c_str()), BigReal(im.c_str()));
            BigComplex v = erfc_complex(w, PrecisionContext(digits, 10));
            return py::make_tuple(fmt(v.re, digits), fmt(v.im, digits));
        },
        py::arg("re"), py::arg("im") = std::string("0"), py::arg("digits") = 30);

    m.def(
        "c_locus",
        [](const std::string& a, long samples, long digits) {
            Rational aq = rat(a);
            PrecisionContext ctx(digits, 10);
            py::list rows;
            for (long j = 1; j <= samples; ++j) {
                StokesGeometry g =
                    make_geometry(Angle::pi_multiple(Rational(3 * j, samples + 1) * aq), aq, ctx);
                py::dict r;
                r["theta"] = fmt(g.theta_value, digits);
                r["re_c"] = fmt(g.c.re, digits);
                r["im_c"] = fmt(g.c.im, digits);
                if (g.c.is_zero()) {
                    r["arg_c"] = py::none();
                } else {
                    r["arg_c"] = fmt(arg(g.c), digits);
                }
                rows.append(r);
            }
            return rows;
        },
        py::arg("a"), py::arg("samples") = 400, py::arg("digits") = 30,
        "locus of c(theta) over theta in (0, 3 pi a)");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            RunConfig cfg;
            // minimal dispatcher mirroring the command-line front end
            if (args.empty()) throw std::invalid_argument("run_cli: need a subcommand");
            const std::string& cmd = args[0];
            if (cmd == "eval") cfg.command = RunConfig::Command::eval;
            else if (cmd == "compare") cfg.command = RunConfig::Command::compare;
            else if (cmd == "repro-table1") cfg.command = RunConfig::Command::repro_table1;
            else if (cmd == "repro-table2") cfg.command = RunConfig::Command::repro_table2;
            else if (cmd == "repro-table3") cfg.command = RunConfig::Command::repro_table3;
            else if (cmd == "fig1-locus") cfg.command = RunConfig::Command::fig1_locus;
            else throw std::invalid_argument("run_cli: unknown subcommand " + cmd);
            for (std::size_t i = 1; i + 1 < args.size(); i += 2) {
                const std::string& key = args[i];
                const std::string& val = args[i + 1];
                if (key == "--a") cfg.a = val;
                else if (key == "--x") cfg.x = val;
                else if (key == "--theta") cfg.theta_over_pi = val;
                else if (key == "--kmax") cfg.kmax = std::stol(val);
                else if (key == "--digits") cfg.digits = std::stol(val);
                else if (key == "--samples") cfg.samples = std::stol(val);
                else if (key == "--format") {
                    if (val == "json") cfg.format = RunConfig::Format::json;
                    else if (val == "csv") cfg.format = RunConfig::Format::csv;
                    else cfg.format = RunConfig::Format::text;
                } else {
                    throw std::invalid_argument("run_cli: unknown flag " + key);
                }
            }
            CliResult res = run_command(cfg);
            return py::make_tuple(res.exit_code, res.document, res.error);
        },
        py::arg("args"),
        "drive a front-end command; returns (exit_code, document, error)");

    m.attr("__version__") = "1.0.0";
}
