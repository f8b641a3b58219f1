#pragma once

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "weylrep/class_table.hpp"
#include "weylrep/emit.hpp"
#include "weylrep/errors.hpp"
#include "weylrep/formulas.hpp"
#include "weylrep/group_spec.hpp"
#include "weylrep/oracle.hpp"

namespace weylrep {
namespace cli {

namespace detail {

inline void print_result(const SeriesResult& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << emit::result_json(r).dump(2) << "\n";
        return;
    }
    const bool latex = format == "latex";
    if (std::holds_alternative<UniPoly>(r.value)) {
        const auto& p = std::get<UniPoly>(r.value);
        out << (latex ? emit::poly_latex(p) : emit::poly_text(p)) << "\n";
    } else if (std::holds_alternative<BiPoly>(r.value)) {
        const auto& b = std::get<BiPoly>(r.value);
        out << (latex ? emit::bipoly_latex(b) + "\n" : emit::bipoly_text(b));
    } else if (std::holds_alternative<TruncatedSeries>(r.value)) {
        const auto& s = std::get<TruncatedSeries>(r.value);
        out << (latex ? emit::series_latex(s) : emit::series_text(s)) << "\n";
    } else if (std::holds_alternative<CommHilbertSeries>(r.value)) {
        const auto& c = std::get<CommHilbertSeries>(r.value);
        out << (latex ? emit::comm_hilbert_latex(c) + "\n" : emit::comm_hilbert_text(c));
    } else if (std::holds_alternative<BigRational>(r.value)) {
        out << to_decimal_string(std::get<BigRational>(r.value)) << "\n";
    }
}

inline void print_class_table(const ClassTable& t, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << emit::class_table_json(t).dump(2) << "\n";
        return;
    }
    const bool latex = format == "latex";
    out << "group: " << t.group.canonical_name << "\n";
    out << "rank: " << t.group.rank() << "\n";
    out << "|W|: " << to_decimal_string(t.weyl_order) << "\n";
    out << "records: " << t.records.size() << "\n";
    for (const auto& rec : t.records) {
        out << "  size " << to_decimal_string(rec.size) << ":  char(x) = "
            << (latex ? emit::poly_latex(rec.char_poly) : emit::poly_text(rec.char_poly))
            << ",  det(1+sw) = "
            << (latex ? emit::poly_latex(rec.det_one_plus_sw)
                      : emit::poly_text(rec.det_one_plus_sw))
            << "\n";
    }
}

inline void print_degrees(const DegreeTable& t, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << emit::degree_table_json(t).dump(2) << "\n";
        return;
    }
    out << "group: " << t.group.canonical_name << "\n";
    out << "degrees:";
    for (int d : t.degrees) out << " " << d;
    out << "\n";
    out << "|W|: " << to_decimal_string(t.group.weyl_order()) << "\n";
    out << "dim: " << t.group_dimension() << "\n";
}

inline void print_report(const oracle::CrossCheckReport& r, const std::string& format,
                         std::ostream& out) {
    if (format == "json") {
        out << emit::cross_check_json(r).dump(2) << "\n";
        return;
    }
    out << "group: " << r.group << "  (n <= " << r.n_max << ", k <= " << r.k_max << ")\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        out << "\n";
    }
    out << (r.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
}

}  // namespace detail

/// Runs one CLI invocation.  Returns the process exit code: 0 on success,
/// 1 on compute refusals (cap exceeded, truncation failure, failed checks),
/// 2 on usage or parse errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Poincare series of spaces of commuting tuples in compact Lie groups"};
    app.require_subcommand(1);
    app.footer(
        "Group specs are products of factors joined with 'x', e.g. \"U(3)\",\n"
        "\"SU(2)xT^1\", \"Sp(2) x G2\".  Factors: SU(k), U(k), SO(k), Spin(k),\n"
        "Sp(k), A_k, B_k, C_k, D_k, G2, F4, E6, E7, E8, T^k.  Case-insensitive;\n"
        "whitespace ignored.  The environment variable WEYL_ENUM_CAP overrides\n"
        "the default enumeration cap of 5000000 Weyl group elements.");

    std::string group_str;
    long n = 1;
    long k = 1;
    long trunc = 16;
    long check_n = 3;
    long check_k = 3;
    std::string format = "text";
    bool bigraded = false;

    auto add_common = [&](CLI::App* cmd, bool with_n, bool with_k, bool with_trunc,
                          bool with_bigraded) {
        cmd->add_option("--group", group_str, "group spec, e.g. \"U(3)\" or \"SU(2)xT^1\"")
            ->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "latex", "json"}));
        if (with_n) cmd->add_option("--n", n, "number of generators / tuple length");
        if (with_k) cmd->add_option("--k", k, "smash power");
        if (with_trunc) cmd->add_option("--trunc", trunc, "series truncation order");
        if (with_bigraded) cmd->add_flag("--bigraded", bigraded, "emit the t-graded refinement");
    };

    CLI::App* rep = app.add_subcommand("rep", "Poincare series of commuting tuples mod conjugation");
    add_common(rep, true, false, false, true);
    CLI::App* hilbert =
        app.add_subcommand("hilbert", "bigraded refinement of the rep series");
    add_common(hilbert, true, false, false, false);
    CLI::App* smash = app.add_subcommand("smash", "series of the k-fold torus smash quotient");
    add_common(smash, false, true, false, false);
    CLI::App* comm =
        app.add_subcommand("comm", "series of the commuting-words quotient (truncated)");
    add_common(comm, false, false, true, true);
    CLI::App* xq = app.add_subcommand(
        "xq", "series of the nilpotent-words quotients; equals comm for every q >= 2");
    add_common(xq, false, false, true, true);
    CLI::App* hom = app.add_subcommand("hom", "Poincare polynomial of commuting tuples");
    add_common(hom, true, false, false, false);
    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic of the rep space");
    add_common(euler, true, false, false, false);
    CLI::App* classes = app.add_subcommand("classes", "characteristic-polynomial class table");
    add_common(classes, false, false, false, false);
    CLI::App* degs = app.add_subcommand("degrees", "characteristic degrees");
    add_common(degs, false, false, false, false);
    CLI::App* check = app.add_subcommand("check", "cross-check fast paths against the oracle");
    check->add_option("--group", group_str, "group spec, e.g. \"U(3)\" or \"SU(2)xT^1\"")
        ->required();
    check->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    check->add_option("--n", check_n, "largest tuple length to verify");
    check->add_option("--k", check_k, "largest smash power to verify");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const unsigned long long cap = default_enum_cap();
        const GroupSpec g = parse_group(group_str);

        if (degs->parsed()) {
            detail::print_degrees(degrees(g), format, out);
            return 0;
        }
        if (check->parsed()) {
            if (check_n < 0 || check_k < 0) throw UsageError("check requires n >= 0 and k >= 0");
            auto report = oracle::cross_check(g, static_cast<unsigned>(check_n),
                                              static_cast<unsigned>(check_k), cap);
            detail::print_report(report, format, out);
            return report.all_pass() ? 0 : 1;
        }

        const ClassTable table = class_table_for(g, cap);
        if (classes->parsed()) {
            detail::print_class_table(table, format, out);
            return 0;
        }

        SeriesResult result;
        result.group = g;
        result.weyl_order = table.weyl_order;
        if (rep->parsed()) {
            if (n < 0) throw UsageError("rep requires n >= 0");
            result.parameter = n;
            if (bigraded) {
                result.formula = FormulaId::rep_hilbert;
                result.value = rep_hilbert_series(table, static_cast<unsigned>(n));
            } else {
                result.formula = FormulaId::rep;
                result.value = rep_series(table, static_cast<unsigned>(n));
            }
        } else if (hilbert->parsed()) {
            if (n < 0) throw UsageError("hilbert requires n >= 0");
            result.formula = FormulaId::rep_hilbert;
            result.parameter = n;
            result.value = rep_hilbert_series(table, static_cast<unsigned>(n));
        } else if (smash->parsed()) {
            if (k < 0) throw UsageError("smash requires k >= 0");
            result.formula = FormulaId::smash;
            result.parameter = k;
            result.value = smash_series(table, static_cast<unsigned>(k));
        } else if (comm->parsed() || xq->parsed()) {
            if (trunc < 1) throw UsageError("comm requires --trunc >= 1");
            result.formula = comm->parsed()
                                 ? (bigraded ? FormulaId::comm_hilbert : FormulaId::comm)
                                 : FormulaId::xq;
            result.parameter = trunc;
            if (bigraded) {
                result.value = comm_hilbert_series(table, static_cast<int>(trunc));
            } else {
                result.value = comm_series(table, static_cast<int>(trunc));
            }
        } else if (hom->parsed()) {
            if (n < 1) throw UsageError("hom requires --n >= 1");
            result.formula = FormulaId::hom;
            result.parameter = n;
            result.value = hom_series(table, degrees(g), static_cast<unsigned>(n));
        } else if (euler->parsed()) {
            if (n < 0) throw UsageError("euler requires n >= 0");
            result.formula = FormulaId::euler;
            result.parameter = n;
            result.value = euler_characteristic(table, static_cast<unsigned>(n));
        }
        detail::print_result(result, format, out);
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace weylrep
