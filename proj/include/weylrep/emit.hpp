#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "weylrep/bipoly.hpp"
#include "weylrep/class_table.hpp"
#include "weylrep/formulas.hpp"
#include "weylrep/oracle.hpp"
#include "weylrep/poly.hpp"
#include "weylrep/rational.hpp"
#include "weylrep/truncated_series.hpp"

namespace weylrep {
namespace emit {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- text ----

// Ascending-degree form: "1 + 3s + s^2", "-1 + x^3".
inline std::string term_text(const BigRational& c, char var, std::size_t deg, bool lead) {
    const BigRational a = lead ? c : (c < 0 ? BigRational(-c) : c);
    std::string out;
    if (deg == 0) {
        out = to_decimal_string(a);
    } else {
        if (a == -1)
            out = "-";
        else if (a != 1)
            out = to_decimal_string(a);
        out += var;
        if (deg > 1) out += "^" + std::to_string(deg);
    }
    return out;
}

inline std::string poly_text(const std::vector<BigRational>& coeffs, char var) {
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (first) {
            out += term_text(coeffs[d], var, d, true);
            first = false;
        } else {
            out += coeffs[d] < 0 ? " - " : " + ";
            out += term_text(coeffs[d], var, d, false);
        }
    }
    return first ? "0" : out;
}

inline std::string poly_text(const UniPoly& p) { return poly_text(p.coeffs(), var_name(p.var())); }

inline std::string series_text(const TruncatedSeries& s) {
    std::string out = poly_text(s.coeffs(), var_name(s.var()));
    out += " + O(";
    out += var_name(s.var());
    out += "^" + std::to_string(s.order() + 1) + ")";
    return out;
}

inline std::string bipoly_text(const BiPoly& b) {
    std::string out;
    for (const auto& [d, p] : b.parts()) {
        out += "t^" + std::to_string(d) + ": " + poly_text(p) + "\n";
    }
    if (out.empty()) out = "0\n";
    return out;
}

inline std::string comm_hilbert_text(const CommHilbertSeries& c) {
    std::string out;
    for (std::size_t k = 0; k < c.t_parts.size(); ++k) {
        out += "t^" + std::to_string(k) + ": " + series_text(c.t_parts[k]) + "\n";
    }
    return out;
}

// --------------------------------------------------------------- latex ----

inline std::string poly_latex(const std::vector<BigRational>& coeffs, char var) {
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        const BigRational& c = coeffs[d];
        if (c == 0) continue;
        BigRational a = c;
        if (first) {
            if (c < 0) {
                out += "-";
                a = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) a = -c;
        }
        first = false;
        if (d == 0 || a != 1) {
            if (is_integer(a)) {
                out += to_decimal_string(numerator(a));
            } else {
                out += "\\frac{" + to_decimal_string(numerator(a)) + "}{" +
                       to_decimal_string(denominator(a)) + "}";
            }
        }
        if (d >= 1) {
            out += var;
            if (d > 1) out += "^{" + std::to_string(d) + "}";
        }
    }
    return first ? "0" : out;
}

inline std::string poly_latex(const UniPoly& p) {
    return poly_latex(p.coeffs(), var_name(p.var()));
}

inline std::string series_latex(const TruncatedSeries& s) {
    std::string out = poly_latex(s.coeffs(), var_name(s.var()));
    out += " + O(";
    out += var_name(s.var());
    out += "^{" + std::to_string(s.order() + 1) + "})";
    return out;
}

inline std::string bipoly_latex(const BiPoly& b) {
    if (b.parts().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, p] : b.parts()) {
        if (!first) out += " + ";
        first = false;
        out += "\\left(" + poly_latex(p) + "\\right)";
        if (d == 1)
            out += " t";
        else if (d > 1)
            out += " t^{" + std::to_string(d) + "}";
    }
    return out;
}

inline std::string comm_hilbert_latex(const CommHilbertSeries& c) {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c.t_parts.size(); ++k) {
        if (!first) out += " + ";
        first = false;
        out += "\\left(" + poly_latex(c.t_parts[k].coeffs(),
                                      var_name(c.t_parts[k].var())) + "\\right)";
        if (k == 1)
            out += " t";
        else if (k > 1)
            out += " t^{" + std::to_string(k) + "}";
    }
    out += " + O(s^{" + std::to_string(c.s_order + 1) + "})";
    return out;
}

// ---------------------------------------------------------------- json ----

inline Json coeff_strings(const std::vector<BigRational>& coeffs) {
    Json arr = Json::array();
    for (const auto& c : coeffs) arr.push_back(to_decimal_string(c));
    return arr;
}

inline Json result_json(const SeriesResult& r) {
    Json j;
    j["formula"] = formula_name(r.formula);
    j["group"] = r.group.canonical_name;
    j["rank"] = r.group.rank();
    j["weyl_order"] = to_decimal_string(r.weyl_order);
    j["parameter"] = r.parameter;
    if (std::holds_alternative<UniPoly>(r.value)) {
        const auto& p = std::get<UniPoly>(r.value);
        j["variable"] = std::string(1, var_name(p.var()));
        j["coefficients"] = coeff_strings(p.coeffs());
    } else if (std::holds_alternative<BiPoly>(r.value)) {
        const auto& b = std::get<BiPoly>(r.value);
        j["variable"] = std::string(1, var_name(b.svar()));
        j["coefficients"] = coeff_strings(bipoly_collapse(b).coeffs());
        Json parts = Json::array();
        for (const auto& [d, p] : b.parts()) {
            Json part;
            part["t_degree"] = d;
            part["coefficients"] = coeff_strings(p.coeffs());
            parts.push_back(part);
        }
        j["t_parts"] = parts;
    } else if (std::holds_alternative<TruncatedSeries>(r.value)) {
        const auto& s = std::get<TruncatedSeries>(r.value);
        j["variable"] = std::string(1, var_name(s.var()));
        j["order"] = s.order();
        j["coefficients"] = coeff_strings(s.coeffs());
    } else if (std::holds_alternative<CommHilbertSeries>(r.value)) {
        const auto& c = std::get<CommHilbertSeries>(r.value);
        j["variable"] = "s";
        j["order"] = c.s_order;
        j["coefficients"] = coeff_strings(c.collapse().coeffs());
        Json parts = Json::array();
        for (std::size_t k = 0; k < c.t_parts.size(); ++k) {
            Json part;
            part["t_degree"] = static_cast<int>(k);
            part["coefficients"] = coeff_strings(c.t_parts[k].coeffs());
            parts.push_back(part);
        }
        j["t_parts"] = parts;
    } else if (std::holds_alternative<BigRational>(r.value)) {
        j["value"] = to_decimal_string(std::get<BigRational>(r.value));
    }
    return j;
}

inline Json class_table_json(const ClassTable& t) {
    Json j;
    j["formula"] = "classes";
    j["group"] = t.group.canonical_name;
    j["rank"] = t.group.rank();
    j["weyl_order"] = to_decimal_string(t.weyl_order);
    Json records = Json::array();
    for (const auto& rec : t.records) {
        Json r;
        r["size"] = to_decimal_string(rec.size);
        r["char_poly"] = coeff_strings(rec.char_poly.coeffs());
        r["det_one_plus_sw"] = coeff_strings(rec.det_one_plus_sw.coeffs());
        records.push_back(r);
    }
    j["records"] = records;
    return j;
}

inline Json degree_table_json(const DegreeTable& t) {
    Json j;
    j["formula"] = "degrees";
    j["group"] = t.group.canonical_name;
    j["rank"] = t.group.rank();
    j["weyl_order"] = to_decimal_string(t.group.weyl_order());
    j["degrees"] = t.degrees;
    j["dim"] = t.group_dimension();
    return j;
}

inline Json cross_check_json(const oracle::CrossCheckReport& r) {
    Json j;
    j["formula"] = "check";
    j["group"] = r.group;
    j["n_max"] = r.n_max;
    j["k_max"] = r.k_max;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
    }
    j["checks"] = checks;
    j["all_pass"] = r.all_pass();
    return j;
}

}  // namespace emit
}  // namespace weylrep
