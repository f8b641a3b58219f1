#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "weylrep/errors.hpp"
#include "weylrep/rational.hpp"

namespace weylrep {

// Canonical Weyl-data families.  B_m, C_m, Sp(m), SO(2m+1) and Spin(2m+1)
// all act on the rank-m lattice as the full signed permutation group, so
// they share one family; likewise D_m, SO(2m), Spin(2m).
enum class FactorKind { U, SU, BC, D, G2, F4, E6, E7, E8, Torus };

struct CartanFactor {
    FactorKind kind;
    int param;            // k for U(k)/SU(k), m for BC/D, k for Torus; 0 for G2..E8
    std::string display;  // normalized token, e.g. "SO(7)", "Sp(2)", "T^2"

    int rank() const {
        switch (kind) {
            case FactorKind::U: return param;
            case FactorKind::SU: return param - 1;
            case FactorKind::BC: return param;
            case FactorKind::D: return param;
            case FactorKind::G2: return 2;
            case FactorKind::F4: return 4;
            case FactorKind::E6: return 6;
            case FactorKind::E7: return 7;
            case FactorKind::E8: return 8;
            case FactorKind::Torus: return param;
        }
        return 0;
    }

    BigInt weyl_order() const {
        switch (kind) {
            case FactorKind::U: return factorial(static_cast<unsigned>(param));
            case FactorKind::SU: return factorial(static_cast<unsigned>(param));
            case FactorKind::BC: return (BigInt(1) << param) * factorial(static_cast<unsigned>(param));
            case FactorKind::D: return (BigInt(1) << (param - 1)) * factorial(static_cast<unsigned>(param));
            case FactorKind::G2: return 12;
            case FactorKind::F4: return 1152;
            case FactorKind::E6: return 51840;
            case FactorKind::E7: return 2903040;
            case FactorKind::E8: return 696729600;
            case FactorKind::Torus: return 1;
        }
        return 1;
    }

    // Degrees of the basic invariant polynomials; central directions count
    // with degree 1.
    std::vector<int> degrees() const {
        std::vector<int> d;
        switch (kind) {
            case FactorKind::U:
                for (int i = 1; i <= param; ++i) d.push_back(i);
                break;
            case FactorKind::SU:
                for (int i = 2; i <= param; ++i) d.push_back(i);
                break;
            case FactorKind::BC:
                for (int i = 1; i <= param; ++i) d.push_back(2 * i);
                break;
            case FactorKind::D:
                for (int i = 1; i < param; ++i) d.push_back(2 * i);
                d.push_back(param);
                break;
            case FactorKind::G2: d = {2, 6}; break;
            case FactorKind::F4: d = {2, 6, 8, 12}; break;
            case FactorKind::E6: d = {2, 5, 6, 8, 9, 12}; break;
            case FactorKind::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
            case FactorKind::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
            case FactorKind::Torus: d.assign(static_cast<std::size_t>(param), 1); break;
        }
        return d;
    }

    bool is_classical() const {
        switch (kind) {
            case FactorKind::U:
            case FactorKind::SU:
            case FactorKind::BC:
            case FactorKind::D:
            case FactorKind::Torus: return true;
            default: return false;
        }
    }

    bool operator==(const CartanFactor&) const = default;
};

struct GroupSpec {
    std::vector<CartanFactor> factors;
    std::string canonical_name;

    int rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank();
        return r;
    }

    BigInt weyl_order() const {
        BigInt w = 1;
        for (const auto& f : factors) w *= f.weyl_order();
        return w;
    }

    // Dimension of the subspace fixed by the whole Weyl group: torus ranks
    // plus the central circle of each unitary factor.
    int central_torus_rank() const {
        int c = 0;
        for (const auto& f : factors) {
            if (f.kind == FactorKind::Torus) c += f.param;
            if (f.kind == FactorKind::U) c += 1;
        }
        return c;
    }

    bool all_classical() const {
        for (const auto& f : factors)
            if (!f.is_classical()) return false;
        return true;
    }

    bool operator==(const GroupSpec&) const = default;
};

struct DegreeTable {
    GroupSpec group;
    std::vector<int> degrees;  // sorted ascending

    BigInt product() const {
        BigInt p = 1;
        for (int d : degrees) p *= d;
        return p;
    }

    // dim G = sum of (2d_i - 1), with degree-1 central directions counting 1.
    int group_dimension() const {
        int dim = 0;
        for (int d : degrees) dim += 2 * d - 1;
        return dim;
    }
};

inline DegreeTable degrees(const GroupSpec& g) {
    DegreeTable t;
    t.group = g;
    for (const auto& f : g.factors) {
        auto d = f.degrees();
        t.degrees.insert(t.degrees.end(), d.begin(), d.end());
    }
    std::sort(t.degrees.begin(), t.degrees.end());
    return t;
}

namespace detail {

inline std::string rebuild_name(const std::vector<CartanFactor>& factors) {
    std::string name;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) name += "x";
        name += factors[i].display;
    }
    return name;
}

struct FactorToken {
    std::string family;  // upper-cased letters
    long number = -1;    // -1 when absent
    std::size_t pos = 0;
};

}  // namespace detail

/// Parse a group description such as "U(3)", "SU(2)xT^1" or "Sp(2) x G2".
/// Case-insensitive; whitespace ignored; factors separated by 'x'.
/// Aliases resolve to shared Weyl data: A_k -> SU(k+1), Spin(k) -> SO(k),
/// SO(2) -> T^1, PU/PSU -> U/SU, B_m/C_m -> SO(2m+1)/Sp(m).
inline GroupSpec parse_group(const std::string& input) {
    // Strip whitespace, remember original positions for error messages.
    std::string text;
    std::vector<std::size_t> pos_map;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(input[i]))) {
            text += static_cast<char>(std::toupper(static_cast<unsigned char>(input[i])));
            pos_map.push_back(i);
        }
    }
    if (text.empty()) throw ParseError("empty group spec", 0);

    auto orig_pos = [&](std::size_t i) { return i < pos_map.size() ? pos_map[i] : input.size(); };

    // Split into factor tokens on 'X'.  No factor name contains the letter X,
    // so a bare X is always a separator.
    std::vector<detail::FactorToken> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        detail::FactorToken tok;
        tok.pos = orig_pos(i);
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != 'X')
            tok.family += text[i++];
        if (tok.family.empty())
            throw ParseError("expected a factor name", orig_pos(i));
        // Optional parameter: (k), _k, ^k, or bare digits.
        if (i < text.size() && (text[i] == '(' || text[i] == '_' || text[i] == '^' ||
                                std::isdigit(static_cast<unsigned char>(text[i])))) {
            bool paren = text[i] == '(';
            if (text[i] == '(' || text[i] == '_' || text[i] == '^') ++i;
            std::size_t digit_start = i;
            long value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > 1000000) throw ParseError("factor parameter out of range", orig_pos(digit_start));
                ++i;
            }
            if (i == digit_start) throw ParseError("expected a number", orig_pos(i));
            if (paren) {
                if (i >= text.size() || text[i] != ')')
                    throw ParseError("expected ')'", orig_pos(i));
                ++i;
            }
            tok.number = value;
        }
        tokens.push_back(tok);
        if (i < text.size()) {
            if (text[i] != 'X') throw ParseError("expected 'x' between factors", orig_pos(i));
            ++i;
            if (i >= text.size()) throw ParseError("trailing 'x'", orig_pos(i - 1));
        }
    }

    GroupSpec g;
    for (const auto& tok : tokens) {
        const std::string& fam = tok.family;
        const long k = tok.number;
        auto need = [&](long lo) {
            if (k < lo)
                throw ParseError("factor " + fam + " requires a parameter >= " + std::to_string(lo),
                                 tok.pos);
        };
        CartanFactor f;
        if (fam == "U" || fam == "PU") {
            need(1);
            f = {FactorKind::U, static_cast<int>(k), "U(" + std::to_string(k) + ")"};
        } else if (fam == "SU" || fam == "PSU") {
            need(1);
            f = {FactorKind::SU, static_cast<int>(k), "SU(" + std::to_string(k) + ")"};
        } else if (fam == "A") {
            need(1);
            f = {FactorKind::SU, static_cast<int>(k + 1), "SU(" + std::to_string(k + 1) + ")"};
        } else if (fam == "SP") {
            need(1);
            f = {FactorKind::BC, static_cast<int>(k), "Sp(" + std::to_string(k) + ")"};
        } else if (fam == "B") {
            need(2);
            f = {FactorKind::BC, static_cast<int>(k), "SO(" + std::to_string(2 * k + 1) + ")"};
        } else if (fam == "C") {
            need(2);
            f = {FactorKind::BC, static_cast<int>(k), "Sp(" + std::to_string(k) + ")"};
        } else if (fam == "D") {
            need(3);
            f = {FactorKind::D, static_cast<int>(k), "SO(" + std::to_string(2 * k) + ")"};
        } else if (fam == "SO" || fam == "SPIN") {
            need(2);
            if (k == 2) {
                f = {FactorKind::Torus, 1, "T^1"};
            } else if (k % 2 == 1) {
                f = {FactorKind::BC, static_cast<int>(k / 2), "SO(" + std::to_string(k) + ")"};
            } else {
                f = {FactorKind::D, static_cast<int>(k / 2), "SO(" + std::to_string(k) + ")"};
            }
        } else if (fam == "T") {
            need(1);
            f = {FactorKind::Torus, static_cast<int>(k), "T^" + std::to_string(k)};
        } else if (fam == "G") {
            if (k != 2) throw ParseError("unknown factor " + fam + std::to_string(k), tok.pos);
            f = {FactorKind::G2, 0, "G2"};
        } else if (fam == "F") {
            if (k != 4) throw ParseError("unknown factor " + fam + std::to_string(k), tok.pos);
            f = {FactorKind::F4, 0, "F4"};
        } else if (fam == "E") {
            if (k < 6 || k > 8) throw ParseError("unknown factor " + fam + std::to_string(k), tok.pos);
            f = {k == 6 ? FactorKind::E6 : k == 7 ? FactorKind::E7 : FactorKind::E8, 0,
                 "E" + std::to_string(k)};
        } else {
            throw ParseError("unknown factor '" + fam + "'", tok.pos);
        }
        g.factors.push_back(std::move(f));
    }
    g.canonical_name = detail::rebuild_name(g.factors);
    return g;
}

}  // namespace weylrep
