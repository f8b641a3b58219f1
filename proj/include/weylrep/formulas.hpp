#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weylrep/bipoly.hpp"
#include "weylrep/class_table.hpp"
#include "weylrep/errors.hpp"
#include "weylrep/group_spec.hpp"
#include "weylrep/poly.hpp"
#include "weylrep/rational.hpp"
#include "weylrep/truncated_series.hpp"

namespace weylrep {

/// Poincare series of the identity component of the space of commuting
/// n-tuples modulo conjugation:  (1/|W|) * sum over buckets of
/// size * det(1+sw)^n.  Exact; coefficients are Betti numbers.
inline UniPoly rep_series(const ClassTable& table, unsigned n) {
    UniPoly acc(Var::s);
    for (const auto& rec : table.records)
        acc += poly_pow(rec.det_one_plus_sw, n) * BigRational(rec.size);
    return acc * (BigRational(1) / BigRational(table.weyl_order));
}

/// Series of the W-quotient of the k-fold smash power of the torus:
/// (1/|W|) * sum of size * (det(1+sw)-1)^k.  Lowest degree >= k.
inline UniPoly smash_series(const ClassTable& table, unsigned k) {
    UniPoly acc(Var::s);
    const UniPoly one = UniPoly::one(Var::s);
    for (const auto& rec : table.records)
        acc += poly_pow(rec.det_one_plus_sw - one, k) * BigRational(rec.size);
    return acc * (BigRational(1) / BigRational(table.weyl_order));
}

/// Bigraded refinement of rep_series: the t^k part is C(n,k) times the
/// k-th smash series.  Collapsing at t = 1 recovers rep_series exactly.
inline BiPoly rep_hilbert_series(const ClassTable& table, unsigned n) {
    BiPoly out(Var::s);
    for (unsigned k = 0; k <= n; ++k) {
        UniPoly part = smash_series(table, k) * BigRational(binomial(n, k));
        out.add_part(static_cast<int>(k), part);
    }
    return out;
}

/// Bigraded series of the conjugation quotient of the commuting-words
/// monoid, truncated in s.  t_parts[k] is the k-th smash series truncated
/// to s_order; parts with k > s_order cannot contribute below the cut.
struct CommHilbertSeries {
    int s_order;
    std::vector<TruncatedSeries> t_parts;  // index = t-degree

    TruncatedSeries collapse() const {
        TruncatedSeries acc(Var::s, s_order);
        for (const auto& p : t_parts) acc = acc + p;
        return acc;
    }
};

inline CommHilbertSeries comm_hilbert_series(const ClassTable& table, int s_order) {
    if (s_order < 1) throw UsageError("comm series truncation order must be >= 1");
    CommHilbertSeries out;
    out.s_order = s_order;
    out.t_parts.reserve(static_cast<std::size_t>(s_order) + 1);
    for (int k = 0; k <= s_order; ++k)
        out.t_parts.push_back(
            TruncatedSeries::from_poly(smash_series(table, static_cast<unsigned>(k)), s_order));
    return out;
}

/// Ordinary (t = 1) series of the commuting-words quotient.
inline TruncatedSeries comm_series(const ClassTable& table, int s_order) {
    return comm_hilbert_series(table, s_order).collapse();
}

/// Poincare polynomial of the identity component of the space of commuting
/// n-tuples (not modulo conjugation), via the characteristic degrees:
///
///   |W|^-1 * prod (1 - q^{2 d_i}) * sum_w det(1+qw)^n / det(1-q^2 w)
///
/// evaluated in truncated-series arithmetic at order n * dim G, then
/// certified to be a polynomial of degree at most dim(G/T) + n * rank.
inline UniPoly hom_series(const ClassTable& table, const DegreeTable& deg, unsigned n) {
    if (n < 1) throw UsageError("hom series requires n >= 1");
    const int dim_g = deg.group_dimension();
    const int rank = table.group.rank();
    const int window = static_cast<int>(n) * dim_g;
    const int degree_bound = std::min((dim_g - rank) + static_cast<int>(n) * rank, window);

    TruncatedSeries acc(Var::q, window);
    for (const auto& rec : table.records) {
        TruncatedSeries num = series_pow(
            TruncatedSeries::from_poly(rec.det_one_plus_sw.with_variable(Var::q), window), n);
        TruncatedSeries den =
            series_inverse(TruncatedSeries::from_poly(rec.det_one_minus_q2w, window));
        acc = acc + num * den * BigRational(rec.size);
    }

    UniPoly prefactor = UniPoly::one(Var::q);
    for (int d : deg.degrees) {
        UniPoly factor = UniPoly::one(Var::q) - UniPoly::monomial(Var::q, 2 * d);
        prefactor = prefactor * factor;
    }
    acc = acc * TruncatedSeries::from_poly(prefactor, window);
    acc = acc * (BigRational(1) / BigRational(table.weyl_order));

    for (int i = degree_bound + 1; i <= window; ++i) {
        if (acc.coeff(static_cast<std::size_t>(i)) != 0)
            throw TruncationInsufficient(
                "hom series has a nonzero coefficient at degree " + std::to_string(i) +
                " beyond the expected bound " + std::to_string(degree_bound));
    }

    std::vector<BigRational> coeffs(acc.coeffs().begin(),
                                    acc.coeffs().begin() + degree_bound + 1);
    return UniPoly(Var::q, std::move(coeffs));
}

/// rep_series evaluated at s = -1; always an integer.
inline BigRational euler_characteristic(const ClassTable& table, unsigned n) {
    return rep_series(table, n).eval(BigRational(-1));
}

enum class FormulaId { rep, rep_hilbert, smash, comm, comm_hilbert, xq, hom, euler };

inline std::string formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::rep: return "rep";
        case FormulaId::rep_hilbert: return "rep_hilbert";
        case FormulaId::smash: return "smash";
        case FormulaId::comm: return "comm";
        case FormulaId::comm_hilbert: return "comm_hilbert";
        case FormulaId::xq: return "xq";
        case FormulaId::hom: return "hom";
        case FormulaId::euler: return "euler";
    }
    return "?";
}

/// A computed series plus the provenance needed to emit it.
struct SeriesResult {
    FormulaId formula = FormulaId::rep;
    GroupSpec group;
    BigInt weyl_order;
    long parameter = 0;  // n, k, or truncation order depending on the formula
    std::variant<std::monostate, UniPoly, BiPoly, TruncatedSeries, CommHilbertSeries, BigRational>
        value;
};

}  // namespace weylrep
