#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "weylrep/class_table.hpp"
#include "weylrep/errors.hpp"
#include "weylrep/formulas.hpp"
#include "weylrep/generators.hpp"
#include "weylrep/group_spec.hpp"
#include "weylrep/poly.hpp"
#include "weylrep/rational.hpp"
#include "weylrep/weyl_element.hpp"

namespace weylrep {
namespace oracle {

// Reference-path machinery, deliberately disjoint from the fast path: its
// own matrix product, an ordered-set closure over packed matrices instead
// of the hashed orbit closure, and a cofactor-expansion determinant instead
// of the characteristic-polynomial route.

namespace detail {

constexpr int kMaxRank = 16;

using Mat = std::vector<std::int64_t>;  // row-major, rank*rank entries
using PackedMat = std::array<std::int8_t, kMaxRank * kMaxRank>;

inline Mat mat_mul(const Mat& a, const Mat& b, int r) {
    Mat c(static_cast<std::size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            const std::int64_t aik = a[static_cast<std::size_t>(i) * r + k];
            if (aik == 0) continue;
            for (int j = 0; j < r; ++j)
                c[static_cast<std::size_t>(i) * r + j] += aik * b[static_cast<std::size_t>(k) * r + j];
        }
    return c;
}

inline PackedMat pack(const Mat& m) {
    PackedMat p{};
    for (std::size_t i = 0; i < m.size(); ++i) {
        assert(m[i] >= -128 && m[i] <= 127);
        p[i] = static_cast<std::int8_t>(m[i]);
    }
    return p;
}

// Workspace for the expansion-by-minors determinant; reused across elements.
struct DetScratch {
    std::vector<std::int64_t> minors;
    std::vector<std::int64_t> det;
    std::vector<std::int64_t> power;
    std::vector<std::int64_t> next_power;
};

// det(I + s m) by expansion by minors over column subsets, exact in int64.
// Subset S holds the chosen columns for the leading popcount(S) rows.
// Writes the coefficient vector (degree <= r) into scratch.det.
inline void det_one_plus_s(const Mat& m, int r, DetScratch& scratch) {
    if (r == 0) {
        scratch.det.assign(1, 1);
        return;
    }
    if (r > kMaxRank)
        throw ComputeError("oracle determinant supports rank <= 16, got " + std::to_string(r));
    const std::size_t nsub = std::size_t{1} << r;
    const std::size_t width = static_cast<std::size_t>(r) + 1;
    scratch.minors.assign(nsub * width, 0);
    std::int64_t* minors = scratch.minors.data();
    minors[0] = 1;  // det of the empty matrix
    for (std::size_t s = 1; s < nsub; ++s) {
        const int row = __builtin_popcountll(s) - 1;
        std::int64_t* out = minors + s * width;
        int sign = (row % 2 == 0) ? 1 : -1;  // (-1)^(row+col_position)
        for (int j = 0; j < r; ++j) {
            if (!(s & (std::size_t{1} << j))) continue;
            const std::int64_t* sub = minors + (s ^ (std::size_t{1} << j)) * width;
            // entry (row, j) of I + s m is delta + s*m[row][j]
            const std::int64_t c1 = m[static_cast<std::size_t>(row) * r + j];
            if (row == j) {
                for (int d = 0; d <= row; ++d) {
                    const std::int64_t v = sub[d];
                    if (v == 0) continue;
                    out[d] += sign * v;
                    if (c1 != 0) out[d + 1] += sign * c1 * v;
                }
            } else if (c1 != 0) {
                for (int d = 0; d <= row; ++d) {
                    const std::int64_t v = sub[d];
                    if (v != 0) out[d + 1] += sign * c1 * v;
                }
            }
            sign = -sign;
        }
    }
    scratch.det.assign(minors + (nsub - 1) * width, minors + nsub * width);
}

}  // namespace detail

/// Closure of the generators as plain matrices, deduplicated through an
/// ordered set of packed matrices.
inline std::vector<detail::Mat> closure(const std::vector<WeylElement>& generators, int rank,
                                        unsigned long long cap) {
    if (rank > detail::kMaxRank)
        throw ComputeError("oracle closure supports rank <= 16, got " + std::to_string(rank));
    detail::Mat id(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i) id[static_cast<std::size_t>(i) * rank + i] = 1;
    std::set<detail::PackedMat> seen{detail::pack(id)};
    std::deque<detail::Mat> todo{id};
    std::vector<detail::Mat> out{id};
    std::vector<detail::Mat> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(g.entries());
    while (!todo.empty()) {
        detail::Mat cur = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : gens) {
            detail::Mat prod = detail::mat_mul(cur, g, rank);
            if (seen.insert(detail::pack(prod)).second) {
                if (seen.size() > cap) throw CapExceeded("> " + std::to_string(cap), cap);
                out.push_back(prod);
                todo.push_back(std::move(prod));
            }
        }
    }
    return out;
}

/// Element-by-element evaluation of (1/|W|) sum det(1+sw)^n for every
/// n = 0..n_max, with no bucketing and no class tables; the reference for
/// rep_series.  One closure and one determinant per element serve all n.
inline std::vector<UniPoly> brute_rep_series_upto(const std::vector<WeylElement>& generators,
                                                  int rank, unsigned n_max,
                                                  unsigned long long cap) {
    const auto elements = closure(generators, rank, cap);
    std::vector<std::vector<BigInt>> acc(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        acc[n].assign(static_cast<std::size_t>(rank) * n + 1, BigInt(0));

    detail::DetScratch scratch;
    for (const auto& m : elements) {
        detail::det_one_plus_s(m, rank, scratch);
        scratch.power.assign(1, 1);
        for (unsigned n = 0; n <= n_max; ++n) {
            for (std::size_t d = 0; d < scratch.power.size(); ++d)
                if (scratch.power[d] != 0) acc[n][d] += scratch.power[d];
            if (n == n_max) break;
            scratch.next_power.assign(scratch.power.size() + scratch.det.size() - 1, 0);
            for (std::size_t i = 0; i < scratch.power.size(); ++i) {
                const std::int64_t pi = scratch.power[i];
                if (pi == 0) continue;
                for (std::size_t j = 0; j < scratch.det.size(); ++j)
                    scratch.next_power[i + j] += pi * scratch.det[j];
            }
            scratch.power.swap(scratch.next_power);
        }
    }

    std::vector<UniPoly> out;
    out.reserve(n_max + 1);
    const BigInt order(elements.size());
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<BigRational> coeffs(acc[n].size());
        for (std::size_t d = 0; d < acc[n].size(); ++d) coeffs[d] = BigRational(acc[n][d], order);
        out.emplace_back(Var::s, std::move(coeffs));
    }
    return out;
}

inline UniPoly brute_rep_series(const std::vector<WeylElement>& generators, int rank, unsigned n,
                                unsigned long long cap) {
    return brute_rep_series_upto(generators, rank, n, cap).back();
}

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct CrossCheckReport {
    std::string group;
    unsigned n_max;
    unsigned k_max;
    std::vector<CheckItem> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Compares the fast paths against the reference path on one group:
/// table construction, rep series, the binomial recombination identity,
/// and the degree-product form of the hom series at n = 1.
inline CrossCheckReport cross_check(const GroupSpec& g, unsigned n_max, unsigned k_max,
                                    unsigned long long cap) {
    CrossCheckReport report;
    report.group = g.canonical_name;
    report.n_max = n_max;
    report.k_max = k_max;

    ClassTable table = class_table_for(g, cap);

    if (g.all_classical()) {
        ClassTable enumerated = enumerate_class_table(g, cap);
        bool same = enumerated.records.size() == table.records.size();
        for (std::size_t i = 0; same && i < table.records.size(); ++i)
            same = table.records[i] == enumerated.records[i];
        report.checks.push_back({"class_table_combinatorial_vs_enumerated", same,
                                 std::to_string(table.records.size()) + " records"});
    }

    const auto brute = brute_rep_series_upto(reflection_generators(g), g.rank(), n_max, cap);
    for (unsigned n = 0; n <= n_max; ++n) {
        UniPoly fast = rep_series(table, n);
        report.checks.push_back(
            {"rep_series_vs_brute_n" + std::to_string(n), fast == brute[n], ""});

        UniPoly recombined(Var::s);
        for (unsigned k = 0; k <= n; ++k)
            recombined += smash_series(table, k) * BigRational(binomial(n, k));
        report.checks.push_back(
            {"smash_recombination_n" + std::to_string(n), recombined == fast, ""});
    }

    CommHilbertSeries comm = comm_hilbert_series(table, static_cast<int>(k_max) + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        TruncatedSeries part = comm.t_parts[k];
        TruncatedSeries direct = TruncatedSeries::from_poly(smash_series(table, k), comm.s_order);
        report.checks.push_back(
            {"comm_t_part_equals_smash_k" + std::to_string(k), part == direct, ""});
    }

    DegreeTable deg = degrees(g);
    UniPoly hom1 = hom_series(table, deg, 1);
    UniPoly expected = UniPoly::one(Var::q);
    for (int d : deg.degrees) {
        UniPoly factor = UniPoly::one(Var::q) + UniPoly::monomial(Var::q, 2 * d - 1);
        expected = expected * factor;
    }
    report.checks.push_back({"hom_n1_equals_degree_product", hom1 == expected, ""});

    return report;
}

}  // namespace oracle
}  // namespace weylrep
