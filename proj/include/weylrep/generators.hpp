#pragma once

#include <cstdint>
#include <vector>

#include "weylrep/group_spec.hpp"
#include "weylrep/weyl_element.hpp"

namespace weylrep {
namespace detail {

// Cartan matrices in the convention  alpha_j = sum_i A[i][j] * omega_i,
// so the simple reflection s_i acts on fundamental-weight coordinates by
// (s_i x)_k = x_k - A[k][i] * x_i.
inline std::vector<std::vector<int>> cartan_matrix(FactorKind kind, int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (kind) {
        case FactorKind::SU:  // type A chain on n = k-1 nodes
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case FactorKind::G2:
            a[0][1] = -1;
            a[1][0] = -3;
            break;
        case FactorKind::F4:
            link(0, 1);
            link(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case FactorKind::E6:
            link(0, 2); link(2, 3); link(3, 4); link(4, 5); link(1, 3);
            break;
        case FactorKind::E7:
            link(0, 2); link(2, 3); link(3, 4); link(4, 5); link(5, 6); link(1, 3);
            break;
        case FactorKind::E8:
            link(0, 2); link(2, 3); link(3, 4); link(4, 5); link(5, 6); link(6, 7); link(1, 3);
            break;
        default:
            break;
    }
    return a;
}

// Writes generators for one factor into the rank-r block starting at
// `offset` of fresh identity matrices, appending to `out`.
inline void factor_generators(const CartanFactor& f, int total_rank, int offset,
                              std::vector<WeylElement>& out) {
    const int r = f.rank();
    auto fresh = [&]() { return WeylElement::identity(total_rank); };
    auto swap_cols = [&](WeylElement& w, int i, int j) {
        // permutation sending e_i <-> e_j
        w.at(offset + i, offset + i) = 0;
        w.at(offset + j, offset + j) = 0;
        w.at(offset + i, offset + j) = 1;
        w.at(offset + j, offset + i) = 1;
    };
    switch (f.kind) {
        case FactorKind::U:  // adjacent transpositions on a rank-k block
            for (int i = 0; i + 1 < f.param; ++i) {
                WeylElement w = fresh();
                swap_cols(w, i, i + 1);
                out.push_back(std::move(w));
            }
            break;
        case FactorKind::BC:  // signed permutations: transpositions + last sign flip
            for (int i = 0; i + 1 < r; ++i) {
                WeylElement w = fresh();
                swap_cols(w, i, i + 1);
                out.push_back(std::move(w));
            }
            {
                WeylElement w = fresh();
                w.at(offset + r - 1, offset + r - 1) = -1;
                out.push_back(std::move(w));
            }
            break;
        case FactorKind::D:  // even signed permutations
            for (int i = 0; i + 1 < r; ++i) {
                WeylElement w = fresh();
                swap_cols(w, i, i + 1);
                out.push_back(std::move(w));
            }
            {
                // e_{r-1} -> -e_r, e_r -> -e_{r-1}
                WeylElement w = fresh();
                w.at(offset + r - 2, offset + r - 2) = 0;
                w.at(offset + r - 1, offset + r - 1) = 0;
                w.at(offset + r - 2, offset + r - 1) = -1;
                w.at(offset + r - 1, offset + r - 2) = -1;
                out.push_back(std::move(w));
            }
            break;
        case FactorKind::Torus:
            break;
        default: {  // SU and the exceptional types: weight-basis reflections
            auto a = cartan_matrix(f.kind, r);
            for (int i = 0; i < r; ++i) {
                WeylElement w = fresh();
                for (int k = 0; k < r; ++k) w.at(offset + k, offset + i) -= a[k][i];
                out.push_back(std::move(w));
            }
            break;
        }
    }
}

}  // namespace detail

/// Simple-reflection matrices for the whole group, block-diagonal across
/// factors; torus blocks contribute no generators.
inline std::vector<WeylElement> reflection_generators(const GroupSpec& g) {
    std::vector<WeylElement> out;
    const int total = g.rank();
    int offset = 0;
    for (const auto& f : g.factors) {
        detail::factor_generators(f, total, offset, out);
        offset += f.rank();
    }
    return out;
}

/// A vector with trivial stabilizer in W, so that w -> w*v is injective.
/// Permutation and signed-permutation blocks get distinct positive entries;
/// weight-basis blocks get the all-ones (strictly dominant) vector.
inline std::vector<std::int64_t> regular_vector(const GroupSpec& g) {
    std::vector<std::int64_t> v;
    v.reserve(static_cast<std::size_t>(g.rank()));
    for (const auto& f : g.factors) {
        const int r = f.rank();
        switch (f.kind) {
            case FactorKind::U:
            case FactorKind::BC:
            case FactorKind::D:
                for (int i = 0; i < r; ++i) v.push_back(i + 1);
                break;
            default:
                for (int i = 0; i < r; ++i) v.push_back(1);
                break;
        }
    }
    return v;
}

}  // namespace weylrep
