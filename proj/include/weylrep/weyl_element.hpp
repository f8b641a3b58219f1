#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "weylrep/poly.hpp"
#include "weylrep/rational.hpp"

namespace weylrep {

/// A Weyl group element as an integer matrix acting on the (co)weight
/// lattice in a fixed integral basis.  Entries in the bases used here are
/// bounded by the largest mark of the root system, so 64-bit integers are
/// exact.
class WeylElement {
  public:
    explicit WeylElement(int rank)
        : rank_(rank), m_(static_cast<std::size_t>(rank) * rank, 0) {}

    static WeylElement identity(int rank) {
        WeylElement e(rank);
        for (int i = 0; i < rank; ++i) e.at(i, i) = 1;
        return e;
    }

    int rank() const { return rank_; }

    std::int64_t& at(int i, int j) { return m_[static_cast<std::size_t>(i) * rank_ + j]; }
    std::int64_t at(int i, int j) const { return m_[static_cast<std::size_t>(i) * rank_ + j]; }

    const std::vector<std::int64_t>& entries() const { return m_; }

    bool operator==(const WeylElement& o) const { return rank_ == o.rank_ && m_ == o.m_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        assert(a.rank_ == b.rank_);
        const int r = a.rank_;
        WeylElement c(r);
        for (int i = 0; i < r; ++i) {
            for (int k = 0; k < r; ++k) {
                const std::int64_t aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < r; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        }
        return c;
    }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
        assert(static_cast<int>(v.size()) == rank_);
        std::vector<std::int64_t> out(v.size(), 0);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    /// det(xI - w) by the Faddeev-LeVerrier recurrence; all divisions are
    /// exact.  Returns monic coefficients c[0..r] ascending (c[r] = 1).
    std::vector<std::int64_t> char_poly_coeffs() const {
        const int r = rank_;
        std::vector<std::int64_t> c(static_cast<std::size_t>(r) + 1, 0);
        c[r] = 1;
        WeylElement m = identity(r);
        for (int k = 1; k <= r; ++k) {
            WeylElement am = (*this) * m;
            std::int64_t tr = 0;
            for (int i = 0; i < r; ++i) tr += am.at(i, i);
            assert(tr % k == 0);
            c[r - k] = -tr / k;
            if (k < r) {
                for (int i = 0; i < r; ++i) am.at(i, i) += c[r - k];
                m = std::move(am);
            }
        }
        return c;
    }

    UniPoly char_poly() const {
        auto c = char_poly_coeffs();
        std::vector<BigRational> coeffs(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = c[i];
        return UniPoly(Var::x, std::move(coeffs));
    }

  private:
    int rank_;
    std::vector<std::int64_t> m_;
};

}  // namespace weylrep
