#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "weylrep/errors.hpp"
#include "weylrep/poly.hpp"
#include "weylrep/rational.hpp"

namespace weylrep {

/// Formal power series known modulo var^(order+1).  The coefficient list
/// always has exactly order+1 entries; trailing zeros are kept.  Arithmetic
/// between series of different orders truncates to the minimum order.
class TruncatedSeries {
  public:
    TruncatedSeries(Var v, int order) : var_(v), coeffs_(static_cast<std::size_t>(order) + 1) {}

    TruncatedSeries(Var v, int order, std::vector<BigRational> coeffs)
        : var_(v), coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(order) + 1, BigRational(0));
    }

    static TruncatedSeries from_poly(const UniPoly& p, int order) {
        TruncatedSeries s(p.var(), order);
        const std::size_t n = std::min(p.coeffs().size(), s.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] = p.coeffs()[i];
        return s;
    }

    Var var() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& coeff(std::size_t i) const { return coeffs_[i]; }

    bool operator==(const TruncatedSeries& o) const {
        return var_ == o.var_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries s(var_, std::min(new_order, order()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    TruncatedSeries& operator*=(const BigRational& c) {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& c) { return a *= c; }
    friend TruncatedSeries operator*(const BigRational& c, TruncatedSeries a) { return a *= c; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_var(a.var_, b.var_, "series add");
        TruncatedSeries out(a.var_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_var(a.var_, b.var_, "series sub");
        TruncatedSeries out(a.var_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_var(a.var_, b.var_, "series mul");
        TruncatedSeries out(a.var_, std::min(a.order(), b.order()));
        const std::size_t n = out.coeffs_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

  private:
    Var var_;
    std::vector<BigRational> coeffs_;
};

/// Multiplicative inverse modulo var^(order+1); requires a unit constant term.
inline TruncatedSeries series_inverse(const TruncatedSeries& a) {
    if (a.coeff(0) == 0)
        throw NotInvertible("series_inverse: constant term is zero");
    TruncatedSeries out(a.var(), a.order());
    std::vector<BigRational> b(a.coeffs().size());
    const BigRational inv0 = BigRational(1) / a.coeff(0);
    b[0] = inv0;
    for (std::size_t k = 1; k < b.size(); ++k) {
        BigRational acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (a.coeff(j) == 0) continue;
            acc += a.coeff(j) * b[k - j];
        }
        b[k] = -inv0 * acc;
    }
    return TruncatedSeries(a.var(), a.order(), std::move(b));
}

inline TruncatedSeries series_pow(const TruncatedSeries& a, unsigned n) {
    TruncatedSeries result(a.var(), a.order());
    result = TruncatedSeries::from_poly(UniPoly::one(a.var()), a.order());
    TruncatedSeries base = a;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

}  // namespace weylrep
