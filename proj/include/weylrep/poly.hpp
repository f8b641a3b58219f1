#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weylrep/errors.hpp"
#include "weylrep/rational.hpp"

namespace weylrep {

// Formal variable tag.  Carried on every polynomial and series value and
// checked at operation boundaries, so an s-polynomial can never silently mix
// with a q-series.
enum class Var { s, q, x };

inline char var_name(Var v) {
    switch (v) {
        case Var::s: return 's';
        case Var::q: return 'q';
        case Var::x: return 'x';
    }
    return '?';
}

inline void require_same_var(Var a, Var b, const char* op) {
    if (a != b)
        throw VariableMismatch(std::string(op) + ": variable mismatch (" + var_name(a) +
                               " vs " + var_name(b) + ")");
}

/// Dense univariate polynomial over BigRational, kept in canonical form:
/// no trailing zero coefficients, the zero polynomial has an empty list.
class UniPoly {
  public:
    explicit UniPoly(Var v) : var_(v) {}

    UniPoly(Var v, std::vector<BigRational> coeffs) : var_(v), coeffs_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(Var v) { return UniPoly(v); }

    static UniPoly constant(Var v, BigRational c) {
        UniPoly p(v);
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static UniPoly one(Var v) { return constant(v, 1); }

    static UniPoly monomial(Var v, int degree, BigRational c = 1) {
        UniPoly p(v);
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigRational(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as -1 (stand-in for -inf).
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    const BigRational& coeff(std::size_t i) const {
        static const BigRational kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    /// Same coefficients under a different variable tag.  Deliberate pivot
    /// point between the s- and q-worlds; never implicit.
    UniPoly with_variable(Var v) const {
        UniPoly p(v);
        p.coeffs_ = coeffs_;
        return p;
    }

    bool operator==(const UniPoly& o) const { return var_ == o.var_ && coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly p(var_);
        p.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) p.coeffs_.push_back(-c);
        return p;
    }

    UniPoly& operator+=(const UniPoly& o) {
        require_same_var(var_, o.var_, "poly add");
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        require_same_var(var_, o.var_, "poly sub");
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const BigRational& c) {
        if (c == 0) {
            coeffs_.clear();
        } else {
            for (auto& a : coeffs_) a *= c;
        }
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
    friend UniPoly operator*(const BigRational& c, UniPoly a) { return a *= c; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        require_same_var(a.var_, b.var_, "poly_mul");
        if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
        UniPoly out(a.var_);
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        out.trim();
        return out;
    }

    /// Exact Horner evaluation.
    BigRational eval(const BigRational& x) const {
        BigRational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    Var var_;
    std::vector<BigRational> coeffs_;
};

inline UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

/// a^n by repeated squaring; a^0 = 1 including for the zero polynomial.
inline UniPoly poly_pow(const UniPoly& a, unsigned n) {
    UniPoly result = UniPoly::one(a.var());
    UniPoly base = a;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

inline BigRational poly_eval(const UniPoly& a, const BigRational& x) { return a.eval(x); }

}  // namespace weylrep
