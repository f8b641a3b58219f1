#pragma once

#include <utility>
#include <vector>

#include "weylrep/errors.hpp"
#include "weylrep/poly.hpp"

namespace weylrep {

/// Bigraded polynomial: a sum of s-polynomials weighted by powers of a
/// second bookkeeping variable t.  Entries are kept sorted by strictly
/// increasing t-degree with zero parts dropped.
class BiPoly {
  public:
    explicit BiPoly(Var svar) : svar_(svar) {}

    Var svar() const { return svar_; }

    const std::vector<std::pair<int, UniPoly>>& parts() const { return parts_; }

    bool is_zero() const { return parts_.empty(); }

    void add_part(int t_degree, const UniPoly& p) {
        require_same_var(svar_, p.var(), "bipoly part");
        if (p.is_zero()) return;
        auto it = parts_.begin();
        while (it != parts_.end() && it->first < t_degree) ++it;
        if (it != parts_.end() && it->first == t_degree) {
            it->second += p;
            if (it->second.is_zero()) parts_.erase(it);
        } else {
            parts_.insert(it, {t_degree, p});
        }
    }

    UniPoly part(int t_degree) const {
        for (const auto& [d, p] : parts_)
            if (d == t_degree) return p;
        return UniPoly::zero(svar_);
    }

    BiPoly& operator+=(const BiPoly& o) {
        require_same_var(svar_, o.svar_, "bipoly add");
        for (const auto& [d, p] : o.parts_) add_part(d, p);
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }

    bool operator==(const BiPoly& o) const { return svar_ == o.svar_ && parts_ == o.parts_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

  private:
    Var svar_;
    std::vector<std::pair<int, UniPoly>> parts_;
};

/// Evaluation at t = 1: the exact sum of all s-parts.
inline UniPoly bipoly_collapse(const BiPoly& b) {
    UniPoly out(b.svar());
    for (const auto& [d, p] : b.parts()) out += p;
    return out;
}

}  // namespace weylrep
