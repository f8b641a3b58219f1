#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "weylrep/errors.hpp"
#include "weylrep/generators.hpp"
#include "weylrep/group_spec.hpp"
#include "weylrep/poly.hpp"
#include "weylrep/rational.hpp"
#include "weylrep/weyl_element.hpp"

namespace weylrep {

/// One characteristic-polynomial bucket of the Weyl group: all elements w
/// sharing det(xI - w).  Sufficient for every class-function sum evaluated
/// here, since those depend on w only through det(1+sw) and det(1-q^2 w).
struct ClassRecord {
    UniPoly char_poly;           // det(xI - w), monic, variable x
    BigInt size;                 // number of elements in the bucket
    UniPoly det_one_plus_sw;     // det(I + s w), variable s, constant term 1
    UniPoly det_one_minus_q2w;   // det(I - q^2 w), variable q, constant term 1

    bool operator==(const ClassRecord& o) const {
        return char_poly == o.char_poly && size == o.size &&
               det_one_plus_sw == o.det_one_plus_sw &&
               det_one_minus_q2w == o.det_one_minus_q2w;
    }
};

struct ClassTable {
    GroupSpec group;
    std::vector<ClassRecord> records;
    BigInt weyl_order;
};

namespace detail {

// det(I + s w) from char(x) = det(xI - w):  [s^i] = (-1)^i * c_{r-i}.
inline UniPoly det_one_plus_from_char(const std::vector<BigRational>& c) {
    const std::size_t r = c.size() - 1;
    std::vector<BigRational> out(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        out[i] = c[r - i];
        if (i % 2 == 1) out[i] = -out[i];
    }
    return UniPoly(Var::s, std::move(out));
}

// det(I - q^2 w) = q^{2r} char(1/q^2):  [q^{2i}] = c_{r-i}, odd powers zero.
inline UniPoly det_one_minus_q2_from_char(const std::vector<BigRational>& c) {
    const std::size_t r = c.size() - 1;
    std::vector<BigRational> out(2 * r + 1, BigRational(0));
    for (std::size_t i = 0; i <= r; ++i) out[2 * i] = c[r - i];
    return UniPoly(Var::q, std::move(out));
}

inline ClassRecord make_record(UniPoly char_poly, BigInt size) {
    const std::vector<BigRational> c = char_poly.coeffs().empty()
                                           ? std::vector<BigRational>{BigRational(1)}
                                           : char_poly.coeffs();
    UniPoly det_s = det_one_plus_from_char(c);
    UniPoly det_q = det_one_minus_q2_from_char(c);
    return ClassRecord{std::move(char_poly), std::move(size), std::move(det_s), std::move(det_q)};
}

// Deterministic record order: by degree, then coefficient sequence from the
// constant term up.
inline bool char_poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

inline void sort_records(std::vector<ClassRecord>& records) {
    std::sort(records.begin(), records.end(), [](const ClassRecord& a, const ClassRecord& b) {
        return char_poly_less(a.char_poly, b.char_poly);
    });
}

// Merge buckets with equal characteristic polynomial and sort canonically.
inline std::vector<ClassRecord> merge_records(std::vector<ClassRecord> records) {
    std::map<std::vector<BigRational>, ClassRecord> merged;
    for (auto& rec : records) {
        auto key = rec.char_poly.coeffs();
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(std::move(key), std::move(rec));
        } else {
            it->second.size += rec.size;
        }
    }
    std::vector<ClassRecord> out;
    out.reserve(merged.size());
    for (auto& [key, rec] : merged) out.push_back(std::move(rec));
    sort_records(out);
    return out;
}

constexpr int kMaxActiveRank = 24;

struct OrbitKey {
    std::array<std::int8_t, kMaxActiveRank> v{};
    bool operator==(const OrbitKey&) const = default;
};

struct OrbitKeyHash {
    std::size_t operator()(const OrbitKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto b : k.v) {
            h ^= static_cast<std::uint8_t>(b);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

/// Default enumeration cap, overridable via the WEYL_ENUM_CAP environment
/// variable.  Chosen to admit E7 and refuse E8.
inline unsigned long long default_enum_cap() {
    if (const char* env = std::getenv("WEYL_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && cap > 0) return cap;
        throw UsageError(std::string("invalid WEYL_ENUM_CAP value '") + env + "'");
    }
    return 5'000'000ull;
}

/// Exhaustive closure of the reflection generators, deduplicated by the
/// image of a regular vector (a faithful invariant), bucketed by
/// characteristic polynomial.  Deterministic output order.
inline ClassTable enumerate_class_table(const GroupSpec& g, unsigned long long cap) {
    const BigInt order = g.weyl_order();
    if (order > cap) throw CapExceeded(order.str(), cap);

    const auto gens_full = reflection_generators(g);
    const auto reg_full = regular_vector(g);
    const int full_rank = g.rank();

    // Coordinates untouched by every generator contribute a fixed (x-1)
    // factor per coordinate and are excluded from the search.
    std::vector<int> active;
    for (int i = 0; i < full_rank; ++i) {
        bool is_static = true;
        for (const auto& w : gens_full) {
            for (int j = 0; j < full_rank && is_static; ++j) {
                if (w.at(i, j) != (i == j ? 1 : 0)) is_static = false;
                if (w.at(j, i) != (i == j ? 1 : 0)) is_static = false;
            }
            if (!is_static) break;
        }
        if (!is_static) active.push_back(i);
    }
    const int ar = static_cast<int>(active.size());
    const int static_rank = full_rank - ar;
    if (ar > detail::kMaxActiveRank)
        throw ComputeError("enumeration supports at most rank " +
                           std::to_string(detail::kMaxActiveRank) + " of non-trivial Weyl action");

    std::vector<WeylElement> gens;
    gens.reserve(gens_full.size());
    for (const auto& w : gens_full) {
        WeylElement sub(ar);
        for (int i = 0; i < ar; ++i)
            for (int j = 0; j < ar; ++j) sub.at(i, j) = w.at(active[i], active[j]);
        gens.push_back(std::move(sub));
    }
    std::vector<std::int64_t> reg(ar);
    for (int i = 0; i < ar; ++i) reg[i] = reg_full[active[i]];

    auto key_of = [&](const WeylElement& w) {
        detail::OrbitKey key;
        auto img = w.apply(reg);
        for (int i = 0; i < ar; ++i) {
            assert(img[i] >= -128 && img[i] <= 127);
            key.v[i] = static_cast<std::int8_t>(img[i]);
        }
        return key;
    };

    std::unordered_set<detail::OrbitKey, detail::OrbitKeyHash> seen;
    if (order <= 100'000'000) seen.reserve(static_cast<std::size_t>(order) * 2);

    std::map<std::vector<std::int64_t>, std::uint64_t> buckets;
    std::vector<WeylElement> frontier;
    std::uint64_t total = 0;

    WeylElement id = WeylElement::identity(ar);
    seen.insert(key_of(id));
    frontier.push_back(std::move(id));

    std::vector<WeylElement> next;
    while (!frontier.empty()) {
        next.clear();
        for (const auto& w : frontier) {
            ++total;
            buckets[w.char_poly_coeffs()] += 1;
            for (const auto& s : gens) {
                WeylElement child = w * s;
                if (seen.insert(key_of(child)).second) next.push_back(std::move(child));
            }
        }
        frontier.swap(next);
    }

    if (BigInt(total) != order)
        throw ComputeError("enumeration closed on " + std::to_string(total) +
                           " elements, expected |W| = " + order.str());

    ClassTable table;
    table.group = g;
    table.weyl_order = order;
    const UniPoly static_factor =
        poly_pow(UniPoly(Var::x, {BigRational(-1), BigRational(1)}), static_cast<unsigned>(static_rank));
    for (const auto& [coeffs, count] : buckets) {
        std::vector<BigRational> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
        UniPoly cp = UniPoly(Var::x, std::move(c)) * static_factor;
        table.records.push_back(detail::make_record(std::move(cp), BigInt(count)));
    }
    table.records = detail::merge_records(std::move(table.records));
    return table;
}

namespace detail {

inline void partitions_of(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
}

// Centralizer order of a permutation with cycle type lambda in Sigma_k.
inline BigInt sym_centralizer(const std::vector<int>& lambda) {
    std::map<int, int> mult;
    for (int part : lambda) mult[part] += 1;
    BigInt z = 1;
    for (const auto& [part, m] : mult) {
        for (int i = 1; i <= m; ++i) z *= BigInt(part) * i;
    }
    return z;
}

// x^len - 1 (positive cycle) or x^len + 1 (negative cycle).
inline UniPoly cycle_poly(int len, bool negative) {
    UniPoly p = UniPoly::monomial(Var::x, len);
    p += UniPoly::constant(Var::x, negative ? 1 : -1);
    return p;
}

// Buckets for one classical factor; sizes sum to the factor's Weyl order.
inline std::vector<ClassRecord> factor_records(const CartanFactor& f) {
    std::vector<ClassRecord> recs;
    switch (f.kind) {
        case FactorKind::Torus: {
            UniPoly cp = poly_pow(cycle_poly(1, false), static_cast<unsigned>(f.param));
            recs.push_back(make_record(std::move(cp), 1));
            break;
        }
        case FactorKind::U:
        case FactorKind::SU: {
            const int k = f.param;
            const BigInt kfact = factorial(static_cast<unsigned>(k));
            std::vector<std::vector<int>> parts;
            partitions_of(k, parts);
            for (const auto& lambda : parts) {
                UniPoly cp = UniPoly::one(Var::x);
                for (int part : lambda) cp = cp * cycle_poly(part, false);
                if (f.kind == FactorKind::SU) {
                    // reflection representation: remove one (x-1) factor
                    std::vector<BigRational> q(cp.coeffs().size() - 1);
                    BigRational carry(0);
                    for (std::size_t i = cp.coeffs().size(); i-- > 1;) {
                        carry = cp.coeffs()[i] + carry;
                        q[i - 1] = carry;
                    }
                    cp = UniPoly(Var::x, std::move(q));
                }
                recs.push_back(make_record(std::move(cp), kfact / sym_centralizer(lambda)));
            }
            break;
        }
        case FactorKind::BC:
        case FactorKind::D: {
            const int m = f.param;
            const BigInt hyper_order = (BigInt(1) << m) * factorial(static_cast<unsigned>(m));
            auto parts_of = [&](int n) {
                std::vector<std::vector<int>> out;
                partitions_of(n, out);
                return out;
            };
            for (int neg_total = 0; neg_total <= m; ++neg_total) {
                auto neg_parts = parts_of(neg_total);
                auto pos_parts = parts_of(m - neg_total);
                for (const auto& ln : neg_parts) {
                    if (f.kind == FactorKind::D && ln.size() % 2 != 0) continue;
                    for (const auto& lp : pos_parts) {
                        // centralizer in the hyperoctahedral group:
                        // each cycle of length j contributes 2j, plus
                        // multiplicity factorials per sign and length
                        BigInt z = 1;
                        std::map<int, int> mp, mn;
                        for (int part : lp) mp[part] += 1;
                        for (int part : ln) mn[part] += 1;
                        for (const auto& [part, mult] : mp)
                            for (int i = 1; i <= mult; ++i) z *= BigInt(2) * part * i;
                        for (const auto& [part, mult] : mn)
                            for (int i = 1; i <= mult; ++i) z *= BigInt(2) * part * i;
                        UniPoly cp = UniPoly::one(Var::x);
                        for (int part : lp) cp = cp * cycle_poly(part, false);
                        for (int part : ln) cp = cp * cycle_poly(part, true);
                        recs.push_back(make_record(std::move(cp), hyper_order / z));
                    }
                }
            }
            break;
        }
        default:
            throw UnsupportedFactor("combinatorial class table not available for factor " +
                                    f.display);
    }
    return recs;
}

}  // namespace detail

/// Class table for products of classical factors, from (signed) cycle-type
/// combinatorics -- no enumeration.  Identical records to the enumerated
/// table.
inline ClassTable combinatorial_class_table(const GroupSpec& g) {
    std::vector<ClassRecord> combined;
    combined.push_back(detail::make_record(UniPoly::one(Var::x), 1));  // empty product
    for (const auto& f : g.factors) {
        auto fr = detail::factor_records(f);
        std::vector<ClassRecord> next;
        next.reserve(combined.size() * fr.size());
        for (const auto& a : combined) {
            for (const auto& b : fr) {
                next.push_back(detail::make_record(a.char_poly * b.char_poly, a.size * b.size));
            }
        }
        combined = detail::merge_records(std::move(next));
    }
    ClassTable table;
    table.group = g;
    table.weyl_order = g.weyl_order();
    table.records = std::move(combined);
    return table;
}

/// Preferred construction: combinatorial for classical groups, enumeration
/// otherwise.
inline ClassTable class_table_for(const GroupSpec& g, unsigned long long cap) {
    if (g.all_classical()) return combinatorial_class_table(g);
    return enumerate_class_table(g, cap);
}

inline ClassTable class_table_for(const GroupSpec& g) {
    return class_table_for(g, default_enum_cap());
}

}  // namespace weylrep
