#include <catch2/catch.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylrep/class_table.hpp"
#include "weylrep/group_spec.hpp"

#include "test_support.hpp"

using namespace weylrep;
using test_support::upoly;

namespace {

constexpr unsigned long long kCap = 5'000'000ull;

std::vector<long long> sizes_of(const ClassTable& t) {
    std::vector<long long> out;
    for (const auto& rec : t.records) out.push_back(static_cast<long long>(rec.size));
    return out;
}

BigInt size_sum(const ClassTable& t) {
    BigInt s = 0;
    for (const auto& rec : t.records) s += rec.size;
    return s;
}

// multiset of (size, det(1+sw)) pairs, order-independent comparison
std::multiset<std::pair<std::string, std::vector<long long>>> det_multiset(const ClassTable& t) {
    std::multiset<std::pair<std::string, std::vector<long long>>> out;
    for (const auto& rec : t.records)
        out.insert({rec.size.str(), test_support::int_coeffs(rec.det_one_plus_sw)});
    return out;
}

void check_table_invariants(const ClassTable& t) {
    INFO("group " << t.group.canonical_name);
    CHECK(size_sum(t) == t.weyl_order);

    const int r = t.group.rank();
    const UniPoly identity_det = poly_pow(upoly(Var::s, {1, 1}), static_cast<unsigned>(r));
    int identity_buckets = 0;
    BigRational trace_sum = 0;
    for (const auto& rec : t.records) {
        if (rec.det_one_plus_sw == identity_det) {
            ++identity_buckets;
            CHECK(rec.size == 1);
        }
        CHECK(rec.det_one_plus_sw.coeff(0) == 1);
        CHECK(rec.det_one_plus_sw.degree() <= r);
        CHECK(rec.det_one_minus_q2w.coeff(0) == 1);
        CHECK(rec.char_poly.degree() == r);
        for (int i = 0; i <= rec.det_one_plus_sw.degree(); ++i) {
            const BigRational& c = rec.det_one_plus_sw.coeff(static_cast<std::size_t>(i));
            CHECK(is_integer(c));
            BigInt mag = numerator(c) < 0 ? BigInt(-numerator(c)) : numerator(c);
            CHECK(mag <= binomial(static_cast<unsigned>(r), static_cast<unsigned>(i)));
        }
        trace_sum += BigRational(rec.size) * rec.det_one_plus_sw.coeff(1);

        // det polynomials agree with the characteristic polynomial:
        //   det(1+sw) = (-s)^r char(-1/s),  det(1-q^2 w) = q^{2r} char(1/q^2)
        for (long long num : {1, 2, -3}) {
            const BigRational s0(num, 7);
            BigRational lhs = rec.det_one_plus_sw.eval(s0);
            BigRational pow = 1;
            for (int i = 0; i < r; ++i) pow *= -s0;
            BigRational rhs = pow * rec.char_poly.eval(BigRational(-1) / s0);
            CHECK(lhs == rhs);

            BigRational lhs2 = rec.det_one_minus_q2w.eval(s0);
            BigRational pow2 = 1;
            for (int i = 0; i < r; ++i) pow2 *= s0 * s0;
            BigRational rhs2 = pow2 * rec.char_poly.eval(BigRational(1) / (s0 * s0));
            CHECK(lhs2 == rhs2);
        }
    }
    CHECK(identity_buckets == 1);
    CHECK(trace_sum == BigRational(t.weyl_order) * t.group.central_torus_rank());
}

}  // namespace

TEST_CASE("enumerated U(3) table") {
    const ClassTable t = enumerate_class_table(parse_group("U(3)"), kCap);
    REQUIRE(t.records.size() == 3);
    auto sizes = sizes_of(t);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long long>{1, 2, 3});
    check_table_invariants(t);
}

TEST_CASE("enumerated U(4) table matches the known class data") {
    const ClassTable t = enumerate_class_table(parse_group("U(4)"), kCap);
    REQUIRE(t.records.size() == 5);
    CHECK(size_sum(t) == 24);

    std::multiset<std::pair<std::string, std::vector<long long>>> expected{
        {"1", {1, 4, 6, 4, 1}},    // identity: (1+s)^4
        {"6", {1, 2, 0, -2, -1}},  // transposition: (1-s^2)(1+s)^2
        {"8", {1, 1, 0, 1, 1}},    // 3-cycle: (1+s^3)(1+s)
        {"3", {1, 0, -2, 0, 1}},   // double transposition: (1-s^2)^2
        {"6", {1, 0, 0, 0, -1}},   // 4-cycle: 1-s^4
    };
    CHECK(det_multiset(t) == expected);
    check_table_invariants(t);
}

TEST_CASE("enumerated G2 table") {
    const ClassTable t = enumerate_class_table(parse_group("G2"), kCap);
    REQUIRE(t.records.size() == 5);
    CHECK(t.weyl_order == 12);

    std::multiset<std::pair<std::string, std::vector<long long>>> expected{
        {"1", {1, 2, 1}},   // (1+s)^2
        {"6", {1, 0, -1}},  // reflections: 1-s^2
        {"1", {1, -2, 1}},  // -id: (1-s)^2
        {"2", {1, 1, 1}},   // order-6 rotations
        {"2", {1, -1, 1}},  // order-3 rotations
    };
    CHECK(det_multiset(t) == expected);
    check_table_invariants(t);
}

TEST_CASE("combinatorial tables match enumeration") {
    for (const char* name :
         {"U(1)", "U(3)", "U(4)", "U(6)", "SU(2)", "SU(4)", "SU(7)", "Sp(1)", "Sp(2)", "Sp(3)",
          "SO(3)", "SO(5)", "SO(7)", "SO(13)", "SO(4)", "SO(6)", "SO(8)", "SO(12)", "T^2",
          "U(2)xSU(3)", "Sp(2)xSO(5)", "SO(8)xT^1", "SU(3)xSU(3)", "U(4)xSp(2)", "T^1xSO(6)"}) {
        INFO(name);
        const GroupSpec g = parse_group(name);
        const ClassTable fast = combinatorial_class_table(g);
        const ClassTable slow = enumerate_class_table(g, kCap);
        REQUIRE(fast.records.size() == slow.records.size());
        for (std::size_t i = 0; i < fast.records.size(); ++i) {
            CHECK(fast.records[i] == slow.records[i]);
        }
        CHECK(fast.weyl_order == slow.weyl_order);
        check_table_invariants(fast);
    }
}

TEST_CASE("combinatorial table sizes for Sp(2) and SO(8)") {
    const ClassTable sp2 = combinatorial_class_table(parse_group("Sp(2)"));
    CHECK(size_sum(sp2) == 8);
    const ClassTable so8 = combinatorial_class_table(parse_group("SO(8)"));
    CHECK(size_sum(so8) == 192);
}

TEST_CASE("combinatorial table refuses exceptional factors") {
    CHECK_THROWS_AS(combinatorial_class_table(parse_group("G2")), UnsupportedFactor);
    CHECK_THROWS_AS(combinatorial_class_table(parse_group("U(2)xF4")), UnsupportedFactor);
}

TEST_CASE("isogenous specs share the class data") {
    const ClassTable a = combinatorial_class_table(parse_group("U(2)"));
    const ClassTable b = combinatorial_class_table(parse_group("SU(2)xT^1"));
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i] == b.records[i]);
}

TEST_CASE("exceptional closures reproduce the known Weyl orders") {
    CHECK(size_sum(enumerate_class_table(parse_group("G2"), kCap)) == 12);
    CHECK(size_sum(enumerate_class_table(parse_group("F4"), kCap)) == 1152);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_class_table(parse_group("E8"), kCap), CapExceeded);
    CHECK_THROWS_AS(enumerate_class_table(parse_group("U(4)"), 10), CapExceeded);
    try {
        enumerate_class_table(parse_group("E8"), kCap);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.estimate == "696729600");
        CHECK(std::string(e.what()).find("WEYL_ENUM_CAP") != std::string::npos);
    }
}

TEST_CASE("WEYL_ENUM_CAP env override") {
    ::setenv("WEYL_ENUM_CAP", "100", 1);
    CHECK(default_enum_cap() == 100);
    ::setenv("WEYL_ENUM_CAP", "bogus", 1);
    CHECK_THROWS_AS(default_enum_cap(), UsageError);
    ::unsetenv("WEYL_ENUM_CAP");
    CHECK(default_enum_cap() == 5'000'000ull);
}

TEST_CASE("rank-0 and pure-torus tables") {
    GroupSpec empty;
    empty.canonical_name = "1";
    const ClassTable t = enumerate_class_table(empty, kCap);
    REQUIRE(t.records.size() == 1);
    CHECK(t.records[0].size == 1);
    CHECK(t.records[0].det_one_plus_sw == UniPoly::one(Var::s));
    CHECK(t.records[0].char_poly == UniPoly::one(Var::x));

    const ClassTable su1 = combinatorial_class_table(parse_group("SU(1)"));
    REQUIRE(su1.records.size() == 1);
    CHECK(su1.records[0].det_one_plus_sw == UniPoly::one(Var::s));

    const ClassTable torus = enumerate_class_table(parse_group("T^30"), kCap);
    REQUIRE(torus.records.size() == 1);
    CHECK(torus.records[0].size == 1);
    CHECK(torus.records[0].det_one_plus_sw == poly_pow(upoly(Var::s, {1, 1}), 30));
}

TEST_CASE("record order is deterministic") {
    const ClassTable a = enumerate_class_table(parse_group("SO(7)"), kCap);
    const ClassTable b = enumerate_class_table(parse_group("SO(7)"), kCap);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i] == b.records[i]);
    for (std::size_t i = 1; i < a.records.size(); ++i) {
        CHECK(detail::char_poly_less(a.records[i - 1].char_poly, a.records[i].char_poly));
    }
}
