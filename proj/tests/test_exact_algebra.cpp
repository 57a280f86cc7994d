#include <random>

#include "doctest.h"
#include "qgr/combinatorics.hpp"
#include "qgr/laurent.hpp"
#include "qgr/matrix.hpp"
#include "qgr/rational_fn.hpp"

using namespace qgr;

namespace {

VarTablePtr xy_table() {
    return VarTableBuilder{}.add("x").add("y").add("w", true).build();
}

LaurentPoly random_poly(const VarTablePtr& table, std::mt19937& rng, int max_terms = 6,
                        int max_deg = 4) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    LaurentPoly p = LaurentPoly::zero(table);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(table->size(), 0);
        for (std::size_t i = 0; i < table->size(); ++i) {
            int lo = table->laurent(i) ? -max_deg : 0;
            std::uniform_int_distribution<int> de(lo, max_deg);
            e[i] = de(rng);
        }
        int c = coeff(rng);
        if (c != 0) p.add_term(e, Rat(c));
    }
    return p;
}

}  // namespace

TEST_CASE("rational scalars stay reduced with positive denominator") {
    Rat r(6, -4);
    r.canonicalize();
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(rat_text(r) == "-3/2");
    CHECK(rat_parse("-3/2") == r);
}

TEST_CASE("canonical polynomial text") {
    auto table = xy_table();
    auto x = LaurentPoly::variable(table, 0);
    auto y = LaurentPoly::variable(table, 1);
    auto w = LaurentPoly::variable(table, 2);
    auto one = LaurentPoly::constant(table, Rat(1));

    CHECK((x * x - x + one).text() == "x^2 - x + 1");
    CHECK(LaurentPoly::zero(table).text() == "0");
    CHECK((w.pow(-1) * y).text() == "y*w^-1");
    CHECK((x * Rat(-1)).text() == "-x");
    CHECK((x * Rat(1, 2) + one).text() == "1/2*x + 1");
}

TEST_CASE("parse is a left inverse of print") {
    auto table = xy_table();
    std::mt19937 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly p = random_poly(table, rng);
        CHECK(LaurentPoly::parse(p.text(), table) == p);
    }
}

TEST_CASE("ring axioms on random sparse polynomials") {
    auto table = xy_table();
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(table, rng), b = random_poly(table, rng),
                    c = random_poly(table, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact division round trips") {
    auto table = xy_table();
    std::mt19937 rng(99);
    int nontrivial = 0;
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(table, rng), b = random_poly(table, rng);
        if (b.is_zero()) continue;
        auto q = (a * b).exact_divide(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        if (!a.is_zero()) ++nontrivial;
    }
    CHECK(nontrivial > 50);
}

TEST_CASE("rational reduction cancels linear forms") {
    auto table = VarTableBuilder{}.add("z1").add("z2").add("z3").build();
    auto z1 = LaurentPoly::variable(table, 0);
    auto z2 = LaurentPoly::variable(table, 1);

    SUBCASE("(z1 - z2) f / (z1 - z2) = f") {
        LaurentPoly f = z1 * z2 + z2 * z2;
        RestrictedRational r((z1 - z2) * f, {{LinearForm::diff(0, 1), 1}});
        CHECK(r.den().empty());
        CHECK(r.num() == f);
    }
    SUBCASE("difference of squares") {
        RestrictedRational r(z1 * z1 - z2 * z2, {{LinearForm::diff(0, 1), 1}});
        CHECK(r.den().empty());
        CHECK(r.num() == z1 + z2);
    }
    SUBCASE("reduction is idempotent and preserves evaluation") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> pick(1, 40);
        for (int i = 0; i < 20; ++i) {
            LaurentPoly f = random_poly(table, rng);
            RestrictedRational r(f * (z1 - z2), {{LinearForm::diff(0, 1), 2}});
            // evaluation at distinct random points agrees with the raw quotient
            std::vector<Rat> pt{Rat(pick(rng)), Rat(pick(rng) + 50), Rat(pick(rng) + 100)};
            Rat expected = (f * (z1 - z2)).eval(pt) / ((pt[0] - pt[1]) * (pt[0] - pt[1]));
            CHECK(r.eval(pt) == expected);
        }
    }
}

TEST_CASE("idempotent sum over fixed points is 1 for (2,3)") {
    // brute-force oracle for the localization identity: sum_I V(z_sI; z_sI-bar)
    // / R(z_sI) over the three index sets equals 1 as a rational function
    auto table = VarTableBuilder{}.add("z1").add("z2").add("z3").add("g1").add("g2").build();
    auto zvar = [&](int i) { return LaurentPoly::variable(table, i - 1); };
    auto gvar = [&](int j) { return LaurentPoly::variable(table, 2 + j); };

    RestrictedRational total = RestrictedRational::zero(table);
    for (const auto& I : enumerate_index_sets(2, 3)) {
        LaurentPoly num = LaurentPoly::constant(table, Rat(1));
        for (int j = 0; j < 2; ++j)
            for (int b : I.second()) num = num * (gvar(j) - zvar(b));
        RestrictedRational term(num);
        for (int i : I.first)
            for (int b : I.second())
                term = term.div_form(LinearForm::diff(i - 1, b - 1));
        total = total + term;
    }
    CHECK(total.den().empty());
    CHECK(total.num() == LaurentPoly::constant(table, Rat(1)));
}

TEST_CASE("determinants") {
    auto table = VarTableBuilder{}.add("x1").add("x2").add("a").add("b").add("c").add("d").build();
    auto v = [&](int i) { return LaurentPoly::variable(table, i); };
    LaurentPoly zero = LaurentPoly::zero(table);
    LaurentPoly one = LaurentPoly::constant(table, Rat(1));

    SUBCASE("identity 3x3") {
        auto m = Matrix<LaurentPoly>::identity(3, zero, one);
        CHECK(m.det_cofactor(zero) == one);
    }
    SUBCASE("2x2 ad - bc") {
        Matrix<LaurentPoly> m(2, 2, zero);
        m.at(0, 0) = v(2);
        m.at(0, 1) = v(3);
        m.at(1, 0) = v(4);
        m.at(1, 1) = v(5);
        CHECK(m.det_cofactor(zero) == v(2) * v(5) - v(3) * v(4));
    }
    SUBCASE("Vandermonde rows for k=2") {
        Matrix<LaurentPoly> m(2, 2, zero);
        m.at(0, 0) = v(0);
        m.at(0, 1) = one;
        m.at(1, 0) = v(1);
        m.at(1, 1) = one;
        CHECK(m.det_cofactor(zero) == v(0) - v(1));
    }
    SUBCASE("Bareiss agrees with cofactor on random 5x5") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> d(-5, 5);
        Matrix<LaurentPoly> m(5, 5, zero);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = LaurentPoly::constant(table, Rat(d(rng)));
        auto db = det_bareiss<LaurentPoly>(
            m, one,
            [](const LaurentPoly& a, const LaurentPoly& b) { return *a.exact_divide(b); },
            [](const LaurentPoly& p) { return p.is_zero(); });
        CHECK(db == m.det_cofactor(zero));
    }
}
