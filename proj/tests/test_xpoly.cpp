#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macpoly/xpoly.hpp"

using namespace macpoly;

namespace {

XPoly x(int n, int i) { return XPoly::variable(n, i); }

RationalQT hhl_coeff() {
    // (1-t)/(1-qt)
    return RationalQT(BiPoly(1) - BiPoly::var_t(),
                      BiPoly(1) - BiPoly::var_q() * BiPoly::var_t());
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return sign(rng) ? r : -r;
}

XPoly random_xpoly(std::mt19937_64& rng, int n, int deg) {
    std::uniform_int_distribution<int> e(0, deg), c(-4, 4);
    XPoly f(n);
    for (int k = 0; k < 5; ++k) {
        XPoly::Exp exp(n, 0);
        int budget = deg;
        for (int i = 0; i < n; ++i) {
            exp[i] = std::min(e(rng), budget);
            budget -= exp[i];
        }
        f.add_term(exp, RationalQT(c(rng)));
    }
    return f;
}

SubstSpec random_subst(std::mt19937_64& rng, int n) {
    std::vector<int> src(n);
    for (int i = 0; i < n; ++i) src[i] = i + 1;
    std::shuffle(src.begin(), src.end(), rng);
    std::uniform_int_distribution<int> pw(0, 2);
    std::vector<SubstSpec::Entry> entries(n);
    for (int i = 0; i < n; ++i) entries[i] = {src[i], pw(rng)};
    return SubstSpec(std::move(entries));
}

}  // namespace

TEST_CASE("ring arithmetic") {
    XPoly zero(2);
    CHECK(x(2, 1) + zero == x(2, 1));
    CHECK((x(2, 1) + x(2, 2)) * (x(2, 1) - x(2, 2)) ==
          XPoly::monomial(2, {2, 0}, RationalQT(1)) - XPoly::monomial(2, {0, 2}, RationalQT(1)));
    CHECK(x(2, 1).scaled(hhl_coeff()) * x(2, 2).scaled(hhl_coeff().inverse()) ==
          XPoly::monomial(2, {1, 1}, RationalQT(1)));
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
}

TEST_CASE("substitution basics") {
    XPoly f = XPoly::monomial(2, {1, 1}, RationalQT(1));
    CHECK(f.substitute(SubstSpec::adjacent_swap(2, 1)) == f);

    // x_2 with position-2 scaling by q
    std::vector<SubstSpec::Entry> entries{{1, 0}, {2, 1}};
    CHECK(x(2, 2).substitute(SubstSpec(std::move(entries))) ==
          x(2, 2).scaled(RationalQT::q_power(1)));

    XPoly g = x(2, 1) + x(2, 2).scaled(hhl_coeff());
    XPoly swapped = x(2, 2) + x(2, 1).scaled(hhl_coeff());
    CHECK(g.substitute(SubstSpec::reversal(2)) == swapped);
}

TEST_CASE("substitution rejects non-permutations") {
    std::vector<SubstSpec::Entry> entries{{1, 0}, {1, 0}};
    CHECK_THROWS_AS(SubstSpec(std::move(entries)), std::invalid_argument);
}

TEST_CASE("substitution composes via then()") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 20; ++round) {
        XPoly f = random_xpoly(rng, 3, 3);
        SubstSpec s1 = random_subst(rng, 3), s2 = random_subst(rng, 3);
        CHECK(f.substitute(s1).substitute(s2) == f.substitute(s1.then(s2)));
    }
}

TEST_CASE("parameter inversion") {
    CHECK(x(2, 1).invert_params() == x(2, 1));
    XPoly qx = x(1, 1).scaled(RationalQT::q_power(1));
    CHECK(qx.invert_params() == x(1, 1).scaled(RationalQT::q_power(-1)));

    XPoly f = x(2, 1).scaled(hhl_coeff());
    XPoly fi = f.invert_params();
    std::mt19937_64 rng(29);
    for (int i = 0; i < 20; ++i) {
        Rat q0 = random_rat(rng), t0 = random_rat(rng);
        if ((BiPoly(1) - BiPoly::var_q() * BiPoly::var_t()).eval(q0, t0) == 0) continue;
        if ((BiPoly(1) - BiPoly::var_q() * BiPoly::var_t()).eval(1 / q0, 1 / t0) == 0) continue;
        std::vector<Rat> pt{random_rat(rng), random_rat(rng)};
        CHECK(fi.eval(q0, t0, pt) == f.eval(1 / q0, 1 / t0, pt));
    }
    XPoly g = random_xpoly(rng, 3, 3);
    CHECK(g.invert_params().invert_params() == g);
}

TEST_CASE("symmetry detection") {
    CHECK((x(2, 1) + x(2, 2)).symmetric_in_first(2));
    CHECK_FALSE(x(2, 1).symmetric_in_first(2));
    CHECK(x(2, 1).symmetric_in_first(1));  // m = 1 imposes no condition
}

TEST_CASE("evaluation") {
    CHECK((x(2, 1) + x(2, 2)).eval(2, 3, {1, 2}) == 3);
    CHECK(x(1, 1).scaled(RationalQT::q_power(1)).eval(2, 5, {3}) == 6);

    // E_{(0,1)} = x_2 + (1-t)/(1-qt) x_1 at q=2, t=3, x=(1,1): 1 + 2/5
    XPoly e01 = x(2, 2) + x(2, 1).scaled(hhl_coeff());
    CHECK(e01.eval(2, 3, {1, 1}) == Rat(7, 5));
}

TEST_CASE("evaluation commutes with operations") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 20; ++round) {
        XPoly f = random_xpoly(rng, 3, 2), g = random_xpoly(rng, 3, 2);
        Rat q0 = random_rat(rng), t0 = random_rat(rng);
        std::vector<Rat> pt{random_rat(rng), random_rat(rng), random_rat(rng)};
        CHECK((f + g).eval(q0, t0, pt) == f.eval(q0, t0, pt) + g.eval(q0, t0, pt));
        CHECK((f * g).eval(q0, t0, pt) == f.eval(q0, t0, pt) * g.eval(q0, t0, pt));
        SubstSpec s = random_subst(rng, 3);
        std::vector<Rat> moved(3);
        for (int i = 0; i < 3; ++i) {
            Rat scale(1);
            for (int k = 0; k < s.entries[i].q_power; ++k) scale *= q0;
            moved[i] = scale * pt[s.entries[i].source - 1];
        }
        CHECK(f.substitute(s).eval(q0, t0, pt) == f.eval(q0, t0, moved));
    }
}

TEST_CASE("degree helpers") {
    XPoly f = x(2, 1) * x(2, 2) + x(2, 1);
    CHECK(f.total_degree() == 2);
    CHECK_FALSE(f.homogeneous_of_degree(2));
    CHECK((x(2, 1) * x(2, 2)).homogeneous_of_degree(2));
}

TEST_CASE("printing is deterministic graded-lex") {
    XPoly f = x(2, 2) + x(2, 1).scaled(hhl_coeff()) + XPoly::constant(2, RationalQT(3));
    CHECK(f.str() == "3 + ((1 - t)/(1 - q*t))*x1 + x2");
}
