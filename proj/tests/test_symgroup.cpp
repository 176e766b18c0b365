#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "macpoly/symgroup.hpp"

using namespace macpoly;

TEST_CASE("composition and inverse") {
    Perm a = Perm::parse("132"), b = Perm::parse("213");
    CHECK(a.compose(b) == Perm::parse("312"));
    CHECK(a.compose(Perm::identity(1, 3)) == a);
    CHECK(Perm::parse("231").inverse() == Perm::parse("312"));
    CHECK_THROWS_AS(Perm(1, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("length and reduced words") {
    CHECK(Perm::identity(1, 4).length() == 0);
    CHECK(Perm::identity(1, 4).reduced_word().empty());
    CHECK(Perm::long_element(1, 3).length() == 3);
    CHECK(Perm::parse("2143").length() == 2);

    // every word recomposes to its permutation and has length many letters
    for (const Perm& pi : all_perms(1, 4)) {
        auto word = pi.reduced_word();
        CHECK(static_cast<int>(word.size()) == pi.length());
        Perm prod = Perm::identity(1, 4);
        for (int i : word) prod = prod.compose(Perm::transposition(1, 4, i));
        CHECK(prod == pi);
    }
}

TEST_CASE("interval long element") {
    CHECK(Perm::long_element(1, 3) == Perm::parse("321"));
    CHECK(Perm::long_element(3, 5) == Perm(3, {5, 4, 3}));
    CHECK(Perm::long_element(3, 6).length() == 4 * 3 / 2);
}

TEST_CASE("interval complement") {
    CHECK(Perm::parse("1432").complement() == Perm::parse("4123"));
    CHECK(Perm::parse("132").complement() == Perm::parse("312"));
    CHECK(Perm(4, {5, 4, 6}).complement() == Perm(4, {5, 6, 4}));
    for (const Perm& pi : all_perms(1, 4)) CHECK(pi.complement().complement() == pi);
}

TEST_CASE("concatenation and splitting") {
    Perm c = Perm::concatenate(Perm::parse("132"), Perm(4, {5, 4, 6}));
    CHECK(c == Perm::parse("132546"));
    Perm p1, p2;
    CHECK(c.split_at(3, p1, p2));
    CHECK(p1 == Perm::parse("132"));
    CHECK(p2 == Perm(4, {5, 4, 6}));
    CHECK_FALSE(Perm::parse("3142").split_at(2, p1, p2));
}

TEST_CASE("minimal coset representatives") {
    auto reps = coset_min_reps(Composition({1, 0}));
    CHECK(reps.size() == 2);
    CHECK(coset_min_reps(Composition({1, 1})).size() == 1);
    CHECK(coset_min_reps(Composition({2, 1, 1})).size() == 3);
    CHECK_THROWS_AS(coset_min_reps(Composition({0, 1})), std::invalid_argument);

    // oracle: filter all of S_m by the defining condition
    Composition lambda({2, 1, 1});
    std::set<Perm> expect;
    for (const Perm& pi : all_perms(1, 3)) {
        bool ok = true;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                if (lambda[i - 1] == lambda[j - 1] && pi(i) > pi(j)) ok = false;
        if (ok) expect.insert(pi);
    }
    auto got = coset_min_reps(lambda);
    CHECK(std::set<Perm>(got.begin(), got.end()) == expect);
}

TEST_CASE("coset underline") {
    // regular lambda: trivial stabilizer
    for (const Perm& pi : all_perms(1, 3))
        CHECK(coset_underline(pi, Composition({3, 2, 1})) == pi);
    CHECK(coset_underline(Perm::parse("21"), Composition({1, 1})) == Perm::parse("12"));
    CHECK(coset_underline(Perm::parse("213"), Composition({2, 2, 0})) == Perm::parse("123"));

    // oracle: enumerate the coset, pick the minimal length element
    Composition lambda({2, 2, 0});
    for (const Perm& pi : all_perms(1, 3)) {
        Perm best;
        int best_len = -1;
        for (const Perm& s : stabilizer(lambda)) {
            Perm c = pi.compose(s);
            if (best_len < 0 || c.length() < best_len) {
                best = c;
                best_len = c.length();
            }
        }
        CHECK(coset_underline(pi, lambda) == best);
    }
}

TEST_CASE("underline factorization has additive length") {
    for (const Composition& lambda :
         {Composition({2, 2, 0}), Composition({1, 1, 1}), Composition({3, 1, 0})}) {
        for (const Perm& pi : all_perms(1, 3)) {
            Perm under = coset_underline(pi, lambda);
            // pi = under * sigma with sigma in the stabilizer
            Perm sigma = under.inverse().compose(pi);
            bool in_stab = false;
            for (const Perm& s : stabilizer(lambda)) in_stab |= (s == sigma);
            CHECK(in_stab);
            CHECK(pi.length() == under.length() + sigma.length());
        }
    }
}

TEST_CASE("ell_mu") {
    Composition mu({0, 1, 2});
    CHECK(ell_mu(mu, Perm::identity(1, 3)) == 0);
    CHECK(ell_mu(Composition({2, 2, 2}), Perm::long_element(1, 3)) == 3);

    // lemma: ell_mu vanishes on minimal coset representatives of lambda|gamma
    Composition lambda({2, 1, 1}), gamma({0, 3});
    Composition full = Composition::concat(lambda, gamma);
    for (const Perm& pi : coset_min_reps(lambda)) CHECK(ell_mu(full, pi.extended(1, 5)) == 0);
}

TEST_CASE("ell_mu of the interval long element") {
    // ell_mu(w0^{[m+1,n]}) = l(w0^{[m+1,n]}) - inv(gamma)
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m < n; ++m) {
            std::vector<int> parts;
            for (int i = 0; i < n; ++i) parts.push_back((i * 7 + 3) % 4);
            Composition mu(parts);
            Composition gamma = mu.suffix_from(m);
            Perm w0 = Perm::long_element(m + 1, n);
            CHECK(ell_mu(mu, w0.extended(1, n)) == w0.length() - inversions(gamma));
        }
}

TEST_CASE("underline of complement permutes the coset representatives") {
    for (const Composition& lambda :
         {Composition({2, 2, 0}), Composition({1, 1, 1}), Composition({2, 1, 0})}) {
        auto reps = coset_min_reps(lambda);
        std::set<Perm> image;
        for (const Perm& pi : reps) image.insert(coset_underline(pi.complement(), lambda));
        CHECK(image.size() == reps.size());
        for (const Perm& pi : reps) CHECK(image.count(pi) == 1);
    }
}

TEST_CASE("inversion statistics") {
    CHECK(inversions(Composition({0, 1, 2})) == 0);
    CHECK(inversions(Composition({2, 1, 0})) == 3);
    CHECK(inv_pair(Composition({1}), Composition({0, 2})) == 1);
}

TEST_CASE("permutations act on compositions") {
    Composition mu({3, 5, 7});
    CHECK(act(Perm::identity(1, 3), mu) == mu);
    CHECK(act(Perm::long_element(1, 3), mu) == Composition({7, 5, 3}));
    CHECK(act(Perm::transposition(1, 3, 1), mu) == Composition({5, 3, 7}));
}

TEST_CASE("length is subadditive under composition") {
    for (const Perm& a : all_perms(1, 3))
        for (const Perm& b : all_perms(1, 3)) CHECK(a.compose(b).length() <= a.length() + b.length());
}

TEST_CASE("one-line parsing and printing") {
    CHECK(Perm::parse("132645") == Perm(1, {1, 3, 2, 6, 4, 5}));
    CHECK(Perm::parse("546") == Perm(4, {5, 4, 6}));
    CHECK(Perm::parse("10,3,2,1,4,5,6,7,8,9").size() == 10);
    CHECK(Perm::parse("321").str() == "321");
}
