#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "macpoly/fillings.hpp"

using namespace macpoly;

namespace {

// Build a filling from per-column value lists (rows 1..mu_i, bottom up).
AugFilling build(const Composition& mu, const std::string& basement,
                 const std::vector<std::vector<int>>& columns) {
    auto d = std::make_shared<const Diagram>(mu);
    std::vector<int> vals;
    for (Box u : d->cells())
        vals.push_back(columns.at(static_cast<size_t>(u.col - 1)).at(static_cast<size_t>(u.row - 1)));
    return AugFilling(d, Perm::parse(basement), std::move(vals));
}

// Reference filling: mu = (3,2,2,1,2,3), basement 132645.
AugFilling reference_filling() {
    return build(Composition({3, 2, 2, 1, 2, 3}), "132645",
                 {{1, 1, 5}, {3, 3}, {2, 2}, {6}, {4, 6}, {5, 4, 1}});
}

// Brute-force enumeration: all value assignments, filtered by the attack
// predicate. Independent of the DFS enumerator.
std::vector<AugFilling> naive_naf(const Composition& mu, const Perm& basement) {
    auto d = std::make_shared<const Diagram>(mu);
    const int n = mu.size();
    const size_t cells = d->cells().size();
    std::vector<AugFilling> out;
    std::vector<int> vals(cells, 1);
    for (;;) {
        AugFilling f(d, basement, vals);
        if (f.non_attacking()) out.push_back(f);
        size_t k = 0;
        while (k < cells && vals[k] == n) vals[k++] = 1;
        if (k == cells) break;
        ++vals[k];
    }
    if (cells == 0) return {AugFilling(d, basement, {})};
    return out;
}

}  // namespace

TEST_CASE("arm and leg") {
    Composition mu({4, 3, 3, 2, 3, 4});
    auto [a, l] = arm_leg(mu, {3, 2});
    CHECK(a == 2);
    CHECK(l == 1);

    // single column
    Composition single({4});
    for (int j = 1; j <= 4; ++j) {
        auto [aa, ll] = arm_leg(single, {1, j});
        CHECK(aa == 0);
        CHECK(ll == 4 - j);
    }

    // arm^right reaches the basement row
    auto [a10, l10] = arm_leg(Composition({1, 0}), {1, 1});
    CHECK(a10 == 1);
    CHECK(l10 == 0);

    CHECK_THROWS_AS(arm_leg(mu, {1, 5}), std::invalid_argument);
}

TEST_CASE("arm matches direct set enumeration") {
    for (const Composition& mu : {Composition({3, 2, 2, 1, 2, 3}), Composition({1, 0, 2}),
                                  Composition({0, 3, 1})}) {
        Diagram d(mu);
        for (Box u : d.cells()) {
            // direct arm^left and arm^right per the definitions
            int count = 0;
            for (int c = 1; c < u.col; ++c)
                if (d.in_column_diagram({c, u.row}) && mu[c - 1] <= mu[u.col - 1]) ++count;
            for (int c = u.col + 1; c <= d.columns(); ++c)
                if (d.in_augmented({c, u.row - 1}) && mu[c - 1] < mu[u.col - 1]) ++count;
            CHECK(d.arm(u) == count);
            CHECK(d.leg(u) == mu[u.col - 1] - u.row);
        }
    }
}

TEST_CASE("attack predicate") {
    CHECK(attacking({1, 1}, {3, 1}));   // same row
    CHECK(attacking({1, 1}, {3, 0}));   // lower box to the right
    CHECK_FALSE(attacking({3, 1}, {1, 0}));  // lower box to the left
    CHECK_FALSE(attacking({2, 2}, {2, 1}));  // directly below
    CHECK_FALSE(attacking({1, 3}, {2, 1}));  // rows too far apart
}

TEST_CASE("reading order") {
    CHECK(reading_before({1, 2}, {6, 1}));  // higher row first
    CHECK(reading_before({6, 1}, {1, 1}));  // right to left within a row
    CHECK(reading_before({3, 1}, {3, 0}));
}

TEST_CASE("enumeration: degenerate shapes") {
    CHECK(enumerate_naf(Composition({0, 0, 0}), Perm::identity(1, 3)).size() == 1);
    auto two = enumerate_naf(Composition({0, 1}), Perm::identity(1, 2));
    REQUIRE(two.size() == 2);
    CHECK(two[0].cell_values() == std::vector<int>{1});
    CHECK(two[1].cell_values() == std::vector<int>{2});
}

TEST_CASE("enumeration matches brute force") {
    for (const Composition& mu :
         {Composition({1, 0, 2}), Composition({2, 1}), Composition({0, 2, 1}),
          Composition({1, 1, 1}), Composition({2, 0, 2})}) {
        for (const Perm& pi : all_perms(1, mu.size())) {
            auto fast = enumerate_naf(mu, pi);
            auto slow = naive_naf(mu, pi);
            REQUIRE(fast.size() == slow.size());
            std::set<std::vector<int>> fast_set, slow_set;
            for (const auto& f : fast) fast_set.insert(f.cell_values());
            for (const auto& f : slow) slow_set.insert(f.cell_values());
            CHECK(fast_set.size() == fast.size());  // duplicate-free
            CHECK(fast_set == slow_set);
        }
    }
}

TEST_CASE("reference filling statistics") {
    AugFilling f = reference_filling();
    CHECK(f.non_attacking());
    FillingStats st = filling_stats(f);
    CHECK(st.maj == 2);
    CHECK(st.inv_set_size == 40);
    CHECK(st.inv == 29);
    CHECK(st.coinv == 3);
    CHECK(st.des.size() == 2);
    CHECK(st.asc.size() == 2);
    CHECK(std::set<Box>(st.des.begin(), st.des.end()) == std::set<Box>{{5, 2}, {1, 3}});
    CHECK(std::set<Box>(st.asc.begin(), st.asc.end()) == std::set<Box>{{6, 2}, {6, 3}});
}

TEST_CASE("empty shape has all statistics zero") {
    auto fillings = enumerate_naf(Composition({0, 0}), Perm::identity(1, 2));
    REQUIRE(fillings.size() == 1);
    FillingStats st = filling_stats(fillings[0]);
    CHECK(st.maj == 0);
    CHECK(st.maj_prime == 0);
    CHECK(st.inv == 0);
    CHECK(st.coinv == 0);
    CHECK(st.coinv_prime == 0);
    // the identity basement itself carries one attacking inversion pair,
    // cancelled by the basement correction term
    CHECK(st.inv_set_size == 1);
}

TEST_CASE("column shape (1,0) forces the single filling") {
    auto fillings = enumerate_naf(Composition({1, 0}), Perm::identity(1, 2));
    REQUIRE(fillings.size() == 1);
    CHECK(fillings[0].cell_values() == std::vector<int>{1});
    FillingStats st = filling_stats(fillings[0]);
    CHECK(st.inv == 1);
    CHECK(st.coinv == 0);
    CHECK(st.maj == 0);
}

TEST_CASE("triples: one per arm cell, chi classification") {
    for (const Composition& mu : {Composition({1, 0}), Composition({2, 1, 0}),
                                  Composition({3, 2, 2, 1, 2, 3})}) {
        Diagram d(mu);
        CHECK(static_cast<int>(d.triples().size()) == d.arm_total());
    }

    // mu=(1,0): the unique triple of the unique filling is an inversion
    auto fillings = enumerate_naf(Composition({1, 0}), Perm::identity(1, 2));
    const Diagram& d = fillings[0].diagram();
    REQUIRE(d.triples().size() == 1);
    CHECK(is_inversion_triple(fillings[0], d.triples()[0]));
}

TEST_CASE("inv and coinv count triples for every filling and basement") {
    Composition mu({2, 1, 0});
    for (const Perm& pi : all_perms(1, 3)) {
        for (const AugFilling& f : enumerate_naf(mu, pi)) {
            FillingStats st = filling_stats(f);
            int inv_triples = 0;
            for (const Triple& tr : f.diagram().triples())
                if (is_inversion_triple(f, tr)) ++inv_triples;
            CHECK(st.inv == inv_triples);
            CHECK(st.coinv == static_cast<int>(f.diagram().triples().size()) - inv_triples);
        }
    }
}

TEST_CASE("attacking pairs are covered by triples with the basement exception") {
    for (const Composition& mu :
         {Composition({2, 1, 0}), Composition({1, 0, 2}), Composition({2, 2})}) {
        Diagram d(mu);
        std::map<std::pair<Box, Box>, int> count;
        auto norm = [](Box a, Box b) {
            return reading_before(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        for (const Triple& tr : d.triples()) {
            ++count[norm(tr.u, tr.v)];
            ++count[norm(tr.v, tr.w)];
        }
        std::vector<Box> aug = d.cells();
        for (int c = d.columns(); c >= 1; --c) aug.push_back({c, 0});
        for (size_t a = 0; a < aug.size(); ++a)
            for (size_t b = a + 1; b < aug.size(); ++b) {
                if (!attacking(aug[a], aug[b])) continue;
                int expected = 1;
                if (aug[a].row == 0 && aug[b].row == 0) {
                    int i = std::min(aug[a].col, aug[b].col);
                    int j = std::max(aug[a].col, aug[b].col);
                    if (mu[i - 1] <= mu[j - 1]) expected = 0;
                }
                auto it = count.find(norm(aug[a], aug[b]));
                CHECK((it == count.end() ? 0 : it->second) == expected);
            }
    }
}

TEST_CASE("complement bijection on a six-column pair") {
    Composition mu({3, 2, 2, 1, 2, 3});
    AugFilling sigma = build(mu, "312465",
                             {{3, 3, 5}, {1, 1}, {2, 2}, {4}, {6, 4}, {5, 6, 3}});
    CHECK(sigma.non_attacking());
    AugFilling image = complement_filling(sigma, 3);
    CHECK(image == reference_filling());
    CHECK(complement_filling(image, 3) == sigma);
}

TEST_CASE("complement rejects non-split basements") {
    auto fillings = enumerate_naf(Composition({0, 0, 0}), Perm::parse("312"));
    CHECK_THROWS_AS(complement_filling(fillings[0], 1), std::invalid_argument);
}

TEST_CASE("large count") {
    auto zero_shape = enumerate_naf(Composition({0, 0}), Perm::identity(1, 2));
    CHECK(large_count(zero_shape[0], 1) == 0);

    AugFilling f = reference_filling();
    CHECK(large_count(f, 6) == 0);  // m = n: nothing is large

    // the telescoping example: mu=(5,2,2,1,2,5), basement 312564, m=3
    Composition mu({5, 2, 2, 1, 2, 5});
    AugFilling g = build(mu, "312564",
                         {{3, 3, 5, 2, 6}, {1, 1}, {2, 2}, {5}, {6, 6}, {4, 4, 3, 1, 5}});
    CHECK(g.non_attacking());
    int first_column_large = 0;
    for (int v : std::vector<int>{3, 3, 5, 2, 6})
        if (v > 3) ++first_column_large;
    CHECK(first_column_large == 2);
    CHECK(large_count(g, 3) == 8);
    // f preserves the small/large split
    CHECK(large_count(complement_filling(g, 3), 3) == 8);
}

TEST_CASE("maj and coinv transfer under the complement bijection") {
    Composition mu({2, 0, 1});
    const int n = 3;
    for (int m = 1; m < n; ++m) {
        int p = 0;
        for (int i = m; i < n; ++i) p += mu[i];
        for (const Perm& pi1 : all_perms(1, m))
            for (const Perm& pi2 : all_perms(m + 1, n)) {
                Perm base = Perm::concatenate(pi1, pi2);
                for (const AugFilling& f : enumerate_naf(mu, base)) {
                    AugFilling g = complement_filling(f, m);
                    CHECK(g.non_attacking());
                    CHECK(g.basement() ==
                          Perm::concatenate(pi1.complement(), pi2.complement()));
                    FillingStats sf = filling_stats(f), sg = filling_stats(g);
                    CHECK(sg.maj == sf.maj_prime - p + large_count(f, m));
                    CHECK(sg.coinv == sf.coinv_prime);
                }
                CHECK(enumerate_naf(mu, base).size() ==
                      enumerate_naf(mu, Perm::concatenate(pi1.complement(), pi2.complement()))
                          .size());
            }
    }
}

TEST_CASE("complement preserves filling counts for (1,0,2)") {
    Composition mu({1, 0, 2});
    for (int m = 1; m < 3; ++m)
        for (const Perm& pi1 : all_perms(1, m))
            for (const Perm& pi2 : all_perms(m + 1, 3)) {
                Perm base = Perm::concatenate(pi1, pi2);
                Perm base_c = Perm::concatenate(pi1.complement(), pi2.complement());
                CHECK(enumerate_naf(mu, base).size() == enumerate_naf(mu, base_c).size());
            }
}

TEST_CASE("primed statistics come from the value complement") {
    Composition mu({2, 1, 0});
    for (const Perm& pi : all_perms(1, 3)) {
        for (const AugFilling& f : enumerate_naf(mu, pi)) {
            AugFilling fc = complement_filling(f, 0);  // full value complement
            CHECK(fc.basement() == pi.complement());
            FillingStats st = filling_stats(f), stc = filling_stats(fc);
            CHECK(st.maj_prime == stc.maj);
            CHECK(st.coinv_prime == stc.coinv);
        }
    }
}

TEST_CASE("coinversion triples have distinct cyclic entries") {
    Composition mu({2, 1, 0});
    for (const Perm& pi : all_perms(1, 3)) {
        for (const AugFilling& f : enumerate_naf(mu, pi)) {
            for (const Triple& tr : f.diagram().triples()) {
                int vu = f.value(tr.u), vv = f.value(tr.v), vw = f.value(tr.w);
                bool distinct = vu != vv && vv != vw && vu != vw;
                bool cyclic =
                    (vu < vv && vv < vw) || (vv < vw && vw < vu) || (vw < vu && vu < vv);
                CHECK(!is_inversion_triple(f, tr) == (distinct && cyclic));
            }
        }
    }
}

TEST_CASE("term weights of the smallest shapes") {
    auto naf01 = enumerate_naf(Composition({0, 1}), Perm::identity(1, 2));
    REQUIRE(naf01.size() == 2);
    auto [e1, c1] = term_weight(naf01[0]);  // value 1
    CHECK(e1 == std::vector<int>{1, 0});
    CHECK(c1 == RationalQT(BiPoly(1) - BiPoly::var_t(),
                           BiPoly(1) - BiPoly::var_q() * BiPoly::var_t()));
    auto [e2, c2] = term_weight(naf01[1]);  // value 2
    CHECK(e2 == std::vector<int>{0, 1});
    CHECK(c2.is_one());

    auto naf10 = enumerate_naf(Composition({1, 0}), Perm::identity(1, 2));
    auto [e3, c3] = term_weight(naf10[0]);
    CHECK(e3 == std::vector<int>{1, 0});
    CHECK(c3.is_one());
}

TEST_CASE("filling text rendering") {
    AugFilling f = reference_filling();
    CHECK(f.str() ==
          "5 . . . . 1\n"
          "1 3 2 . 6 4\n"
          "1 3 2 6 4 5\n"
          "1 3 2 6 4 5\n");
}
