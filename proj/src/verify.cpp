#include "macpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "macpoly/json_io.hpp"

namespace macpoly {

namespace {

SubstSpec complement_substitution(int n, int m) {
    // (x_1,...,x_n) -> (x_m,...,x_1, q x_n,...,q x_{m+1})
    std::vector<SubstSpec::Entry> e(static_cast<size_t>(n));
    for (int i = 1; i <= m; ++i) e[i - 1] = {m + 1 - i, 0};
    for (int j = 1; j <= n - m; ++j) e[m + j - 1] = {n + 1 - j, 1};
    return SubstSpec(std::move(e));
}

SubstSpec cl_substitution(int n, int m) {
    // (x_1,...,x_n) -> (x_1,...,x_m, q x_n,...,q x_{m+1})
    std::vector<SubstSpec::Entry> e(static_cast<size_t>(n));
    for (int i = 1; i <= m; ++i) e[i - 1] = {i, 0};
    for (int j = 1; j <= n - m; ++j) e[m + j - 1] = {n + 1 - j, 1};
    return SubstSpec(std::move(e));
}

XPoly count_poly(int n, long value) { return XPoly::constant(n, RationalQT(value)); }

}  // namespace

VerifyReport VerifyReport::compare(std::string id, std::string instance, const XPoly& lhs,
                                   const XPoly& rhs) {
    VerifyReport rep;
    rep.identity_id = std::move(id);
    rep.instance = std::move(instance);
    rep.holds = lhs == rhs;
    if (!rep.holds) rep.witness.emplace(lhs, rhs);
    return rep;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j{{"identity_id", identity_id},
                     {"instance", instance},
                     {"status", holds ? "holds" : "fails"}};
    if (witness) {
        j["witness"] = {{"lhs", macpoly::to_json(witness->lhs)},
                        {"rhs", macpoly::to_json(witness->rhs)},
                        {"difference", macpoly::to_json(witness->difference)}};
    }
    return j;
}

VerifyReport verify_complement(const Composition& mu, const Perm& pi1, const Perm& pi2) {
    const int n = mu.size();
    const int m = pi1.empty() ? 0 : pi1.hi();
    if (!pi1.empty() && pi1.lo() != 1)
        throw std::invalid_argument("verify_complement: pi1 must permute [1,m]");
    if (!pi2.empty() && (pi2.lo() != m + 1 || pi2.hi() != n))
        throw std::invalid_argument("verify_complement: pi2 must permute [m+1,n]");
    if (pi2.empty() && m != n)
        throw std::invalid_argument("verify_complement: split does not cover [1,n]");

    int p = 0;
    for (int i = m + 1; i <= n; ++i) p += mu[i - 1];

    Perm base = Perm::concatenate(pi1, pi2);
    Perm base_c = Perm::concatenate(pi1.empty() ? pi1 : pi1.complement(),
                                    pi2.empty() ? pi2 : pi2.complement());

    XPoly lhs = hhl_polynomial(mu, base_c);
    XPoly rhs = hhl_polynomial(mu, base)
                    .invert_params()
                    .substitute(complement_substitution(n, m))
                    .scaled(RationalQT::q_power(-p));

    std::ostringstream inst;
    inst << "mu=" << mu.str() << " m=" << m << " pi1=" << (pi1.empty() ? "-" : pi1.str())
         << " pi2=" << (pi2.empty() ? "-" : pi2.str());
    return VerifyReport::compare("complement", inst.str(), lhs, rhs);
}

VerifyReport verify_cl(const Composition& lambda, const Composition& gamma, int n) {
    if (!lambda.weakly_decreasing())
        throw std::invalid_argument("verify_cl: lambda must be weakly decreasing");
    const int m = lambda.size();
    const int k = n - m;
    if (gamma.size() != k) throw std::invalid_argument("verify_cl: sizes do not add to n");

    XPoly p = partial_P(lambda, gamma, n);
    XPoly lhs = p.invert_params().substitute(cl_substitution(n, m));

    Perm w0k = k >= 1 ? Perm::long_element(m + 1, n) : Perm();
    XPoly rhs = hecke_apply(w0k.extended(1, n), p)
                    .scaled(RationalQT::q_power(gamma.total()) *
                            RationalQT::t_power(inversions(gamma) - w0k.length()));

    std::ostringstream inst;
    inst << "lambda=" << lambda.str() << " gamma=" << gamma.str() << " n=" << n;
    return VerifyReport::compare("concha-lapointe", inst.str(), lhs, rhs);
}

VerifyReport verify_kl(const Composition& lambda, const Composition& gamma, int n) {
    if (!lambda.weakly_decreasing())
        throw std::invalid_argument("verify_kl: lambda must be weakly decreasing");
    if (lambda.size() + gamma.size() != n)
        throw std::invalid_argument("verify_kl: sizes do not add to n");
    XPoly p = partial_P(lambda, gamma, n);
    XPoly lhs = kl_star(p);
    XPoly rhs = p.scaled(RationalQT::t_power(inv_pair(lambda, gamma)));
    std::ostringstream inst;
    inst << "lambda=" << lambda.str() << " gamma=" << gamma.str() << " n=" << n;
    return VerifyReport::compare("kazhdan-lusztig", inst.str(), lhs, rhs);
}

VerifyReport verify_hhl_vs_hecke(const Composition& mu, const Perm& pi) {
    XPoly lhs = hhl_polynomial(mu, pi);
    XPoly rhs = permuted_E_via_hecke(mu, pi);
    std::ostringstream inst;
    inst << "mu=" << mu.str() << " pi=" << pi.str();
    return VerifyReport::compare("hhl-vs-hecke", inst.str(), lhs, rhs);
}

VerifyReport verify_eigen(const Composition& mu, int m) {
    const int n = mu.size();
    if (m < 0 || m > n) throw std::invalid_argument("verify_eigen: m out of range");
    if (!mu.prefix(m).weakly_decreasing())
        throw std::invalid_argument("verify_eigen: first m parts must be weakly decreasing");
    XPoly e = nonsymmetric_E(mu);
    XPoly lhs = cherednik_Y(m, e);
    int lambda_sum = 0, bsum = 0;
    for (int i = 1; i <= m; ++i) {
        lambda_sum += mu[i - 1];
        bsum += b_mu(mu, m, i);
    }
    XPoly rhs = e.scaled(RationalQT::qt_monomial(lambda_sum, -bsum));
    std::ostringstream inst;
    inst << "mu=" << mu.str() << " m=" << m;
    return VerifyReport::compare("eigenvalue", inst.str(), lhs, rhs);
}

namespace {

// Normalize an attacking pair to (earlier, later) in reading order.
std::pair<Box, Box> ordered_pair(Box a, Box b) {
    return reading_before(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

struct CombFail {
    std::string what;
    XPoly lhs, rhs;
};

// Lemma: every attacking pair lies in exactly one triple as {u,v} or {v,w},
// except basement pairs {(i,0),(i',0)} with i<i' and mu_i <= mu_{i'}.
std::optional<CombFail> check_triple_coverage(const Diagram& d) {
    const Composition& mu = d.shape();
    const int n = d.columns();
    std::map<std::pair<Box, Box>, int> count;
    for (const Triple& tr : d.triples()) {
        ++count[ordered_pair(tr.u, tr.v)];
        ++count[ordered_pair(tr.v, tr.w)];
    }
    std::vector<Box> aug = d.cells();
    for (int col = n; col >= 1; --col) aug.push_back({col, 0});
    for (size_t a = 0; a < aug.size(); ++a)
        for (size_t b = a + 1; b < aug.size(); ++b) {
            if (!attacking(aug[a], aug[b])) continue;
            Box x = aug[a], y = aug[b];
            int expected = 1;
            if (x.row == 0 && y.row == 0) {
                int i = std::min(x.col, y.col), j = std::max(x.col, y.col);
                if (mu[i - 1] <= mu[j - 1]) expected = 0;
            }
            int got = count.count(ordered_pair(x, y)) ? count[ordered_pair(x, y)] : 0;
            if (got != expected) {
                std::ostringstream what;
                what << "triple coverage at pair (" << x.col << "," << x.row << "),(" << y.col
                     << "," << y.row << ")";
                return CombFail{what.str(), count_poly(n, got), count_poly(n, expected)};
            }
        }
    return std::nullopt;
}

std::optional<CombFail> check_filling(const Diagram& d, const AugFilling& f) {
    const int n = d.columns();
    FillingStats st = filling_stats(f);

    int inv_triples = 0;
    for (const Triple& tr : d.triples()) {
        bool inversion = is_inversion_triple(f, tr);
        if (inversion) ++inv_triples;
        int vu = f.value(tr.u), vv = f.value(tr.v), vw = f.value(tr.w);
        bool distinct = vu != vv && vv != vw && vu != vw;
        bool cyclic = (vu < vv && vv < vw) || (vv < vw && vw < vu) || (vw < vu && vu < vv);
        if (!inversion != (distinct && cyclic))
            return CombFail{"coinversion-triple cyclic characterization",
                            count_poly(n, inversion ? 1 : 0), count_poly(n, cyclic ? 0 : 1)};
    }
    int coinv_triples = static_cast<int>(d.triples().size()) - inv_triples;
    if (st.inv != inv_triples)
        return CombFail{"inv = inversion triple count", count_poly(n, st.inv),
                        count_poly(n, inv_triples)};
    if (st.coinv != coinv_triples)
        return CombFail{"coinv = coinversion triple count", count_poly(n, st.coinv),
                        count_poly(n, coinv_triples)};

    // maj'/coinv' realized by the value-complemented filling
    AugFilling full = complement_filling(f, 0);
    FillingStats stc = filling_stats(full);
    if (st.maj_prime != stc.maj)
        return CombFail{"maj' = maj of value complement", count_poly(n, st.maj_prime),
                        count_poly(n, stc.maj)};
    if (st.coinv_prime != stc.coinv)
        return CombFail{"coinv' = coinv of value complement", count_poly(n, st.coinv_prime),
                        count_poly(n, stc.coinv)};
    return std::nullopt;
}

std::optional<CombFail> check_transfer(const Diagram& d, const AugFilling& f, int m, int p) {
    const int n = d.columns();
    AugFilling g = complement_filling(f, m);
    if (!g.non_attacking())
        return CombFail{"complement image must be non-attacking", count_poly(n, 0),
                        count_poly(n, 1)};
    if (!(complement_filling(g, m) == f))
        return CombFail{"complement must be an involution", count_poly(n, 0), count_poly(n, 1)};
    FillingStats sf = filling_stats(f), sg = filling_stats(g);
    int big = large_count(f, m);
    if (large_count(g, m) != big)
        return CombFail{"complement must preserve the small/large split", count_poly(n, big),
                        count_poly(n, large_count(g, m))};
    if (sg.maj != sf.maj_prime - p + big)
        return CombFail{"maj(f(s)) = maj'(s) - p + L", count_poly(n, sg.maj),
                        count_poly(n, sf.maj_prime - p + big)};
    if (sg.coinv != sf.coinv_prime)
        return CombFail{"coinv(f(s)) = coinv'(s)", count_poly(n, sg.coinv),
                        count_poly(n, sf.coinv_prime)};
    return std::nullopt;
}

// Corollary: E_mu(x; 1/q, 1/t) equals the combinatorial sum with maj', coinv'.
std::optional<CombFail> check_inverted_formula(const Composition& mu) {
    const int n = mu.size();
    XPoly lhs = nonsymmetric_E(mu).invert_params();
    XPoly rhs(n);
    auto d = std::make_shared<const Diagram>(mu);
    const BiPoly one_minus_t = BiPoly(1) - BiPoly::var_t();
    for_each_naf(d, Perm::identity(1, n), [&](const AugFilling& f) {
        FillingStats st = filling_stats(f);
        std::vector<int> exp(static_cast<size_t>(n), 0);
        for (int v : f.cell_values()) ++exp[static_cast<size_t>(v - 1)];
        RationalQT coeff = RationalQT::qt_monomial(st.maj_prime, st.coinv_prime);
        for (Box u : d->cells()) {
            if (f.value(u) == f.value({u.col, u.row - 1})) continue;
            BiPoly den = BiPoly(1) - BiPoly::monomial(1, d->leg(u) + 1, d->arm(u) + 1);
            coeff *= RationalQT(one_minus_t, den);
        }
        rhs.add_term(exp, coeff);
    });
    if (lhs == rhs) return std::nullopt;
    return CombFail{"parameter-inverted combinatorial formula", lhs, rhs};
}

}  // namespace

VerifyReport verify_combinatorial(const Composition& mu, int m) {
    const int n = mu.size();
    if (m < 0 || m > n) throw std::invalid_argument("verify_combinatorial: m out of range");
    auto d = std::make_shared<const Diagram>(mu);

    std::ostringstream inst;
    inst << "mu=" << mu.str() << " m=" << m;

    auto fail_report = [&](const CombFail& cf, const std::string& context) {
        VerifyReport rep;
        rep.identity_id = "combinatorial";
        rep.instance = inst.str() + " [" + cf.what + (context.empty() ? "" : " " + context) + "]";
        rep.holds = false;
        rep.witness.emplace(cf.lhs, cf.rhs);
        return rep;
    };

    if (auto cf = check_triple_coverage(*d)) return fail_report(*cf, "");

    int p = 0;
    for (int i = m + 1; i <= n; ++i) p += mu[i - 1];

    std::optional<VerifyReport> failure;
    for (const auto& [pi1, pi2] : concatenated_basements(n, m)) {
        if (failure) break;
        Perm base = Perm::concatenate(pi1, pi2);
        Perm base_c = Perm::concatenate(pi1.empty() ? pi1 : pi1.complement(),
                                        pi2.empty() ? pi2 : pi2.complement());
        long count = 0;
        for_each_naf(d, base, [&](const AugFilling& f) {
            if (failure) return;
            ++count;
            if (auto cf = check_filling(*d, f)) {
                failure = fail_report(*cf, "basement=" + base.str());
                return;
            }
            if (auto cf = check_transfer(*d, f, m, p)) {
                failure = fail_report(*cf, "basement=" + base.str());
                return;
            }
        });
        if (failure) break;
        long count_c = 0;
        for_each_naf(d, base_c, [&](const AugFilling&) { ++count_c; });
        if (count != count_c) {
            failure = fail_report(CombFail{"|NAF^{pi1 pi2}| = |NAF^{pi1^c pi2^c}|",
                                           count_poly(n, count), count_poly(n, count_c)},
                                  "basement=" + base.str());
        }
    }
    if (failure) return *failure;

    if (auto cf = check_inverted_formula(mu)) return fail_report(*cf, "");

    VerifyReport rep;
    rep.identity_id = "combinatorial";
    rep.instance = inst.str();
    rep.holds = true;
    return rep;
}

std::vector<Composition> compositions_up_to(int parts, int degree_max) {
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts) {
            if (remaining == 0) out.push_back(Composition(cur));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    for (int d = 0; d <= degree_max; ++d) {
        if (parts == 0) {
            if (d == 0) out.push_back(Composition());
            continue;
        }
        rec(rec, 0, d);
    }
    return out;
}

std::vector<Composition> partitions_up_to(int parts, int degree_max) {
    std::vector<Composition> out;
    for (const Composition& c : compositions_up_to(parts, degree_max))
        if (c.weakly_decreasing()) out.push_back(c);
    return out;
}

std::vector<std::pair<Perm, Perm>> concatenated_basements(int n, int m) {
    std::vector<std::pair<Perm, Perm>> out;
    for (const Perm& pi1 : all_perms(1, m))
        for (const Perm& pi2 : all_perms(m + 1, n)) out.emplace_back(pi1, pi2);
    return out;
}

SuiteSummary run_suite(const SweepBounds& bounds, std::ostream* log, bool inject_fault) {
    const auto started = std::chrono::steady_clock::now();
    SuiteSummary summary;
    bool fault_pending = inject_fault;

    auto record = [&](FamilySummary& fam, VerifyReport rep) {
        ++fam.instances;
        ++summary.total_instances;
        if (!rep.holds) {
            ++fam.failures;
            ++summary.total_failures;
            if (log) *log << rep.to_json().dump() << "\n";
            if (!summary.first_failure) summary.first_failure = std::move(rep);
        }
    };

    auto basements_for = [&](int n) {
        std::vector<Perm> out;
        switch (bounds.basement_mode) {
            case SweepBounds::BasementMode::all:
                out = all_perms(1, n);
                break;
            case SweepBounds::BasementMode::concatenated_only: {
                for (int m = 0; m < n; ++m)
                    for (const auto& [pi1, pi2] : concatenated_basements(n, m)) {
                        Perm b = Perm::concatenate(pi1, pi2);
                        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
                    }
                std::sort(out.begin(), out.end());
                break;
            }
            case SweepBounds::BasementMode::sampled: {
                std::mt19937_64 rng(bounds.seed);
                std::vector<int> im;
                for (int i = 1; i <= n; ++i) im.push_back(i);
                for (int s = 0; s < bounds.sample_count; ++s) {
                    std::shuffle(im.begin(), im.end(), rng);
                    out.emplace_back(1, im);
                }
                break;
            }
        }
        return out;
    };

    // hhl-vs-hecke
    {
        FamilySummary fam{"hhl-vs-hecke"};
        for (int n = 1; n <= bounds.n_max; ++n)
            for (const Composition& mu : compositions_up_to(n, bounds.degree_max))
                for (const Perm& pi : basements_for(n)) {
                    if (fault_pending) {
                        XPoly lhs = hhl_polynomial(mu, pi);
                        XPoly::Exp e0 = lhs.terms().empty() ? XPoly::Exp(static_cast<size_t>(n), 0)
                                                            : lhs.terms().begin()->first;
                        lhs.add_term(e0, RationalQT(1));
                        std::ostringstream inst;
                        inst << "mu=" << mu.str() << " pi=" << pi.str() << " [injected fault]";
                        record(fam, VerifyReport::compare("hhl-vs-hecke", inst.str(), lhs,
                                                          permuted_E_via_hecke(mu, pi)));
                        fault_pending = false;
                    } else {
                        record(fam, verify_hhl_vs_hecke(mu, pi));
                    }
                }
        if (log) *log << nlohmann::json{{"identity_id", fam.identity_id},
                                        {"instances", fam.instances},
                                        {"failures", fam.failures}}.dump() << "\n";
        summary.families.push_back(fam);
    }

    // complement
    {
        FamilySummary fam{"complement"};
        for (int n = 2; n <= bounds.n_max; ++n)
            for (const Composition& mu : compositions_up_to(n, bounds.degree_max))
                for (int m = 1; m < n; ++m)
                    for (const auto& [pi1, pi2] : concatenated_basements(n, m))
                        record(fam, verify_complement(mu, pi1, pi2));
        if (log) *log << nlohmann::json{{"identity_id", fam.identity_id},
                                        {"instances", fam.instances},
                                        {"failures", fam.failures}}.dump() << "\n";
        summary.families.push_back(fam);
    }

    // concha-lapointe and kazhdan-lusztig over the same (lambda, gamma, n) range
    {
        FamilySummary cl{"concha-lapointe"}, kl{"kazhdan-lusztig"};
        for (int n = 1; n <= bounds.n_max; ++n)
            for (int m = 0; m <= n; ++m)
                for (const Composition& lambda : partitions_up_to(m, bounds.degree_max))
                    for (const Composition& gamma :
                         compositions_up_to(n - m, bounds.degree_max - lambda.total())) {
                        record(cl, verify_cl(lambda, gamma, n));
                        record(kl, verify_kl(lambda, gamma, n));
                    }
        for (const auto& fam : {cl, kl}) {
            if (log) *log << nlohmann::json{{"identity_id", fam.identity_id},
                                            {"instances", fam.instances},
                                            {"failures", fam.failures}}.dump() << "\n";
            summary.families.push_back(fam);
        }
    }

    // eigenvalue
    {
        FamilySummary fam{"eigenvalue"};
        for (int n = 1; n <= bounds.n_max; ++n)
            for (const Composition& mu : compositions_up_to(n, bounds.degree_max))
                for (int m = 0; m <= n; ++m) {
                    if (!mu.prefix(m).weakly_decreasing()) continue;
                    record(fam, verify_eigen(mu, m));
                }
        if (log) *log << nlohmann::json{{"identity_id", fam.identity_id},
                                        {"instances", fam.instances},
                                        {"failures", fam.failures}}.dump() << "\n";
        summary.families.push_back(fam);
    }

    // combinatorial
    {
        FamilySummary fam{"combinatorial"};
        for (int n = 1; n <= bounds.n_max; ++n)
            for (const Composition& mu : compositions_up_to(n, bounds.degree_max))
                for (int m = 0; m < n; ++m) record(fam, verify_combinatorial(mu, m));
        if (log) *log << nlohmann::json{{"identity_id", fam.identity_id},
                                        {"instances", fam.instances},
                                        {"failures", fam.failures}}.dump() << "\n";
        summary.families.push_back(fam);
    }

    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (log) {
        nlohmann::json j{{"total_instances", summary.total_instances},
                         {"total_failures", summary.total_failures},
                         {"all_hold", summary.all_hold()}};
        if (summary.first_failure) j["first_counterexample"] = summary.first_failure->to_json();
        *log << j.dump() << "\n";
    }
    return summary;
}

}  // namespace macpoly
