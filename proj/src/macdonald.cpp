#include "macpoly/macdonald.hpp"

#include <stdexcept>

namespace macpoly {

namespace {

// Exact quotient g / (x_i - x_{i+1}); throws if the division leaves a
// remainder, which would signal an arithmetic bug upstream.
XPoly divide_by_var_diff(const XPoly& g, int i) {
    const int n = g.vars();
    XPoly quot(n);
    XPoly rem = g;
    while (!rem.is_zero()) {
        // leading term under the map order (lex on exponent vectors)
        const auto& [e, c] = *rem.terms().rbegin();
        if (e[i - 1] == 0)
            throw std::logic_error("divided difference: division by x_i - x_{i+1} not exact");
        XPoly::Exp qe = e;
        qe[i - 1] -= 1;
        XPoly m = XPoly::monomial(n, qe, c);
        quot += m;
        XPoly sub(n);
        XPoly::Exp lo = qe;
        lo[i - 1] += 1;  // x_i * m
        XPoly::Exp hi = qe;
        hi[i] += 1;  // x_{i+1} * m
        sub.add_term(lo, c);
        sub.add_term(hi, -c);
        rem -= sub;
    }
    return quot;
}

}  // namespace

XPoly hhl_polynomial(const Composition& mu, const Perm& basement) {
    const int n = mu.size();
    if (basement.lo() != 1 || basement.size() != n)
        throw std::invalid_argument("hhl_polynomial: basement must be a permutation of [1,n]");
    XPoly result(n);
    auto d = std::make_shared<const Diagram>(mu);
    for_each_naf(d, basement, [&](const AugFilling& f) {
        auto [exp, coeff] = term_weight(f);
        result.add_term(exp, coeff);
    });
    return result;
}

XPoly nonsymmetric_E(const Composition& mu) {
    return hhl_polynomial(mu, Perm::identity(1, mu.size()));
}

XPoly demazure_lusztig(int i, const XPoly& f, bool inverse) {
    const int n = f.vars();
    if (i < 1 || i >= n) throw std::invalid_argument("demazure_lusztig: index out of range");
    XPoly swapped = f.substitute(SubstSpec::adjacent_swap(n, i));
    XPoly quot = divide_by_var_diff(swapped - f, i);
    const RationalQT t = RationalQT::t_power(1);
    XPoly tf = swapped.scaled(t) +
               (XPoly::variable(n, i + 1) * quot).scaled(t - RationalQT(1));
    if (!inverse) return tf;
    // T_i^{-1} = t^{-1} T_i + (t^{-1} - 1), forced by (T_i - t)(T_i + 1) = 0
    const RationalQT tinv = RationalQT::t_power(-1);
    return tf.scaled(tinv) + f.scaled(tinv - RationalQT(1));
}

XPoly hecke_apply(const Perm& pi, const XPoly& f, bool inverse) {
    if (pi.empty()) return f;
    if (pi.lo() != 1 || pi.hi() != f.vars())
        throw std::invalid_argument("hecke_apply: permutation must live on [1,n]");
    std::vector<int> word = pi.reduced_word();
    XPoly g = f;
    if (!inverse) {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            g = demazure_lusztig(*it, g, false);
    } else {
        for (int i : word) g = demazure_lusztig(i, g, true);
    }
    return g;
}

XPoly permuted_E_via_hecke(const Composition& mu, const Perm& pi) {
    XPoly e = nonsymmetric_E(mu);
    XPoly te = hecke_apply(pi, e);
    return te.scaled(RationalQT::t_power(-ell_mu(mu, pi)));
}

XPoly partial_P(const Composition& lambda, const Composition& gamma, int n) {
    if (!lambda.weakly_decreasing())
        throw std::invalid_argument("partial_P: lambda must be weakly decreasing");
    const int m = lambda.size();
    if (m + gamma.size() != n) throw std::invalid_argument("partial_P: sizes do not add to n");
    Composition mu = Composition::concat(lambda, gamma);
    XPoly e = nonsymmetric_E(mu);
    XPoly sum(n);
    for (const Perm& pi : coset_min_reps(lambda)) sum += hecke_apply(pi.extended(1, n), e);
    return sum;
}

XPoly symmetrizer_e(int m, const XPoly& f) {
    if (m <= 1) return f;
    XPoly sum(f.vars());
    for (const Perm& sigma : all_perms(1, m)) sum += hecke_apply(sigma.extended(1, f.vars()), f);
    return sum;
}

XPoly q_shift(const XPoly& f) { return f.substitute(SubstSpec::q_shift_rotation(f.vars())); }

XPoly cherednik_Y(int m, const XPoly& f) {
    const int n = f.vars();
    if (m < 0 || m > n) throw std::invalid_argument("cherednik_Y: m out of range");
    const int k = n - m;
    XPoly g = f;
    for (int s = 0; s < m; ++s) g = q_shift(g);
    for (int r = 1; r <= m; ++r) {
        // block T_r^{-1} ... T_{r+k-1}^{-1}, rightmost factor first
        for (int i = r + k - 1; i >= r; --i) g = demazure_lusztig(i, g, true);
    }
    return g.scaled(RationalQT::t_power(-m * (m - 1) / 2));
}

int b_mu(const Composition& mu, int m, int i) {
    const int n = mu.size();
    const int k = n - m;
    int count = 0;
    for (int j = 1; j <= m; ++j) {
        if (j < i && mu[j - 1] > mu[i - 1]) ++count;
        if (j > i && mu[j - 1] == mu[i - 1]) ++count;
    }
    for (int j = 1; j <= k; ++j)
        if (mu[m + j - 1] >= mu[i - 1]) ++count;
    return count;
}

XPoly kl_star(const XPoly& f) {
    const int n = f.vars();
    Perm w0 = Perm::long_element(1, n);
    XPoly g = f.invert_params().substitute(SubstSpec::reversal(n));
    g = hecke_apply(w0, g, /*inverse=*/true);
    return g.scaled(RationalQT::t_power(w0.length()));
}

}  // namespace macpoly
