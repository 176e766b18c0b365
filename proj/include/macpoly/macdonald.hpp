#pragma once

#include "macpoly/fillings.hpp"
#include "macpoly/symgroup.hpp"
#include "macpoly/xpoly.hpp"

namespace macpoly {

/// E_mu^pi by the combinatorial formula: sum of term weights over the
/// non-attacking fillings of mu with basement pi.
XPoly hhl_polynomial(const Composition& mu, const Perm& basement);

/// E_mu = E_mu^id.
XPoly nonsymmetric_E(const Composition& mu);

/// Demazure-Lusztig operator
///   T_i f = t sigma_i(f) + (t-1) x_{i+1} (sigma_i(f) - f)/(x_i - x_{i+1}),
/// or its inverse T_i^{-1} = t^{-1} T_i + (t^{-1} - 1). The divided
/// difference is an exact polynomial division with a zero-remainder check.
XPoly demazure_lusztig(int i, const XPoly& f, bool inverse = false);

/// T_pi f for pi on [1,n], via a reduced word i_1..i_l: operator product
/// T_{i_1} ... T_{i_l}, rightmost factor acting first. The inverse applies
/// T_{i_l}^{-1} first (operator T_{i_l}^{-1} ... T_{i_1}^{-1}).
XPoly hecke_apply(const Perm& pi, const XPoly& f, bool inverse = false);

/// E_mu^pi = t^{-ell_mu(pi)} T_pi E_mu; the Hecke-side construction, used
/// as the independent cross-check of hhl_polynomial.
XPoly permuted_E_via_hecke(const Composition& mu, const Perm& pi);

/// Partially symmetric P_{lambda|gamma} = sum over the minimal coset
/// representatives pi in S_m^lambda of T_pi E_{lambda|gamma}.
XPoly partial_P(const Composition& lambda, const Composition& gamma, int n);

/// e_m f = sum over sigma in S_m of T_sigma f (no t^{-l(w0)/2} prefactor;
/// the coefficient field stays Q(q,t)).
XPoly symmetrizer_e(int m, const XPoly& f);

/// The q-shift rotation: (shift f)(x) = f(q x_n, x_1, ..., x_{n-1}).
XPoly q_shift(const XPoly& f);

/// Cherednik eigenoperator Y_{-w_m} =
///   t^{-m(m-1)/2} (T_m^{-1}..T_{n-1}^{-1}) ... (T_1^{-1}..T_k^{-1}) shift^m
/// with k = n-m; blocks act right to left, the shift first.
XPoly cherednik_Y(int m, const XPoly& f);

/// Exponent of the Y eigenvalue: b_mu(i) for mu = lambda|gamma split at m,
/// 1 <= i <= m.
int b_mu(const Composition& mu, int m, int i);

/// Kazhdan-Lusztig star map f -> t^{l(w0)} T_{w0}^{-1} w0(f(q^{-1},t^{-1})).
XPoly kl_star(const XPoly& f);

}  // namespace macpoly
