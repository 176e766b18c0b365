#pragma once

#include <map>
#include <string>
#include <vector>

#include "macpoly/qt.hpp"

namespace macpoly {

/// Simultaneous variable substitution x_i -> q^{q_power(i)} * x_{source(i)}.
/// The source map must be a permutation of [1,n].
struct SubstSpec {
    struct Entry {
        int source = 0;   // 1-based variable index
        int q_power = 0;
    };
    std::vector<Entry> entries;

    explicit SubstSpec(std::vector<Entry> e);

    int vars() const { return static_cast<int>(entries.size()); }

    static SubstSpec identity(int n);
    // x_i -> x_{sigma_i(i)}, i.e. swap variables i and i+1
    static SubstSpec adjacent_swap(int n, int i);
    // x_i -> x_{n+1-i}
    static SubstSpec reversal(int n);
    // f(x) -> f(q x_n, x_1, ..., x_{n-1})
    static SubstSpec q_shift_rotation(int n);

    // Composition: apply this substitution first, then `after`. Satisfies
    // f.substitute(s1).substitute(s2) == f.substitute(s1.then(s2)).
    SubstSpec then(const SubstSpec& after) const;
};

/// Polynomial in x_1..x_n over Q(q,t). Exponent vectors are dense, length n;
/// no zero coefficients stored.
class XPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, RationalQT>;

    explicit XPoly(int n) : n_(n) {}
    static XPoly constant(int n, RationalQT c);
    static XPoly variable(int n, int i);  // x_i, 1-based
    static XPoly monomial(int n, Exp e, RationalQT c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    RationalQT coeff(const Exp& e) const;

    void add_term(const Exp& e, const RationalQT& c);

    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b);
    friend XPoly operator-(XPoly a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly scaled(const RationalQT& c) const;

    bool operator==(const XPoly&) const = default;

    XPoly substitute(const SubstSpec& s) const;
    XPoly invert_params() const;

    // Invariance under every adjacent transposition sigma_i, i < m.
    bool symmetric_in_first(int m) const;

    Rat eval(const Rat& q0, const Rat& t0, const std::vector<Rat>& x0) const;

    // Total x-degree (max over terms; -1 for zero).
    int total_degree() const;
    bool homogeneous_of_degree(int d) const;

    std::string str() const;

private:
    int n_;
    TermMap terms_;
};

/// Graded-lex comparison used for canonical printing and JSON emission:
/// lower total degree first, lex-descending within a degree.
bool term_order_less(const XPoly::Exp& a, const XPoly::Exp& b);

}  // namespace macpoly
