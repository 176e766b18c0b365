#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace macpoly {

using Int = mpz_class;
using Rat = mpq_class;

/// Exponent pair of a q,t-monomial. Ordered lexicographically by (q, t).
struct QTExp {
    int q = 0;
    int t = 0;
    auto operator<=>(const QTExp&) const = default;
};

/// Bivariate polynomial in q, t with exact rational coefficients.
/// Invariant: no stored coefficient is zero; exponents are unique and >= 0.
class BiPoly {
public:
    using TermMap = std::map<QTExp, Rat>;

    BiPoly() = default;
    BiPoly(long c) { if (c != 0) terms_[{0, 0}] = c; }
    BiPoly(const Rat& c) { if (c != 0) terms_[{0, 0}] = c; }

    static BiPoly monomial(Rat c, int dq, int dt);
    static BiPoly var_q() { return monomial(1, 1, 0); }
    static BiPoly var_t() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    // Degree in the given variable; -1 for the zero polynomial.
    int deg_q() const;
    int deg_t() const;

    void add_term(int dq, int dt, const Rat& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    BiPoly scaled(const Rat& c) const;

    bool operator==(const BiPoly&) const = default;

    Rat eval(const Rat& q0, const Rat& t0) const;

    // Substitute q -> 1/q, t -> 1/t and clear denominators with the monomial
    // q^shift_q t^shift_t (caller guarantees shift covers all exponents).
    BiPoly reversed(int shift_q, int shift_t) const;

    std::string str() const;

private:
    TermMap terms_;
};

/// gcd over the UFD Q[q,t], computed by primitive-part recursion in q over
/// Q[t]. Result is defined up to a rational scalar; this routine returns the
/// primitive integer representative with positive least term.
BiPoly gcd(const BiPoly& f, const BiPoly& g);

/// Exact quotient f/g; throws std::logic_error if g does not divide f.
BiPoly exact_divide(const BiPoly& f, const BiPoly& g);

/// Element of the field Q(q,t), stored as a reduced fraction num/den.
/// Canonical form: gcd(num, den) = 1, den has integer coefficients with
/// content 1, and the coefficient of den's lexicographically least term
/// (ordered by (d_q, d_t)) is positive. Structural equality is then
/// equality in the field.
class RationalQT {
public:
    RationalQT() : num_(), den_(1) {}
    RationalQT(long c) : num_(c), den_(1) {}
    RationalQT(const Rat& c);
    RationalQT(BiPoly p) : num_(std::move(p)), den_(1) {}
    RationalQT(BiPoly num, BiPoly den);

    static RationalQT q_power(int e);
    static RationalQT t_power(int e);
    // q^a t^b with integer (possibly negative) exponents
    static RationalQT qt_monomial(int a, int b);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalQT operator-() const;
    friend RationalQT operator+(const RationalQT& a, const RationalQT& b);
    friend RationalQT operator-(const RationalQT& a, const RationalQT& b);
    friend RationalQT operator*(const RationalQT& a, const RationalQT& b);
    friend RationalQT operator/(const RationalQT& a, const RationalQT& b);
    RationalQT& operator+=(const RationalQT& o) { return *this = *this + o; }
    RationalQT& operator-=(const RationalQT& o) { return *this = *this - o; }
    RationalQT& operator*=(const RationalQT& o) { return *this = *this * o; }
    RationalQT& operator/=(const RationalQT& o) { return *this = *this / o; }

    RationalQT inverse() const;

    bool operator==(const RationalQT&) const = default;

    // The coefficient-level map q -> 1/q, t -> 1/t, re-expressed with
    // nonnegative exponents by clearing a common monomial.
    RationalQT invert_params() const;

    // Exact evaluation; throws on a pole, naming the offending point.
    Rat eval(const Rat& q0, const Rat& t0) const;

    std::string str() const;

private:
    BiPoly num_, den_;
    void normalize();
};

}  // namespace macpoly
