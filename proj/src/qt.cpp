#include "macpoly/qt.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace macpoly {

namespace {

Rat pow_rat(const Rat& x, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Univariate polynomial over Q, dense coefficient vector, used for the
// content/primitive-part layer of the bivariate gcd.
using UniPoly = std::vector<Rat>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uni_trim(r);
    return r;
}

UniPoly uni_scaled_shift(const UniPoly& p, const Rat& c, size_t shift) {
    UniPoly r(p.size() + shift, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) r[i + shift] = p[i] * c;
    uni_trim(r);
    return r;
}

// Remainder of a by b over the field Q.
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        a = uni_sub(a, uni_scaled_shift(b, c, a.size() - b.size()));
    }
    return a;
}

// Monic gcd in Q[t].
UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

// View of a BiPoly as a polynomial in q with UniPoly coefficients in t.
std::vector<UniPoly> q_slices(const BiPoly& p) {
    std::vector<UniPoly> s(static_cast<size_t>(p.deg_q() + 1));
    for (const auto& [e, c] : p.terms()) {
        auto& slice = s[static_cast<size_t>(e.q)];
        if (slice.size() <= static_cast<size_t>(e.t)) slice.resize(e.t + 1, Rat(0));
        slice[static_cast<size_t>(e.t)] = c;
    }
    for (auto& slice : s) uni_trim(slice);
    return s;
}

BiPoly from_q_slices(const std::vector<UniPoly>& s) {
    BiPoly r;
    for (size_t dq = 0; dq < s.size(); ++dq)
        for (size_t dt = 0; dt < s[dq].size(); ++dt)
            if (s[dq][dt] != 0) r.add_term(static_cast<int>(dq), static_cast<int>(dt), s[dq][dt]);
    return r;
}

BiPoly from_uni_t(const UniPoly& u) {
    BiPoly r;
    for (size_t dt = 0; dt < u.size(); ++dt)
        if (u[dt] != 0) r.add_term(0, static_cast<int>(dt), u[dt]);
    return r;
}

// gcd in Q[t] of all q-slice coefficients, as a BiPoly in t alone.
BiPoly content_q(const BiPoly& p) {
    UniPoly g;
    for (const auto& slice : q_slices(p))
        if (!slice.empty()) g = uni_gcd(g, slice);
    return from_uni_t(g);
}

int lead_q_deg(const std::vector<UniPoly>& s) {
    for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i)
        if (!s[i].empty()) return i;
    return -1;
}

// Pseudo-remainder sequence step: returns a polynomial proportional to
// (f mod g) in q over Q[t], avoiding division by non-unit leading coefficients.
BiPoly pseudo_rem_q(const BiPoly& f, const BiPoly& g) {
    auto rs = q_slices(f);
    auto gs = q_slices(g);
    int dg = lead_q_deg(gs);
    const UniPoly& lcg = gs[static_cast<size_t>(dg)];
    int dr = lead_q_deg(rs);
    while (dr >= dg) {
        UniPoly lcr = rs[static_cast<size_t>(dr)];
        // r <- lcg * r - lcr * q^(dr-dg) * g
        std::vector<UniPoly> next(static_cast<size_t>(dr) + 1);
        for (int i = 0; i <= dr; ++i) next[i] = uni_mul(rs[i], lcg);
        for (int j = 0; j <= dg; ++j) {
            size_t k = static_cast<size_t>(j + dr - dg);
            next[k] = uni_sub(next[k], uni_mul(gs[j], lcr));
        }
        rs = std::move(next);
        dr = lead_q_deg(rs);
    }
    return from_q_slices(rs);
}

// Scalar c such that c*p has integer coprime coefficients and positive
// least-term coefficient. p must be nonzero.
Rat primitive_scalar(const BiPoly& p) {
    Int lcm_den(1), gcd_num(0);
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat s(lcm_den, gcd_num);
    s.canonicalize();
    if (p.terms().begin()->second * s < 0) s = -s;
    return s;
}

BiPoly primitive_part(const BiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(primitive_scalar(p));
}

}  // namespace

BiPoly BiPoly::monomial(Rat c, int dq, int dt) {
    BiPoly p;
    if (c != 0) p.terms_[{dq, dt}] = std::move(c);
    return p;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

int BiPoly::deg_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.q);
    return d;
}

int BiPoly::deg_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

void BiPoly::add_term(int dq, int dt, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({dq, dt}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.q, e.t, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.q, e.t, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea.q + eb.q, ea.t + eb.t, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const Rat& c) const {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

Rat BiPoly::eval(const Rat& q0, const Rat& t0) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow_rat(q0, e.q) * pow_rat(t0, e.t);
    return acc;
}

BiPoly BiPoly::reversed(int shift_q, int shift_t) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.q > shift_q || e.t > shift_t)
            throw std::logic_error("BiPoly::reversed: shift does not cover exponents");
        r.terms_[{shift_q - e.q, shift_t - e.t}] = c;
    }
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = e.q > 0 || e.t > 0;
        if (!has_vars || a != 1) {
            os << a.get_str();
            if (has_vars) os << "*";
        }
        if (e.q > 0) { os << "q"; if (e.q > 1) os << "^" << e.q; }
        if (e.q > 0 && e.t > 0) os << "*";
        if (e.t > 0) { os << "t"; if (e.t > 1) os << "^" << e.t; }
    }
    return os.str();
}

BiPoly exact_divide(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw std::logic_error("exact_divide: zero divisor");
    BiPoly quot;
    BiPoly rem = f;
    const auto lead = std::prev(g.terms().end());  // lex-largest term of g
    while (!rem.is_zero()) {
        const auto rl = std::prev(rem.terms().end());
        int dq = rl->first.q - lead->first.q;
        int dt = rl->first.t - lead->first.t;
        if (dq < 0 || dt < 0) throw std::logic_error("exact_divide: not divisible");
        Rat c = rl->second / lead->second;
        BiPoly m = BiPoly::monomial(c, dq, dt);
        quot += m;
        rem -= m * g;
    }
    return quot;
}

BiPoly gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);
    BiPoly cf = content_q(f), cg = content_q(g);
    BiPoly c = from_uni_t(uni_gcd(q_slices(cf)[0], q_slices(cg)[0]));
    BiPoly a = exact_divide(f, cf);
    BiPoly b = exact_divide(g, cg);
    if (a.deg_q() < b.deg_q()) std::swap(a, b);
    while (!b.is_zero()) {
        BiPoly r = pseudo_rem_q(a, b);
        a = std::move(b);
        if (r.is_zero()) {
            b = BiPoly();
        } else {
            b = exact_divide(r, content_q(r));
        }
    }
    return primitive_part(c * a);
}

RationalQT::RationalQT(const Rat& c) : num_(c), den_(1) {}

RationalQT::RationalQT(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalQT::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero in Q(q,t)");
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    BiPoly g = gcd(num_, den_);
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
    Rat s = primitive_scalar(den_);
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
}

RationalQT RationalQT::q_power(int e) { return qt_monomial(e, 0); }
RationalQT RationalQT::t_power(int e) { return qt_monomial(0, e); }

RationalQT RationalQT::qt_monomial(int a, int b) {
    BiPoly num = BiPoly::monomial(1, std::max(a, 0), std::max(b, 0));
    BiPoly den = BiPoly::monomial(1, std::max(-a, 0), std::max(-b, 0));
    RationalQT r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;  // already canonical
}

RationalQT RationalQT::operator-() const {
    RationalQT r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQT operator+(const RationalQT& a, const RationalQT& b) {
    return RationalQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalQT operator-(const RationalQT& a, const RationalQT& b) {
    return RationalQT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalQT operator*(const RationalQT& a, const RationalQT& b) {
    return RationalQT(a.num_ * b.num_, a.den_ * b.den_);
}

RationalQT operator/(const RationalQT& a, const RationalQT& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(q,t)");
    return RationalQT(a.num_ * b.den_, a.den_ * b.num_);
}

RationalQT RationalQT::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q,t)");
    return RationalQT(den_, num_);
}

RationalQT RationalQT::invert_params() const {
    int sq = std::max(num_.deg_q(), den_.deg_q());
    int st = std::max(num_.deg_t(), den_.deg_t());
    return RationalQT(num_.reversed(sq, st), den_.reversed(sq, st));
}

Rat RationalQT::eval(const Rat& q0, const Rat& t0) const {
    Rat d = den_.eval(q0, t0);
    if (d == 0)
        throw std::domain_error("pole in Q(q,t) evaluation at (q,t)=(" + q0.get_str() + "," +
                                t0.get_str() + ")");
    return num_.eval(q0, t0) / d;
}

std::string RationalQT::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace macpoly
