#include "macpoly/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace macpoly {

SubstSpec::SubstSpec(std::vector<Entry> e) : entries(std::move(e)) {
    std::vector<bool> seen(entries.size(), false);
    for (const auto& en : entries) {
        if (en.source < 1 || en.source > vars() || seen[en.source - 1])
            throw std::invalid_argument("SubstSpec: source map is not a permutation");
        seen[en.source - 1] = true;
    }
}

SubstSpec SubstSpec::identity(int n) {
    std::vector<Entry> e(n);
    for (int i = 0; i < n; ++i) e[i] = {i + 1, 0};
    return SubstSpec(std::move(e));
}

SubstSpec SubstSpec::adjacent_swap(int n, int i) {
    SubstSpec s = identity(n);
    std::swap(s.entries[i - 1].source, s.entries[i].source);
    return s;
}

SubstSpec SubstSpec::reversal(int n) {
    std::vector<Entry> e(n);
    for (int i = 0; i < n; ++i) e[i] = {n - i, 0};
    return SubstSpec(std::move(e));
}

SubstSpec SubstSpec::q_shift_rotation(int n) {
    std::vector<Entry> e(n);
    e[0] = {n, 1};
    for (int i = 1; i < n; ++i) e[i] = {i, 0};
    return SubstSpec(std::move(e));
}

SubstSpec SubstSpec::then(const SubstSpec& after) const {
    std::vector<Entry> e(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
        const Entry& first = entries[i];
        const Entry& second = after.entries[first.source - 1];
        e[i] = {second.source, first.q_power + second.q_power};
    }
    return SubstSpec(std::move(e));
}

XPoly XPoly::constant(int n, RationalQT c) {
    XPoly p(n);
    p.add_term(Exp(n, 0), c);
    return p;
}

XPoly XPoly::variable(int n, int i) {
    Exp e(n, 0);
    e.at(i - 1) = 1;
    return monomial(n, std::move(e), RationalQT(1));
}

XPoly XPoly::monomial(int n, Exp e, RationalQT c) {
    XPoly p(n);
    p.add_term(std::move(e), c);
    return p;
}

RationalQT XPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RationalQT() : it->second;
}

void XPoly::add_term(const Exp& e, const RationalQT& c) {
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("XPoly::add_term: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPoly XPoly::operator-() const {
    XPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("XPoly: mismatched variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("XPoly: mismatched variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("XPoly: mismatched variable counts");
    XPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            XPoly::Exp e(a.n_);
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

XPoly XPoly::scaled(const RationalQT& c) const {
    XPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

XPoly XPoly::substitute(const SubstSpec& s) const {
    if (s.vars() != n_) throw std::invalid_argument("substitute: spec length mismatch");
    XPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exp out(n_, 0);
        int qdeg = 0;
        for (int i = 0; i < n_; ++i) {
            out[s.entries[i].source - 1] += e[i];
            qdeg += s.entries[i].q_power * e[i];
        }
        r.add_term(out, c * RationalQT::q_power(qdeg));
    }
    return r;
}

XPoly XPoly::invert_params() const {
    XPoly r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.invert_params());
    return r;
}

bool XPoly::symmetric_in_first(int m) const {
    for (int i = 1; i < m; ++i)
        if (substitute(SubstSpec::adjacent_swap(n_, i)) != *this) return false;
    return true;
}

Rat XPoly::eval(const Rat& q0, const Rat& t0, const std::vector<Rat>& x0) const {
    if (static_cast<int>(x0.size()) != n_)
        throw std::invalid_argument("XPoly::eval: point length mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c.eval(q0, t0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= x0[i];
        acc += m;
    }
    return acc;
}

int XPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool XPoly::homogeneous_of_degree(int d) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

bool term_order_less(const XPoly::Exp& a, const XPoly::Exp& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;  // lex-descending within a degree, so x1 comes before x2
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    for (const auto& term : terms_) sorted.push_back(&term);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return term_order_less(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* term : sorted) {
        const auto& [e, c] = *term;
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!any) {
            os << c.str();
        } else if (c.is_one()) {
            os << mono.str();
        } else {
            const bool single = c.den().is_one() && c.num().terms().size() == 1;
            if (single)
                os << c.str() << "*" << mono.str();
            else
                os << "(" << c.str() << ")*" << mono.str();
        }
    }
    return os.str();
}

}  // namespace macpoly
