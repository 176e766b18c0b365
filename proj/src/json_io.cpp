#include "macpoly/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace macpoly {

namespace {

nlohmann::json bipoly_terms(const BiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        arr.push_back({c.get_num().get_str(), c.get_den().get_str(), std::to_string(e.q),
                       std::to_string(e.t)});
    }
    return arr;
}

std::string latex_bipoly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = e.q > 0 || e.t > 0;
        if (!has_vars || a != 1) os << a.get_str();
        if (e.q > 0) { os << "q"; if (e.q > 1) os << "^{" << e.q << "}"; }
        if (e.t > 0) { os << "t"; if (e.t > 1) os << "^{" << e.t << "}"; }
    }
    return os.str();
}

}  // namespace

nlohmann::json to_json(const RationalQT& r) {
    return {{"num", bipoly_terms(r.num())}, {"den", bipoly_terms(r.den())}};
}

nlohmann::json to_json(const XPoly& f) {
    std::vector<const XPoly::TermMap::value_type*> sorted;
    for (const auto& term : f.terms()) sorted.push_back(&term);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return term_order_less(a->first, b->first); });
    nlohmann::json terms = nlohmann::json::array();
    for (auto* term : sorted)
        terms.push_back({{"exp", term->first}, {"coeff", to_json(term->second)}});
    return {{"n", f.vars()}, {"terms", terms}};
}

std::string latex(const RationalQT& r) {
    if (r.den().is_one()) return latex_bipoly(r.num());
    return "\\frac{" + latex_bipoly(r.num()) + "}{" + latex_bipoly(r.den()) + "}";
}

std::string latex(const XPoly& f) {
    if (f.is_zero()) return "0";
    std::vector<const XPoly::TermMap::value_type*> sorted;
    for (const auto& term : f.terms()) sorted.push_back(&term);
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
        for (int i = 0; i < f.vars(); ++i) {
            if (e[i] == 0) continue;
            any = true;
            mono << "x_{" << (i + 1) << "}";
            if (e[i] > 1) mono << "^{" << e[i] << "}";
        }
        if (!any) {
            os << latex(c);
        } else if (c.is_one()) {
            os << mono.str();
        } else {
            const bool simple = c.den().is_one() && c.num().terms().size() == 1;
            if (simple)
                os << latex(c) << mono.str();
            else
                os << "\\left(" << latex(c) << "\\right)" << mono.str();
        }
    }
    return os.str();
}

std::string latex_tikz(const AugFilling& f) {
    const Diagram& d = f.diagram();
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.5]\n";
    for (int col = 1; col <= d.columns(); ++col) {
        for (int row = 0; row <= d.height(col); ++row) {
            os << "  \\draw (" << (col - 1) << "," << (row + 1) << ") rectangle ++(1,-1);"
               << " \\node at (" << (col - 1) << ".5," << row << ".5) {"
               << f.value({col, row}) << "};\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace macpoly
