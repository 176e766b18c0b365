#pragma once

#include <json.hpp>

#include "macpoly/fillings.hpp"
#include "macpoly/qt.hpp"
#include "macpoly/xpoly.hpp"

namespace macpoly {

/// {"num": [[c_num, c_den, d_q, d_t], ...], "den": [...]}; integers are
/// decimal strings so coefficients survive arbitrary precision.
nlohmann::json to_json(const RationalQT& r);

/// {"n": n, "terms": [{"exp": [...], "coeff": ...}, ...]} in the canonical
/// term order (graded, then lex-descending).
nlohmann::json to_json(const XPoly& f);

std::string latex(const RationalQT& r);
std::string latex(const XPoly& f);

/// TikZ picture of an augmented filling in the style of column diagrams:
/// one unit square per box, basement in row 0.
std::string latex_tikz(const AugFilling& f);

}  // namespace macpoly
