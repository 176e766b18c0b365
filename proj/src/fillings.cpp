#include "macpoly/fillings.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace macpoly {

bool reading_before(Box x, Box y) {
    if (x.row != y.row) return x.row > y.row;
    return x.col > y.col;
}

bool attacking(Box u, Box v) {
    if (u.row == v.row) return u.col != v.col;
    // lower box strictly to the right of the upper box
    const Box& upper = u.row > v.row ? u : v;
    const Box& lower = u.row > v.row ? v : u;
    return upper.row == lower.row + 1 && lower.col > upper.col;
}

Diagram::Diagram(Composition shape) : shape_(std::move(shape)) {
    int max_h = 0;
    for (int i = 1; i <= columns(); ++i) max_h = std::max(max_h, height(i));
    for (int row = max_h; row >= 1; --row)
        for (int col = columns(); col >= 1; --col)
            if (row <= height(col)) cells_.push_back({col, row});

    legs_.resize(cells_.size());
    arms_.resize(cells_.size());
    for (size_t k = 0; k < cells_.size(); ++k) {
        Box u = cells_[k];
        legs_[k] = height(u.col) - u.row;
        arms_[k] = static_cast<int>(arm_boxes(u).size());
        arm_total_ += arms_[k];
    }

    attack_cells_.resize(cells_.size());
    attack_base_.resize(cells_.size());
    for (size_t k = 0; k < cells_.size(); ++k) {
        for (size_t j = 0; j < k; ++j)
            if (attacking(cells_[j], cells_[k])) attack_cells_[k].push_back(static_cast<int>(j));
        for (int col = 1; col <= columns(); ++col)
            if (attacking(Box{col, 0}, cells_[k])) attack_base_[k].push_back(col);
    }

    for (size_t k = 0; k < cells_.size(); ++k) {
        Box u = cells_[k];
        Box w{u.col, u.row - 1};
        for (Box v : arm_boxes(u)) triples_.push_back({u, v, w});
    }
}

bool Diagram::in_column_diagram(Box u) const {
    return u.col >= 1 && u.col <= columns() && u.row >= 1 && u.row <= height(u.col);
}

bool Diagram::in_augmented(Box u) const {
    return (u.row == 0 && u.col >= 1 && u.col <= columns()) || in_column_diagram(u);
}

int Diagram::cell_index(Box u) const {
    auto it = std::find(cells_.begin(), cells_.end(), u);
    return it == cells_.end() ? -1 : static_cast<int>(it - cells_.begin());
}

int Diagram::leg(Box u) const {
    int k = cell_index(u);
    if (k < 0) throw std::invalid_argument("leg: box outside the column diagram");
    return legs_[static_cast<size_t>(k)];
}

int Diagram::arm(Box u) const {
    int k = cell_index(u);
    if (k < 0) throw std::invalid_argument("arm: box outside the column diagram");
    return arms_[static_cast<size_t>(k)];
}

std::vector<Box> Diagram::arm_boxes(Box u) const {
    if (!in_column_diagram(u)) throw std::invalid_argument("arm_boxes: box outside the diagram");
    std::vector<Box> out;
    // arm^left: same row, strictly left, in a column of height <= this one
    for (int c = 1; c < u.col; ++c)
        if (height(c) <= height(u.col) && u.row <= height(c)) out.push_back({c, u.row});
    // arm^right: row below (basement allowed), strictly right, strictly shorter column
    for (int c = u.col + 1; c <= columns(); ++c)
        if (height(c) < height(u.col) && u.row - 1 <= height(c)) out.push_back({c, u.row - 1});
    return out;
}

std::pair<int, int> arm_leg(const Composition& mu, Box u) {
    Diagram d(mu);
    return {d.arm(u), d.leg(u)};
}

AugFilling::AugFilling(std::shared_ptr<const Diagram> diagram, Perm basement,
                       std::vector<int> cell_values)
    : diagram_(std::move(diagram)), basement_(std::move(basement)),
      cell_values_(std::move(cell_values)) {
    if (basement_.lo() != 1 || basement_.size() != diagram_->columns())
        throw std::invalid_argument("AugFilling: basement must be a permutation of [1,n]");
    if (cell_values_.size() != diagram_->cells().size())
        throw std::invalid_argument("AugFilling: one value per diagram cell required");
}

int AugFilling::value(Box u) const {
    if (u.row == 0) {
        if (u.col < 1 || u.col > diagram_->columns())
            throw std::invalid_argument("AugFilling::value: box outside the augmented diagram");
        return basement_(u.col);
    }
    int k = diagram_->cell_index(u);
    if (k < 0) throw std::invalid_argument("AugFilling::value: box outside the augmented diagram");
    return cell_values_[static_cast<size_t>(k)];
}

bool AugFilling::non_attacking() const {
    const auto& cells = diagram_->cells();
    for (size_t k = 0; k < cells.size(); ++k) {
        for (int j : diagram_->earlier_attackers(static_cast<int>(k)))
            if (cell_values_[static_cast<size_t>(j)] == cell_values_[k]) return false;
        for (int col : diagram_->basement_attackers(static_cast<int>(k)))
            if (basement_(col) == cell_values_[k]) return false;
    }
    return true;
}

bool AugFilling::operator==(const AugFilling& o) const {
    return diagram_->shape() == o.diagram_->shape() && basement_ == o.basement_ &&
           cell_values_ == o.cell_values_;
}

std::string AugFilling::str() const {
    std::ostringstream os;
    int max_h = 0;
    for (int c = 1; c <= diagram_->columns(); ++c) max_h = std::max(max_h, diagram_->height(c));
    for (int row = max_h; row >= 0; --row) {
        for (int col = 1; col <= diagram_->columns(); ++col) {
            if (col > 1) os << " ";
            if (row == 0 || diagram_->in_column_diagram({col, row}))
                os << value({col, row});
            else
                os << ".";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

int chi(const AugFilling& f, Box x, Box y) {
    // x must come first in reading order
    return f.value(x) > f.value(y) ? 1 : 0;
}

}  // namespace

bool is_inversion_triple(const AugFilling& f, const Triple& tr) {
    int s = chi(f, tr.u, tr.v) + chi(f, tr.v, tr.w) - chi(f, tr.u, tr.w);
    return s == 1;
}

FillingStats filling_stats(const AugFilling& f) {
    const Diagram& d = f.diagram();
    const Composition& mu = d.shape();
    FillingStats st;

    int lplus_changed = 0;  // sum of l(u)+1 over cells with value != below
    int arm_changed = 0;    // sum of a(u) over the same cells
    int des_arm = 0;
    for (Box u : d.cells()) {
        int above = f.value(u);
        int below = f.value({u.col, u.row - 1});
        if (above == below) continue;
        lplus_changed += d.leg(u) + 1;
        arm_changed += d.arm(u);
        if (above > below) {
            st.des.push_back(u);
            st.maj += d.leg(u) + 1;
            des_arm += d.arm(u);
        } else {
            st.asc.push_back(u);
        }
    }
    st.maj_prime = lplus_changed - st.maj;

    // |Inv|: attacking pairs over the full augmented diagram, earlier
    // reading-order box strictly larger.
    std::vector<Box> aug = d.cells();
    for (int col = d.columns(); col >= 1; --col) aug.push_back({col, 0});
    for (size_t a = 0; a < aug.size(); ++a)
        for (size_t b = a + 1; b < aug.size(); ++b)
            if (attacking(aug[a], aug[b]) && f.value(aug[a]) > f.value(aug[b]))
                ++st.inv_set_size;

    int basement_nondesc = 0;
    for (int i = 1; i <= d.columns(); ++i)
        for (int j = i + 1; j <= d.columns(); ++j)
            if (mu[i - 1] <= mu[j - 1] && f.value({i, 0}) < f.value({j, 0})) ++basement_nondesc;

    st.inv = st.inv_set_size - basement_nondesc - des_arm;
    st.coinv = d.arm_total() - st.inv;
    st.coinv_prime = arm_changed - st.coinv;
    return st;
}

void for_each_naf(const std::shared_ptr<const Diagram>& diagram, const Perm& basement,
                  const std::function<void(const AugFilling&)>& visit) {
    if (basement.lo() != 1 || basement.size() != diagram->columns())
        throw std::invalid_argument("for_each_naf: basement must be a permutation of [1,n]");
    const int n = diagram->columns();
    const size_t ncells = diagram->cells().size();
    std::vector<int> values(ncells, 0);

    auto fits = [&](size_t k, int v) {
        for (int j : diagram->earlier_attackers(static_cast<int>(k)))
            if (values[static_cast<size_t>(j)] == v) return false;
        for (int col : diagram->basement_attackers(static_cast<int>(k)))
            if (basement(col) == v) return false;
        return true;
    };

    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == ncells) {
            visit(AugFilling(diagram, basement, values));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (!fits(k, v)) continue;
            values[k] = v;
            self(self, k + 1);
            values[k] = 0;
        }
    };
    rec(rec, 0);
}

std::vector<AugFilling> enumerate_naf(const Composition& mu, const Perm& basement) {
    auto d = std::make_shared<const Diagram>(mu);
    std::vector<AugFilling> out;
    for_each_naf(d, basement, [&](const AugFilling& f) { out.push_back(f); });
    return out;
}

AugFilling complement_filling(const AugFilling& f, int m) {
    const int n = f.diagram().columns();
    Perm pi1, pi2;
    if (!f.basement().split_at(m, pi1, pi2))
        throw std::invalid_argument("complement_filling: basement does not split at m");
    auto flip = [&](int v) { return v <= m ? m + 1 - v : m + 1 + n - v; };
    std::vector<int> values = f.cell_values();
    for (int& v : values) v = flip(v);
    Perm basement = Perm::concatenate(pi1.empty() ? pi1 : pi1.complement(),
                                      pi2.empty() ? pi2 : pi2.complement());
    return AugFilling(f.diagram_ptr(), basement, std::move(values));
}

int large_count(const AugFilling& f, int m) {
    int count = 0;
    for (int v : f.cell_values())
        if (v > m) ++count;
    return count;
}

std::pair<std::vector<int>, RationalQT> term_weight(const AugFilling& f) {
    const Diagram& d = f.diagram();
    const int n = d.columns();
    std::vector<int> exp(static_cast<size_t>(n), 0);
    for (int v : f.cell_values()) ++exp[static_cast<size_t>(v - 1)];

    FillingStats st = filling_stats(f);
    RationalQT coeff = RationalQT::qt_monomial(st.maj, st.coinv);
    const BiPoly one_minus_t = BiPoly(1) - BiPoly::var_t();
    for (Box u : d.cells()) {
        if (f.value(u) == f.value({u.col, u.row - 1})) continue;
        BiPoly den = BiPoly(1) - BiPoly::monomial(1, d.leg(u) + 1, d.arm(u) + 1);
        coeff *= RationalQT(one_minus_t, den);
    }
    return {std::move(exp), std::move(coeff)};
}

}  // namespace macpoly
