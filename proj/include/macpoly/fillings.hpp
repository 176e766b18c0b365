#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "macpoly/qt.hpp"
#include "macpoly/symgroup.hpp"

namespace macpoly {

/// Box of an augmented diagram, 1-based Cartesian (col, row); row 0 is the
/// basement.
struct Box {
    int col = 0;
    int row = 0;
    auto operator<=>(const Box&) const = default;
};

/// x precedes y in reading order: row by row from top to bottom, right to
/// left within a row.
bool reading_before(Box x, Box y);

/// Boxes attack iff they share a row, or sit in consecutive rows with the
/// lower box strictly to the right of the upper one.
bool attacking(Box u, Box v);

struct Triple {
    Box u, v, w;  // w = d(u), v in arm(u)
};

/// Shape data for a composition: the column diagram, arm/leg statistics and
/// the triple list, with attack adjacency precomputed for enumeration.
class Diagram {
public:
    explicit Diagram(Composition shape);

    const Composition& shape() const { return shape_; }
    int columns() const { return shape_.size(); }
    int height(int col) const { return shape_[col - 1]; }

    bool in_column_diagram(Box u) const;
    bool in_augmented(Box u) const;

    /// Cells of dg'(mu) in reading order.
    const std::vector<Box>& cells() const { return cells_; }
    int cell_index(Box u) const;  // -1 if absent

    int leg(Box u) const;
    int arm(Box u) const;
    std::vector<Box> arm_boxes(Box u) const;
    int arm_total() const { return arm_total_; }

    const std::vector<Triple>& triples() const { return triples_; }

    /// Attackers of cell k that are earlier in reading order (cell indices)
    /// or in the basement (columns).
    const std::vector<int>& earlier_attackers(int k) const { return attack_cells_[k]; }
    const std::vector<int>& basement_attackers(int k) const { return attack_base_[k]; }

private:
    Composition shape_;
    std::vector<Box> cells_;
    std::vector<int> legs_, arms_;
    std::vector<std::vector<int>> attack_cells_, attack_base_;
    std::vector<Triple> triples_;
    int arm_total_ = 0;
};

/// (a(u), l(u)) for a box of the column diagram of mu.
std::pair<int, int> arm_leg(const Composition& mu, Box u);

/// Augmented filling: basement permutation in row 0, a value in [1,n] on
/// every cell of dg'(mu), no two attacking boxes equal.
class AugFilling {
public:
    AugFilling(std::shared_ptr<const Diagram> diagram, Perm basement,
               std::vector<int> cell_values);

    const Diagram& diagram() const { return *diagram_; }
    std::shared_ptr<const Diagram> diagram_ptr() const { return diagram_; }
    const Perm& basement() const { return basement_; }
    const std::vector<int>& cell_values() const { return cell_values_; }

    int value(Box u) const;  // defined on the full augmented diagram
    bool non_attacking() const;

    bool operator==(const AugFilling&) const;
    std::string str() const;  // rows top to bottom, basement last

private:
    std::shared_ptr<const Diagram> diagram_;
    Perm basement_;
    std::vector<int> cell_values_;  // aligned with diagram().cells()
};

struct FillingStats {
    int maj = 0;
    int maj_prime = 0;
    int inv = 0;
    int coinv = 0;
    int coinv_prime = 0;
    int inv_set_size = 0;  // |Inv|, attacking inversion pairs incl. basement
    std::vector<Box> des, asc;
};

FillingStats filling_stats(const AugFilling& f);

/// True for an inversion triple: chi_uv + chi_vw - chi_uw = 1.
bool is_inversion_triple(const AugFilling& f, const Triple& tr);

/// Enumerate NAF_mu^pi in depth-first reading order, candidate values
/// ascending; each filling is visited exactly once.
void for_each_naf(const std::shared_ptr<const Diagram>& diagram, const Perm& basement,
                  const std::function<void(const AugFilling&)>& visit);
std::vector<AugFilling> enumerate_naf(const Composition& mu, const Perm& basement);

/// The complement bijection f: values <= m reflect within [1,m], values > m
/// within [m+1,n]; the basement pi1 pi2 becomes pi1^c pi2^c. Requires the
/// basement to preserve the split at m.
AugFilling complement_filling(const AugFilling& f, int m);

/// L: number of cells whose value exceeds m.
int large_count(const AugFilling& f, int m);

/// Monomial exponent vector (value multiplicities) and the full scalar
/// weight q^maj t^coinv prod (1-t)/(1-q^{l+1} t^{a+1}) of one filling.
std::pair<std::vector<int>, RationalQT> term_weight(const AugFilling& f);

}  // namespace macpoly
