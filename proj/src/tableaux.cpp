#include "facs/tableaux.hpp"

#include <algorithm>
#include <map>

namespace facs {

Tableau::Tableau(SkewShape shape, std::vector<int> entries, std::vector<bool> barred)
    : shape_(std::move(shape)), cells_(shape_.cells()), entries_(std::move(entries)),
      barred_(std::move(barred)) {
    require(entries_.size() == cells_.size(), Errc::SizeMismatch,
            "entry count does not match the shape");
    if (barred_.empty()) barred_.assign(cells_.size(), false);
    require(barred_.size() == cells_.size(), Errc::SizeMismatch,
            "bar flags do not match the shape");
}

int Tableau::bar_count() const {
    return static_cast<int>(std::count(barred_.begin(), barred_.end(), true));
}

bool Tableau::is_semistandard() const {
    std::map<std::pair<int, int>, int> at;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (entries_[i] < 1) return false;
        at[{cells_[i].row, cells_[i].col}] = entries_[i];
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto left = at.find({cells_[i].row, cells_[i].col - 1});
        if (left != at.end() && entries_[i] < left->second) return false;
        auto above = at.find({cells_[i].row - 1, cells_[i].col});
        if (above != at.end() && entries_[i] <= above->second) return false;
    }
    return true;
}

std::vector<int> Tableau::weight(int n) const {
    std::vector<int> counts(n, 0);
    for (int value : entries_)
        if (value >= 1 && value <= n) counts[value - 1] += 1;
    return counts;
}

std::string Tableau::to_text() const {
    std::string out;
    std::size_t at = 0;
    for (int row = 1; row <= shape_.outer().length(); ++row) {
        if (row > 1) out += "\n";
        for (int col = 1; col <= shape_.outer().part(row); ++col) {
            if (col > 1) out += " ";
            if (col <= shape_.inner().part(row)) {
                out += ".";
            } else {
                out += std::to_string(entries_[at]);
                if (barred_[at]) out += "'";
                ++at;
            }
        }
    }
    return out;
}

std::vector<std::size_t> column_order(const SkewShape& shape) {
    const std::vector<Cell> cells = shape.cells();
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (cells[l].col != cells[r].col) return cells[l].col > cells[r].col;
        return cells[l].row < cells[r].row;
    });
    return order;
}

std::vector<int> column_word(const Tableau& t) {
    std::vector<int> word;
    for (std::size_t i : column_order(t.shape())) word.push_back(t.entry(i));
    return word;
}

bool is_lattice(const std::vector<int>& word) {
    std::map<int, int> counts;
    for (int value : word) {
        counts[value] += 1;
        if (value > 1 && counts[value] > counts[value - 1]) return false;
    }
    return true;
}

std::optional<ShapeChain> fits(const Tableau& t, const SkewShape& target) {
    require(static_cast<int>(t.cells().size()) == target.size(), Errc::SizeMismatch,
            "tableau and target shape differ in cell count");
    std::optional<ShapeChain> chain =
        ShapeChain::from_yamanouchi(target.inner(), column_word(t));
    if (!chain || chain->end() != target.outer()) return std::nullopt;
    return chain;
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int n) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

bool validate_bar_assignment(const BarAssignment& ba, const ShapeChain& chain) {
    const Tableau& t = ba.tableau;
    if (!t.is_semistandard()) return false;
    if (ba.rho_index.size() != t.cells().size()) return false;
    std::vector<std::size_t> order = column_order(t.shape());
    // Barred cells, read in column order, must spell the Yamanouchi symbol.
    std::vector<int> barred_values;
    int seen_bars = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
        std::size_t i = order[q];
        if (t.barred(i)) {
            barred_values.push_back(t.entry(i));
            if (ba.rho_index[i] != -1) return false;
            ++seen_bars;
        } else {
            if (ba.rho_index[i] != seen_bars) return false;
        }
    }
    return barred_values == chain.yamanouchi();
}

} // namespace facs
