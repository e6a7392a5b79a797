#pragma once

// Semistandard tableau enumeration, column words, lattice and "fits" tests,
// and the barred tableau sets with their diagram assignments.

#include <optional>
#include <string>
#include <vector>

#include "facs/shapes.hpp"

namespace facs {

// A filling of a skew shape with entries in 1..n, plus an optional set of
// barred cells. Entries are stored in the row-major order of shape.cells().
class Tableau {
public:
    Tableau(SkewShape shape, std::vector<int> entries, std::vector<bool> barred = {});

    const SkewShape& shape() const { return shape_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int entry(std::size_t cell_index) const { return entries_[cell_index]; }
    const std::vector<int>& entries() const { return entries_; }
    bool barred(std::size_t cell_index) const { return barred_[cell_index]; }
    int bar_count() const;

    // Rows weakly increase, columns strictly increase, entries >= 1; only
    // constraints between cells present in the skew shape apply.
    bool is_semistandard() const;

    // Entry multiplicities (weight_i = number of i's), i = 1..n.
    std::vector<int> weight(int n) const;

    bool operator==(const Tableau&) const = default;

    // Rows top to bottom, entries space-separated, "." for inner cells,
    // bars as a trailing apostrophe.
    std::string to_text() const;

private:
    SkewShape shape_;
    std::vector<Cell> cells_;
    std::vector<int> entries_;
    std::vector<bool> barred_;
};

// Cell indices sorted into column order: right-most column first, top to
// bottom within a column. Reading entries in this order gives the reverse
// column word, and "alpha < beta" throughout means alpha comes earlier here.
std::vector<std::size_t> column_order(const SkewShape& shape);

std::vector<int> column_word(const Tableau& t);

bool is_lattice(const std::vector<int>& word);

// The chain encoded by cw(t) when t fits the target shape, nullopt when it
// does not. SizeMismatch unless t has exactly |target| cells.
std::optional<ShapeChain> fits(const Tableau& t, const SkewShape& target);

// All semistandard fillings with entries in {1..n}, no bars, emitted in
// lexicographic order of the row-major entry sequence.
template <typename Sink>
void for_each_ssyt(const SkewShape& shape, int n, Sink&& sink) {
    require(n >= 1, Errc::IndexOutOfRange, "need n >= 1");
    const std::vector<Cell> cells = shape.cells();
    std::vector<int> entries(cells.size(), 0);
    // Row-major position of a cell, for neighbor lookups.
    auto find_cell = [&](int row, int col) -> int {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].row == row && cells[i].col == col) return static_cast<int>(i);
        return -1;
    };
    auto walk = [&](auto&& self, std::size_t at) -> void {
        if (at == cells.size()) {
            sink(Tableau(shape, entries));
            return;
        }
        int lo = 1;
        if (int left = find_cell(cells[at].row, cells[at].col - 1); left >= 0)
            lo = std::max(lo, entries[left]);
        if (int above = find_cell(cells[at].row - 1, cells[at].col); above >= 0)
            lo = std::max(lo, entries[above] + 1);
        for (int value = lo; value <= n; ++value) {
            entries[at] = value;
            self(self, at + 1);
        }
        entries[at] = 0;
    };
    walk(walk, 0);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int n);

// A barred tableau together with the diagram assignment for its unbarred
// cells: rho_index[i] = r means cell i lies between the r-th and (r+1)-st
// barred cell in column order, so it carries the chain's r-th diagram.
// Barred cells hold rho_index = -1.
struct BarAssignment {
    Tableau tableau;
    std::vector<int> rho_index;
};

// Re-checks every invariant of a produced assignment against its chain.
bool validate_bar_assignment(const BarAssignment& ba, const ShapeChain& chain);

namespace detail {

// All increasing position tuples where `word` (over the column order) carries
// `pattern` as a subsequence; distinct tuples are distinct results.
template <typename Sink>
void for_each_subsequence(const std::vector<int>& word, const std::vector<int>& pattern,
                          Sink&& sink) {
    std::vector<std::size_t> picks;
    auto walk = [&](auto&& self, std::size_t at, std::size_t from) -> void {
        if (at == pattern.size()) {
            sink(picks);
            return;
        }
        if (from + (pattern.size() - at) > word.size()) return;
        for (std::size_t q = from; q + (pattern.size() - at) <= word.size(); ++q) {
            if (word[q] != pattern[at]) continue;
            picks.push_back(q);
            self(self, at + 1, q + 1);
            picks.pop_back();
        }
    };
    walk(walk, 0, 0);
}

} // namespace detail

// Every semistandard theta-tableau with a column-ordered choice of barred
// cells carrying the Yamanouchi symbol of `chain`. Distinct bar placements
// on equal fillings are distinct elements.
template <typename Sink>
void for_each_barred(const SkewShape& theta, const ShapeChain& chain, int n, Sink&& sink) {
    const std::vector<std::size_t> order = column_order(theta);
    const std::vector<int>& pattern = chain.yamanouchi();
    for_each_ssyt(theta, n, [&](const Tableau& plain) {
        std::vector<int> word(order.size());
        for (std::size_t q = 0; q < order.size(); ++q) word[q] = plain.entry(order[q]);
        detail::for_each_subsequence(word, pattern, [&](const std::vector<std::size_t>& picks) {
            std::vector<bool> barred(order.size(), false);
            std::vector<int> rho_index(order.size(), 0);
            for (std::size_t q : picks) barred[order[q]] = true;
            std::size_t taken = 0;
            for (std::size_t q = 0; q < order.size(); ++q) {
                if (taken < picks.size() && picks[taken] == q) {
                    rho_index[order[q]] = -1;
                    ++taken;
                } else {
                    rho_index[order[q]] = static_cast<int>(taken);
                }
            }
            sink(BarAssignment{Tableau(theta, plain.entries(), std::move(barred)),
                               std::move(rho_index)});
        });
    });
}

// Disjoint union over all chains from mu to nu; NotContained if mu is not
// inside nu. Sink receives (chain, assignment).
template <typename Sink>
void for_each_T(const SkewShape& theta, const Partition& mu, const Partition& nu, int n,
                Sink&& sink) {
    for_each_chain(mu, nu, [&](const ShapeChain& chain) {
        for_each_barred(theta, chain, n,
                        [&](const BarAssignment& ba) { sink(chain, ba); });
    });
}

// A tableau from the k-omitted barred set, with both modified assignments.
// Inside the window between the (k-1)-st and (k+1)-st original bars,
// rho_plus carries diagram k and rho_minus diagram k-1; they agree with the
// plain assignment everywhere else.
struct BarAssignmentPM {
    Tableau tableau;
    std::vector<int> rho_plus;
    std::vector<int> rho_minus;
};

template <typename Sink>
void for_each_barred_k(const SkewShape& theta, const ShapeChain& chain, int k, int n,
                       Sink&& sink) {
    require(k >= 1 && k <= chain.length(), Errc::IndexOutOfRange,
            "bar index k out of range");
    const std::vector<std::size_t> order = column_order(theta);
    std::vector<int> pattern = chain.yamanouchi();
    pattern.erase(pattern.begin() + (k - 1));
    for_each_ssyt(theta, n, [&](const Tableau& plain) {
        std::vector<int> word(order.size());
        for (std::size_t q = 0; q < order.size(); ++q) word[q] = plain.entry(order[q]);
        detail::for_each_subsequence(word, pattern, [&](const std::vector<std::size_t>& picks) {
            std::vector<bool> barred(order.size(), false);
            std::vector<int> rho_plus(order.size(), 0), rho_minus(order.size(), 0);
            for (std::size_t q : picks) barred[order[q]] = true;
            std::size_t taken = 0;
            for (std::size_t q = 0; q < order.size(); ++q) {
                if (taken < picks.size() && picks[taken] == q) {
                    rho_plus[order[q]] = rho_minus[order[q]] = -1;
                    ++taken;
                    continue;
                }
                int c = static_cast<int>(taken); // bars before this cell
                if (c <= k - 2) {
                    rho_plus[order[q]] = rho_minus[order[q]] = c;
                } else if (c == k - 1) {
                    rho_plus[order[q]] = k;
                    rho_minus[order[q]] = k - 1;
                } else {
                    rho_plus[order[q]] = rho_minus[order[q]] = c + 1;
                }
            }
            sink(BarAssignmentPM{Tableau(theta, plain.entries(), std::move(barred)),
                                 std::move(rho_plus), std::move(rho_minus)});
        });
    });
}

} // namespace facs
