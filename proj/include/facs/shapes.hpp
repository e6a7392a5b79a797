#pragma once

// Partitions, skew diagrams, the containment lattice, hooks, dimensions,
// and saturated chain sequences through the Young lattice.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facs/rational.hpp"
#include "facs/ring.hpp"

namespace facs {

// Weakly decreasing sequence of positive integers; the empty sequence is the
// empty partition. Trailing zeros are never stored, so equality is canonical.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts); // trims zeros, validates

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const; // |lambda|
    bool empty() const { return parts_.empty(); }
    int part(int i) const; // 1-indexed; 0 beyond the length
    const std::vector<int>& parts() const { return parts_; }

    bool has_cell(int row, int col) const;
    // The partition with one cell added at `row`, if that is still a
    // partition shape.
    std::optional<Partition> with_cell_at(int row) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const; // "4,3,1"; empty partition is "0"
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
bool contains(const Partition& mu, const Partition& nu); // mu subseteq nu
Partition join(const Partition& l, const Partition& r);  // componentwise max

struct Cell {
    int row = 1; // 1-indexed
    int col = 1;
    int content() const { return col - row; }
    auto operator<=>(const Cell&) const = default;
};

// Cells of outer not in inner; inner must be contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    /*implicit*/ SkewShape(const Partition& outer) : SkewShape(outer, Partition()) {}
    SkewShape(Partition outer, Partition inner); // NotContained on violation

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    int rows() const { return outer_.length(); }
    bool normal() const { return inner_.empty(); }

    std::vector<Cell> cells() const; // row-major

    auto operator<=>(const SkewShape&) const = default;

    std::string to_string() const; // "4,3,1/2,1"; normal shapes print the outer only
    static SkewShape parse(const std::string& text);

private:
    Partition outer_;
    Partition inner_;
};

// All sigma with rho -> sigma (one cell added), optionally bounded above,
// in increasing order of the added cell's row.
std::vector<std::pair<Partition, int>> covers_above(const Partition& rho,
                                                    const Partition* bound = nullptr);
// All nu' with nu' -> nu (one corner removed), in increasing row order.
std::vector<std::pair<Partition, int>> covers_below(const Partition& nu);

// A saturated chain mu -> ... -> nu with its Yamanouchi symbol (the row of
// each added cell).
class ShapeChain {
public:
    explicit ShapeChain(Partition start);
    ShapeChain(std::vector<Partition> diagrams, std::vector<int> yamanouchi); // validates

    const std::vector<Partition>& diagrams() const { return diagrams_; }
    const std::vector<int>& yamanouchi() const { return yamanouchi_; }
    int length() const { return static_cast<int>(yamanouchi_.size()); }
    const Partition& start() const { return diagrams_.front(); }
    const Partition& end() const { return diagrams_.back(); }

    // The chain starting at mu whose added-cell rows read `word`, if valid.
    static std::optional<ShapeChain> from_yamanouchi(const Partition& mu,
                                                     const std::vector<int>& word);

    bool operator==(const ShapeChain&) const = default;

private:
    std::vector<Partition> diagrams_;
    std::vector<int> yamanouchi_;
};

// Enumerates every saturated chain from mu to nu in lexicographic order of
// Yamanouchi symbols. The sink is invoked once per chain.
template <typename Sink>
void for_each_chain(const Partition& mu, const Partition& nu, Sink&& sink) {
    require(contains(mu, nu), Errc::NotContained, "chain endpoints need mu inside nu");
    std::vector<Partition> diagrams{mu};
    std::vector<int> rows;
    auto walk = [&](auto&& self) -> void {
        if (diagrams.back() == nu) {
            sink(ShapeChain(diagrams, rows));
            return;
        }
        for (const auto& [sigma, row] : covers_above(diagrams.back(), &nu)) {
            diagrams.push_back(sigma);
            rows.push_back(row);
            self(self);
            diagrams.pop_back();
            rows.pop_back();
        }
    };
    walk(walk);
}

std::vector<ShapeChain> chains(const Partition& mu, const Partition& nu);

// Product of hook lengths; 1 for the empty partition.
long long hook_product(const Partition& lambda);

// Number of standard tableaux of the skew shape (memoized chain count).
long long dim_skew(const SkewShape& shape);

// h(nu/mu) = |nu/mu|! / dim(nu/mu), an exact rational.
Rational h_skew(const SkewShape& shape);

// The evaluation point a_rho = (a_{rho_1+n}, ..., a_{rho_n+1}).
std::vector<VarRef> a_rho_point(const Partition& rho, int n);

// |a_rho| = a_{rho_1+n} + ... + a_{rho_n+1} as a linear polynomial.
MultiPoly a_weight(const Partition& rho, int n);

// All partitions fitting in a rows x cols box (including the empty one),
// in a fixed deterministic order.
std::vector<Partition> partitions_in_box(int rows, int cols);

// All rho with lo subseteq rho subseteq hi.
std::vector<Partition> partitions_between(const Partition& lo, const Partition& hi);

} // namespace facs
