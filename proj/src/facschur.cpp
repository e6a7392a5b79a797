#include "facs/facschur.hpp"

#include <algorithm>
#include <functional>

namespace facs {

SeqSpec SeqSpec::explicit_table(std::map<int, Rational> values) {
    SeqSpec s(Kind::Explicit);
    s.rule_ = FamilyRule::explicit_table(std::move(values));
    return s;
}

MultiPoly SeqSpec::entry(int index) const {
    switch (kind_) {
    case Kind::SymbolicA: return MultiPoly::variable(a_var(index));
    case Kind::SymbolicB: return MultiPoly::variable(b_var(index));
    case Kind::Shifted: return MultiPoly(rat(index - 1));
    case Kind::Zero: return MultiPoly();
    case Kind::Explicit: return MultiPoly(rule_.value_at(index));
    }
    return MultiPoly();
}

Rational SeqSpec::value(int index) const {
    require(!symbolic(), Errc::UnassignedVariable,
            "symbolic sequence has no numeric value");
    switch (kind_) {
    case Kind::Shifted: return rat(index - 1);
    case Kind::Zero: return rat(0);
    default: return rule_.value_at(index);
    }
}

FamilyRule SeqSpec::as_rule() const {
    require(!symbolic(), Errc::UnassignedVariable, "symbolic sequence is not a rule");
    switch (kind_) {
    case Kind::Shifted: return FamilyRule::shifted();
    case Kind::Zero: return FamilyRule::zero();
    default: return rule_;
    }
}

Window content_window(const SkewShape& shape, int n) {
    int min_content = 0, max_content = 0;
    for (const Cell& cell : shape.cells()) {
        min_content = std::min(min_content, cell.content());
        max_content = std::max(max_content, cell.content());
    }
    return Window{std::min(1, 1 + min_content), n + max_content};
}

MultiPoly falling_product(const MultiPoly& y, int k, const SeqSpec& seq) {
    require(k >= 0, Errc::IndexOutOfRange, "need k >= 0");
    MultiPoly out(rat(1));
    for (int i = 1; i <= k; ++i) out *= y - seq.entry(i);
    return out;
}

namespace {

MultiPoly determinant(std::vector<std::vector<MultiPoly>>& m, std::vector<int>& cols,
                      std::size_t row) {
    if (cols.empty()) return MultiPoly(rat(1));
    MultiPoly out;
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        int col = cols[pick];
        cols.erase(cols.begin() + pick);
        MultiPoly minor = determinant(m, cols, row + 1);
        cols.insert(cols.begin() + pick, col);
        MultiPoly piece = m[row][col] * minor;
        if (pick % 2 == 0)
            out += piece;
        else
            out -= piece;
    }
    return out;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
    std::vector<int> cols(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) cols[j] = static_cast<int>(j);
    return determinant(m, cols, 0);
}

MultiPoly vandermonde(int n) {
    MultiPoly out(rat(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out *= MultiPoly::variable(x_var(i)) - MultiPoly::variable(x_var(j));
    return out;
}

MultiPoly alternant_ratio(const Partition& lambda, int n,
                          const std::function<MultiPoly(int xj, int power)>& entry) {
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = entry(j, lambda.part(i) + n - i);
    return exact_div(determinant(std::move(m)), vandermonde(n));
}

} // namespace

MultiPoly schur(const Partition& lambda, int n) {
    require(lambda.length() <= n, Errc::TooLong,
            "partition longer than the variable count");
    if (n == 0) return MultiPoly(rat(1));
    return alternant_ratio(lambda, n, [](int j, int power) {
        return MultiPoly::term(rat(1), Monomial::variable(x_var(j), power));
    });
}

MultiPoly fac_schur(const SkewShape& theta, int n, const SeqSpec& seq) {
    const Window window = content_window(theta, n);
    const std::vector<Cell> cells = theta.cells();
    MultiPoly out;
    for_each_ssyt(theta, n, [&](const Tableau& t) {
        MultiPoly product(rat(1));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int entry = t.entry(i);
            product *= MultiPoly::variable(x_var(entry)) -
                       seq.entry(window.require(entry + cells[i].content()));
        }
        out += product;
    });
    return out;
}

MultiPoly fac_schur(const Partition& lambda, int n, const SeqSpec& seq) {
    require(lambda.length() <= n, Errc::TooLong,
            "partition longer than the variable count");
    return fac_schur(SkewShape(lambda), n, seq);
}

MultiPoly fac_schur_det(const Partition& lambda, int n, const SeqSpec& seq) {
    require(lambda.length() <= n, Errc::TooLong,
            "partition longer than the variable count");
    if (n == 0) return MultiPoly(rat(1));
    return alternant_ratio(lambda, n, [&](int j, int power) {
        return falling_product(MultiPoly::variable(x_var(j)), power, seq);
    });
}

MultiPoly shifted_schur(const Partition& lambda, int n) {
    return fac_schur(lambda, n, SeqSpec::shifted());
}

Specialization a_point_specialization(const Partition& rho, int n, const SeqSpec& seq) {
    const Window window{1, rho.part(1) + n};
    Specialization s;
    std::vector<VarRef> point = a_rho_point(rho, n);
    for (int k = 1; k <= n; ++k)
        s.set(x_var(k), seq.entry(window.require(point[k - 1].index)));
    return s;
}

MultiPoly eval_at_partition(const Partition& lambda, const Partition& rho, int n,
                            const SeqSpec& seq) {
    return substitute(fac_schur(lambda, n, seq), a_point_specialization(rho, n, seq));
}

MultiPoly g_coeff(const Partition& lambda, const Partition& nu, int n) {
    require(contains(nu, lambda), Errc::NotContained, "need nu inside lambda");
    require(lambda.length() <= n, Errc::TooLong,
            "partition longer than the variable count");
    const SkewShape theta(lambda);
    const Window window = content_window(theta, n);
    const std::vector<Cell> cells = theta.cells();
    MultiPoly out;
    for_each_T(theta, Partition(), nu, n,
               [&](const ShapeChain&, const BarAssignment& ba) {
                   MultiPoly product(rat(1));
                   for (std::size_t i = 0; i < cells.size(); ++i) {
                       if (ba.tableau.barred(i)) continue;
                       int entry = ba.tableau.entry(i);
                       product *= MultiPoly::variable(
                           a_var(window.require(entry + cells[i].content())));
                   }
                   out += product;
               });
    if ((lambda.size() - nu.size()) % 2 != 0) return -out;
    return out;
}

} // namespace facs
