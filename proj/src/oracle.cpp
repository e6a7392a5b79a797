#include "facs/oracle.hpp"

#include <algorithm>

namespace facs {

const MultiPoly& Expansion::coeff(const Partition& nu) const {
    static const MultiPoly zero_poly;
    auto it = coeffs.find(nu);
    return it == coeffs.end() ? zero_poly : it->second;
}

namespace {

int max_x_index(const MultiPoly& p) {
    int top = 0;
    for (const auto& [m, c] : p.terms())
        for (const Monomial::Entry& e : m.entries())
            if (e.var.family == VarFamily::X) top = std::max(top, e.var.index);
    return top;
}

// Invariance under adjacent transpositions implies full S_n symmetry.
void check_symmetric(const MultiPoly& p, int n) {
    require(max_x_index(p) <= n, Errc::NotSymmetric,
            "input involves x-variables beyond x_" + std::to_string(n));
    for (int i = 1; i < n; ++i) {
        Specialization swap_spec;
        for (int k = 1; k <= n; ++k) swap_spec.set(x_var(k), MultiPoly::variable(x_var(k)));
        swap_spec.set(x_var(i), MultiPoly::variable(x_var(i + 1)));
        swap_spec.set(x_var(i + 1), MultiPoly::variable(x_var(i)));
        require(substitute(p, swap_spec) == p, Errc::NotSymmetric,
                "input is not symmetric under swapping x_" + std::to_string(i) + ", x_" +
                    std::to_string(i + 1));
    }
}

std::pair<Monomial, Monomial> split_x(const Monomial& m) {
    std::vector<Monomial::Entry> xs, rest;
    for (const Monomial::Entry& e : m.entries())
        (e.var.family == VarFamily::X ? xs : rest).push_back(e);
    return {Monomial::from_entries(std::move(xs)), Monomial::from_entries(std::move(rest))};
}

Partition partition_of_x_part(const Monomial& x_part, int n) {
    std::vector<int> exps(n, 0);
    for (const Monomial::Entry& e : x_part.entries()) exps[e.var.index - 1] = e.exp;
    for (std::size_t i = 1; i < exps.size(); ++i)
        require(exps[i - 1] >= exps[i], Errc::NonTerminating,
                "leading x-monomial is not a partition; elimination cannot proceed");
    return Partition(std::move(exps));
}

// Expands a symmetric x-homogeneous layer in classical Schur polynomials by
// eliminating lexicographically leading monomials x^lambda.
std::map<Partition, MultiPoly> expand_classical(MultiPoly layer, int n,
                                                std::map<Partition, MultiPoly>& schur_cache) {
    std::map<Partition, MultiPoly> out;
    while (!layer.is_zero()) {
        auto [x_part, unused] = split_x(layer.terms().rbegin()->first);
        Partition target = partition_of_x_part(x_part, n);
        // Full coefficient over the a/b variables for this leading x-monomial.
        MultiPoly coefficient;
        for (const auto& [m, c] : layer.terms()) {
            auto [xs, rest] = split_x(m);
            if (xs == x_part) coefficient.add_term(rest, c);
        }
        auto [it, inserted] = schur_cache.emplace(target, MultiPoly());
        if (inserted) it->second = schur(target, n);
        layer -= coefficient * it->second;
        out[target] = std::move(coefficient);
    }
    return out;
}

} // namespace

Expansion expand(const MultiPoly& p, int n, const SeqSpec& aseq) {
    require(n >= 1, Errc::IndexOutOfRange, "need n >= 1");
    check_symmetric(p, n);
    Expansion out;
    std::map<Partition, MultiPoly> schur_cache;
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        int degree = rest.x_degree();
        std::map<Partition, MultiPoly> layer =
            expand_classical(homogeneous_component(rest, degree), n, schur_cache);
        for (auto& [nu, coefficient] : layer) {
            rest -= coefficient * fac_schur(nu, n, aseq);
            out.coeffs[nu] = std::move(coefficient);
        }
        require(rest.is_zero() || rest.x_degree() < degree, Errc::NonTerminating,
                "x-degree failed to decrease during elimination");
    }
    return out;
}

Expansion product_expand(const SkewShape& theta, const Partition& mu, int n,
                         const SeqSpec& aseq, const SeqSpec& bseq) {
    return expand(fac_schur(theta, n, bseq) * fac_schur(mu, n, aseq), n, aseq);
}

} // namespace facs
