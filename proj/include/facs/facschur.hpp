#pragma once

// Classical, factorial, and shifted Schur polynomials by both definitional
// routes, evaluations at partition points, and the change-of-basis
// coefficients into classical Schur polynomials.

#include "facs/ring.hpp"
#include "facs/shapes.hpp"
#include "facs/tableaux.hpp"

namespace facs {

// One of the sequences the factorial constructions subtract from x: the
// symbolic a- or b-family, the shifted sequence a_i = i-1, all zeros, or an
// explicit rational table over a window.
class SeqSpec {
public:
    enum class Kind { SymbolicA, SymbolicB, Shifted, Zero, Explicit };

    static SeqSpec symbolic_a() { return SeqSpec(Kind::SymbolicA); }
    static SeqSpec symbolic_b() { return SeqSpec(Kind::SymbolicB); }
    static SeqSpec shifted() { return SeqSpec(Kind::Shifted); }
    static SeqSpec zero() { return SeqSpec(Kind::Zero); }
    static SeqSpec explicit_table(std::map<int, Rational> values);

    Kind kind() const { return kind_; }
    bool symbolic() const { return kind_ == Kind::SymbolicA || kind_ == Kind::SymbolicB; }

    // The sequence member at `index` as a polynomial (a variable for the
    // symbolic kinds, a constant otherwise).
    MultiPoly entry(int index) const;
    // Numeric kinds only.
    Rational value(int index) const;

    // The family rule equivalent of a numeric sequence, for specializations.
    FamilyRule as_rule() const;

private:
    explicit SeqSpec(Kind kind) : kind_(kind) {}
    Kind kind_;
    FamilyRule rule_ = FamilyRule::zero();
};

// Index window for sequence lookups T(alpha)+c(alpha) over fillings of a
// shape with entries up to n. Skew shapes can reach indices below 1.
Window content_window(const SkewShape& shape, int n);

// (y|a)^k = (y - a_1)...(y - a_k); the empty product for k = 0.
MultiPoly falling_product(const MultiPoly& y, int k, const SeqSpec& seq);

// Classical Schur polynomial via the bialternant (determinant ratio).
MultiPoly schur(const Partition& lambda, int n);

// Factorial Schur polynomial by the tableau sum; the default route.
MultiPoly fac_schur(const Partition& lambda, int n,
                    const SeqSpec& seq = SeqSpec::symbolic_a());
// Skew variant of the tableau sum (same formula over skew fillings).
MultiPoly fac_schur(const SkewShape& theta, int n, const SeqSpec& seq);

// Factorial Schur polynomial by the determinant of generalized powers; must
// agree with the tableau route.
MultiPoly fac_schur_det(const Partition& lambda, int n,
                        const SeqSpec& seq = SeqSpec::symbolic_a());

// The shifted Schur polynomial: the specialization a_i = i-1.
MultiPoly shifted_schur(const Partition& lambda, int n);

// The specialization x = a_rho, with the sequence given by `seq`.
Specialization a_point_specialization(const Partition& rho, int n,
                                      const SeqSpec& seq = SeqSpec::symbolic_a());

// s_lambda(a_rho|a): zero whenever lambda is not contained in rho.
MultiPoly eval_at_partition(const Partition& lambda, const Partition& rho, int n,
                            const SeqSpec& seq = SeqSpec::symbolic_a());

// Coefficient of the classical s_nu in the expansion of s_lambda(x|a).
MultiPoly g_coeff(const Partition& lambda, const Partition& nu, int n);

} // namespace facs
