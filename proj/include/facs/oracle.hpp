#pragma once

// Independent brute-force expansion of symmetric polynomials in the
// factorial Schur basis, by triangular elimination in descending x-degree.
// Every coefficient engine is measured against this module.

#include <map>

#include "facs/facschur.hpp"
#include "facs/ring.hpp"
#include "facs/shapes.hpp"

namespace facs {

struct Expansion {
    std::map<Partition, MultiPoly> coeffs;
    MultiPoly remainder; // zero on success

    const MultiPoly& coeff(const Partition& nu) const; // zero if absent
};

// Writes p as sum of coeffs[nu] * fac_schur(nu, n, aseq). The input must be
// symmetric in x_1..x_n (checked via adjacent transpositions).
Expansion expand(const MultiPoly& p, int n, const SeqSpec& aseq = SeqSpec::symbolic_a());

// Expansion of the product s_theta(x|b) * s_mu(x|a) in the a-basis.
Expansion product_expand(const SkewShape& theta, const Partition& mu, int n,
                         const SeqSpec& aseq = SeqSpec::symbolic_a(),
                         const SeqSpec& bseq = SeqSpec::symbolic_b());

} // namespace facs
