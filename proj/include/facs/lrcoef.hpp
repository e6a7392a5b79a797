#pragma once

// The coefficient engines: the barred-tableau sum, the weight recurrence,
// the base-case evaluation, chain diagnostics, rational chain sums H/H',
// and the shifted structure constants by tableau and hook-quotient routes,
// plus the classical Littlewood-Richardson coefficient.

#include <string>
#include <utility>

#include "facs/facschur.hpp"
#include "facs/shapes.hpp"
#include "facs/tableaux.hpp"

namespace facs {

enum class Engine { Tableau, Recurrence, Hook, Oracle, Classical };

std::string engine_name(Engine e);
Engine parse_engine(const std::string& name);

// A computed coefficient, tagged with the engine that produced it. The value
// never involves x-variables; it is constant when both sequences are numeric.
struct LRResult {
    SkewShape theta;
    Partition mu;
    Partition nu;
    int n = 0;
    MultiPoly value;
    Engine engine = Engine::Tableau;
};

// Classical coefficient, computed both as the lattice-word count and as the
// "fits" count; the two are asserted equal.
long long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

// Number of semistandard theta-tableaux that fit the target skew shape (the
// second classical formulation; also the degenerate value of c_tableau when
// |nu| = |theta| + |mu|).
long long count_tableaux_fitting(const SkewShape& theta, const SkewShape& target);

// The barred-tableau sum. Zero whenever mu is not contained in nu.
LRResult c_tableau(const SkewShape& theta, const Partition& mu, const Partition& nu, int n,
                   const SeqSpec& aseq = SeqSpec::symbolic_a(),
                   const SeqSpec& bseq = SeqSpec::symbolic_b());

// Base case: the skew polynomial in b evaluated at x = a_mu.
MultiPoly c_base(const SkewShape& theta, const Partition& mu, int n,
                 const SeqSpec& bseq = SeqSpec::symbolic_b());

// Induction on |nu/mu| with exact division by the linear weight difference;
// symbolic in both sequences.
LRResult c_recurrence(const SkewShape& theta, const Partition& mu, const Partition& nu, int n);

// The recurrence with a memo shared across queries for one fixed theta and n,
// for callers sweeping many (mu, nu) pairs.
class RecurrenceEngine {
public:
    RecurrenceEngine(SkewShape theta, int n) : theta_(std::move(theta)), n_(n) {}
    const MultiPoly& value(const Partition& mu, const Partition& nu);

private:
    SkewShape theta_;
    int n_;
    std::map<std::pair<Partition, Partition>, MultiPoly> memo_;
};

// Contribution of a single chain; summing over all chains gives c_tableau.
MultiPoly s_of_R(const SkewShape& theta, const ShapeChain& chain, int n);

// The pair of k-omitted sums over the modified assignments.
std::pair<MultiPoly, MultiPoly> s_k_pm(const SkewShape& theta, const ShapeChain& chain, int k,
                                       int n);

// Chain sum with denominators (|a_rho| - |a_sigma|) over earlier diagrams,
// evaluated at a pairwise-distinct rational specialization of a.
Rational H_eval(const Partition& mu, const Partition& rho, int n, const Specialization& s);

// The dual-direction sum, denominators over later diagrams including nu.
Rational Hprime_eval(const Partition& rho, const Partition& nu, int n, const Specialization& s);

// The interval formula: sum of s_theta(a_rho|b) H(mu,rho) H'(rho,nu) over
// mu <= rho <= nu. The specialization must cover every a and b variable
// involved (a-values pairwise distinct).
Rational c_hh(const SkewShape& theta, const Partition& mu, const Partition& nu, int n,
              const Specialization& s);

// Structure constant of the shifted Schur basis via the specialized tableau
// sum; always an integer.
long long f_tableau(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

// The same constant via the alternating hook-quotient sum over the interval;
// summands are rationals, the total is asserted integral.
long long f_hook(const Partition& lambda, const Partition& mu, const Partition& nu);

// Loose upper bound on |T(theta, nu/mu)| used by the CLI guardrail.
double predicted_enumeration_size(const SkewShape& theta, const Partition& mu,
                                  const Partition& nu, int n);

} // namespace facs
