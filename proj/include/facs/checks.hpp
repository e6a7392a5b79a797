#pragma once

// Verification suites: every identity the engines are expected to satisfy,
// runnable at desk scale. The CLI's `verify` and `selftest` verbs and the
// acceptance test binary are thin wrappers around these.

#include <random>
#include <string>
#include <vector>

#include "facs/facschur.hpp"
#include "facs/lrcoef.hpp"
#include "facs/ring.hpp"
#include "facs/shapes.hpp"

namespace facs {

struct CheckConfig {
    int n = 3;
    int box_rows = 3;
    int box_cols = 3;
    unsigned long long seed = 42;
    int points = 5;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string detail; // first failure, empty when passing
};

// A seeded rational evaluation point: pairwise-distinct values for the
// a-window, unconstrained values for the b-window.
struct RandomPoint {
    std::map<int, Rational> a;
    std::map<int, Rational> b;

    Specialization specialization() const;
    SeqSpec a_seq() const { return SeqSpec::explicit_table(a); }
    SeqSpec b_seq() const { return SeqSpec::explicit_table(b); }
};

RandomPoint draw_point(std::mt19937_64& rng, const Window& a_window, const Window& b_window);

// Partitions of size at most max_size with at most max_len rows.
std::vector<Partition> partitions_up_to_size(int max_size, int max_len);

// All skew shapes with outer inside the box (inner runs over subshapes).
std::vector<SkewShape> skew_shapes_in_box(int rows, int cols);

CheckResult check_dual_definition();                       // det route == tableau route
CheckResult check_vanishing(const CheckConfig&);           // vanishing + diagonal product
CheckResult check_four_engine_agreement(const CheckConfig&);
CheckResult check_fact(int max_n = 6);                     // (n-r)! values and support
CheckResult check_degeneration(const CheckConfig&);        // top-degree classical limit
CheckResult check_transpose_symmetry(const CheckConfig&);  // callers pass the 4x4 box
CheckResult check_hook_datum();                            // h((3,2)/(1)) and dim
CheckResult check_ss_hh(const CheckConfig&);               // ratio and interval formulas
CheckResult check_bar_sums();                              // k-omitted sum identities
CheckResult check_g_expansion();                           // change of basis reassembly
CheckResult check_stability(const CheckConfig&);           // f independent of n

std::vector<std::string> suite_names();
CheckResult run_suite(const std::string& name, const CheckConfig& cfg);

} // namespace facs
