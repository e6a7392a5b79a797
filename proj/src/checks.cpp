#include "facs/checks.hpp"

#include <algorithm>
#include <sstream>

#include "facs/oracle.hpp"

namespace facs {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Records the first failure and keeps counting cases.
struct Tally {
    CheckResult result;

    explicit Tally(std::string name) { result.name = std::move(name); }

    void expect(bool ok, const std::string& detail) {
        ++result.cases;
        if (!ok && result.pass) {
            result.pass = false;
            result.detail = detail;
        }
    }
};

std::string triple_name(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return "(" + lambda.to_string() + "; " + mu.to_string() + "; " + nu.to_string() + ")";
}

} // namespace

Specialization RandomPoint::specialization() const {
    Specialization s;
    for (const auto& [index, value] : a) s.set(a_var(index), value);
    for (const auto& [index, value] : b) s.set(b_var(index), value);
    return s;
}

RandomPoint draw_point(std::mt19937_64& rng, const Window& a_window, const Window& b_window) {
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 12);
    RandomPoint point;
    std::vector<Rational> used;
    for (int i = a_window.lo; i <= a_window.hi; ++i) {
        Rational r;
        do {
            r = rat(num(rng), den(rng));
        } while (std::find(used.begin(), used.end(), r) != used.end());
        used.push_back(r);
        point.a.emplace(i, r);
    }
    for (int i = b_window.lo; i <= b_window.hi; ++i) point.b.emplace(i, rat(num(rng), den(rng)));
    return point;
}

std::vector<Partition> partitions_up_to_size(int max_size, int max_len) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_in_box(max_len, max_size))
        if (p.size() <= max_size) out.push_back(p);
    return out;
}

std::vector<SkewShape> skew_shapes_in_box(int rows, int cols) {
    std::vector<SkewShape> out;
    for (const Partition& outer : partitions_in_box(rows, cols))
        for (const Partition& inner : partitions_between(Partition(), outer))
            out.emplace_back(outer, inner);
    return out;
}

CheckResult check_dual_definition() {
    Tally tally("dual-definition");
    for (int n : {2, 3}) {
        for (const Partition& lambda : partitions_up_to_size(4, n)) {
            tally.expect(fac_schur(lambda, n) == fac_schur_det(lambda, n),
                         "det and tableau routes differ for " + lambda.to_string() +
                             ", n=" + std::to_string(n));
        }
    }
    return tally.result;
}

CheckResult check_vanishing(const CheckConfig& cfg) {
    Tally tally("vanishing");
    const std::vector<Partition> box = partitions_in_box(cfg.box_rows, cfg.box_cols);
    const int n = cfg.n;
    for (const Partition& lambda : box) {
        if (lambda.length() > n) continue;
        const MultiPoly sym = fac_schur(lambda, n);
        for (const Partition& rho : box) {
            if (rho.length() > n) continue;
            if (contains(lambda, rho) && lambda != rho) continue;
            MultiPoly value = substitute(sym, a_point_specialization(rho, n));
            if (lambda == rho) {
                // Diagonal: the explicit product over the cells.
                MultiPoly expected(rat(1));
                const Partition t = conjugate(lambda);
                for (int i = 1; i <= lambda.length(); ++i)
                    for (int j = 1; j <= lambda.part(i); ++j)
                        expected *= MultiPoly::variable(a_var(lambda.part(i) + n - i + 1)) -
                                    MultiPoly::variable(a_var(n - t.part(j) + j));
                tally.expect(value == expected,
                             "diagonal product mismatch at " + lambda.to_string());
            } else {
                tally.expect(value.is_zero(), "nonzero at lambda=" + lambda.to_string() +
                                                  ", rho=" + rho.to_string());
            }
        }
    }
    return tally.result;
}

CheckResult check_four_engine_agreement(const CheckConfig& cfg) {
    Tally tally("four-engine-agreement");
    const std::vector<Partition> box = partitions_in_box(cfg.box_rows, cfg.box_cols);
    const int n = cfg.n;
    Specialization shifted_ab;
    shifted_ab.set_rule(VarFamily::A, FamilyRule::shifted());
    shifted_ab.set_rule(VarFamily::B, FamilyRule::shifted());
    for (const Partition& lambda : box) {
        if (lambda.length() > n) continue;
        RecurrenceEngine recurrence(SkewShape(lambda), n);
        for (const Partition& mu : box) {
            if (mu.length() > n) continue;
            const Expansion oracle = product_expand(SkewShape(lambda), mu, n,
                                                    SeqSpec::shifted(), SeqSpec::shifted());
            for (const Partition& nu : box) {
                if (nu.length() > n) continue;
                long long by_tableau = f_tableau(lambda, mu, nu, n);
                long long by_hook = f_hook(lambda, mu, nu);
                long long by_recurrence =
                    to_int64(substitute(recurrence.value(mu, nu), shifted_ab).constant_value());
                long long by_oracle = to_int64(oracle.coeff(nu).constant_value());
                bool ok = by_tableau == by_hook && by_hook == by_recurrence &&
                          by_recurrence == by_oracle;
                std::ostringstream detail;
                if (!ok)
                    detail << "engines disagree at " << triple_name(lambda, mu, nu) << ": "
                           << by_tableau << "/" << by_hook << "/" << by_recurrence << "/"
                           << by_oracle;
                tally.expect(ok, detail.str());
            }
        }
    }
    return tally.result;
}

CheckResult check_fact(int max_n) {
    Tally tally("fact");
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> column(n, 1);
        const Partition lambda(column);
        for (const Partition& nu : partitions_in_box(n, 2)) {
            long long expected = 0;
            if (nu.length() == n) {
                int r = 0;
                while (r < n && nu.part(r + 1) == 2) ++r;
                expected = factorial(n - r);
            }
            long long by_tableau = f_tableau(lambda, lambda, nu, n);
            long long by_hook = f_hook(lambda, lambda, nu);
            tally.expect(by_tableau == expected && by_hook == expected,
                         "capelli-square value wrong at nu=" + nu.to_string() +
                             ", n=" + std::to_string(n) + ": got " +
                             std::to_string(by_tableau) + "/" + std::to_string(by_hook) +
                             ", want " + std::to_string(expected));
        }
    }
    return tally.result;
}

CheckResult check_degeneration(const CheckConfig& cfg) {
    Tally tally("degeneration");
    const std::vector<Partition> box = partitions_in_box(cfg.box_rows, cfg.box_cols);
    const int n = cfg.n;
    for (const SkewShape& theta : skew_shapes_in_box(cfg.box_rows, cfg.box_cols)) {
        for (const Partition& mu : box) {
            if (mu.length() > n) continue;
            for (const Partition& nu : box) {
                if (nu.length() > n || !contains(mu, nu)) continue;
                if (nu.size() < theta.size() + mu.size()) continue;
                const LRResult c = c_tableau(theta, mu, nu, n);
                if (nu.size() > theta.size() + mu.size()) {
                    tally.expect(c.value.is_zero(),
                                 "expected zero above top degree at theta=" +
                                     theta.to_string() + " " + triple_name({}, mu, nu));
                    continue;
                }
                long long expected = count_tableaux_fitting(theta, SkewShape(nu, mu));
                bool ok = c.value.is_constant() &&
                          c.value.constant_value() == rat(expected);
                if (theta.normal())
                    ok = ok && classical_lr(theta.outer(), mu, nu) == expected;
                tally.expect(ok, "degeneration mismatch at theta=" + theta.to_string() +
                                     ", mu=" + mu.to_string() + ", nu=" + nu.to_string());
            }
        }
    }
    return tally.result;
}

CheckResult check_transpose_symmetry(const CheckConfig& cfg) {
    Tally tally("symmetry");
    const std::vector<Partition> box = partitions_in_box(cfg.box_rows, cfg.box_cols);
    for (const Partition& nu : box) {
        const Partition nut = conjugate(nu);
        for (const Partition& lambda : partitions_between(Partition(), nu)) {
            for (const Partition& mu : partitions_between(Partition(), nu)) {
                long long plain = f_hook(lambda, mu, nu);
                long long transposed = f_hook(conjugate(lambda), conjugate(mu), nut);
                tally.expect(plain == transposed,
                             "transpose symmetry broken at " + triple_name(lambda, mu, nu) +
                                 ": " + std::to_string(plain) + " vs " +
                                 std::to_string(transposed));
            }
        }
    }
    return tally.result;
}

CheckResult check_hook_datum() {
    Tally tally("hook-datum");
    const SkewShape shape(Partition{3, 2}, Partition{1});
    tally.expect(dim_skew(shape) == 5, "dim((3,2)/(1)) != 5");
    tally.expect(h_skew(shape) == rat(24, 5), "h((3,2)/(1)) != 24/5");
    return tally.result;
}

CheckResult check_ss_hh(const CheckConfig& cfg) {
    Tally tally("hh");
    const std::vector<Partition> box = partitions_in_box(cfg.box_rows, cfg.box_cols);
    const int n = cfg.n;
    std::mt19937_64 rng(cfg.seed);
    const Window a_window{1, cfg.box_cols + n};
    const Window b_window{1 - cfg.box_rows, cfg.box_cols + n};
    const std::vector<Partition> thetas = partitions_between(Partition(), Partition{2, 1});
    for (int point_index = 0; point_index < cfg.points; ++point_index) {
        const RandomPoint point = draw_point(rng, a_window, b_window);
        const Specialization at = point.specialization();
        const SeqSpec aseq = point.a_seq();
        const SeqSpec bseq = point.b_seq();
        for (const Partition& nu : box) {
            if (nu.length() > n) continue;
            const Rational s_nu_diag = eval_at_partition(nu, nu, n, aseq).constant_value();
            for (const Partition& mu : partitions_between(Partition(), nu)) {
                if (mu.length() > n) continue;
                // Ratio formula.
                const Rational s_mu_at_nu = eval_at_partition(mu, nu, n, aseq).constant_value();
                tally.expect(s_mu_at_nu / s_nu_diag == H_eval(mu, nu, n, at),
                             "ratio formula fails at mu=" + mu.to_string() +
                                 ", nu=" + nu.to_string());
                // Interval formula vs the tableau engine.
                for (const Partition& theta : thetas) {
                    Rational direct =
                        c_tableau(SkewShape(theta), mu, nu, n, aseq, bseq).value.constant_value();
                    tally.expect(c_hh(SkewShape(theta), mu, nu, n, at) == direct,
                                 "interval formula fails at theta=" + theta.to_string() +
                                     ", mu=" + mu.to_string() + ", nu=" + nu.to_string());
                }
            }
        }
    }
    return tally.result;
}

CheckResult check_bar_sums() {
    Tally tally("s-plus-minus");
    const int n = 2;
    const std::vector<Partition> box = partitions_in_box(2, 2);
    for (const SkewShape& theta : skew_shapes_in_box(2, 2)) {
        for (const Partition& nu : box) {
            for (const Partition& mu : partitions_between(Partition(), nu)) {
                const MultiPoly weight_gap = a_weight(nu, n) - a_weight(mu, n);
                MultiPoly chain_total;
                MultiPoly minus_total, plus_total;
                for_each_chain(mu, nu, [&](const ShapeChain& chain) {
                    const MultiPoly s = s_of_R(theta, chain, n);
                    chain_total += s;
                    MultiPoly pm_total;
                    for (int k = 1; k <= chain.length(); ++k) {
                        auto [plus, minus] = s_k_pm(theta, chain, k, n);
                        pm_total += plus - minus;
                        // Per-step identity from the proof.
                        const MultiPoly step = a_weight(chain.diagrams()[k], n) -
                                               a_weight(chain.diagrams()[k - 1], n);
                        tally.expect(plus - minus == step * s,
                                     "per-step bar identity fails at theta=" +
                                         theta.to_string() + ", k=" + std::to_string(k));
                        if (k <= chain.length() - 1) minus_total += minus;
                        if (k >= 2) plus_total += plus;
                    }
                    tally.expect(pm_total == weight_gap * s,
                                 "bar-sum identity fails at theta=" + theta.to_string() +
                                     ", mu=" + mu.to_string() + ", nu=" + nu.to_string());
                });
                tally.expect(minus_total == plus_total,
                             "cross-chain bar sums differ at theta=" + theta.to_string() +
                                 ", mu=" + mu.to_string() + ", nu=" + nu.to_string());
                tally.expect(chain_total == c_tableau(theta, mu, nu, n).value,
                             "chain decomposition fails at theta=" + theta.to_string() +
                                 ", mu=" + mu.to_string() + ", nu=" + nu.to_string());
            }
        }
    }
    return tally.result;
}

CheckResult check_g_expansion() {
    Tally tally("g-expansion");
    for (int n : {1, 2, 3}) {
        for (const Partition& lambda : partitions_up_to_size(4, n)) {
            MultiPoly total;
            for (const Partition& nu : partitions_between(Partition(), lambda))
                total += g_coeff(lambda, nu, n) * schur(nu, n);
            tally.expect(total == fac_schur(lambda, n),
                         "basis change does not reassemble for " + lambda.to_string() +
                             ", n=" + std::to_string(n));
        }
    }
    return tally.result;
}

CheckResult check_stability(const CheckConfig& cfg) {
    Tally tally("stability");
    const std::vector<Partition> box = partitions_in_box(cfg.box_rows, cfg.box_cols);
    for (const Partition& lambda : box) {
        for (const Partition& mu : box) {
            for (const Partition& nu : box) {
                int base = std::max({lambda.length(), mu.length(), nu.length(), 1});
                long long v0 = f_tableau(lambda, mu, nu, base);
                long long v1 = f_tableau(lambda, mu, nu, base + 1);
                long long v2 = f_tableau(lambda, mu, nu, base + 2);
                tally.expect(v0 == v1 && v1 == v2,
                             "value depends on n at " + triple_name(lambda, mu, nu) + ": " +
                                 std::to_string(v0) + "," + std::to_string(v1) + "," +
                                 std::to_string(v2));
            }
        }
    }
    return tally.result;
}

std::vector<std::string> suite_names() {
    return {"vanishing",    "degeneration", "fact", "symmetry",
            "s-plus-minus", "hh",           "stability", "oracle-agreement"};
}

CheckResult run_suite(const std::string& name, const CheckConfig& cfg) {
    if (name == "vanishing") return check_vanishing(cfg);
    if (name == "degeneration") return check_degeneration(cfg);
    if (name == "fact") return check_fact();
    if (name == "symmetry") return check_transpose_symmetry(cfg);
    if (name == "s-plus-minus") return check_bar_sums();
    if (name == "hh") return check_ss_hh(cfg);
    if (name == "stability") return check_stability(cfg);
    if (name == "oracle-agreement") return check_four_engine_agreement(cfg);
    if (name == "dual-definition") return check_dual_definition();
    if (name == "hook-datum") return check_hook_datum();
    if (name == "g-expansion") return check_g_expansion();
    fail(Errc::Usage, "unknown suite '" + name + "'");
}

} // namespace facs
