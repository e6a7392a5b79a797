#include <doctest.h>

#include <random>

#include "facs/checks.hpp"
#include "facs/lrcoef.hpp"

using namespace facs;

namespace {

MultiPoly A(int i) { return MultiPoly::variable(a_var(i)); }
MultiPoly B(int i) { return MultiPoly::variable(b_var(i)); }

Specialization shifted_ab() {
    Specialization s;
    s.set_rule(VarFamily::A, FamilyRule::shifted());
    s.set_rule(VarFamily::B, FamilyRule::shifted());
    return s;
}

} // namespace

TEST_CASE("classical coefficients") {
    CHECK(classical_lr(Partition{1}, Partition{1}, Partition{2}) == 1);
    CHECK(classical_lr(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(classical_lr(Partition{2, 2, 1}, Partition{2, 1}, Partition{4, 3, 1}) >= 1);
    CHECK(classical_lr(Partition{2}, Partition{1}, Partition{2}) == 0);
    CHECK(classical_lr(Partition(), Partition{2, 1}, Partition{2, 1}) == 1);

    // Symmetry in the first two arguments, sizes up to 6.
    for (const Partition& nu : partitions_in_box(4, 4)) {
        if (nu.size() > 6) continue;
        for (const Partition& mu : partitions_between(Partition(), nu)) {
            for (const Partition& lambda : partitions_in_box(4, 4)) {
                if (lambda.size() != nu.size() - mu.size()) continue;
                CHECK(classical_lr(lambda, mu, nu) == classical_lr(mu, lambda, nu));
            }
        }
    }
}

TEST_CASE("tableau engine on the one-cell example") {
    LRResult r = c_tableau(SkewShape(Partition{1}), Partition{1}, Partition{1}, 2);
    CHECK(r.value == (A(3) - B(1)) + (A(1) - B(2)));

    // mu not inside nu gives zero.
    CHECK(c_tableau(SkewShape(Partition{1}), Partition{2}, Partition{1, 1}, 2)
              .value.is_zero());
}

TEST_CASE("degenerate top-weight cases are classical") {
    for (const Partition& theta : partitions_in_box(2, 2)) {
        for (const Partition& mu : partitions_in_box(2, 2)) {
            for (const Partition& nu : partitions_in_box(2, 2)) {
                if (nu.size() != theta.size() + mu.size()) continue;
                LRResult r = c_tableau(SkewShape(theta), mu, nu, 2);
                CHECK(r.value.is_constant());
                CHECK(r.value.constant_value() == rat(classical_lr(theta, mu, nu)));
            }
        }
    }
    // Above the top weight the coefficient vanishes.
    CHECK(c_tableau(SkewShape(Partition{1}), Partition{1}, Partition{2, 1}, 2)
              .value.is_zero());
}

TEST_CASE("base case evaluation") {
    CHECK(c_base(SkewShape(Partition{1}), Partition{1}, 2, SeqSpec::symbolic_a()) ==
          A(3) - A(2));
    CHECK(c_base(SkewShape(Partition()), Partition{2, 1}, 3) == MultiPoly(rat(1)));

    for (const Partition& theta : partitions_in_box(3, 3)) {
        for (const Partition& mu : partitions_in_box(3, 3)) {
            CHECK(c_base(SkewShape(theta), mu, 3) ==
                  c_tableau(SkewShape(theta), mu, mu, 3).value);
        }
    }
}

TEST_CASE("recurrence equals tableau sum") {
    for (const Partition& theta : partitions_between(Partition(), Partition{2, 1})) {
        RecurrenceEngine engine(SkewShape(theta), 2);
        for (const Partition& nu : partitions_in_box(2, 2)) {
            for (const Partition& mu : partitions_between(Partition(), nu)) {
                CHECK(engine.value(mu, nu) == c_tableau(SkewShape(theta), mu, nu, 2).value);
            }
        }
    }

    LRResult r = c_recurrence(SkewShape(Partition{1}), Partition{1}, Partition{1, 1}, 2);
    CHECK(r.value == MultiPoly(rat(1)));
}

TEST_CASE("disconnected skew shape") {
    // (2,1,1)/(1,1) has cells (1,2) and (3,1) with no adjacency.
    SkewShape theta(Partition{2, 1, 1}, Partition{1, 1});
    for (const Partition& nu : partitions_in_box(3, 2)) {
        for (const Partition& mu : partitions_between(Partition(), nu)) {
            CHECK(c_recurrence(theta, mu, nu, 3).value ==
                  c_tableau(theta, mu, nu, 3).value);
        }
    }
}

TEST_CASE("single chain contributions") {
    // The five-tableau example: theta = (3,2)/(1), R: (2,1)->(2,2)->(3,2), n = 2.
    SkewShape theta(Partition{3, 2}, Partition{1});
    ShapeChain chain({Partition{2, 1}, Partition{2, 2}, Partition{3, 2}}, {2, 1});
    MultiPoly expected = (A(4) - B(3)) * (A(4) - B(2)) // unbarred row 1 entries 1,1
                         + (A(3) - B(2)) * (A(5) - B(0)) // bars on row 1, fill 1,2/1,2
                         + (A(4) - B(2)) * (A(3) - B(2)) // bars on (1,3),(2,1)
                         + (A(2) - B(4)) * (A(4) - B(2)) // bars on row 2, fill 1,2/1,2
                         + (A(3) - B(2)) * (A(3) - B(1)); // bars on row 1, fill 1,2/2,2
    CHECK(s_of_R(theta, chain, 2) == expected);

    // Empty chain: plain fillings with full products.
    ShapeChain empty_chain{Partition{2, 1}};
    CHECK(s_of_R(SkewShape(Partition{1}), empty_chain, 2) ==
          c_tableau(SkewShape(Partition{1}), Partition{2, 1}, Partition{2, 1}, 2).value);

    // Chain decomposition of the full coefficient.
    for (const Partition& nu : partitions_in_box(2, 2)) {
        for (const Partition& mu : partitions_between(Partition(), nu)) {
            MultiPoly total;
            for (const ShapeChain& r : chains(mu, nu)) total += s_of_R(theta, r, 2);
            CHECK(total == c_tableau(theta, mu, nu, 2).value);
        }
    }
}

TEST_CASE("k-omitted sum identities") {
    SkewShape theta(Partition{3, 2}, Partition{1});
    ShapeChain chain({Partition{2, 1}, Partition{2, 2}, Partition{3, 2}}, {2, 1});
    const int n = 2;
    MultiPoly s = s_of_R(theta, chain, n);
    MultiPoly pm_total;
    for (int k = 1; k <= chain.length(); ++k) {
        auto [plus, minus] = s_k_pm(theta, chain, k, n);
        MultiPoly step =
            a_weight(chain.diagrams()[k], n) - a_weight(chain.diagrams()[k - 1], n);
        CHECK(plus - minus == step * s);
        pm_total += plus - minus;
    }
    MultiPoly gap = a_weight(chain.end(), n) - a_weight(chain.start(), n);
    CHECK(pm_total == gap * s);

    CHECK_THROWS_AS(s_k_pm(theta, chain, 3, n), Error);
}

TEST_CASE("rational chain sums") {
    // Empty intervals give 1.
    Specialization point;
    for (int i = 1; i <= 6; ++i) point.set(a_var(i), rat(7 * i + 1, 3));
    CHECK(H_eval(Partition{2, 1}, Partition{2, 1}, 3, point) == rat(1));
    CHECK(Hprime_eval(Partition{2, 1}, Partition{2, 1}, 3, point) == rat(1));

    // Shifted values: 1/h(rho/mu) and the signed reciprocal for the dual sum.
    Specialization shifted = shifted_ab();
    for (const Partition& rho : partitions_in_box(3, 3)) {
        for (const Partition& mu : partitions_between(Partition(), rho)) {
            CHECK(H_eval(mu, rho, 3, shifted) == 1 / h_skew(SkewShape(rho, mu)));
            Rational expected = 1 / h_skew(SkewShape(rho, mu));
            if ((rho.size() - mu.size()) % 2 != 0) expected = -expected;
            CHECK(Hprime_eval(mu, rho, 3, shifted) == expected);
        }
    }
    CHECK(Hprime_eval(Partition{1}, Partition{3, 2}, 3, shifted) == rat(5, 24));

    // Collisions are detected.
    Specialization bad;
    for (int i = 1; i <= 4; ++i) bad.set(a_var(i), rat(1));
    CHECK_THROWS_AS(H_eval(Partition(), Partition{2}, 2, bad), Error);
}

TEST_CASE("orthogonality of the two chain sums") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        RandomPoint point = draw_point(rng, Window{1, 6}, Window{1, 1});
        Specialization s = point.specialization();
        for (const Partition& nu : partitions_in_box(3, 3)) {
            for (const Partition& rho : partitions_between(Partition(), nu)) {
                if (rho == nu) continue;
                Rational total = rat(0);
                for (const Partition& sigma : partitions_between(rho, nu))
                    total += Hprime_eval(rho, sigma, 3, s) * H_eval(sigma, nu, 3, s);
                CHECK(total == rat(0));
            }
        }
    }
}

TEST_CASE("telescoping identity") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 9);
    for (int k = 2; k <= 5; ++k) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> u;
            while (static_cast<int>(u.size()) < k) {
                Rational r = rat(num(rng), den(rng));
                if (std::find(u.begin(), u.end(), r) == u.end()) u.push_back(r);
            }
            Rational total = rat(0);
            for (int i = 1; i <= k; ++i) {
                Rational denom = rat(1);
                for (int j = 2; j <= i; ++j) denom *= u[0] - u[j - 1];
                for (int j = i; j <= k - 1; ++j) denom *= u[k - 1] - u[j - 1];
                total += 1 / denom;
            }
            CHECK(total == rat(0));
        }
    }
}

TEST_CASE("interval formula matches the tableau engine") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        RandomPoint point = draw_point(rng, Window{1, 5}, Window{-1, 4});
        Specialization s = point.specialization();
        for (const Partition& theta : partitions_between(Partition(), Partition{2, 1})) {
            for (const Partition& nu : partitions_in_box(2, 2)) {
                for (const Partition& mu : partitions_between(Partition(), nu)) {
                    Rational direct = c_tableau(SkewShape(theta), mu, nu, 2, point.a_seq(),
                                                point.b_seq())
                                          .value.constant_value();
                    CHECK(c_hh(SkewShape(theta), mu, nu, 2, s) == direct);
                }
            }
        }
    }
    // mu = nu reduces to the base evaluation.
    std::mt19937_64 rng2(5);
    RandomPoint point = draw_point(rng2, Window{1, 5}, Window{-1, 4});
    Specialization s = point.specialization();
    Rational base = substitute(c_base(SkewShape(Partition{2}), Partition{1, 1}, 2), s)
                        .constant_value();
    CHECK(c_hh(SkewShape(Partition{2}), Partition{1, 1}, Partition{1, 1}, 2, s) == base);
}

TEST_CASE("shifted structure constants") {
    for (int n = 1; n <= 4; ++n)
        CHECK(f_tableau(Partition{1}, Partition{1}, Partition{1}, n) == 1);
    CHECK(f_hook(Partition{1}, Partition{1}, Partition{1}) == 1);

    // (n-r)! on the two-column family, n up to 4 here.
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> column(n, 1);
        Partition lambda(column);
        for (int r = 0; r <= n; ++r) {
            std::vector<int> parts;
            for (int i = 0; i < r; ++i) parts.push_back(2);
            for (int i = r; i < n; ++i) parts.push_back(1);
            Partition nu(parts);
            long long expected = 1;
            for (int i = 2; i <= n - r; ++i) expected *= i;
            CHECK(f_tableau(lambda, lambda, nu, n) == expected);
            CHECK(f_hook(lambda, lambda, nu) == expected);
        }
    }

    // Top-degree cases agree with the classical coefficient.
    for (const Partition& lambda : partitions_in_box(2, 2)) {
        for (const Partition& mu : partitions_in_box(2, 2)) {
            for (const Partition& nu : partitions_in_box(2, 2)) {
                if (nu.size() != lambda.size() + mu.size()) continue;
                int n = 2;
                CHECK(f_tableau(lambda, mu, nu, n) == classical_lr(lambda, mu, nu));
            }
        }
    }
}

TEST_CASE("hook route matches the alternating-sum display") {
    // Direct arithmetic identity for lambda = mu = (1^n), nu = (2^r 1^(n-r)).
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            Rational total = rat(0);
            Rational np1_fact = rat(1);
            for (int i = 2; i <= n + 1; ++i) np1_fact *= i;
            for (int k = 0; k <= r; ++k) {
                Rational term = np1_fact;
                Rational k_fact = rat(1);
                for (int i = 2; i <= k; ++i) k_fact *= i;
                Rational rk_fact = rat(1);
                for (int i = 2; i <= r - k; ++i) rk_fact *= i;
                term /= k_fact * rk_fact * rat(n - k + 1);
                if ((r - k) % 2 != 0) term = -term;
                total += term;
            }
            long long expected = 1;
            for (int i = 2; i <= n - r; ++i) expected *= i;
            CHECK(total == rat(expected));
        }
    }
}

TEST_CASE("transpose symmetry spot checks") {
    CHECK(f_hook(Partition{2}, Partition{1}, Partition{2, 1}) ==
          f_hook(Partition{1, 1}, Partition{1}, Partition{2, 1}));
    for (const Partition& nu : partitions_in_box(3, 3)) {
        for (const Partition& lambda : partitions_between(Partition(), nu)) {
            for (const Partition& mu : partitions_between(Partition(), nu)) {
                CHECK(f_hook(lambda, mu, nu) ==
                      f_hook(conjugate(lambda), conjugate(mu), conjugate(nu)));
            }
        }
    }
}

TEST_CASE("four engines agree on a spot sample") {
    const int n = 2;
    Specialization shifted = shifted_ab();
    for (const Partition& lambda : partitions_in_box(2, 2)) {
        RecurrenceEngine engine(SkewShape(lambda), n);
        for (const Partition& nu : partitions_in_box(2, 2)) {
            for (const Partition& mu : partitions_between(Partition(), nu)) {
                long long t = f_tableau(lambda, mu, nu, n);
                long long h = f_hook(lambda, mu, nu);
                long long r =
                    to_int64(substitute(engine.value(mu, nu), shifted).constant_value());
                CHECK(t == h);
                CHECK(t == r);
            }
        }
    }
}

TEST_CASE("n-stability spot checks") {
    for (const Partition& lambda : partitions_in_box(2, 2)) {
        for (const Partition& mu : partitions_in_box(2, 2)) {
            for (const Partition& nu : partitions_in_box(2, 2)) {
                int base = std::max({lambda.length(), mu.length(), nu.length(), 1});
                long long v = f_tableau(lambda, mu, nu, base);
                CHECK(v == f_tableau(lambda, mu, nu, base + 1));
                CHECK(v == f_tableau(lambda, mu, nu, base + 2));
            }
        }
    }
}

TEST_CASE("guardrail predictor") {
    CHECK(predicted_enumeration_size(SkewShape(Partition{1}), Partition{2}, Partition{1, 1},
                                     2) == 0.0);
    // More bars than cells: empty enumeration.
    CHECK(predicted_enumeration_size(SkewShape(Partition{1}), Partition(), Partition{2, 2},
                                     2) == 0.0);
    CHECK(predicted_enumeration_size(SkewShape(Partition{2, 1}), Partition{1}, Partition{2, 1},
                                     2) > 0.0);
}
