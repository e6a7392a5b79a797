#include <doctest.h>

#include <random>

#include "facs/ring.hpp"

using namespace facs;

namespace {

MultiPoly X(int i) { return MultiPoly::variable(x_var(i)); }
MultiPoly A(int i) { return MultiPoly::variable(a_var(i)); }
MultiPoly B(int i) { return MultiPoly::variable(b_var(i)); }

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(0, 6);
    std::uniform_int_distribution<int> var_count(0, 3);
    std::uniform_int_distribution<int> family(0, 2);
    std::uniform_int_distribution<int> index(1, 3);
    std::uniform_int_distribution<int> b_index(-1, 3);
    std::uniform_int_distribution<int> exp(1, 3);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    MultiPoly p;
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int vars = var_count(rng);
        for (int v = 0; v < vars; ++v) {
            VarRef ref;
            switch (family(rng)) {
            case 0: ref = x_var(index(rng)); break;
            case 1: ref = a_var(index(rng)); break;
            default: ref = b_var(b_index(rng)); break;
            }
            m = m * Monomial::variable(ref, exp(rng));
        }
        p.add_term(m, rat(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("addition basics") {
    CHECK((X(1) + (-X(1))).is_zero());
    CHECK((X(1) - A(1)) + (X(2) - A(2)) == X(1) + X(2) - A(1) - A(2));

    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        MultiPoly p = random_poly(rng);
        CHECK(add(p, MultiPoly()) == p);
    }
}

TEST_CASE("multiplication basics") {
    CHECK((X(1) - A(1)) * (X(1) + A(1)) == X(1) * X(1) - A(1) * A(1));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        MultiPoly p = random_poly(rng);
        CHECK(mul(p, MultiPoly(rat(1))) == p);
        MultiPoly q = random_poly(rng), r = random_poly(rng);
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(mul(p, q) == mul(q, p));
        CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(X(1) * X(1) - X(2) * X(2), X(1) - X(2)) == X(1) + X(2));
    CHECK_THROWS_AS(exact_div(X(1) * X(1) + MultiPoly(rat(1)), X(1) - X(2)), Error);
    CHECK_THROWS_AS(exact_div(X(1), MultiPoly()), Error);

    std::mt19937_64 rng(3);
    int tested = 0;
    while (tested < 20) {
        MultiPoly q = random_poly(rng), d = random_poly(rng);
        if (d.is_zero()) continue;
        ++tested;
        CHECK(exact_div(mul(q, d), d) == q);
    }
}

TEST_CASE("substitution") {
    // x1 + x2 - a1 - a2 at x = (a3, a1) -> a3 - a2
    Specialization at;
    at.set(x_var(1), A(3)).set(x_var(2), A(1));
    CHECK(substitute(X(1) + X(2) - A(1) - A(2), at) == A(3) - A(2));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
        MultiPoly p = random_poly(rng);
        CHECK(substitute(p, Specialization()) == p);
    }

    Specialization numeric;
    numeric.set(x_var(1), rat(2)).set(x_var(2), rat(3, 2));
    CHECK(substitute(X(1) * X(2), numeric) == MultiPoly(rat(3)));

    // Assigning one x but leaving another unassigned is an error.
    Specialization partial;
    partial.set(x_var(1), rat(1));
    CHECK_THROWS_AS(substitute(X(1) + X(2), partial), Error);

    // Family rules cover unassigned sequence variables.
    Specialization shifted;
    shifted.set_rule(VarFamily::A, FamilyRule::shifted());
    CHECK(substitute(A(3) - A(2), shifted) == MultiPoly(rat(1)));
}

TEST_CASE("homogeneous components") {
    MultiPoly p = X(1) * X(1) + A(1) * X(1) + A(2);
    CHECK(homogeneous_component(p, 2) == X(1) * X(1));
    CHECK(homogeneous_component(p, 1) == A(1) * X(1));
    CHECK(homogeneous_component(p, 0) == A(2));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        MultiPoly q = random_poly(rng);
        MultiPoly sum;
        for (int d = 0; d <= std::max(0, q.x_degree()); ++d)
            sum += homogeneous_component(q, d);
        CHECK(sum == q);
        // Projector: applying twice equals once.
        CHECK(homogeneous_component(homogeneous_component(q, 2), 2) ==
              homogeneous_component(q, 2));
    }
}

TEST_CASE("canonical text round trip") {
    CHECK(MultiPoly().to_text() == "0");
    CHECK(MultiPoly::parse_text("0").is_zero());
    MultiPoly p = rat(3, 2) * X(1) * X(1) * A(3) + B(-1) * B(-1) - MultiPoly(rat(7));
    CHECK(MultiPoly::parse_text(p.to_text()) == p);

    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        MultiPoly q = random_poly(rng);
        CHECK(MultiPoly::parse_text(q.to_text()) == q);
    }
}

TEST_CASE("term order is stable") {
    MultiPoly p = A(1) + A(3) - B(1) - B(2);
    CHECK(p.to_text() == "1 * a1 + 1 * a3 + -1 * b1 + -1 * b2");
    CHECK((X(2) + X(1)).to_text() == "1 * x1 + 1 * x2");
}

TEST_CASE("window checks are hard errors") {
    Window w{1, 4};
    CHECK(w.require(1) == 1);
    CHECK(w.require(4) == 4);
    CHECK_THROWS_AS(w.require(0), Error);
    CHECK_THROWS_AS(w.require(5), Error);
    CHECK_THROWS_AS(x_var(0), Error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == rat(3, 2));
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK(parse_rational("5") == rat(5));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(to_int64(rat(720)) == 720);
    CHECK_THROWS_AS(to_int64(rat(1, 2)), Error);
}
