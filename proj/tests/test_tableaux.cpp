#include <doctest.h>

#include <algorithm>
#include <set>

#include "facs/tableaux.hpp"

using namespace facs;

namespace {

// Entries listed row-major for the given shape.
Tableau make(const SkewShape& shape, std::vector<int> entries, std::vector<bool> barred = {}) {
    return Tableau(shape, std::move(entries), std::move(barred));
}

} // namespace

TEST_CASE("ssyt enumeration") {
    auto single = enumerate_ssyt(SkewShape(Partition{1}), 2);
    REQUIRE(single.size() == 2);
    CHECK(single[0].entry(0) == 1);
    CHECK(single[1].entry(0) == 2);

    CHECK(enumerate_ssyt(SkewShape(Partition{2, 1}), 3).size() == 8);

    // A column of height 3 cannot be filled with entries in {1, 2}.
    CHECK(enumerate_ssyt(SkewShape(Partition{1, 1, 1}), 2).empty());

    for (const Tableau& t : enumerate_ssyt(SkewShape(Partition{3, 2}, Partition{1}), 2))
        CHECK(t.is_semistandard());
}

TEST_CASE("column word") {
    // Rows [1,1,2] and [2,3] of shape (3,2).
    Tableau t = make(SkewShape(Partition{3, 2}), {1, 1, 2, 2, 3});
    CHECK(column_word(t) == std::vector<int>{2, 1, 3, 1, 2});
    CHECK(column_word(make(SkewShape(Partition{1}), {7})) == std::vector<int>{7});
    CHECK(column_word(t).size() == t.cells().size());
}

TEST_CASE("lattice words") {
    CHECK_FALSE(is_lattice({2, 1, 3, 1, 2}));
    CHECK(is_lattice({1, 1, 2, 1, 2}));
    CHECK(is_lattice({}));
}

TEST_CASE("fits") {
    Tableau t = make(SkewShape(Partition{3, 2}), {1, 1, 2, 2, 3});
    SkewShape target(Partition{4, 3, 1}, Partition{2, 1});
    auto chain = fits(t, target);
    REQUIRE(chain.has_value());
    std::vector<Partition> expected{Partition{2, 1},    Partition{2, 2},    Partition{3, 2},
                                    Partition{3, 2, 1}, Partition{4, 2, 1}, Partition{4, 3, 1}};
    CHECK(chain->diagrams() == expected);

    CHECK_FALSE(fits(t, SkewShape(Partition{5})).has_value());
    CHECK_THROWS_AS(fits(t, SkewShape(Partition{2, 2})), Error);
}

TEST_CASE("fits equals lattice test for normal targets") {
    for (const Partition& nu : partitions_in_box(5, 5)) {
        if (nu.size() > 5 || nu.empty()) continue;
        const int n = nu.length() + 1;
        for (const Partition& lambda : partitions_in_box(n, 5)) {
            if (lambda.size() != nu.size()) continue;
            for (const Tableau& t : enumerate_ssyt(SkewShape(lambda), n)) {
                bool fits_nu = fits(t, SkewShape(nu)).has_value();
                bool lattice_and_weight =
                    is_lattice(column_word(t)) && t.weight(n + 1) == [&] {
                        std::vector<int> w(n + 1, 0);
                        for (int i = 1; i <= nu.length(); ++i) w[i - 1] = nu.part(i);
                        return w;
                    }();
                CHECK(fits_nu == lattice_and_weight);
            }
        }
    }
}

TEST_CASE("barred enumeration reproduces the five displayed tableaux") {
    // theta = (3,2)/(1), chain (2,1) -> (2,2) -> (3,2), n = 2.
    SkewShape theta(Partition{3, 2}, Partition{1});
    ShapeChain chain({Partition{2, 1}, Partition{2, 2}, Partition{3, 2}}, {2, 1});
    std::vector<BarAssignment> found;
    for_each_barred(theta, chain, 2, [&](const BarAssignment& ba) { found.push_back(ba); });
    REQUIRE(found.size() == 5);

    // Row-major cells are (1,2),(1,3),(2,1),(2,2); bars as flags in that order.
    std::set<std::pair<std::vector<int>, std::vector<bool>>> got;
    for (const BarAssignment& ba : found) {
        std::vector<bool> bars;
        for (std::size_t i = 0; i < ba.tableau.cells().size(); ++i)
            bars.push_back(ba.tableau.barred(i));
        got.emplace(ba.tableau.entries(), bars);
    }
    std::set<std::pair<std::vector<int>, std::vector<bool>>> want{
        {{1, 1, 1, 2}, {false, false, true, true}},
        {{1, 2, 1, 2}, {true, true, false, false}},
        {{1, 2, 1, 2}, {false, true, true, false}},
        {{1, 2, 1, 2}, {false, false, true, true}},
        {{1, 2, 2, 2}, {true, true, false, false}},
    };
    CHECK(got == want);

    for (const BarAssignment& ba : found) CHECK(validate_bar_assignment(ba, chain));
}

TEST_CASE("empty chain enumerates plain fillings") {
    SkewShape theta(Partition{2, 1});
    ShapeChain empty_chain{Partition{2, 1}};
    int count = 0;
    for_each_barred(theta, empty_chain, 3, [&](const BarAssignment& ba) {
        CHECK(ba.tableau.bar_count() == 0);
        for (int idx : ba.rho_index) CHECK(idx == 0);
        ++count;
    });
    CHECK(count == 8);
}

TEST_CASE("union over chains") {
    SkewShape theta(Partition{3, 2}, Partition{1});
    const Partition mu{2, 1}, nu{3, 2};
    CHECK(chains(mu, nu).size() == 2);

    long long total = 0;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen; // (entries, bar positions)
    for_each_T(theta, mu, nu, 2, [&](const ShapeChain& chain, const BarAssignment& ba) {
        CHECK(validate_bar_assignment(ba, chain));
        std::vector<int> bars;
        for (std::size_t i = 0; i < ba.tableau.cells().size(); ++i)
            if (ba.tableau.barred(i)) bars.push_back(static_cast<int>(i));
        CHECK(seen.emplace(ba.tableau.entries(), bars).second); // disjointness
        ++total;
    });

    long long by_chain = 0;
    for (const ShapeChain& chain : chains(mu, nu))
        for_each_barred(theta, chain, 2, [&](const BarAssignment&) { ++by_chain; });
    CHECK(total == by_chain);

    // nu = mu: plain unbarred fillings.
    int plain = 0;
    for_each_T(theta, mu, mu, 2, [&](const ShapeChain&, const BarAssignment& ba) {
        CHECK(ba.tableau.bar_count() == 0);
        ++plain;
    });
    CHECK(plain == static_cast<int>(enumerate_ssyt(theta, 2).size()));

    CHECK_THROWS_AS(for_each_T(theta, Partition{2}, Partition{1, 1}, 2,
                               [](const ShapeChain&, const BarAssignment&) {}),
                    Error);
}

TEST_CASE("k-omitted enumeration") {
    SkewShape theta(Partition{2, 1});
    ShapeChain chain({Partition{1}, Partition{2}}, {1});

    // l = 1, k = 1: unbarred fillings, rho_plus = diagram 1, rho_minus = diagram 0.
    int count = 0;
    for_each_barred_k(theta, chain, 1, 2, [&](const BarAssignmentPM& ba) {
        CHECK(ba.tableau.bar_count() == 0);
        for (std::size_t i = 0; i < ba.tableau.cells().size(); ++i) {
            CHECK(ba.rho_plus[i] == 1);
            CHECK(ba.rho_minus[i] == 0);
        }
        ++count;
    });
    CHECK(count == static_cast<int>(enumerate_ssyt(theta, 2).size()));

    CHECK_THROWS_AS(for_each_barred_k(theta, chain, 2, 2, [](const BarAssignmentPM&) {}),
                    Error);

    // The k-omitted set contains the bar-erased image of the full set, and
    // plus/minus assignments differ only inside the window.
    SkewShape bigger(Partition{3, 2}, Partition{1});
    ShapeChain longer({Partition{2, 1}, Partition{2, 2}, Partition{3, 2}}, {2, 1});
    for (int k = 1; k <= longer.length(); ++k) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> omitted;
        for_each_barred_k(bigger, longer, k, 2, [&](const BarAssignmentPM& ba) {
            std::vector<int> bars;
            for (std::size_t i = 0; i < ba.tableau.cells().size(); ++i) {
                if (ba.tableau.barred(i)) bars.push_back(static_cast<int>(i));
                if (ba.rho_plus[i] != ba.rho_minus[i]) {
                    CHECK(ba.rho_plus[i] == k);
                    CHECK(ba.rho_minus[i] == k - 1);
                }
            }
            omitted.emplace(ba.tableau.entries(), bars);
        });
        for_each_barred(bigger, longer, 2, [&](const BarAssignment& ba) {
            // Collect bar cell indices in column order, erase the k-th, and
            // map back to row-major indices.
            std::vector<std::size_t> order = column_order(bigger);
            std::vector<int> in_order;
            for (std::size_t q = 0; q < order.size(); ++q)
                if (ba.tableau.barred(order[q])) in_order.push_back(static_cast<int>(order[q]));
            in_order.erase(in_order.begin() + (k - 1));
            std::sort(in_order.begin(), in_order.end());
            CHECK(omitted.count({ba.tableau.entries(), in_order}) == 1);
        });
    }
}

TEST_CASE("tableau text form") {
    SkewShape theta(Partition{3, 2}, Partition{1});
    Tableau t = make(theta, {1, 2, 1, 2}, {false, true, true, false});
    CHECK(t.to_text() == ". 1 2'\n1' 2");
}
