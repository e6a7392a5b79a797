#include "facs/lrcoef.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace facs {

std::string engine_name(Engine e) {
    switch (e) {
    case Engine::Tableau: return "tableau";
    case Engine::Recurrence: return "recurrence";
    case Engine::Hook: return "hook";
    case Engine::Oracle: return "oracle";
    case Engine::Classical: return "classical";
    }
    return "?";
}

Engine parse_engine(const std::string& name) {
    if (name == "tableau") return Engine::Tableau;
    if (name == "recurrence") return Engine::Recurrence;
    if (name == "hook") return Engine::Hook;
    if (name == "oracle") return Engine::Oracle;
    if (name == "classical") return Engine::Classical;
    fail(Errc::Usage, "unknown engine '" + name + "'");
}

long long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(mu, nu) || !contains(lambda, nu)) return 0;
    if (nu.size() != lambda.size() + mu.size()) return 0;
    const SkewShape target(nu, mu);
    if (target.size() == 0) return lambda.empty() ? 1 : 0;

    // Count of skew tableaux of weight lambda whose column word is a lattice
    // permutation.
    long long by_lattice = 0;
    if (!lambda.empty()) {
        for_each_ssyt(target, lambda.length(), [&](const Tableau& t) {
            if (t.weight(lambda.length()) == lambda.parts() && is_lattice(column_word(t)))
                ++by_lattice;
        });
    }

    // Count of lambda-tableaux that fit the target.
    long long by_fits = count_tableaux_fitting(SkewShape(lambda), target);

    require(by_lattice == by_fits, Errc::SizeMismatch,
            "lattice-word and fits counts disagree for " + lambda.to_string() + " * " +
                mu.to_string() + " -> " + nu.to_string());
    return by_lattice;
}

long long count_tableaux_fitting(const SkewShape& theta, const SkewShape& target) {
    if (theta.size() != target.size()) return 0;
    if (target.size() == 0) return 1; // the empty tableau fits the empty shape
    long long count = 0;
    for_each_ssyt(theta, target.outer().length(), [&](const Tableau& t) {
        if (fits(t, target)) ++count;
    });
    return count;
}

namespace {

// The factor attached to an unbarred cell: component T(alpha) of the
// evaluation point of rho(alpha), minus the b-sequence member at the
// content-shifted index.
MultiPoly cell_factor(const Partition& rho, int entry, int content, int n,
                      const SeqSpec& aseq, const SeqSpec& bseq, const Window& aw,
                      const Window& bw) {
    int a_index = aw.require(rho.part(entry) + n - entry + 1);
    int b_index = bw.require(entry + content);
    return aseq.entry(a_index) - bseq.entry(b_index);
}

Window a_point_window(const Partition& nu, int n) { return Window{1, nu.part(1) + n}; }

} // namespace

LRResult c_tableau(const SkewShape& theta, const Partition& mu, const Partition& nu, int n,
                   const SeqSpec& aseq, const SeqSpec& bseq) {
    require(mu.length() <= n && nu.length() <= n, Errc::TooLong,
            "mu and nu must fit in n rows");
    LRResult out{theta, mu, nu, n, MultiPoly(), Engine::Tableau};
    if (!contains(mu, nu)) return out;
    const Window aw = a_point_window(nu, n);
    const Window bw = content_window(theta, n);
    const std::vector<Cell> cells = theta.cells();
    for_each_T(theta, mu, nu, n, [&](const ShapeChain& chain, const BarAssignment& ba) {
        MultiPoly product(rat(1));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (ba.tableau.barred(i)) continue;
            product *= cell_factor(chain.diagrams()[ba.rho_index[i]], ba.tableau.entry(i),
                                   cells[i].content(), n, aseq, bseq, aw, bw);
        }
        out.value += product;
    });
    return out;
}

MultiPoly c_base(const SkewShape& theta, const Partition& mu, int n, const SeqSpec& bseq) {
    return substitute(fac_schur(theta, n, bseq), a_point_specialization(mu, n));
}

const MultiPoly& RecurrenceEngine::value(const Partition& mu, const Partition& nu) {
    require(mu.length() <= n_ && nu.length() <= n_, Errc::TooLong,
            "mu and nu must fit in n rows");
    auto key = std::make_pair(mu, nu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MultiPoly value;
    if (contains(mu, nu)) {
        if (mu == nu) {
            value = c_base(theta_, mu, n_);
        } else {
            MultiPoly numerator;
            for (const auto& [up, row] : covers_above(mu, &nu)) numerator += this->value(up, nu);
            for (const auto& [down, row] : covers_below(nu)) {
                if (contains(mu, down)) numerator -= this->value(mu, down);
            }
            value = exact_div(numerator, a_weight(nu, n_) - a_weight(mu, n_));
        }
    }
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

LRResult c_recurrence(const SkewShape& theta, const Partition& mu, const Partition& nu, int n) {
    RecurrenceEngine engine(theta, n);
    return LRResult{theta, mu, nu, n, engine.value(mu, nu), Engine::Recurrence};
}

MultiPoly s_of_R(const SkewShape& theta, const ShapeChain& chain, int n) {
    for (const Partition& rho : chain.diagrams())
        require(rho.length() <= n, Errc::TooLong, "chain diagram longer than n rows");
    const SeqSpec aseq = SeqSpec::symbolic_a();
    const SeqSpec bseq = SeqSpec::symbolic_b();
    const Window aw = a_point_window(chain.end(), n);
    const Window bw = content_window(theta, n);
    const std::vector<Cell> cells = theta.cells();
    MultiPoly out;
    for_each_barred(theta, chain, n, [&](const BarAssignment& ba) {
        MultiPoly product(rat(1));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (ba.tableau.barred(i)) continue;
            product *= cell_factor(chain.diagrams()[ba.rho_index[i]], ba.tableau.entry(i),
                                   cells[i].content(), n, aseq, bseq, aw, bw);
        }
        out += product;
    });
    return out;
}

std::pair<MultiPoly, MultiPoly> s_k_pm(const SkewShape& theta, const ShapeChain& chain, int k,
                                       int n) {
    const SeqSpec aseq = SeqSpec::symbolic_a();
    const SeqSpec bseq = SeqSpec::symbolic_b();
    const Window aw = a_point_window(chain.end(), n);
    const Window bw = content_window(theta, n);
    const std::vector<Cell> cells = theta.cells();
    MultiPoly plus, minus;
    for_each_barred_k(theta, chain, k, n, [&](const BarAssignmentPM& ba) {
        MultiPoly plus_product(rat(1)), minus_product(rat(1));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (ba.tableau.barred(i)) continue;
            int entry = ba.tableau.entry(i);
            int content = cells[i].content();
            plus_product *= cell_factor(chain.diagrams()[ba.rho_plus[i]], entry, content, n,
                                        aseq, bseq, aw, bw);
            minus_product *= cell_factor(chain.diagrams()[ba.rho_minus[i]], entry, content, n,
                                         aseq, bseq, aw, bw);
        }
        plus += plus_product;
        minus += minus_product;
    });
    return {plus, minus};
}

namespace {

// |a_rho| evaluated at the specialization; must come out constant.
Rational weight_at(const Partition& rho, int n, const Specialization& s,
                   std::map<Partition, Rational>& cache) {
    auto it = cache.find(rho);
    if (it != cache.end()) return it->second;
    MultiPoly value = substitute(a_weight(rho, n), s);
    require(value.is_constant(), Errc::UnassignedVariable,
            "specialization leaves |a_rho| symbolic");
    Rational r = value.constant_value();
    cache.emplace(rho, r);
    return r;
}

} // namespace

Rational H_eval(const Partition& mu, const Partition& rho, int n, const Specialization& s) {
    require(contains(mu, rho), Errc::NotContained, "need mu inside rho");
    std::map<Partition, Rational> weights;
    const Rational top = weight_at(rho, n, s, weights);
    Rational total = rat(0);
    for_each_chain(mu, rho, [&](const ShapeChain& chain) {
        Rational denom = rat(1);
        for (int r = 0; r < chain.length(); ++r) {
            Rational difference = top - weight_at(chain.diagrams()[r], n, s, weights);
            require(difference != 0, Errc::ZeroDenominator,
                    "specialization collides on |a_rho| values");
            denom *= difference;
        }
        total += 1 / denom;
    });
    return total;
}

Rational Hprime_eval(const Partition& rho, const Partition& nu, int n,
                     const Specialization& s) {
    require(contains(rho, nu), Errc::NotContained, "need rho inside nu");
    std::map<Partition, Rational> weights;
    const Rational base = weight_at(rho, n, s, weights);
    Rational total = rat(0);
    for_each_chain(rho, nu, [&](const ShapeChain& chain) {
        Rational denom = rat(1);
        for (int t = 1; t <= chain.length(); ++t) {
            Rational difference = base - weight_at(chain.diagrams()[t], n, s, weights);
            require(difference != 0, Errc::ZeroDenominator,
                    "specialization collides on |a_rho| values");
            denom *= difference;
        }
        total += 1 / denom;
    });
    return total;
}

Rational c_hh(const SkewShape& theta, const Partition& mu, const Partition& nu, int n,
              const Specialization& s) {
    require(contains(mu, nu), Errc::NotContained, "need mu inside nu");
    Rational total = rat(0);
    for (const Partition& rho : partitions_between(mu, nu)) {
        MultiPoly base = substitute(c_base(theta, rho, n), s);
        require(base.is_constant(), Errc::UnassignedVariable,
                "specialization leaves s_theta(a_rho|b) symbolic");
        total += base.constant_value() * H_eval(mu, rho, n, s) * Hprime_eval(rho, nu, n, s);
    }
    return total;
}

long long f_tableau(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
    require(lambda.length() <= n && mu.length() <= n && nu.length() <= n, Errc::TooLong,
            "shapes must fit in n rows");
    if (!contains(mu, nu)) return 0;
    const std::vector<Cell> cells = SkewShape(lambda).cells();
    long long total = 0;
    for_each_T(SkewShape(lambda), mu, nu, n,
               [&](const ShapeChain& chain, const BarAssignment& ba) {
                   long long product = 1;
                   for (std::size_t i = 0; i < cells.size(); ++i) {
                       if (ba.tableau.barred(i)) continue;
                       int entry = ba.tableau.entry(i);
                       const Partition& rho = chain.diagrams()[ba.rho_index[i]];
                       product *= rho.part(entry) + n - 2 * entry - cells[i].content() + 1;
                   }
                   total += product;
               });
    return total;
}

long long f_hook(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const Partition lower = join(lambda, mu);
    if (!contains(lower, nu)) return 0;
    Rational total = rat(0);
    for (const Partition& rho : partitions_between(lower, nu)) {
        Rational term = rat(hook_product(rho)) /
                        (h_skew(SkewShape(nu, rho)) * h_skew(SkewShape(rho, lambda)) *
                         h_skew(SkewShape(rho, mu)));
        if ((nu.size() - rho.size()) % 2 != 0) term = -term;
        total += term;
    }
    require(is_integer(total), Errc::NonIntegerResult,
            "hook-quotient sum is not an integer: " + rational_to_string(total));
    return to_int64(total);
}

double predicted_enumeration_size(const SkewShape& theta, const Partition& mu,
                                  const Partition& nu, int n) {
    if (!contains(mu, nu)) return 0.0;
    double chain_count = static_cast<double>(dim_skew(SkewShape(nu, mu)));
    double fillings = 1.0;
    for (int row = 1; row <= theta.rows(); ++row) {
        int len = theta.outer().part(row) - theta.inner().part(row);
        // Combinations with repetition, ignoring column constraints.
        for (int i = 1; i <= len; ++i) fillings *= static_cast<double>(n - 1 + i) / i;
    }
    double placements = 1.0;
    int cells = theta.size(), bars = nu.size() - mu.size();
    if (bars > cells) return 0.0;
    for (int i = 0; i < bars; ++i) placements *= static_cast<double>(cells - i) / (i + 1);
    return chain_count * fillings * placements;
}

} // namespace facs
