#include "facs/io.hpp"

#include <map>

namespace facs {

namespace {

const char* family_key(VarFamily f) {
    switch (f) {
    case VarFamily::X: return "x";
    case VarFamily::A: return "a";
    case VarFamily::B: return "b";
    }
    return "?";
}

Json monomial_to_json(const Monomial& m) {
    Json out = Json::object();
    for (VarFamily f : {VarFamily::X, VarFamily::A, VarFamily::B}) {
        Json fam = Json::object();
        for (const Monomial::Entry& e : m.entries())
            if (e.var.family == f) fam[std::to_string(e.var.index)] = e.exp;
        if (!fam.empty()) out[family_key(f)] = std::move(fam);
    }
    return out;
}

} // namespace

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json term = Json::object();
        term["c"] = rational_to_string(it->second);
        term["m"] = monomial_to_json(it->first);
        terms.push_back(std::move(term));
    }
    Json out = Json::object();
    out["terms"] = std::move(terms);
    return out;
}

MultiPoly poly_from_json(const Json& j) {
    MultiPoly out;
    for (const Json& term : j.at("terms")) {
        Rational c = parse_rational(term.at("c").get<std::string>());
        std::vector<Monomial::Entry> entries;
        const Json& m = term.at("m");
        for (VarFamily f : {VarFamily::X, VarFamily::A, VarFamily::B}) {
            if (!m.contains(family_key(f))) continue;
            for (const auto& [key, exp] : m.at(family_key(f)).items()) {
                int index = std::stoi(key);
                VarRef v = f == VarFamily::X ? x_var(index) : VarRef{f, index};
                entries.push_back({v, exp.get<int>()});
            }
        }
        out.add_term(Monomial::from_entries(std::move(entries)), c);
    }
    return out;
}

Json lrresult_to_json(const LRResult& r) {
    Json out = Json::object();
    out["theta"] = r.theta.to_string();
    out["mu"] = r.mu.to_string();
    out["nu"] = r.nu.to_string();
    out["n"] = r.n;
    out["engine"] = engine_name(r.engine);
    out["value"] = poly_to_json(r.value);
    return out;
}

Json expansion_to_json(const Expansion& e) {
    Json coeffs = Json::object();
    for (const auto& [nu, poly] : e.coeffs) coeffs[nu.to_string()] = poly_to_json(poly);
    Json out = Json::object();
    out["coeffs"] = std::move(coeffs);
    out["remainder"] = poly_to_json(e.remainder);
    return out;
}

} // namespace facs
