#include "facs/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace facs {

char family_letter(VarFamily f) {
    switch (f) {
    case VarFamily::X: return 'x';
    case VarFamily::A: return 'a';
    case VarFamily::B: return 'b';
    }
    return '?';
}

VarRef x_var(int index) {
    require(index >= 1, Errc::IndexOutOfRange, "x-variable index must be >= 1");
    return {VarFamily::X, index};
}

VarRef a_var(int index) { return {VarFamily::A, index}; }
VarRef b_var(int index) { return {VarFamily::B, index}; }

std::string var_name(VarRef v) {
    return family_letter(v.family) + std::to_string(v.index);
}

int Window::require(int i) const {
    if (!contains(i))
        fail(Errc::OutOfWindow, "sequence index " + std::to_string(i) + " outside window [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    return i;
}

Window Window::merged(const Window& other) const {
    if (lo > hi) return other;
    if (other.lo > other.hi) return *this;
    return {std::min(lo, other.lo), std::max(hi, other.hi)};
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(VarRef v, int exp) {
    require(exp >= 0, Errc::IndexOutOfRange, "negative exponent");
    Monomial m;
    if (exp > 0) m.entries_.push_back({v, exp});
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& l, const Entry& r) { return l.var < r.var; });
    Monomial m;
    for (const Entry& e : entries) {
        require(e.exp > 0, Errc::IndexOutOfRange, "monomial exponents must be positive");
        if (!m.entries_.empty() && m.entries_.back().var == e.var)
            m.entries_.back().exp += e.exp;
        else
            m.entries_.push_back(e);
    }
    return m;
}

int Monomial::exponent(VarRef v) const {
    for (const Entry& e : entries_)
        if (e.var == v) return e.exp;
    return 0;
}

int Monomial::x_degree() const {
    int d = 0;
    for (const Entry& e : entries_)
        if (e.var.family == VarFamily::X) d += e.exp;
    return d;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const Entry& e : entries_) d += e.exp;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    auto i = entries_.begin();
    auto j = other.entries_.begin();
    while (i != entries_.end() || j != other.entries_.end()) {
        if (j == other.entries_.end() || (i != entries_.end() && i->var < j->var)) {
            out.entries_.push_back(*i++);
        } else if (i == entries_.end() || j->var < i->var) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.push_back({i->var, i->exp + j->exp});
            ++i, ++j;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    auto i = entries_.begin();
    for (const Entry& d : other.entries_) {
        while (i != entries_.end() && i->var < d.var) out.entries_.push_back(*i++);
        if (i == entries_.end() || i->var != d.var || i->exp < d.exp) return std::nullopt;
        if (i->exp > d.exp) out.entries_.push_back({i->var, i->exp - d.exp});
        ++i;
    }
    while (i != entries_.end()) out.entries_.push_back(*i++);
    return out;
}

bool Monomial::operator<(const Monomial& other) const {
    // Lexicographic: scan variables in increasing VarRef order; the first
    // difference decides, larger exponent on the earlier variable wins.
    auto i = entries_.begin();
    auto j = other.entries_.begin();
    while (i != entries_.end() && j != other.entries_.end()) {
        if (i->var == j->var) {
            if (i->exp != j->exp) return i->exp < j->exp;
            ++i, ++j;
        } else if (i->var < j->var) {
            return false; // *this carries the more significant variable
        } else {
            return true;
        }
    }
    return j != other.entries_.end();
}

std::string Monomial::to_text() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const Entry& e : entries_) {
        if (!out.empty()) out += " * ";
        out += var_name(e.var);
        if (e.exp > 1) out += "^" + std::to_string(e.exp);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FamilyRule / Specialization

FamilyRule FamilyRule::explicit_table(std::map<int, Rational> values) {
    return {Kind::Explicit, std::move(values)};
}

Rational FamilyRule::value_at(int index) const {
    switch (kind) {
    case Kind::Zero: return rat(0);
    case Kind::Shifted: return rat(index - 1);
    case Kind::Explicit: {
        auto it = table.find(index);
        if (it == table.end())
            fail(Errc::OutOfWindow, "explicit sequence has no value at index " + std::to_string(index));
        return it->second;
    }
    }
    return rat(0);
}

Specialization& Specialization::set(VarRef v, Rational value) {
    return set(v, MultiPoly(value));
}

Specialization& Specialization::set(VarRef v, const MultiPoly& value) {
    assignments_.insert_or_assign(v, value);
    return *this;
}

Specialization& Specialization::set_rule(VarFamily family, FamilyRule rule) {
    rules_.insert_or_assign(family, std::move(rule));
    return *this;
}

bool Specialization::has(VarRef v) const { return find(v).has_value(); }

std::optional<MultiPoly> Specialization::find(VarRef v) const {
    auto it = assignments_.find(v);
    if (it != assignments_.end()) return it->second;
    auto rt = rules_.find(v.family);
    if (rt != rules_.end()) return MultiPoly(rt->second.value_at(v.index));
    return std::nullopt;
}

bool Specialization::assigns_x() const {
    if (rules_.count(VarFamily::X)) return true;
    for (const auto& [v, _] : assignments_)
        if (v.family == VarFamily::X) return true;
    return false;
}

bool Specialization::a_values_pairwise_distinct() const {
    std::vector<Rational> seen;
    for (const auto& [v, value] : assignments_) {
        if (v.family != VarFamily::A) continue;
        if (!value.is_constant()) return false;
        for (const Rational& r : seen)
            if (r == value.constant_value()) return false;
        seen.push_back(value.constant_value());
    }
    return true;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::variable(VarRef v) {
    MultiPoly p;
    p.add_term(Monomial::variable(v), rat(1));
    return p;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

const Rational& MultiPoly::constant_value() const {
    static const Rational zero_value = rat(0);
    if (terms_.empty()) return zero_value;
    require(is_constant(), Errc::IndexOutOfRange, "polynomial is not constant");
    return terms_.begin()->second;
}

const Rational& MultiPoly::coeff(const Monomial& m) const {
    static const Rational zero_value = rat(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_value : it->second;
}

int MultiPoly::x_degree() const {
    int d = -1;
    for (const auto& [m, _] : terms_) d = std::max(d, m.x_degree());
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, _] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
    MultiPoly out;
    for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms()) out.add_term(ml * mr, cl * cr);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += rational_to_string(it->second);
        if (!it->first.is_unit()) out += " * " + it->first.to_text();
    }
    return out;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

VarRef parse_var(const std::string& token) {
    require(!token.empty(), Errc::Usage, "empty variable token");
    VarFamily fam;
    switch (token[0]) {
    case 'x': fam = VarFamily::X; break;
    case 'a': fam = VarFamily::A; break;
    case 'b': fam = VarFamily::B; break;
    default: fail(Errc::Usage, "unknown variable family in '" + token + "'");
    }
    try {
        int index = std::stoi(token.substr(1));
        return fam == VarFamily::X ? x_var(index) : VarRef{fam, index};
    } catch (const std::logic_error&) {
        fail(Errc::Usage, "bad variable index in '" + token + "'");
    }
}

} // namespace

MultiPoly MultiPoly::parse_text(const std::string& text) {
    MultiPoly out;
    std::string body = strip(text);
    if (body.empty() || body == "0") return out;
    for (const std::string& raw_term : split_on(body, " + ")) {
        std::vector<std::string> factors = split_on(strip(raw_term), " * ");
        require(!factors.empty(), Errc::Usage, "empty term");
        Rational c = parse_rational(strip(factors[0]));
        std::vector<Monomial::Entry> entries;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            std::string f = strip(factors[i]);
            int exp = 1;
            if (std::size_t caret = f.find('^'); caret != std::string::npos) {
                exp = std::stoi(f.substr(caret + 1));
                f = f.substr(0, caret);
            }
            entries.push_back({parse_var(f), exp});
        }
        out.add_term(Monomial::from_entries(std::move(entries)), c);
    }
    return out;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
    require(!d.is_zero(), Errc::NotDivisible, "division by the zero polynomial");
    MultiPoly quotient;
    MultiPoly rest = p;
    const auto& dlead = *d.terms().rbegin();
    while (!rest.is_zero()) {
        const auto& rlead = *rest.terms().rbegin();
        // If p = q*d exactly, the leading monomial stays divisible at every
        // step; a miss proves no exact quotient exists.
        std::optional<Monomial> m = rlead.first.divided_by(dlead.first);
        if (!m) fail(Errc::NotDivisible, "no exact quotient");
        MultiPoly piece = MultiPoly::term(rlead.second / dlead.second, *m);
        quotient += piece;
        rest -= piece * d;
    }
    return quotient;
}

MultiPoly substitute(const MultiPoly& p, const Specialization& s) {
    const bool strict_x = s.assigns_x();
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term(c);
        Monomial free_part;
        for (const Monomial::Entry& e : m.entries()) {
            std::optional<MultiPoly> value = s.find(e.var);
            if (!value) {
                if (strict_x && e.var.family == VarFamily::X)
                    fail(Errc::UnassignedVariable, "no assignment for " + var_name(e.var));
                free_part = free_part * Monomial::variable(e.var, e.exp);
                continue;
            }
            for (int k = 0; k < e.exp; ++k) term *= *value;
        }
        out += term * MultiPoly::term(rat(1), free_part);
    }
    return out;
}

MultiPoly homogeneous_component(const MultiPoly& p, int d) {
    require(d >= 0, Errc::IndexOutOfRange, "degree must be >= 0");
    MultiPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.x_degree() == d) out.add_term(m, c);
    return out;
}

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(const std::string& text) {
    std::string body = strip(text);
    require(!body.empty(), Errc::Usage, "empty rational");
    for (std::size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                  ((ch == '-' || ch == '+') && (i == 0 || body[i - 1] == '/'));
        require(ok, Errc::Usage, "bad rational '" + text + "'");
    }
    Rational r;
    if (r.set_str(body, 10) != 0) fail(Errc::Usage, "bad rational '" + text + "'");
    require(r.get_den() != 0, Errc::ZeroDenominator, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

long long to_int64(const Rational& r) {
    require(is_integer(r), Errc::NonIntegerResult, "expected an integer, got " + rational_to_string(r));
    require(r.get_num().fits_slong_p(), Errc::NonIntegerResult, "integer out of range");
    return r.get_num().get_si();
}

} // namespace facs
