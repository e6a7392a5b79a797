#pragma once

// Exact sparse multivariate polynomial arithmetic over arbitrary-precision
// rationals, with three indexed variable families: x (finite, 1..n) and the
// sequence families a, b (integer indices inside a per-run window).

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facs/error.hpp"
#include "facs/rational.hpp"

namespace facs {

enum class VarFamily : int { X = 0, A = 1, B = 2 };

char family_letter(VarFamily f);

// A single indexed variable, ordered by family (x < a < b), then index.
struct VarRef {
    VarFamily family;
    int index;
    auto operator<=>(const VarRef&) const = default;
};

VarRef x_var(int index); // index >= 1
VarRef a_var(int index);
VarRef b_var(int index);

std::string var_name(VarRef v); // "x1", "a3", "b-1"

// Inclusive index window for a sequence family, computed from the inputs of
// a run before anything is evaluated. Requesting an index outside the window
// is a hard error, never silent truncation.
struct Window {
    int lo = 1;
    int hi = 0; // empty by default

    bool contains(int i) const { return lo <= i && i <= hi; }
    int require(int i) const;
    Window merged(const Window& other) const;
};

// Product of variables with positive exponents, entries sorted by VarRef.
//
// The total order is lexicographic with x1 > x2 > ... > a_i > ... > b_i as
// variable priority (earlier VarRef = more significant). It is admissible
// (the unit monomial is minimal and the order respects multiplication), so
// leading terms drive exact division. Canonical form and serialization use
// this one fixed order.
class Monomial {
public:
    struct Entry {
        VarRef var;
        int exp;
        bool operator==(const Entry&) const = default;
    };

    Monomial() = default; // the unit monomial
    static Monomial variable(VarRef v, int exp = 1);
    static Monomial from_entries(std::vector<Entry> entries); // validates & sorts

    bool is_unit() const { return entries_.empty(); }
    int exponent(VarRef v) const;
    int x_degree() const;     // total degree in X-variables only
    int total_degree() const; // over all families
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial operator*(const Monomial& other) const;
    // Componentwise quotient, or nullopt when not divisible.
    std::optional<Monomial> divided_by(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& other) const;

    std::string to_text() const; // "x1^2 * a3 * b-1^2"; unit -> "1"

private:
    std::vector<Entry> entries_;
};

class MultiPoly;

// Fallback values for sequence-family variables a specialization does not
// assign explicitly: all zero, the shifted sequence a_i = i-1, or an explicit
// table over a window.
struct FamilyRule {
    enum class Kind { Zero, Shifted, Explicit };

    Kind kind = Kind::Zero;
    std::map<int, Rational> table; // Explicit only

    static FamilyRule zero() { return {Kind::Zero, {}}; }
    static FamilyRule shifted() { return {Kind::Shifted, {}}; }
    static FamilyRule explicit_table(std::map<int, Rational> values);

    Rational value_at(int index) const; // Explicit misses are OutOfWindow errors
};

// A (possibly partial) assignment of variables to polynomial values.
// Assigning x_k to another variable (e.g. the evaluation point x = a_rho)
// and assigning exact rational values are both expressed here.
//
// If the specialization assigns at least one X-variable or carries an X
// rule, it must cover every X-variable of the polynomial it is applied to;
// a miss is an UnassignedVariable error. A specialization with no X
// assignments substitutes only what it names.
class Specialization {
public:
    Specialization& set(VarRef v, Rational value);
    Specialization& set(VarRef v, const MultiPoly& value);
    Specialization& set_rule(VarFamily family, FamilyRule rule); // A/B only

    bool has(VarRef v) const;
    std::optional<MultiPoly> find(VarRef v) const; // rule-resolved; empty if symbolic
    bool assigns_x() const;

    // True when every assigned A-variable has a constant value and those
    // values are pairwise distinct (the denominator-safe precondition).
    bool a_values_pairwise_distinct() const;

    const std::map<VarRef, MultiPoly>& assignments() const { return assignments_; }

private:
    std::map<VarRef, MultiPoly> assignments_;
    std::map<VarFamily, FamilyRule> rules_;
};

// Sparse polynomial in canonical form: no zero coefficients, term map keyed
// by the fixed monomial order. Equality is structural equality of the maps.
class MultiPoly {
public:
    MultiPoly() = default; // zero
    /*implicit*/ MultiPoly(const Rational& c) { add_term(Monomial(), c); }
    /*implicit*/ MultiPoly(long c) { add_term(Monomial(), rat(c)); }
    static MultiPoly variable(VarRef v);
    static MultiPoly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term of a constant polynomial; zero polynomial yields 0.
    const Rational& constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    const Rational& coeff(const Monomial& m) const; // 0 if absent
    int x_degree() const;     // max X-degree over terms; -1 for the zero polynomial
    int total_degree() const; // -1 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
    friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
    friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);

    bool operator==(const MultiPoly&) const = default;

    // Text form: terms in decreasing monomial order, each "coeff * factors",
    // joined by " + "; rationals as "p/q"; zero polynomial is "0".
    std::string to_text() const;
    static MultiPoly parse_text(const std::string& text);

    void add_term(const Monomial& m, const Rational& c); // prunes zeros

private:
    std::map<Monomial, Rational> terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

// Exact quotient p / d; NotDivisible when no exact quotient exists (which
// signals a fault upstream — every use in this project divides exactly).
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

MultiPoly substitute(const MultiPoly& p, const Specialization& s);

// Sum of the terms of total X-degree exactly d (a linear projector).
MultiPoly homogeneous_component(const MultiPoly& p, int d);

} // namespace facs
