#pragma once

#include <map>
#include <optional>

#include "rational.hpp"
#include "ring.hpp"

namespace duality {

struct Term {
    Monomial m;
    Rational c;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted in
// descending grevlex order with no zero coefficients, so equality is
// structural and printing is deterministic.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& c);
    Polynomial(RingPtr ring, std::vector<Term> terms); // normalizes

    static Polynomial variable(const RingPtr& ring, int idx, int power = 1);
    static Polynomial monomial(const RingPtr& ring, Monomial m,
                               Rational c = Rational(1));

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
    }
    Rational constant_value() const; // requires is_constant()
    int total_degree() const;        // -1 for zero
    int degree_in(int var) const;    // -1 for zero

    // Leading term under the canonical (grevlex) order.
    const Term& leading() const { return terms_.front(); }
    // Leading term under an arbitrary order (linear scan).
    const Term& leading(const MonomialOrder& ord) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial mul_term(const Monomial& m, const Rational& c) const;

    // d/dx_var, plain partial derivative (no factorial normalization).
    Polynomial derivative(int var) const;
    Polynomial derivative(const Monomial& beta) const; // iterated

    // Simultaneous substitution of ring variables.
    Polynomial substitute(const std::map<int, Polynomial>& bindings) const;
    // Transport into another ring via a variable-index map (old -> new).
    Polynomial map_ring(const RingPtr& target,
                        const std::vector<int>& var_map) const;

    // True if every term's support is contained in the flagged variables.
    bool supported_on(const std::vector<char>& vars) const;

    std::string str() const;

    // Deterministic comparison for sorting polynomial collections.
    static int compare(const Polynomial& a, const Polynomial& b);

private:
    void normalize();
    RingPtr ring_;
    std::vector<Term> terms_;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses `+ - * ^`, integer and a/b rational literals, parentheses and
// variable identifiers. Round-trips the output of Polynomial::str().
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Coefficient of var^d, as a polynomial in the remaining variables.
Polynomial coefficient_in(const Polynomial& p, int var, int d);

// Exact quotient p / d; throws if the division is not exact.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

// GCD over Q[x1..xn], normalized monic in grevlex. gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

} // namespace duality
