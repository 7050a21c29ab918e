#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homalg {

// Sparse monomial: (parameter name, exponent) pairs sorted by name, exponents > 0.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

unsigned total_degree(const Monomial& m);
int grlex_compare(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_div(const Monomial& m, const Monomial& d);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

// Polynomial with rational coefficients. Terms are kept in descending
// graded-lex order, so the first term is the leading one.
class Polynomial {
public:
    using Terms = std::map<Monomial, mpq_class, GrlexGreater>;

    Polynomial() = default;
    Polynomial(long c);
    Polynomial(const mpq_class& c);
    static Polynomial variable(const std::string& name, unsigned exp = 1);
    static Polynomial term(const Monomial& m, const mpq_class& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    // Only valid for nonzero polynomials.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const mpq_class& leading_coeff() const { return terms_.begin()->second; }
    mpq_class constant_value() const;

    unsigned degree() const;
    unsigned degree_in(const std::string& var) const;
    std::set<std::string> variables() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const mpq_class& c);
    Polynomial operator-() const;

    // Adds c*m*p to this polynomial.
    void add_scaled(const Polynomial& p, const mpq_class& c, const Monomial& m = {});

    Polynomial substitute(const std::map<std::string, mpq_class>& values) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void add_term(const Monomial& m, const mpq_class& c);
    Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const mpq_class& c);

// Scales p so that its leading coefficient is 1.
Polynomial monic(const Polynomial& p);

// Exact quotient a/b; throws MathError if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace homalg
