#pragma once

#include "homalg/exactnum/polynomial.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace homalg {

// Element of Q(params) kept as num/den with gcd(num, den) = 1 and a monic
// denominator (leading coefficient 1 in graded-lex order).
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(int c) : num_(long(c)), den_(1) {}
    Scalar(const mpq_class& c) : num_(c), den_(1) {}
    Scalar(Polynomial p) : num_(std::move(p)), den_(1) {}

    static Scalar normalize(Polynomial num, Polynomial den);
    static Scalar param(const std::string& name) { return Scalar(Polynomial::variable(name)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    mpq_class constant_value() const { return num_.constant_value(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inv() const;

    std::set<std::string> variables() const;

    // Substitutes rational values; throws DenominatorVanishes when the
    // denominator becomes zero.
    Scalar substitute(const std::map<std::string, mpq_class>& values) const;

    // Text that parse_scalar reads back to an equal value.
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Polynomial num_;
    Polynomial den_;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);

Scalar scalar_normalize(const Polynomial& num, const Polynomial& den);

// Reads `expr := term (('+'|'-') term)*`, `term := factor ('*'|'/' factor)*`,
// `factor := integer | parameter | '(' expr ')' | '-' factor`.
// The first overload accepts any identifier as a parameter.
Scalar parse_scalar(const std::string& text);
Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params);

bool is_parameter_name(const std::string& s);

} // namespace homalg
