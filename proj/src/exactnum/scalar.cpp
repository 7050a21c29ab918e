#include "homalg/exactnum/scalar.hpp"

#include "homalg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace homalg {

Scalar Scalar::normalize(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw ZeroDenominator();
    Scalar s;
    if (num.is_zero()) return s;
    if (den.is_constant()) {
        s.num_ = num * mpq_class(1 / den.constant_value());
        return s;
    }
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
        num = exact_divide(num, g);
        den = exact_divide(den, g);
    }
    mpq_class lc = den.leading_coeff();
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num *= inv;
        den *= inv;
    }
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

Scalar scalar_normalize(const Polynomial& num, const Polynomial& den) { return Scalar::normalize(num, den); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        *this = normalize(std::move(num_), std::move(den_));
        return *this;
    }
    // With g = gcd of the denominators only g can share factors with the new numerator.
    Polynomial g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = Polynomial(1);
        return *this;
    }
    Polynomial d1 = exact_divide(den_, g), d2 = exact_divide(o.den_, g);
    Polynomial t = num_ * d2 + o.num_ * d1;
    if (t.is_zero()) return *this = Scalar();
    Polynomial g2 = gcd(t, g);
    num_ = g2.is_one() ? std::move(t) : exact_divide(t, g2);
    den_ = d1 * (g2.is_one() ? o.den_ : exact_divide(o.den_, g2));
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    if (o.is_constant()) {
        num_ *= o.constant_value();
        return *this;
    }
    if (is_constant()) {
        mpq_class c = constant_value();
        *this = o;
        num_ *= c;
        return *this;
    }
    // Cross cancellation keeps the result reduced without a full gcd of the products.
    Polynomial g1 = gcd(num_, o.den_);
    Polynomial g2 = gcd(o.num_, den_);
    Polynomial n = exact_divide(num_, g1) * exact_divide(o.num_, g2);
    Polynomial d = exact_divide(den_, g2) * exact_divide(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s;
    mpq_class lc = 1 / num_.leading_coeff();
    s.num_ = den_ * lc;
    s.den_ = num_ * lc;
    return s;
}

std::set<std::string> Scalar::variables() const {
    std::set<std::string> v = num_.variables();
    for (const auto& x : den_.variables()) v.insert(x);
    return v;
}

Scalar Scalar::substitute(const std::map<std::string, mpq_class>& values) const {
    Polynomial d = den_.substitute(values);
    if (d.is_zero())
        throw DenominatorVanishes("denominator " + den_.to_string() + " vanishes under the given bindings");
    return normalize(num_.substitute(values), d);
}

Scalar operator+(Scalar a, const Scalar& b) {
    a += b;
    return a;
}

Scalar operator-(Scalar a, const Scalar& b) {
    a -= b;
    return a;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r *= b;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r /= b;
    return r;
}

namespace {

// Integer-coefficient multiple of num/den with coprime contents, for display.
std::pair<Polynomial, Polynomial> integral_form(const Polynomial& num, const Polynomial& den) {
    mpz_class l = 1, g = 0;
    for (const auto* p : {&num, &den})
        for (const auto& [m, c] : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto* p : {&num, &den})
        for (const auto& [m, c] : p->terms()) {
            mpz_class v = c.get_num() * (l / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    mpq_class f(l, g);
    f.canonicalize();
    return {num * f, den * f};
}

bool needs_parens(const Polynomial& p) {
    if (p.size() != 1) return true;
    const auto& [m, c] = *p.terms().begin();
    return !(c == 1 && m.size() == 1 && m[0].second == 1) && !(m.empty() && sgn(c) > 0);
}

} // namespace

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto [n, d] = integral_form(num_, den_);
    std::string ns = n.to_string();
    if (n.size() > 1) ns = "(" + ns + ")";
    std::string ds = d.to_string();
    if (needs_parens(d)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

bool is_parameter_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

namespace {

class ScalarParser {
public:
    ScalarParser(const std::string& text, const std::vector<std::string>* params) : s_(text), params_(params) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (params_ && std::find(params_->begin(), params_->end(), name) == params_->end())
                throw UnknownParameter(name);
            return Scalar::param(name);
        }
        throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    const std::string& s_;
    const std::vector<std::string>* params_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(const std::string& text) { return ScalarParser(text, nullptr).parse(); }

Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params) {
    return ScalarParser(text, &params).parse();
}

} // namespace homalg
