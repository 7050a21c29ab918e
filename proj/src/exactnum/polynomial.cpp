#include "homalg/exactnum/polynomial.hpp"

#include "homalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace homalg {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            return 1;
        } else {
            return -1;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
    std::size_t j = 0;
    for (const auto& [v, e] : d) {
        while (j < m.size() && m[j].first < v) ++j;
        if (j == m.size() || m[j].first != v || m[j].second < e) return false;
    }
    return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
    Monomial out;
    std::size_t j = 0;
    for (const auto& [v, e] : m) {
        unsigned sub = 0;
        if (j < d.size() && d[j].first == v) sub = d[j++].second;
        if (e > sub) out.emplace_back(v, e - sub);
    }
    return out;
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_.emplace(Monomial{}, mpq_class(c));
}

Polynomial::Polynomial(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const std::string& name, unsigned exp) {
    Polynomial p;
    if (exp == 0)
        p.terms_.emplace(Monomial{}, mpq_class(1));
    else
        p.terms_.emplace(Monomial{{name, exp}}, mpq_class(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c) {
    Polynomial p;
    if (sgn(c) != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

mpq_class Polynomial::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned Polynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

unsigned Polynomial::degree_in(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == var) d = std::max(d, e);
    return d;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, v] : p.terms_) v = -v;
    return p;
}

void Polynomial::add_scaled(const Polynomial& p, const mpq_class& c, const Monomial& m) {
    if (sgn(c) == 0) return;
    for (const auto& [pm, pc] : p.terms_) add_term(m.empty() ? pm : monomial_mul(pm, m), pc * c);
}

Polynomial Polynomial::substitute(const std::map<std::string, mpq_class>& values) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        mpq_class coeff = c;
        Monomial rest;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) {
                rest.emplace_back(v, e);
            } else {
                mpq_class pw = 1;
                for (unsigned k = 0; k < e; ++k) pw *= it->second;
                coeff *= pw;
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

static std::string monomial_string(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        for (unsigned k = 0; k < e; ++k) {
            if (!s.empty()) s += "*";
            s += v;
        }
    }
    return s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string num = a.get_num().get_str();
        std::string den = a.get_den() == 1 ? "" : "/" + a.get_den().get_str();
        if (m.empty()) {
            out += num + den;
        } else if (num == "1") {
            out += monomial_string(m) + den;
        } else {
            out += num + "*" + monomial_string(m) + den;
        }
    }
    return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.size() > b.size()) return b * a;
    Polynomial out;
    for (const auto& [m, c] : a.terms()) out.add_scaled(b, c, m);
    return out;
}

Polynomial operator*(Polynomial a, const mpq_class& c) {
    a *= c;
    return a;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero() || p.leading_coeff() == 1) return p;
    mpq_class inv = 1 / p.leading_coeff();
    return p * inv;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) return a * mpq_class(1 / b.constant_value());
    Polynomial q, r = a;
    const Monomial& lb = b.leading_monomial();
    const mpq_class& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!monomial_divides(lb, lr))
            throw MathError("inexact polynomial division of " + a.to_string() + " by " + b.to_string());
        Monomial t = monomial_div(lr, lb);
        mpq_class c = r.leading_coeff() / cb;
        q.add_scaled(Polynomial(1), c, t);
        r.add_scaled(b, -c, t);
    }
    return q;
}

namespace {

// Coefficient of var^k, as a polynomial free of var.
Polynomial coeff_in(const Polynomial& p, const std::string& var, unsigned k) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = 0;
        Monomial rest;
        for (const auto& [v, ex] : m) {
            if (v == var)
                e = ex;
            else
                rest.emplace_back(v, ex);
        }
        if (e == k) out.add_scaled(Polynomial(1), c, rest);
    }
    return out;
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
    Polynomial g;
    unsigned d = p.degree_in(var);
    for (unsigned k = 0; k <= d; ++k) {
        Polynomial c = coeff_in(p, var, k);
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Rescales p to integer coefficients with no common integer factor.
Polynomial integer_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1, g = 0;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        mpz_class v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class f(l, g);
    f.canonicalize();
    return p * f;
}

Polynomial primitive_in(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return p;
    return integer_primitive(exact_divide(p, content_in(p, var)));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b, in var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var) {
    unsigned da = a.degree_in(var), db = b.degree_in(var);
    Polynomial lb = coeff_in(b, var, db);
    Polynomial r = a;
    unsigned steps = da - db + 1;
    while (!r.is_zero()) {
        unsigned dr = r.degree_in(var);
        if (dr < db) break;
        Polynomial lr = coeff_in(r, var, dr);
        Monomial shift;
        if (dr > db) shift.emplace_back(var, dr - db);
        Polynomial next = lb * r;
        next.add_scaled(lr * b, -1, shift);
        r = std::move(next);
        --steps;
    }
    for (; steps > 0 && !r.is_zero(); --steps) r = lb * r;
    return r;
}

Polynomial power(const Polynomial& p, unsigned k) {
    Polynomial r(1);
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

// Monic gcd of two univariate polynomials over Q by the Euclidean algorithm.
Polynomial univariate_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a;
        const Monomial& lb = b.leading_monomial();
        while (!r.is_zero() && monomial_divides(lb, r.leading_monomial())) {
            Monomial t = monomial_div(r.leading_monomial(), lb);
            mpq_class c = r.leading_coeff() / b.leading_coeff();
            r.add_scaled(b, -c, t);
        }
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

// True when gcd(a, b) certainly has degree 0 in var: after sending the other
// variables to fixed integers that keep the leading coefficient of a alive,
// the univariate images are coprime.
bool coprime_in(const Polynomial& a, const Polynomial& b, const std::string& var, const std::set<std::string>& vars) {
    static const long points[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    unsigned da = a.degree_in(var);
    Polynomial lca = coeff_in(a, var, da);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::map<std::string, mpq_class> at;
        std::size_t k = static_cast<std::size_t>(attempt);
        for (const auto& v : vars)
            if (v != var) at[v] = mpq_class(points[k++ % 12]) * (attempt + 1);
        if (lca.substitute(at).is_zero()) continue;
        Polynomial ua = a.substitute(at), ub = b.substitute(at);
        if (ub.degree_in(var) == 0) return !ub.is_zero();
        return univariate_gcd(ua, ub).is_constant();
    }
    return false;
}

Polynomial monomial_gcd(const Monomial& m, const Polynomial& p) {
    Monomial g = m;
    for (const auto& [pm, c] : p.terms()) {
        Monomial next;
        std::size_t j = 0;
        for (const auto& [v, e] : g) {
            while (j < pm.size() && pm[j].first < v) ++j;
            if (j < pm.size() && pm[j].first == v) next.emplace_back(v, std::min(e, pm[j].second));
        }
        g = std::move(next);
        if (g.empty()) break;
    }
    return Polynomial::term(g, 1);
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a.is_monomial()) return monomial_gcd(a.leading_monomial(), b);
    if (b.is_monomial()) return monomial_gcd(b.leading_monomial(), a);
    if (monic(a) == monic(b)) return monic(a);

    std::set<std::string> vars = a.variables();
    for (const auto& v : b.variables()) vars.insert(v);
    for (const auto& v : vars) {
        unsigned dv = a.degree_in(v), ev = b.degree_in(v);
        if (dv == 0) return gcd(a, content_in(b, v));
        if (ev == 0) return gcd(content_in(a, v), b);
    }
    for (const auto& v : vars)
        if (coprime_in(a, b, v, vars)) return gcd(content_in(a, v), content_in(b, v));

    // Content recursion with a primitive remainder sequence in the variable of
    // lowest degree (the last such variable on ties).
    std::string var;
    unsigned best = ~0u;
    for (const auto& v : vars) {
        unsigned d = std::max(a.degree_in(v), b.degree_in(v));
        if (d <= best) {
            best = d;
            var = v;
        }
    }
    unsigned da = a.degree_in(var), db = b.degree_in(var);

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial c = gcd(ca, cb);
    Polynomial pa = integer_primitive(exact_divide(a, ca)), pb = integer_primitive(exact_divide(b, cb));
    if (da < db) std::swap(pa, pb);
    // Subresultant remainder sequence keeps coefficients polynomial without
    // content computations at every step.
    Polynomial g(1), h(1);
    for (;;) {
        unsigned d = pa.degree_in(var) - pb.degree_in(var);
        Polynomial r = pseudo_remainder(pa, pb, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            pb = Polynomial(1);
            break;
        }
        pa = std::move(pb);
        pb = exact_divide(r, g * power(h, d));
        g = coeff_in(pa, var, pa.degree_in(var));
        if (d > 0) h = exact_divide(power(g, d), power(h, d - 1));
    }
    Polynomial g_final = pb;
    return monic(c * primitive_in(g_final, var));
}

} // namespace homalg
