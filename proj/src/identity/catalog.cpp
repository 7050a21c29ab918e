#include "homalg/identity/catalog.hpp"

#include "homalg/errors.hpp"
#include "homalg/identity/parser.hpp"

#include <map>
#include <utility>

namespace homalg {

namespace {

const std::vector<std::pair<std::string, std::string>>& sources() {
    static const std::vector<std::pair<std::string, std::string>> s = {
    {"hom-malcev", R"dsl(
%name hom-malcev
%var x y z t : algebra
antisymmetry: p(bracket, x, y) + p(bracket, y, x)  # polarized anticommutativity
malcev: p(bracket, A(p(bracket, x, z)), A(p(bracket, y, t))) - p(bracket, p(bracket, p(bracket, x, y), A(z)), A2(t)) - p(bracket, p(bracket, p(bracket, y, z), A(t)), A2(x)) - p(bracket, p(bracket, p(bracket, z, t), A(x)), A2(y)) - p(bracket, p(bracket, p(bracket, t, x), A(y)), A2(z))  # expanded form of the Jacobian identity
)dsl"},
    {"hom-alternative", R"dsl(
%name hom-alternative
%var x y z : algebra
left-alternative: p(star, p(star, x, y), A(z)) - p(star, A(x), p(star, y, z)) + p(star, p(star, y, x), A(z)) - p(star, A(y), p(star, x, z))  # polarization of as(x,x,y) = 0
right-alternative: p(star, p(star, x, y), A(z)) - p(star, A(x), p(star, y, z)) + p(star, p(star, x, z), A(y)) - p(star, A(x), p(star, z, y))  # polarization of as(y,x,x) = 0
)dsl"},
    {"hom-pre-lie", R"dsl(
%name hom-pre-lie
%var x y z : algebra
pre-lie: p(dot, p(dot, x, y), A(z)) - p(dot, A(x), p(dot, y, z)) - p(dot, p(dot, y, x), A(z)) + p(dot, A(y), p(dot, x, z))
)dsl"},
    {"hom-pre-malcev", R"dsl(
%name hom-pre-malcev
%var x y z t : algebra
%product bracket = dot - dot^T
pre-malcev: p(dot, p(bracket, A(y), A(z)), A(p(dot, x, t))) + p(dot, p(bracket, p(bracket, x, y), A(z)), A2(t)) + p(dot, A2(y), p(dot, p(bracket, x, z), A(t))) - p(dot, A2(x), p(dot, A(y), p(dot, z, t))) + p(dot, A2(z), p(dot, A(x), p(dot, y, t)))
)dsl"},
    {"hom-pre-alternative", R"dsl(
%name hom-pre-alternative
%var x y z : algebra
%product star = prec + succ
pre-alt-1: p(prec, p(succ, x, y), A(z)) - p(succ, A(x), p(prec, y, z)) + p(prec, p(prec, y, x), A(z)) - p(prec, A(y), p(star, x, z))
pre-alt-2: p(prec, p(succ, x, y), A(z)) - p(succ, A(x), p(prec, y, z)) + p(succ, p(star, x, z), A(y)) - p(succ, A(x), p(succ, z, y))
pre-alt-3: p(succ, p(star, x, y), A(z)) - p(succ, A(x), p(succ, y, z)) + p(succ, p(star, y, x), A(z)) - p(succ, A(y), p(succ, x, z))
pre-alt-4: p(prec, p(prec, x, y), A(z)) - p(prec, A(x), p(star, y, z)) + p(prec, p(prec, x, z), A(y)) - p(prec, A(x), p(star, z, y))
)dsl"},
    {"hom-m-dendriform", R"dsl(
%name hom-m-dendriform
%var x y z t : algebra
%product dot = tleft + tright
%product diamond = tleft - tright^T
%product bracket = dot - dot^T
mdend-1: p(tright, p(diamond, A(z), p(diamond, y, x)), A2(t)) - p(tright, A2(x), p(dot, A(y), p(dot, z, t))) + p(tleft, A2(z), p(tright, A(x), p(dot, y, t))) + p(tleft, A(p(bracket, y, z)), A(p(tright, x, t))) - p(tleft, A2(y), p(tright, p(diamond, z, x), A(t)))
mdend-2: p(tleft, A2(z), p(tleft, A(x), p(tright, y, t))) - p(tright, p(diamond, A(z), p(diamond, x, y)), A2(t)) - p(tleft, A2(x), p(tright, A(y), p(dot, z, t))) - p(tright, A(p(diamond, z, y)), A(p(dot, x, t))) + p(tright, A2(y), p(dot, p(bracket, x, z), A(t)))
mdend-3: p(tright, A2(z), p(dot, A(x), p(dot, y, t))) + p(tright, p(diamond, p(bracket, x, y), A(z)), A2(t)) - p(tleft, A2(x), p(tleft, A(y), p(tright, z, t))) + p(tright, A(p(diamond, y, z)), A(p(dot, x, t))) + p(tleft, A2(y), p(tright, p(diamond, x, z), A(t)))  # first term read as tright(A2(z), A(x).(y.t))
mdend-4: p(tleft, p(bracket, p(bracket, x, y), A(z)), A2(t)) - p(tleft, A2(x), p(tleft, A(y), p(tleft, z, t))) + p(tleft, A2(z), p(tleft, A(x), p(tleft, y, t))) + p(tleft, A(p(bracket, y, z)), A(p(tleft, x, t))) + p(tleft, A2(y), p(tleft, p(bracket, x, z), A(t)))
)dsl"},
    {"hom-alt-quadri", R"dsl(
%name hom-alt-quadri
%var x y z : algebra
%product succ = ne + se
%product prec = nw + sw
%product vee = se + sw
%product wedge = ne + nw
%product star = succ + prec
quadri-1: p(nw, p(nw, x, y), A(z)) - p(nw, A(x), p(star, y, z)) + p(nw, p(se, y, x), A(z)) - p(se, A(y), p(nw, x, z))
quadri-2: p(nw, p(nw, x, y), A(z)) - p(nw, A(x), p(star, y, z)) + p(nw, p(nw, x, z), A(y)) - p(nw, A(x), p(star, z, y))
quadri-3: p(nw, p(ne, x, y), A(z)) - p(ne, A(x), p(prec, y, z)) + p(nw, p(sw, y, x), A(z)) - p(sw, A(y), p(wedge, x, z))
quadri-4: p(nw, p(ne, x, y), A(z)) - p(ne, A(x), p(prec, y, z)) + p(ne, p(wedge, x, z), A(y)) - p(ne, A(x), p(succ, z, y))
quadri-5: p(ne, p(wedge, x, y), A(z)) - p(ne, A(x), p(succ, y, z)) + p(ne, p(vee, y, x), A(z)) - p(se, A(y), p(ne, x, z))
quadri-6: p(nw, p(sw, x, y), A(z)) - p(sw, A(x), p(wedge, y, z)) + p(sw, p(prec, x, z), A(y)) - p(sw, A(x), p(vee, z, y))
quadri-7: p(sw, p(prec, x, y), A(z)) - p(sw, A(x), p(vee, y, z)) + p(sw, p(succ, y, x), A(z)) - p(se, A(y), p(sw, x, z))
quadri-8: p(nw, p(se, x, y), A(z)) - p(se, A(x), p(nw, y, z)) + p(se, p(star, x, z), A(y)) - p(se, A(x), p(se, z, y))
quadri-9: p(se, p(star, x, y), A(z)) - p(se, A(x), p(se, y, z)) + p(se, p(star, y, x), A(z)) - p(se, A(y), p(se, x, z))
)dsl"},
    {"malcev-representation", R"dsl(
%name malcev-representation
%var x y z : algebra
%var v : module
%product bracket ?= dot - dot^T
%action rho ?= ell - r
beta-rho: act(rho, A(x), B(v)) - B(act(rho, x, v))
representation: act(rho, p(bracket, p(bracket, x, y), A(z)), B2(v)) - act(rho, A2(x), act(rho, A(y), act(rho, z, v))) + act(rho, A2(z), act(rho, A(x), act(rho, y, v))) - act(rho, A2(y), act(rho, p(bracket, z, x), B(v))) + act(rho, A(p(bracket, y, z)), act(rho, A(x), B(v)))
)dsl"},
    {"alt-bimodule", R"dsl(
%name alt-bimodule
%var x y : algebra
%var v : module
beta-ell: B(act(ell, x, v)) - act(ell, A(x), B(v))
beta-r: B(act(r, x, v)) - act(r, A(x), B(v))
ell-square: act(ell, p(star, x, y) + p(star, y, x), B(v)) - act(ell, A(x), act(ell, y, v)) - act(ell, A(y), act(ell, x, v))  # polarization
r-square: act(r, p(star, x, y) + p(star, y, x), B(v)) - act(r, A(x), act(r, y, v)) - act(r, A(y), act(r, x, v))  # polarization
r-ell: act(r, A(y), act(ell, x, v)) - act(ell, A(x), act(r, y, v)) - act(r, p(star, x, y), B(v)) + act(r, A(y), act(r, x, v))
ell-r: act(ell, p(star, y, x), B(v)) - act(ell, A(y), act(ell, x, v)) - act(ell, A(y), act(r, x, v)) + act(r, A(x), act(ell, y, v))
)dsl"},
    {"pre-malcev-bimodule", R"dsl(
%name pre-malcev-bimodule
%var x y z : algebra
%var v : module
%product bracket = dot - dot^T
%action rho = ell - r
beta-ell: B(act(ell, x, v)) - act(ell, A(x), B(v))
beta-r: B(act(r, x, v)) - act(r, A(x), B(v))
bimodule-2: act(r, A2(x), act(rho, A(y), act(rho, z, v))) - act(r, p(dot, A(z), p(dot, y, x)), B2(v)) + act(ell, A2(y), act(r, p(dot, z, x), B(v))) + act(ell, A(p(bracket, z, y)), act(r, A(x), B(v))) - act(ell, A2(z), act(r, A(x), act(rho, y, v)))  # fourth term read with [z,y]
bimodule-3: act(ell, A2(y), act(ell, A(z), act(r, x, v))) - act(r, A2(x), act(rho, A(y), act(rho, z, v))) - act(ell, A2(z), act(r, p(dot, y, x), B(v))) - act(r, A(p(dot, z, x)), act(rho, A(y), B(v))) + act(r, p(dot, p(bracket, z, y), A(x)), B2(v))
bimodule-4: act(r, p(dot, A(y), p(dot, z, x)), B2(v)) + act(r, A2(x), act(rho, p(bracket, y, z), B(v))) - act(ell, A2(y), act(ell, A(z), act(r, x, v))) + act(r, A(p(dot, y, x)), act(rho, A(z), B(v))) + act(ell, A2(z), act(r, A(x), act(rho, y, v)))
bimodule-5: act(ell, p(bracket, p(bracket, x, y), A(z)), B2(v)) - act(ell, A2(x), act(ell, A(y), act(ell, z, v))) + act(ell, A2(z), act(ell, A(x), act(ell, y, v))) + act(ell, A(p(bracket, y, z)), act(ell, A(x), B(v))) + act(ell, A2(y), act(ell, p(bracket, x, z), B(v)))
)dsl"},
    {"pre-alt-bimodule", R"dsl(
%name pre-alt-bimodule
%var x y : algebra
%var v : module
%product star = prec + succ
%action Lstar = Lprec + Lsucc
%action Rstar = Rprec + Rsucc
beta-Lsucc: B(act(Lsucc, x, v)) - act(Lsucc, A(x), B(v))
beta-Rsucc: B(act(Rsucc, x, v)) - act(Rsucc, A(x), B(v))
beta-Lprec: B(act(Lprec, x, v)) - act(Lprec, A(x), B(v))
beta-Rprec: B(act(Rprec, x, v)) - act(Rprec, A(x), B(v))
bimodule-1: act(Lsucc, p(star, x, y) + p(star, y, x), B(v)) - act(Lsucc, A(x), act(Lsucc, y, v)) - act(Lsucc, A(y), act(Lsucc, x, v))
bimodule-2: act(Rsucc, A(y), act(Lstar, x, v) + act(Rstar, x, v)) - act(Lsucc, A(x), act(Rsucc, y, v)) - act(Rsucc, p(succ, x, y), B(v))
bimodule-3: act(Rprec, A(y), act(Lsucc, x, v)) + act(Rprec, A(y), act(Rprec, x, v)) - act(Lsucc, A(x), act(Rprec, y, v)) - act(Rprec, p(star, x, y), B(v))
bimodule-4: act(Rprec, A(y), act(Rsucc, x, v)) + act(Rprec, A(y), act(Lprec, x, v)) - act(Lprec, A(x), act(Rstar, y, v)) - act(Rsucc, p(prec, x, y), B(v))
bimodule-5: act(Lprec, p(prec, y, x), B(v)) + act(Lprec, p(succ, x, y), B(v)) - act(Lprec, A(y), act(Lstar, x, v)) - act(Lsucc, A(x), act(Lprec, y, v))
bimodule-6: act(Rprec, A(x), act(Lsucc, y, v)) + act(Lsucc, p(star, y, x), B(v)) - act(Lsucc, A(y), act(Rprec, x, v)) - act(Lsucc, A(y), act(Lsucc, x, v))
bimodule-7: act(Rprec, A(x), act(Rsucc, y, v)) + act(Rsucc, A(y), act(Rstar, x, v)) - act(Rsucc, p(prec, y, x), B(v)) - act(Rsucc, p(succ, x, y), B(v))
bimodule-8: act(Lprec, p(succ, y, x), B(v)) + act(Rsucc, A(x), act(Lstar, y, v)) - act(Lsucc, A(y), act(Lprec, x, v)) - act(Lsucc, A(y), act(Rsucc, x, v))
bimodule-9: act(Rprec, A(x), act(Rprec, y, v)) + act(Rprec, A(y), act(Rprec, x, v)) - act(Rprec, p(star, x, y) + p(star, y, x), B(v))
bimodule-10: act(Rprec, A(y), act(Lprec, x, v)) + act(Lprec, p(prec, x, y), B(v)) - act(Lprec, A(x), act(Rstar, y, v) + act(Lstar, y, v))
)dsl"},
    {"symplectic", R"dsl(
%name symplectic
%var x y z : algebra
%form omega
invariance: form(omega, A(x), A(y)) - form(omega, x, y)
cyclic: form(omega, p(bracket, x, y), A(z)) + form(omega, p(bracket, y, z), A(x)) + form(omega, p(bracket, z, x), A(y))
)dsl"},
    {"hom-m-dendriform-literal", R"dsl(
%name hom-m-dendriform-literal
%var x y z t : algebra
%product dot = tleft + tright
%product diamond = tleft - tright^T
%product bracket = dot - dot^T
mdend-1: p(tright, p(diamond, A(z), p(diamond, y, x)), A2(t)) - p(tright, A2(x), p(dot, A(y), p(dot, z, t))) + p(tleft, A2(z), p(tright, A(x), p(dot, y, t))) + p(tleft, A(p(bracket, y, z)), A(p(tright, x, t))) - p(tleft, A2(y), p(tright, p(diamond, z, x), A(t)))
mdend-2: p(tleft, A2(z), p(tleft, A(x), p(tright, y, t))) - p(tright, p(diamond, A(z), p(diamond, x, y)), A2(t)) - p(tleft, A2(x), p(tright, A(y), p(dot, z, t))) - p(tright, A(p(diamond, z, y)), A(p(dot, x, t))) + p(tright, A2(y), p(dot, p(bracket, x, z), A(t)))
mdend-3: p(tleft, A2(z), p(tleft, A(x), p(tleft, y, t))) + p(tright, p(diamond, p(bracket, x, y), A(z)), A2(t)) - p(tleft, A2(x), p(tleft, A(y), p(tright, z, t))) + p(tright, A(p(diamond, y, z)), A(p(dot, x, t))) + p(tleft, A2(y), p(tright, p(diamond, x, z), A(t)))
mdend-4: p(tleft, p(bracket, p(bracket, x, y), A(z)), A2(t)) - p(tleft, A2(x), p(tleft, A(y), p(tleft, z, t))) + p(tleft, A2(z), p(tleft, A(x), p(tleft, y, t))) + p(tleft, A(p(bracket, y, z)), A(p(tleft, x, t))) + p(tleft, A2(y), p(tleft, p(bracket, x, z), A(t)))
)dsl"},
    {"pre-malcev-bimodule-literal", R"dsl(
%name pre-malcev-bimodule-literal
%var x y z : algebra
%var v : module
%product bracket = dot - dot^T
%action rho = ell - r
beta-ell: B(act(ell, x, v)) - act(ell, A(x), B(v))
beta-r: B(act(r, x, v)) - act(r, A(x), B(v))
bimodule-2: act(r, A2(x), act(rho, A(y), act(rho, z, v))) - act(r, p(dot, A(z), p(dot, y, x)), B2(v)) + act(ell, A2(y), act(r, p(dot, z, x), B(v))) + act(ell, A(p(bracket, y, z)), act(r, A(x), B(v))) - act(ell, A2(z), act(r, A(x), act(rho, y, v)))
bimodule-3: act(ell, A2(y), act(ell, A(z), act(r, x, v))) - act(r, A2(x), act(rho, A(y), act(rho, z, v))) - act(ell, A2(z), act(r, p(dot, y, x), B(v))) - act(r, A(p(dot, z, x)), act(rho, A(y), B(v))) + act(r, p(dot, p(bracket, z, y), A(x)), B2(v))
bimodule-4: act(r, p(dot, A(y), p(dot, z, x)), B2(v)) + act(r, A2(x), act(rho, p(bracket, y, z), B(v))) - act(ell, A2(y), act(ell, A(z), act(r, x, v))) + act(r, A(p(dot, y, x)), act(rho, A(z), B(v))) + act(ell, A2(z), act(r, A(x), act(rho, y, v)))
bimodule-5: act(ell, p(bracket, p(bracket, x, y), A(z)), B2(v)) - act(ell, A2(x), act(ell, A(y), act(ell, z, v))) + act(ell, A2(z), act(ell, A(x), act(ell, y, v))) + act(ell, A(p(bracket, y, z)), act(ell, A(x), B(v))) + act(ell, A2(y), act(ell, p(bracket, x, z), B(v)))
)dsl"},
    {"pre-alt-bimodule-literal", R"dsl(
%name pre-alt-bimodule-literal
%var x y : algebra
%var v : module
%product star = prec + succ^T
%action Lstar = Lprec + Lsucc
%action Rstar = Rprec + Rsucc
beta-Lsucc: B(act(Lsucc, x, v)) - act(Lsucc, A(x), B(v))
beta-Rsucc: B(act(Rsucc, x, v)) - act(Rsucc, A(x), B(v))
beta-Lprec: B(act(Lprec, x, v)) - act(Lprec, A(x), B(v))
beta-Rprec: B(act(Rprec, x, v)) - act(Rprec, A(x), B(v))
bimodule-1: act(Lsucc, p(star, x, y) + p(star, y, x), B(v)) - act(Lsucc, A(x), act(Lsucc, y, v)) - act(Lsucc, A(y), act(Lsucc, x, v))
bimodule-2: act(Rsucc, A(y), act(Lstar, x, v) + act(Rstar, x, v)) - act(Lsucc, A(x), act(Rsucc, y, v)) - act(Rsucc, p(succ, x, y), B(v))
bimodule-3: act(Rprec, A(y), act(Lsucc, x, v)) + act(Rprec, A(y), act(Rprec, x, v)) - act(Lsucc, A(x), act(Rprec, y, v)) - act(Rprec, p(star, x, y), B(v))
bimodule-4: act(Rprec, A(y), act(Rsucc, x, v)) + act(Rsucc, A(y), act(Lprec, x, v)) - act(Lprec, A(x), act(Rstar, y, v)) - act(Rsucc, p(star, x, y), B(v))
bimodule-5: act(Lprec, p(prec, y, x), B(v)) + act(Lprec, p(succ, x, y), B(v)) - act(Lprec, A(y), act(Lstar, x, v)) - act(Lsucc, A(y), act(Lsucc, x, v))
bimodule-6: act(Rprec, A(x), act(Lsucc, y, v)) + act(Lsucc, p(succ, y, x), B(v)) - act(Lsucc, y, act(Rprec, x, v)) - act(Lsucc, A(y), act(Lsucc, x, v))
bimodule-7: act(Rprec, A(x), act(Rsucc, y, v)) + act(Rsucc, A(y), act(Rstar, x, v)) - act(Rsucc, p(prec, y, x), B(v)) - act(Rsucc, p(succ, x, y), B(v))
bimodule-8: act(Lprec, p(succ, y, x), B(v)) + act(Rsucc, A(x), act(Lstar, y, v)) - act(Lsucc, A(y), act(Lprec, x, v)) - act(Lsucc, A(y), act(Rsucc, x, v))
bimodule-9: act(Rprec, A(x), act(Rprec, y, v)) + act(Rprec, A(y), act(Rprec, x, v)) - act(Rprec, p(star, x, y) + p(star, y, x), B(v))
bimodule-10: act(Rprec, A(y), act(Lprec, x, v)) + act(Lprec, p(prec, x, y), B(v)) - act(Lprec, A(x), act(Rstar, y, v) + act(Lstar, y, v))
)dsl"},
    };
    return s;
}

} // namespace

const std::vector<std::string>& structure_classes() {
    static const std::vector<std::string> c = {"hom-malcev",          "hom-alternative",  "hom-pre-lie",
                                               "hom-pre-malcev",      "hom-pre-alternative", "hom-m-dendriform",
                                               "hom-alt-quadri"};
    return c;
}

const std::vector<std::string>& module_classes() {
    static const std::vector<std::string> c = {"malcev-representation", "alt-bimodule", "pre-malcev-bimodule",
                                               "pre-alt-bimodule"};
    return c;
}

const std::vector<std::string>& class_products(const std::string& cls) {
    static const std::map<std::string, std::vector<std::string>> m = {
        {"hom-malcev", {"bracket"}},
        {"hom-alternative", {"star"}},
        {"hom-pre-lie", {"dot"}},
        {"hom-pre-malcev", {"dot"}},
        {"hom-pre-alternative", {"prec", "succ"}},
        {"hom-m-dendriform", {"tright", "tleft"}},
        {"hom-alt-quadri", {"ne", "se", "sw", "nw"}},
        {"malcev-representation", {"bracket"}},
        {"alt-bimodule", {"star"}},
        {"pre-malcev-bimodule", {"dot"}},
        {"pre-alt-bimodule", {"prec", "succ"}},
    };
    auto it = m.find(cls);
    if (it == m.end()) throw UnknownLabel("unknown class '" + cls + "'");
    return it->second;
}

const std::vector<std::string>& module_actions(const std::string& cls) {
    static const std::map<std::string, std::vector<std::string>> m = {
        {"malcev-representation", {"rho"}},
        {"alt-bimodule", {"ell", "r"}},
        {"pre-malcev-bimodule", {"ell", "r"}},
        {"pre-alt-bimodule", {"Lsucc", "Rsucc", "Lprec", "Rprec"}},
    };
    auto it = m.find(cls);
    if (it == m.end()) throw UnknownLabel("unknown module class '" + cls + "'");
    return it->second;
}

const std::string& catalog_source(const std::string& name) {
    for (const auto& [n, s] : sources())
        if (n == name) return s;
    throw UnknownLabel("no identity set named '" + name + "'");
}

const IdentitySet& catalog(const std::string& name) {
    static const std::map<std::string, IdentitySet> parsed = [] {
        std::map<std::string, IdentitySet> m;
        for (const auto& [n, s] : sources()) m.emplace(n, parse_identity_file(s, n));
        return m;
    }();
    auto it = parsed.find(name);
    if (it == parsed.end()) throw UnknownLabel("no identity set named '" + name + "'");
    return it->second;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [n, s] : sources()) out.push_back(n);
    return out;
}

} // namespace homalg
