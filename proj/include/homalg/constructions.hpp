#pragma once

#include "homalg/structures.hpp"

#include <map>
#include <string>
#include <vector>

namespace homalg {

// Projections between classes. Each reads fixed source labels and adds its
// products under fixed labels:
//   commutator              bracket = dot - dot^T (star when there is no dot)
//   pre-alt-sum             star = prec + succ
//   pre-alt-to-pre-malcev   dot(x, y) = succ(x, y) - prec(y, x)
//   mdend-horizontal        dot = tleft + tright
//   mdend-vertical          diamond(x, y) = tleft(x, y) - tright(y, x)
//   quadri-horizontal       succ = ne + se, prec = nw + sw
//   quadri-vertical         vee = se + sw, wedge = ne + nw
//   quadri-to-mdend         tright(a, b) = ne(a, b) - sw(b, a), tleft(a, b) = se(a, b) - nw(b, a)
enum class DeriveRule {
    Commutator,
    PreAltSum,
    PreAltToPreMalcev,
    MdendHorizontal,
    MdendVertical,
    QuadriHorizontal,
    QuadriVertical,
    QuadriToMdend,
};

enum class SplitRule { MalcevToPreMalcev, AltToPreAlt, PreMalcevToMdend, PreAltToQuadri };

enum class DescendRule { AltToMalcev, PreMalcevEll, PreMalcevToMalcev, PreAltToPreMalcev };

const std::vector<std::string>& derive_rule_names();
const std::vector<std::string>& split_rule_names();
const std::vector<std::string>& descend_rule_names();
// Throw UnknownLabel.
DeriveRule parse_derive_rule(const std::string& name);
SplitRule parse_split_rule(const std::string& name);
DescendRule parse_descend_rule(const std::string& name);
std::string rule_name(DeriveRule r);
std::string rule_name(SplitRule r);
std::string rule_name(DescendRule r);

// Module class paired with an algebra class, e.g. hom-malcev -> malcev-representation.
// Module class names map to themselves. Throws UnknownLabel.
std::string module_class_for(const std::string& cls);
// The algebra class a splitting starts from, and the one it lands in.
std::string split_source_class(SplitRule r);
std::string split_target_class(SplitRule r);

HomAlgebra derive_structure(const HomAlgebra& alg, DeriveRule rule);

// Copies the listed products under new labels and drops the rest, e.g.
// {{"diamond", "dot"}} to check a vertical product as a pre-Malcev one.
HomAlgebra select_products(const HomAlgebra& alg, const std::map<std::string, std::string>& renames);

// x.y = [R x, y]; x<y = x*R(y), x>y = R(x)*y; x tright y = x.R(y), x tleft y = R(x).y;
// ne = x>R(y), se = R(x)>y, sw = R(x)<y, nw = x<R(y).
HomAlgebra rb_split(const HomAlgebra& alg, SplitRule rule, const LinearOperator& R);
// x tright y = [R1 x, R2 y], x tleft y = [R1 R2 x, y].
HomAlgebra commuting_rb_split(const HomAlgebra& alg, const LinearOperator& R1, const LinearOperator& R2);

// Structure on the module carrier with twist beta, read off from T: V -> A.
// cls is an algebra or module class.
HomAlgebra o_induced(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls, const LinearOperator& T);

// A (+) V with basis e_1..e_n followed by the module basis; twist alpha (+) beta.
HomAlgebra semidirect(const HomAlgebra& alg, const ModuleSpec& mod, const std::string& cls);

// rho(e_i) = [e_i, -], beta = alpha.
ModuleSpec adjoint(const HomAlgebra& alg);
// ell(e_i) = e_i . -, r = 0.
ModuleSpec left_mult(const HomAlgebra& alg);
// Left and right multiplications of the class products on A itself.
ModuleSpec regular_bimodule(const HomAlgebra& alg, const std::string& cls);
// Returns a module carrying only the produced actions.
ModuleSpec module_descend(const ModuleSpec& mod, DescendRule rule);

// rho*(x) = -(beta^-2 rho(alpha x))^T on the dual space, twist (beta^-1)^T.
// Reads rho, or ell - r. Throws Singular.
ModuleSpec dual_rep(const HomAlgebra& alg, const ModuleSpec& mod);
ModuleSpec coadjoint(const HomAlgebra& alg);

// Products mu -> f o mu, twist -> f o twist.
HomAlgebra yau_twist(const HomAlgebra& alg, const LinearOperator& f);
// Actions rho(x) -> rho(f x) o g, twist -> g o beta.
ModuleSpec twist_module(const HomAlgebra& alg, const ModuleSpec& mod, const LinearOperator& f,
                        const LinearOperator& g);

// x tright' y = -(y tright x), x tleft' y = x tleft y.
HomAlgebra transpose_mdend(const HomAlgebra& alg);

// The product dot with omega(x.y, alpha z) = omega(alpha y, [z, x]) for all z,
// where omega(x, y) = x^T W y for the Gram matrix W. Throws Singular.
HomAlgebra symplectic_product(const HomAlgebra& alg, const LinearOperator& omega);
// omega#(x) = omega(x, -) as a map A -> A*, i.e. the matrix W^T.
Matrix omega_sharp(const Matrix& gram);

// x.y = T(rho(x) T^-1 y) on A for an invertible T: V -> A, added as dot.
// Throws Singular.
HomAlgebra transport(const HomAlgebra& alg, const ModuleSpec& mod, const LinearOperator& T);

} // namespace homalg
