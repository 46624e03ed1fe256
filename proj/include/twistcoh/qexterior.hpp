#ifndef TWISTCOH_QEXTERIOR_HPP
#define TWISTCOH_QEXTERIOR_HPP

#include <optional>
#include <vector>

#include "twistcoh/ext.hpp"
#include "twistcoh/resolution.hpp"

namespace twc {

// The quantum exterior algebra k<x,y>/(x^2, xy + q yx, y^2) with basis 1, x, y, yx.
struct QExteriorParams {
    Field field = Field::rationals();
    Scalar q = Scalar(Field::rationals(), 2L);
};

struct QExterior {
    QExteriorParams params;
    AlgebraPtr alg;
    AlgebraPtr env;
    FrobeniusForm form;       // picks the yx coefficient
    AlgebraMorphism nu;       // computed from the form
    AlgebraMorphism nu_env;   // nu (x) id, twisting the left action of bimodules
    Module bimodule;          // the algebra as a bimodule
    Module simple;            // k

    Scalar q() const { return params.q; }
    Vec elem(long c1, long cx, long cy, long cyx) const;
    // basis element a (x) b of the enveloping algebra
    Vec env_elem(int a, int b) const;
};

enum QBasis { Q1 = 0, QX = 1, QY = 2, QYX = 3 };

QExterior build_qexterior(const QExteriorParams& p);
// closed form x -> -q^{-1} x, y -> -q y
Matrix nakayama_closed_form(const QExterior& qe);

// Lambda(alpha x + beta y); throws ZeroPair for (0, 0)
Module build_module(const QExterior& qe, const Scalar& alpha, const Scalar& beta);
// coordinates of alpha x + beta y in build_module's basis
Vec module_generator(const QExterior& qe, const Module& m, const Scalar& alpha, const Scalar& beta);

// Periodic resolution P_n = Lambda, d_n = right multiplication by alpha x + q^n beta y.
ResolutionPtr periodic_resolution(const QExterior& qe, const Module& m, const Scalar& alpha, const Scalar& beta);

// Minimal bimodule resolution of rank n+1 in degree n.
ResolutionPtr buchweitz(const QExterior& qe);
// Same, for an enveloping algebra whose base has the quantum exterior structure constants.
ResolutionPtr buchweitz_resolution(const AlgebraPtr& env, const Scalar& q);
// True when a has exactly the structure constants of build_qexterior for q.
bool is_qexterior(const Algebra& a, const Scalar& q);
// q when a has the quantum exterior structure constants for some admissible q
std::optional<Scalar> detect_qexterior(const Algebra& a);

// The cocycle g_{4m}: generator 2m of F^{4m} -> 1, as a class of
// Ext^{4m}(_{nu^{2m}} Lambda, Lambda) computed on `res` (Buchweitz).
ExtClass g_class(const QExterior& qe, const ResolutionPtr& res, int m);

// Liftings gbar_{4m+i} : _{nu^{2(m+1)}} F^{4m+i} -> _{nu^2} F^i, generator 2m+k of
// F^{4m+i} going to q^{2m(i-k)} times generator k of F^i (0 <= k <= i).
struct GbarLifting {
    int m = 0;
    std::vector<std::vector<Vec>> maps;  // maps[i][g] = image of generator g of F^{4m+i} in F^i
    std::vector<bool> squares;           // squares[i]: the square ending at degree i commutes
    bool composite_ok = false;           // g_4 o gbar_{4m+4} = q^{4m} g_{4m+4}
    bool printed_consistent = false;     // the sparse displayed table is a sub-table of the full one
    bool all_ok() const;
};
GbarLifting gbar_lifting(const QExterior& qe, const ResolutionPtr& res, int m);

// Comparison maps h_n : P_n -> F^n (x)_Lambda M for M = M_(1,beta), checked square by square.
struct ComparisonCheck {
    int steps = 0;
    bool commutes = false;
};
ComparisonCheck comparison_maps_check(const QExterior& qe, const Scalar& beta, int steps);

}  // namespace twc

#endif
