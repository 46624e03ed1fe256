#ifndef TWISTCOH_HOCHSCHILD_HPP
#define TWISTCOH_HOCHSCHILD_HPP

#include <string>
#include <vector>

#include "twistcoh/ext.hpp"

namespace twc {

// Unnormalized bar resolution of A over A^e: B_n has rank d^n, generator
// index = base-d digits (a_1 ... a_n) of 1 (x) b_{a_1} (x) ... (x) b_{a_n} (x) 1.
constexpr size_t kBarCap = 1000000;
ResolutionPtr bar_resolution(const AlgebraPtr& a, size_t cap = kBarCap);

// P (x)_A M for a bimodule resolution P of A; generator (k, w) has index k * dim M + w.
ResolutionPtr tensor_resolution(const ResolutionPtr& bimodule_res, const Module& m);

enum class HHMethod { Minimal, Bar, Builtin };
HHMethod parse_method(const std::string& s);
const char* to_string(HHMethod m);

struct HHSample {
    AlgebraPtr alg, env;
    AlgebraMorphism psi;      // on A
    AlgebraMorphism psi_env;  // psi (x) 1 on A^e
    HHMethod method = HHMethod::Minimal;
    GradedRingSample ring;
};

// Resolution of A over A^e for the given method (builtin needs the quantum exterior algebra).
ResolutionPtr hh_resolution(const AlgebraPtr& a, HHMethod method);
// HH^{t*}(_{psi*} A, A) up to index D
HHSample hh_twisted(const AlgebraPtr& a, const AlgebraMorphism& psi, int t, int max_index, HHMethod method,
                    bool with_products = true);
HHSample hh_twisted_on(const ResolutionPtr& res, const AlgebraMorphism& psi, int t, int max_index,
                       bool with_products = true);

// eta (x)_A M as a class of Ext^{tm}(_{psi^m} M, M) on the resolution res_m of M.
ExtClass tensor_down(const ExtClass& eta, const AlgebraMorphism& psi, const ResolutionPtr& res_m);

// zeta . eta = zeta o (eta (x) M), zeta on a resolution of M
ExtClass act_right(const ExtClass& zeta, const ExtClass& eta, const AlgebraMorphism& psi);
// eta . zeta = (eta (x) N) o zeta, res_n resolves zeta's target N
ExtClass act_left(const ExtClass& eta, const ExtClass& zeta, const AlgebraMorphism& psi, const ResolutionPtr& res_n);

// Compares eta_{psi^{-n}} with _{psi^n} eta, both carried back to eta's own space.
bool strong_comm_check(const ExtClass& eta, const AlgebraMorphism& psi, long n);
// The twisted class the check compares against eta.
ExtClass conjugate_class(const ExtClass& eta, const AlgebraMorphism& psi, long n);

// Sufficient criterion on a bar representative:
// f(psi^{-n} a_1 (x) ... (x) psi^{-n} a_k) = psi^{-n} f(a_1 (x) ... (x) a_k).
bool bar_criterion_check(const ExtClass& eta, const AlgebraMorphism& psi, long n, size_t cap = kBarCap);

struct StrongifyResult {
    bool found = false;
    int s = 0;
    std::vector<ExtClass> generators;  // s-th powers of the sampled generators
    std::vector<int> generator_indices;
};
// Indecomposable basis elements of a sample (positive degrees plus a degree-0 basis).
std::vector<ExtClass> sample_generators(const GradedRingSample& s);
StrongifyResult strongify(const GradedRingSample& s, int s_max);

ExtClass class_power(const ExtClass& eta, int k);

// 0 -> A -> K_eta -> Omega^{tm-1}(_{psi^m} A) -> 0
struct KEtaExtension {
    ExtClass eta;
    Module k_eta;
    Module quotient;     // Omega^{tm-1}(_{psi^m} A)
    Matrix inclusion;    // A -> K
    Matrix projection;   // K -> quotient
    bool exact = false;
    bool maps_are_homomorphisms = false;
};
KEtaExtension k_eta(const ExtClass& eta);

struct TensoredSequence {
    Module left, middle, right;
    Matrix inclusion, projection;
    bool exact = false;
};
TensoredSequence tensor_sequence(const KEtaExtension& k, const Module& m);
// rank-based check of 0 -> L -> M -> R -> 0
bool short_exact(const Matrix& inclusion, const Matrix& projection, int dim_l, int dim_m, int dim_r);

}  // namespace twc

#endif
