#ifndef TWISTCOH_VARIETIES_HPP
#define TWISTCOH_VARIETIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistcoh/hochschild.hpp"

namespace twc {

enum class FgVerdict { PassEvidence, FailWitness, Inconclusive };
const char* to_string(FgVerdict v);

// Degree-truncated evidence that Ext^{t*}(_{psi*} M, A/r) is finitely generated over
// the subalgebra generated by `gens` (HH classes of positive degree).
struct FgEvidence {
    Module module;
    AlgebraMorphism psi;
    int t = 1;
    std::vector<int> generator_degrees;
    int window = 0;                    // largest sampled Ext degree
    std::vector<int> ext_dims;         // dim Ext^{tj}, j = 0 .. window / t
    std::vector<int> new_generators;   // dims of Ext^{tj} modulo the H-action from below
    int generated_up_to = -1;          // every sampled degree >= this one is reached by the action
    std::optional<int> action_injective_from;  // degree from which every generator acts injectively
    FgVerdict verdict = FgVerdict::Inconclusive;
    // FailWitness: a class outside the H-span; `witness_annihilated` when all generators kill it
    std::optional<ExtClass> witness;
    int witness_degree = -1;
    int transition_degree = -1;        // the degree the witness fails to reach or be reached in
    bool witness_annihilated = false;
    std::string note;
};

// gens live on a bimodule resolution and are twisted by psi (x) 1; D bounds the Ext degree.
FgEvidence fg_check(const Module& m, const std::vector<ExtClass>& gens, const AlgebraMorphism& psi, int t, int D);

struct VarietyReport {
    Module module;
    AlgebraMorphism psi;
    int t = 1;
    GrowthEstimate growth;
    std::optional<int> dim;     // complexity when the growth verdict is conclusive
    bool trivial = false;
    bool ext_vanishes = false;  // Ext^{tn}(_{psi^n} M, M) = 0 for the sampled n >= 1
    FgEvidence fg;
    std::vector<std::string> caveats;
};

VarietyReport variety_report(const Module& m, const AlgebraMorphism& psi, int t, const std::vector<ExtClass>& gens,
                             int window = 12, int fg_window = 10);

struct PeriodicityCertificate {
    bool found = false;
    int j = 0, w = 0;
    Module source;  // Omega^{tj}(M)
    Module target;  // Omega^{t(j+w)}(_{psi^w} M)
    Matrix intertwiner;  // target.dim x source.dim
    bool verified = false;
    bool vacuous = false;
    std::string note;
};

// Lexicographic search over (j, w), j in [0, j_max], w in [1, w_max].
PeriodicityCertificate periodicity(const Module& m, const AlgebraMorphism& psi, int t, int j_max, int w_max,
                                   uint64_t seed = 1);
// M against Omega^{2p}(_{nu^p} M), nu the Nakayama automorphism of the form; throws NotFrobenius.
PeriodicityCertificate tau_periodicity(const Module& m, const FrobeniusForm& form, int p_max, uint64_t seed = 1);

// Omega^1_{A^e}(K_eta) (x)_A M; throws DegreeZero.
Module reduce_dimension(const Module& m, const ExtClass& eta);

}  // namespace twc

#endif
