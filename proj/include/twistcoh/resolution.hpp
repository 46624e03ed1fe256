#ifndef TWISTCOH_RESOLUTION_HPP
#define TWISTCOH_RESOLUTION_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <deque>
#include <vector>

#include "twistcoh/modules.hpp"

namespace twc {

// A projective resolution P_n -> ... -> P_0 -> target, stored as generator images.
// Terms are built on demand; dense differential matrices and their solvers are cached.
class Resolution {
public:
    AlgebraPtr alg;
    Module target;
    std::string kind = "resolution";
    bool minimal = false;
    // upper bound on entries of any dense matrix this resolution may materialize (0 = none)
    size_t dense_cap = 0;

    Resolution(AlgebraPtr a, Module t) : alg(std::move(a)), target(std::move(t)) {}
    virtual ~Resolution() = default;
    Resolution(const Resolution&) = delete;
    Resolution& operator=(const Resolution&) = delete;

    void ensure(int n);
    int built() const { return static_cast<int>(terms_.size()) - 1; }
    const ProjTerm& term(int n);
    const std::vector<Vec>& augmentation();
    // images of the generators of P_n in P_{n-1}, n >= 1
    const std::vector<Vec>& diff(int n);
    // n = 0 is the augmentation P_0 -> target
    const Matrix& diff_matrix(int n);
    const Solver& diff_solver(int n);
    // d_n applied to an element of P_n
    Vec apply_diff(int n, const Vec& p);
    // kernel of d_n (n = 0: of the augmentation), i.e. Omega^{n+1} inside P_n
    const EchelonBasis& kernel(int n);
    Module syzygy_module(int n);  // Omega^n(target), n = 0 gives the target
    std::vector<int> lengths(int upto);

    // invariant checks
    bool is_complex_at(int n);   // d_n d_{n+1} = 0 (n = 0: augmentation)
    bool exact_at(int n);        // rank d_{n+1} = dim ker d_n
    bool minimal_at(int n);      // generator images of d_n lie in rad P_{n-1}

protected:
    struct Step {
        std::vector<int> types;
        std::vector<Vec> images;
    };
    virtual Step build_term(int n) = 0;

    // deques keep references handed out by term()/diff() valid as the complex grows
    std::deque<ProjTerm> terms_;
    std::deque<std::vector<Vec>> diffs_;  // diffs_[n] for n >= 1, diffs_[0] = augmentation
    std::map<int, Matrix> mats_;
    std::map<int, Solver> solvers_;
    std::map<int, EchelonBasis> kernels_;
};

using ResolutionPtr = std::shared_ptr<Resolution>;

class MinimalResolution : public Resolution {
public:
    MinimalResolution(AlgebraPtr a, Module t);

protected:
    Step build_term(int n) override;
};

// Terms supplied by a callback: (n, previous term) -> (types, generator images).
class ExplicitResolution : public Resolution {
public:
    using Builder = std::function<void(int n, std::vector<int>& types, std::vector<Vec>& images, Resolution& self)>;
    ExplicitResolution(AlgebraPtr a, Module t, std::string kind_name, Builder b);

protected:
    Step build_term(int n) override;

private:
    Builder builder_;
};

ResolutionPtr minimal_resolution(const Module& m, int steps);
std::vector<int> betti_lengths(Resolution& r, int steps);
std::vector<int> betti_ranks(Resolution& r, int steps);

enum class GrowthVerdict { EventuallyZero, Bounded, PolynomialDegree, Inconclusive };
const char* to_string(GrowthVerdict v);

struct GrowthEstimate {
    int start = 0, end = 0;  // window of indices n (values l(P_{tn}))
    int stride = 1;
    std::vector<long> values;
    GrowthVerdict verdict = GrowthVerdict::Inconclusive;
    int degree = 0;            // c for PolynomialDegree
    std::optional<int> gamma;  // when conclusive
};

GrowthEstimate classify_growth(const std::vector<long>& values, int stride = 1);
GrowthEstimate complexity(const Module& m, int t, int window = 12);
GrowthEstimate complexity(Resolution& r, int t, int window = 12);

std::vector<Module> twisted_syzygy_track(Resolution& r, const AlgebraMorphism& psi, int t, int steps);

}  // namespace twc

#endif
