#ifndef TWISTCOH_MODULES_HPP
#define TWISTCOH_MODULES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "twistcoh/algebra.hpp"

namespace twc {

class Module {
public:
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Matrix> action;  // action[i] = left multiplication by basis_i
    std::string name;

    Module() = default;
    Module(AlgebraPtr a, int m, std::vector<Matrix> act, std::string nm = "M");

    Field field() const { return alg->field; }
    Matrix action_of(const Vec& lambda) const;
    Vec act(const Vec& lambda, const Vec& v) const;
    Vec act_basis(int i, const Vec& v) const;
    void validate() const;  // throws ValidationError
    bool operator==(const Module& o) const { return alg == o.alg && dim == o.dim && action == o.action; }
};

using ModulePtr = std::shared_ptr<const Module>;

struct ModuleMap {
    ModulePtr source, target;
    Matrix matrix;  // target.dim x source.dim
    bool intertwines() const;
};

Module zero_module(const AlgebraPtr& a);
Module regular_module(const AlgebraPtr& a);
// A as a bimodule, i.e. a left module over enveloping(A)
Module regular_bimodule(const AlgebraPtr& env);
Module direct_sum(const Module& m, const Module& n);
Module twist_by(const Module& m, const AlgebraMorphism& phi);
Module twist(const Module& m, const AlgebraMorphism& phi, long n);
Module bimodule_twist(const Module& b, const AlgebraMorphism& left, long a, const AlgebraMorphism& right, long c);
// restriction of a bimodule to its left (a (x) 1) or right (1 (x) a) actions
Module restrict_left(const Module& b);
Module restrict_right(const Module& b);

// Submodule spanned by the given vectors (must be invariant); basis is echelon.
struct Submodule {
    Module module;
    Matrix inclusion;  // m.dim x sub.dim
};
Submodule submodule(const Module& m, const std::vector<Vec>& span);
struct Quotient {
    Module module;
    Matrix projection;  // q.dim x m.dim
    Matrix section;     // m.dim x q.dim, projection * section = 1
};
Quotient quotient(const Module& m, const std::vector<Vec>& span);

// Direct sum of indecomposable projectives, indexed by generator.
struct ProjTerm {
    AlgebraPtr alg;
    std::vector<int> types;
    std::vector<int> offset;
    int dim = 0;

    ProjTerm() = default;
    ProjTerm(AlgebraPtr a, std::vector<int> t);
    int rank() const { return static_cast<int>(types.size()); }
    const ProjType& type_of(int g) const { return alg->proj_types[types[g]]; }
    Vec zero() const { return zero_vec(alg->field, dim); }
    Vec act(const Vec& lambda, const Vec& p) const;
    Vec act_basis(int i, const Vec& p) const;
    // element a of A placed at generator g (a must lie in A e_g)
    Vec embed(int g, const Vec& a) const;
    Vec generator(int g) const;
    Vec block(const Vec& p, int g) const;  // the A-coefficient of generator g
    bool block_zero(const Vec& p, int g) const;
    Module as_module() const;
};

// The map sending generator g to images[g]; elements of the source act through theta.
Vec eval_on(const ProjTerm& p, const std::vector<Vec>& images, const Module& n, const AlgebraMorphism* theta,
            const Vec& elem);
Matrix map_matrix(const ProjTerm& p, const std::vector<Vec>& images, const Module& n, const AlgebraMorphism* theta);

// Generators of the submodule spanned by w inside an ambient space with the given action.
struct CoverChoice {
    std::vector<int> types;
    std::vector<Vec> gens;
};
using ActFn = std::function<Vec(const Vec& lambda, const Vec& w)>;
CoverChoice choose_cover(const Algebra& a, const std::vector<Vec>& w, int ambient, const ActFn& act);

struct Top {
    Module module;
    Matrix surjection;
};
Top top(const Module& m);
Submodule radical_submodule(const Module& m);

struct Cover {
    ProjTerm term;
    Module projective;
    std::vector<Vec> images;  // generator images in m
    ModuleMap map;
};
Cover projective_cover(const Module& m);
Module syzygy(const Module& m);
Module syzygy(const Module& m, int n);

std::vector<Matrix> hom_basis(const Module& m, const Module& n);
bool is_intertwiner(const Module& m, const Module& n, const Matrix& f);

struct TensorProduct {
    Module module;
    Matrix projection;  // from B (x)_k M, index b * dim M + w
    Matrix section;
};
TensorProduct tensor_over_algebra(const Module& b, const Module& m);
// (f (x) M) on the quotients of f: B -> B'
Matrix tensor_map(const TensorProduct& src, const TensorProduct& tgt, const Matrix& f, int dim_m);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };
struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Inconclusive;
    Matrix certificate;  // n.dim x m.dim, invertible intertwiner when Isomorphic
    std::string reason;
};
struct IsoOptions {
    uint64_t seed = 1;
    int random_trials = 200;
    int box_cap = 20000;
};
IsoResult is_isomorphic(const Module& m, const Module& n, const IsoOptions& opt = {});
bool verify_iso_certificate(const Module& m, const Module& n, const Matrix& f);

const char* to_string(IsoVerdict v);

}  // namespace twc

#endif
