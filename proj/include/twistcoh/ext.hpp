#ifndef TWISTCOH_EXT_HPP
#define TWISTCOH_EXT_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "twistcoh/resolution.hpp"

namespace twc {

// Ext^n(_{psi^j} M, N) computed on a resolution P of M.  A cochain is the list
// of generator values f(g) in N, concatenated; f(lambda p) = theta(lambda) f(p)
// with theta = psi^{-j}, which identifies the resolution of the twisted module
// with the twisted resolution of M.
class ExtSpace {
public:
    ResolutionPtr res;
    int degree = 0;
    AlgebraMorphism psi;
    long power = 0;
    AlgebraMorphism theta;  // psi^{-power}
    Module target;

    ExtSpace(ResolutionPtr r, int n, AlgebraMorphism psi, long power, Module target);

    int dim() const { return static_cast<int>(reps_.size()); }
    int cochain_dim() const { return cochain_dim_; }
    int cocycle_dim() const { return cocycle_dim_; }
    const std::vector<Vec>& representatives() const { return reps_; }

    // value of a cochain at generator g
    Vec value(const Vec& cochain, int g) const;
    Vec coboundary(const Vec& cochain) const;  // cochain on P_{n+1}
    bool is_cocycle(const Vec& cochain) const;
    Vec coords(const Vec& cocycle) const;  // throws NotCocycle
    Vec cochain(const Vec& coords) const;
    bool compatible(const ExtSpace& o) const;

private:
    int cochain_dim_ = 0, cocycle_dim_ = 0;
    Matrix delta_out_;  // cochains on P_n -> cochains on P_{n+1}
    std::vector<Vec> reps_;
    Solver coord_solver_;
};

using ExtSpacePtr = std::shared_ptr<const ExtSpace>;

// Spaces are shared per (resolution, degree, twist, target).
ExtSpacePtr ext_space_for(const ResolutionPtr& res, int degree, const AlgebraMorphism& psi, long power,
                          const Module& target);

struct ExtClass {
    ExtSpacePtr space;
    Vec cocycle;
    Vec coords;

    int degree() const { return space->degree; }
    long power() const { return space->power; }
    bool is_zero() const { return twc::is_zero(coords); }
    std::string str() const;
};

ExtClass make_class(const ExtSpacePtr& space, const Vec& cocycle);
ExtClass class_from_coords(const ExtSpacePtr& space, const Vec& coords);
ExtClass class_from_values(const ExtSpacePtr& space, const std::vector<Vec>& values);
ExtClass zero_class(const ExtSpacePtr& space);
ExtClass add(const ExtClass& a, const ExtClass& b);
ExtClass scale(const Scalar& s, const ExtClass& a);
bool class_equal(const ExtClass& a, const ExtClass& b);  // throws SpaceMismatch
std::vector<ExtClass> basis(const ExtSpacePtr& space);

// Plain Ext^n(M, N) on a fresh minimal resolution.
std::vector<ExtClass> ext_space(const Module& m, const Module& n, int degree);
// Ext^{tj}(_{psi^j} M, N) on the given resolution of M.
ExtSpacePtr twisted_ext_space(const ResolutionPtr& res, const Module& n, const AlgebraMorphism& psi, int t, long j);

// A chain map from a shifted piece of one resolution into another:
// F_i : P_{shift+i} -> Q_i with F(lambda p) = twist(lambda) F(p).
struct ChainMap {
    ResolutionPtr source, target;
    int shift = 0;
    AlgebraMorphism twist;
    std::vector<Vec> top_values;              // what eps o F_0 must give on generators of P_shift
    std::vector<std::vector<Vec>> images;     // images[i][g] in Q_i
    int length() const { return static_cast<int>(images.size()) - 1; }
    Vec apply(int i, const Vec& p) const;     // F_i on an element of P_{shift+i}
};

// Extends a chain map to length L (inclusive).  Throws LiftFailed.
void extend_chain_map(ChainMap& f, int length);
ChainMap lift_values(const ResolutionPtr& source, int shift, const std::vector<Vec>& values,
                     const ResolutionPtr& target, const AlgebraMorphism& twist, int length);
// Lifts the cocycle of c into c's own resolution (or `target` when given).
ChainMap lift_chain_map(const ExtClass& c, int length, ResolutionPtr target = nullptr);
bool verify_chain_map(const ChainMap& f);

// eta . theta = eta o F^{|eta|/t}(theta): theta is lifted into eta's resolution.
// Both classes must use the same psi; theta's target is resolved by eta's resolution.
ExtClass twisted_product(const ExtClass& eta, const ExtClass& theta);

struct GradedRingSample {
    ResolutionPtr res;
    AlgebraMorphism psi;
    int t = 1;
    int max_index = 0;  // D
    std::vector<std::vector<ExtClass>> basis;  // basis[j] spans Ext^{tj}(_{psi^j} M, M)
    // products[(j1, a, j2, b)] = coordinates of basis[j1][a] . basis[j2][b], j1 + j2 <= D
    std::map<std::tuple<int, int, int, int>, Vec> products;
    std::vector<std::vector<std::string>> labels;

    std::vector<int> dims() const;
    ExtClass unit() const;
    ExtClass product(const ExtClass& a, const ExtClass& b) const;  // via the table
    Vec product_coords(int j1, const Vec& a, int j2, const Vec& b) const;
};

// Computes the multiplication table unless `with_products` is false.
GradedRingSample ring_sample(const ResolutionPtr& res, const AlgebraMorphism& psi, int t, int max_index,
                             bool with_products = true);
// The degree-0 part is Hom(M, M); its unit class.
ExtClass identity_class(const ResolutionPtr& res, const AlgebraMorphism& psi);

// Associativity on all in-window basis triples; returns the number of violations.
int associativity_violations(const GradedRingSample& s);

}  // namespace twc

#endif
