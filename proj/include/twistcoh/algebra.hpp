#ifndef TWISTCOH_ALGEBRA_HPP
#define TWISTCOH_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/exactla.hpp"

namespace twc {

struct Term {
    int k;
    Scalar c;
};
using SparseVec = std::vector<Term>;

// Sparse square matrix stored column-wise: col[j] lists the nonzero (row, value).
struct SparseMatrix {
    int n = 0;
    std::vector<SparseVec> col;
    static SparseMatrix from_dense(const Matrix& m);
};

// One indecomposable projective A e, or A itself for a local algebra.
struct ProjType {
    Vec idempotent;
    int dim = 0;
    Matrix basis;                     // d x dim, columns span A e inside A
    std::vector<SparseMatrix> action; // left action of each basis element of A
    std::vector<int> pivots;          // coordinates of a in A e are a[pivots[c]]
};

// Input for validate_algebra.
struct AlgebraData {
    std::string name = "A";
    Field field;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> mult;  // mult[i][j] = coordinates of b_i b_j
    Vec unit;
    std::optional<std::vector<Vec>> radical;
    std::vector<Vec> idempotents;
    std::vector<int> grading;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    std::string name;
    Field field;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> mult;
    Vec unit;
    std::vector<Vec> radical;  // echelon basis
    std::vector<Vec> idempotents;
    std::vector<int> grading;
    bool radical_fully_verified = true;

    // derived
    std::vector<std::vector<SparseVec>> smult;
    std::vector<Vec> rad_generators;   // lift of a basis of rad / rad^2
    std::vector<Vec> generators;       // generate A as an algebra together with 1
    std::vector<ProjType> proj_types;  // empty when covers are not available
    bool local = false;

    // set for enveloping algebras: basis index i*d+j is b_i (x) b_j^op of base
    AlgebraPtr env_base;
    // set for the quantum exterior algebra built-in
    std::optional<Scalar> quantum_param;

    Vec zero() const { return zero_vec(field, dim); }
    Vec basis(int i) const { return unit_vec(field, dim, i); }
    Vec mul(const Vec& a, const Vec& b) const;
    void mul_add(Vec& out, const Scalar& s, int i, int j) const;  // out += s b_i b_j
    Matrix left_mult(const Vec& a) const;
    Matrix right_mult(const Vec& a) const;
    Matrix left_mult_basis(int i) const;
    bool in_radical(const Vec& v) const;
    int radical_dim() const { return static_cast<int>(radical.size()); }
    Vec parse_label(const std::string& label) const;  // basis element by label
};

AlgebraPtr validate_algebra(AlgebraData raw);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr enveloping(const AlgebraPtr& a);
std::vector<Vec> center(const Algebra& a);

struct AlgebraMorphism {
    AlgebraPtr source, target;
    Matrix matrix;  // column j = image of basis_j

    static AlgebraMorphism identity(const AlgebraPtr& a);
    Vec apply(const Vec& v) const { return matrix * v; }
    bool is_identity() const { return matrix.is_identity(); }
    bool operator==(const AlgebraMorphism& o) const {
        return source == o.source && target == o.target && matrix == o.matrix;
    }
};

// Checks multiplicativity and unit; automorphism additionally requires invertibility.
AlgebraMorphism make_morphism(const AlgebraPtr& src, const AlgebraPtr& tgt, const Matrix& m);
AlgebraMorphism make_automorphism(const AlgebraPtr& a, const Matrix& m);
AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g);  // f after g
AlgebraMorphism power(const AlgebraMorphism& f, long n);
AlgebraMorphism inverse(const AlgebraMorphism& f);
// f (x) g on the enveloping algebra of f's algebra
AlgebraMorphism env_morphism(const AlgebraPtr& env, const AlgebraMorphism& f, const AlgebraMorphism& g);

struct FrobeniusForm {
    AlgebraPtr algebra;
    Vec functional;
    Matrix gram() const;  // gram(i,j) = functional(b_i b_j)
};

AlgebraMorphism nakayama(const FrobeniusForm& form);
FrobeniusForm env_form(const AlgebraPtr& env, const FrobeniusForm& base);

}  // namespace twc

#endif
