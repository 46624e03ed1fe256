#ifndef TWISTCOH_EXACTLA_HPP
#define TWISTCOH_EXACTLA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twc {

// Every failure the engine reports carries a stable kind tag (NonAssociative,
// SizeCap, ...) so callers and the CLI can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Ground field: p == 0 means Q, otherwise F_p with p prime and p < 2^31.
struct Field {
    uint32_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(uint32_t p);
    bool is_rational() const { return p == 0; }
    std::string name() const;
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }
};

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : p_(f.p) {}
    Scalar(Field f, long v);
    Scalar(Field f, const mpq_class& v);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1L); }
    // Accepts "a", "-a" or "a/b".
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return Field{p_}; }
    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
    const mpq_class& rational() const { return q_; }
    uint64_t residue() const { return r_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inv() const;
    Scalar pow(long e) const;
    // this += a*b, the inner loop of every elimination
    void addmul(const Scalar& a, const Scalar& b);
    void submul(const Scalar& a, const Scalar& b);

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    mpq_class q_;
    uint64_t r_ = 0;
    uint32_t p_ = 0;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, int n);
Vec unit_vec(Field f, int n, int i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
std::string to_string(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols);

    static Matrix identity(Field f, int n);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows, int cols = -1);
    static Matrix from_cols(Field f, const std::vector<Vec>& cols, int rows = -1);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Field field() const { return f_; }

    Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& v);
    void set_col(int j, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix scaled(const Scalar& s) const;
    void add_scaled(const Scalar& s, const Matrix& o);  // this += s*o
    Matrix transpose() const;
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix block(int r0, int c0, int nr, int nc) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    size_t entries() const { return static_cast<size_t>(r_) * c_; }

private:
    Field f_;
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix r;
    std::vector<int> pivots;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> invert(const Matrix& m);

// Subspace of F^n kept in reduced row-echelon form.  Coordinates of a member
// with respect to the stored rows are read off at the pivot positions.
class EchelonBasis {
public:
    EchelonBasis() = default;
    EchelonBasis(Field f, int n) : f_(f), n_(n) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    Field field() const { return f_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    Vec reduce(const Vec& v) const;  // residue modulo the span
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    bool insert(const Vec& v);       // true if v was independent
    Vec coords(const Vec& v) const;  // assumes membership
    Vec combine(const Vec& coords) const;
    Matrix as_columns() const;

private:
    Field f_;
    int n_ = 0;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

// Repeated solves of a fixed system a x = b.  Stores T with T a = rref(a).
class Solver {
public:
    Solver() = default;
    explicit Solver(const Matrix& a);
    std::optional<Vec> solve(const Vec& b) const;
    int rank() const { return static_cast<int>(piv_.size()); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    Matrix t_;
    std::vector<int> piv_;
    int rows_ = 0, cols_ = 0;
};

}  // namespace twc

#endif
