#include "twistcoh/exactla.hpp"

#include <sstream>

namespace twc {

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_same(uint32_t a, uint32_t b) {
    if (a != b) throw Error("FieldMismatch", "scalars from different fields");
}

uint64_t reduce_mpz(const mpz_class& z, uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return r.get_ui();
}

}  // namespace

Field Field::prime(uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw Error("BadField", "prime field needs a prime p < 2^31, got " + std::to_string(p));
    return Field{p};
}

std::string Field::name() const { return p ? "F" + std::to_string(p) : "Q"; }

Scalar::Scalar(Field f, long v) : p_(f.p) {
    if (p_) {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        r_ = static_cast<uint64_t>(r);
    } else {
        q_ = v;
    }
}

Scalar::Scalar(Field f, const mpq_class& v) : p_(f.p) {
    if (p_) {
        uint64_t den = reduce_mpz(v.get_den(), p_);
        if (den == 0) throw Error("NotInvertible", "denominator divisible by p");
        r_ = reduce_mpz(v.get_num(), p_) * powmod(den, p_ - 2, p_) % p_;
    } else {
        q_ = v;
        q_.canonicalize();
    }
}

Scalar Scalar::parse(Field f, const std::string& text) {
    mpq_class v;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || v.set_str(t, 10) != 0) throw Error("SyntaxError", "bad coefficient '" + text + "'");
    if (v.get_den() == 0) throw Error("SyntaxError", "zero denominator in '" + text + "'");
    v.canonicalize();
    return Scalar(f, v);
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r(*this);
    r += o;
    return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r(*this);
    r -= o;
    return r;
}
Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r(*this);
    r *= o;
    return r;
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (p_)
        r.r_ = r_ ? p_ - r_ : 0;
    else
        r.q_ = -q_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(p_, o.p_);
    if (p_) {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(p_, o.p_);
    if (p_)
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    else
        q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(p_, o.p_);
    if (p_)
        r_ = r_ * o.r_ % p_;
    else
        q_ *= o.q_;
    return *this;
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
    if (p_) {
        r_ = (r_ + a.r_ * b.r_) % p_;
    } else {
        thread_local mpq_class t;
        mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
    }
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
    if (p_) {
        r_ = (r_ + p_ - a.r_ * b.r_ % p_) % p_;
    } else {
        thread_local mpq_class t;
        mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
    }
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("NotInvertible", "division by zero");
    Scalar r(*this);
    if (p_)
        r.r_ = powmod(r_, p_ - 2, p_);
    else
        r.q_ = 1 / q_;
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = one(field()), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

Vec zero_vec(Field f, int n) { return Vec(n, Scalar(f)); }

Vec unit_vec(Field f, int n, int i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& v) {
    Vec r(v);
    for (auto& e : r) e *= s;
    return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i].addmul(a, x[i]);
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, int rows, int cols)
    : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Scalar(f)) {}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, int cols) {
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.r_; ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_cols(Field f, const std::vector<Vec>& cols, int rows) {
    if (rows < 0) rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Matrix::row(int i) const {
    return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

Vec Matrix::col(int j) const {
    Vec v;
    v.reserve(r_);
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_row(int i, const Vec& v) {
    if (static_cast<int>(v.size()) != c_) throw Error("DimensionMismatch", "row length");
    for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(int j, const Vec& v) {
    if (static_cast<int>(v.size()) != r_) throw Error("DimensionMismatch", "column length");
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw Error("DimensionMismatch", "matrix product");
    Matrix m(f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) m(i, j).addmul(a, b);
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix m(*this);
    m.add_scaled(Scalar::one(f_), o);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix m(*this);
    m.add_scaled(-Scalar::one(f_), o);
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != c_) throw Error("DimensionMismatch", "matrix-vector product");
    Vec r = zero_vec(f_, r_);
    for (int j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < r_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) r[i].addmul(a, v[j]);
        }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(*this);
    for (auto& e : m.a_) e *= s;
    return m;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw Error("DimensionMismatch", "matrix sum");
    if (s.is_zero()) return;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i].addmul(s, o.a_[i]);
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (r_ != o.r_) throw Error("DimensionMismatch", "hstack");
    Matrix m(f_, r_, c_ + o.c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (c_ != o.c_) throw Error("DimensionMismatch", "vstack");
    Matrix m(f_, r_ + o.r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (int i = 0; i < o.r_; ++i)
        for (int j = 0; j < c_; ++j) m(r_ + i, j) = o(i, j);
    return m;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
    Matrix m(f_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const Scalar& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

// ------------------------------------------------------------ elimination

// Gauss-Jordan on rows of a dense matrix, first nonzero entry of each column
// as pivot.  Rows are kept as separate vectors so swaps are free.
static RrefResult rref_rows(Field f, std::vector<Vec> rows, int cols) {
    std::vector<int> piv;
    int r = 0;
    const int n = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (!rows[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        Vec& pr = rows[r];
        if (!pr[c].is_one()) {
            Scalar inv = pr[c].inv();
            for (int j = c; j < cols; ++j)
                if (!pr[j].is_zero()) pr[j] *= inv;
        }
        std::vector<int> nz;
        for (int j = c + 1; j < cols; ++j)
            if (!pr[j].is_zero()) nz.push_back(j);
        for (int i = 0; i < n; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar fct = rows[i][c];
            for (int j : nz) rows[i][j].submul(fct, pr[j]);
            rows[i][c] = Scalar(f);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix m(f, n, cols);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = std::move(rows[i][j]);
    return {std::move(m), std::move(piv)};
}

RrefResult rref(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rref_rows(m.field(), std::move(rows), m.cols());
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    auto [r, piv] = rref(m);
    const int n = m.cols();
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<Vec> out;
    for (int fc = 0; fc < n; ++fc) {
        if (is_piv[fc]) continue;
        Vec v = zero_vec(m.field(), n);
        v[fc] = Scalar::one(m.field());
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(static_cast<int>(i), fc);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error("DimensionMismatch", "solve: a.rows != b.rows");
    auto [r, piv] = rref(a.hstack(b));
    const int n = a.cols();
    for (int c : piv)
        if (c >= n) return std::nullopt;
    Matrix x(a.field(), n, b.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = r(static_cast<int>(i), n + j);
    return x;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    auto x = solve(a, Matrix::from_cols(a.field(), {b}, a.rows()));
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("DimensionMismatch", "invert: not square");
    const int n = m.rows();
    auto [r, piv] = rref(m.hstack(Matrix::identity(m.field(), n)));
    if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    return r.block(0, n, n, n);
}

// ---------------------------------------------------------- EchelonBasis

Vec EchelonBasis::reduce(const Vec& v) const {
    Vec r(v);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = r[piv_[i]];
        if (!c.is_zero()) {
            for (int j = piv_[i]; j < n_; ++j)
                if (!rows_[i][j].is_zero()) r[j].submul(c, rows_[i][j]);
        }
    }
    return r;
}

bool EchelonBasis::insert(const Vec& v) {
    Vec r = reduce(v);
    int p = -1;
    for (int j = 0; j < n_; ++j)
        if (!r[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    Scalar inv = r[p].inv();
    for (int j = p; j < n_; ++j)
        if (!r[j].is_zero()) r[j] *= inv;
    // keep the rows fully reduced against the new pivot
    for (auto& row : rows_) {
        const Scalar c = row[p];
        if (c.is_zero()) continue;
        for (int j = p; j < n_; ++j)
            if (!r[j].is_zero()) row[j].submul(c, r[j]);
    }
    size_t pos = 0;
    while (pos < piv_.size() && piv_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
    piv_.insert(piv_.begin() + static_cast<long>(pos), p);
    return true;
}

Vec EchelonBasis::coords(const Vec& v) const {
    Vec c;
    c.reserve(rows_.size());
    for (int p : piv_) c.push_back(v[p]);
    return c;
}

Vec EchelonBasis::combine(const Vec& c) const {
    Vec v = zero_vec(f_, n_);
    for (size_t i = 0; i < rows_.size(); ++i) axpy(v, c[i], rows_[i]);
    return v;
}

Matrix EchelonBasis::as_columns() const { return Matrix::from_cols(f_, rows_, n_); }

// ---------------------------------------------------------------- Solver

Solver::Solver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
    auto [r, piv] = rref(a.hstack(Matrix::identity(a.field(), a.rows())));
    for (int c : piv)
        if (c < cols_) piv_.push_back(c);
    t_ = r.block(0, cols_, rows_, rows_);
}

std::optional<Vec> Solver::solve(const Vec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw Error("DimensionMismatch", "Solver::solve");
    Vec tb = t_ * b;
    for (int i = rank(); i < rows_; ++i)
        if (!tb[i].is_zero()) return std::nullopt;
    Vec x = zero_vec(t_.field(), cols_);
    for (int i = 0; i < rank(); ++i) x[piv_[i]] = tb[i];
    return x;
}

}  // namespace twc
