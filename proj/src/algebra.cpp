#include "twistcoh/algebra.hpp"

#include <algorithm>
#include <map>

namespace twc {

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s;
    s.n = m.cols();
    s.col.resize(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) s.col[j].push_back({i, m(i, j)});
    return s;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    Vec out = zero();
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar s = a[i] * b[j];
            for (const auto& t : smult[i][j]) out[t.k].addmul(s, t.c);
        }
    }
    return out;
}

void Algebra::mul_add(Vec& out, const Scalar& s, int i, int j) const {
    for (const auto& t : smult[i][j]) out[t.k].addmul(s, t.c);
}

Matrix Algebra::left_mult(const Vec& a) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j) m.set_col(j, mul(a, basis(j)));
    return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j) m.set_col(j, mul(basis(j), a));
    return m;
}

Matrix Algebra::left_mult_basis(int i) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& t : smult[i][j]) m(t.k, j) = t.c;
    return m;
}

bool Algebra::in_radical(const Vec& v) const {
    EchelonBasis e(field, dim);
    for (const auto& r : radical) e.insert(r);
    return e.contains(v);
}

Vec Algebra::parse_label(const std::string& label) const {
    for (int i = 0; i < dim; ++i)
        if (labels[i] == label) return basis(i);
    throw Error("UnknownLabel", "no basis element '" + label + "' in " + name);
}

namespace {

EchelonBasis span_of(Field f, int n, const std::vector<Vec>& vs) {
    EchelonBasis e(f, n);
    for (const auto& v : vs) e.insert(v);
    return e;
}

// Ideal product span{a b : a in X, b in Y}.
std::vector<Vec> product_span(const Algebra& a, const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
    EchelonBasis e(a.field, a.dim);
    for (const auto& x : xs)
        for (const auto& y : ys) e.insert(a.mul(x, y));
    return e.rows();
}

std::vector<Vec> trace_form_kernel(const Algebra& a) {
    std::vector<Matrix> L;
    for (int i = 0; i < a.dim; ++i) L.push_back(a.left_mult_basis(i));
    Matrix t(a.field, a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = i; j < a.dim; ++j) {
            Scalar s(a.field);
            for (int r = 0; r < a.dim; ++r)
                for (int c = 0; c < a.dim; ++c)
                    if (!L[i](r, c).is_zero() && !L[j](c, r).is_zero()) s.addmul(L[i](r, c), L[j](c, r));
            t(i, j) = s;
            t(j, i) = s;
        }
    return span_of(a.field, a.dim, kernel_basis(t)).rows();
}

bool same_span(Field f, int n, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    EchelonBasis ea = span_of(f, n, a), eb = span_of(f, n, b);
    if (ea.dim() != eb.dim()) return false;
    for (const auto& v : b)
        if (!ea.contains(v)) return false;
    return true;
}

// Subalgebra generated by 1 and gens, as an echelon basis.
EchelonBasis generated_subalgebra(const Algebra& a, const std::vector<Vec>& gens) {
    EchelonBasis e(a.field, a.dim);
    e.insert(a.unit);
    for (const auto& g : gens) e.insert(g);
    size_t done = 0;
    std::vector<Vec> queue = e.rows();
    while (done < queue.size()) {
        Vec v = queue[done++];
        for (const auto& g : gens) {
            Vec w = a.mul(v, g);
            if (e.insert(w)) queue.push_back(w);
        }
    }
    return e;
}

void fill_proj_types(Algebra& a) {
    a.proj_types.clear();
    std::vector<Vec> idems = a.idempotents;
    if (idems.empty()) {
        if (!a.local) return;
        idems.push_back(a.unit);
    }
    for (const auto& e : idems) {
        ProjType pt;
        pt.idempotent = e;
        std::vector<Vec> cols;
        if (idems.size() == 1 && e == a.unit) {
            for (int i = 0; i < a.dim; ++i) cols.push_back(a.basis(i));
        } else {
            EchelonBasis eb(a.field, a.dim);
            for (int i = 0; i < a.dim; ++i) eb.insert(a.mul(a.basis(i), e));
            cols = eb.rows();
        }
        pt.dim = static_cast<int>(cols.size());
        pt.basis = Matrix::from_cols(a.field, cols, a.dim);
        for (const auto& c : cols)
            for (int i = 0; i < a.dim; ++i)
                if (!c[i].is_zero()) {
                    pt.pivots.push_back(i);
                    break;
                }
        Solver sol(pt.basis);
        for (int i = 0; i < a.dim; ++i) {
            Matrix act(a.field, pt.dim, pt.dim);
            for (int c = 0; c < pt.dim; ++c) {
                Vec img = a.mul(a.basis(i), cols[c]);
                auto co = sol.solve(img);
                if (!co) throw Error("ValidationError", "A e is not a left ideal");
                act.set_col(c, *co);
            }
            pt.action.push_back(SparseMatrix::from_dense(act));
        }
        a.proj_types.push_back(std::move(pt));
    }
}

void check_idempotents(const Algebra& a) {
    const auto& es = a.idempotents;
    if (es.empty()) return;
    Vec sum = a.zero();
    for (size_t i = 0; i < es.size(); ++i) {
        if (static_cast<int>(es[i].size()) != a.dim) throw Error("ValidationError", "idempotent length");
        sum = add(sum, es[i]);
        for (size_t j = 0; j < es.size(); ++j) {
            Vec p = a.mul(es[i], es[j]);
            if (i == j ? p != es[i] : !is_zero(p))
                throw Error("ValidationError", "idempotents are not orthogonal idempotents");
        }
    }
    if (sum != a.unit) throw Error("ValidationError", "idempotents do not sum to the unit");
    // basic: e_i A e_j lies in the radical for i != j, and e_i A e_i / rad is one-dimensional
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            EchelonBasis sp(a.field, a.dim);
            for (int b = 0; b < a.dim; ++b) sp.insert(a.mul(a.mul(es[i], a.basis(b)), es[j]));
            EchelonBasis rad = span_of(a.field, a.dim, a.radical);
            int outside = 0;
            EchelonBasis both = rad;
            for (const auto& r : sp.rows())
                if (both.insert(r)) ++outside;
            if (i != j && outside > 0)
                throw Error("ValidationError", "algebra is not basic: e_i A e_j leaves the radical");
            if (i == j && outside != 1)
                throw Error("ValidationError", "idempotent is not primitive for a basic algebra");
        }
}

}  // namespace

AlgebraPtr build_algebra(AlgebraData raw, bool trace_check) {
    auto a = std::make_shared<Algebra>();
    const int d = raw.dim;
    if (d <= 0) throw Error("ValidationError", "algebra dimension must be positive");
    a->name = raw.name;
    a->field = raw.field;
    a->dim = d;
    a->labels = raw.labels;
    if (a->labels.empty())
        for (int i = 0; i < d; ++i) a->labels.push_back("b" + std::to_string(i));
    if (static_cast<int>(a->labels.size()) != d) throw Error("ValidationError", "wrong number of basis labels");
    if (static_cast<int>(raw.mult.size()) != d) throw Error("ValidationError", "structure constants incomplete");
    for (auto& row : raw.mult) {
        if (static_cast<int>(row.size()) != d) throw Error("ValidationError", "structure constants incomplete");
        for (auto& v : row)
            if (static_cast<int>(v.size()) != d) throw Error("ValidationError", "product vector length");
    }
    a->mult = std::move(raw.mult);
    a->unit = raw.unit;
    if (static_cast<int>(a->unit.size()) != d) throw Error("BadUnit", "unit vector length");
    a->grading = raw.grading;
    a->idempotents = raw.idempotents;

    a->smult.assign(d, std::vector<SparseVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (!a->mult[i][j][k].is_zero()) a->smult[i][j].push_back({k, a->mult[i][j][k]});

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec l = a->zero(), r = a->zero();
                for (const auto& t : a->smult[i][j]) a->mul_add(l, t.c, t.k, k);
                for (const auto& t : a->smult[j][k]) a->mul_add(r, t.c, i, t.k);
                if (l != r)
                    throw Error("NonAssociative", "(" + a->labels[i] + "*" + a->labels[j] + ")*" + a->labels[k] +
                                                      " != " + a->labels[i] + "*(" + a->labels[j] + "*" +
                                                      a->labels[k] + ")");
            }
    for (int i = 0; i < d; ++i) {
        Vec b = a->basis(i);
        if (a->mul(a->unit, b) != b || a->mul(b, a->unit) != b)
            throw Error("BadUnit", "unit does not act as identity on " + a->labels[i]);
    }

    std::vector<Vec> rad;
    if (raw.radical) {
        EchelonBasis rs = span_of(a->field, d, *raw.radical);
        rad = rs.rows();
        for (const auto& r : rad)
            for (int i = 0; i < d; ++i)
                if (!rs.contains(a->mul(a->basis(i), r)) || !rs.contains(a->mul(r, a->basis(i))))
                    throw Error("RadicalNotNilpotent", "supplied radical is not a two-sided ideal");
        if (trace_check) {
            if (a->field.is_rational() || a->field.p > static_cast<uint32_t>(d)) {
                if (!same_span(a->field, d, rad, trace_form_kernel(*a)))
                    throw Error("RadicalNotNilpotent", "supplied radical differs from the trace-form radical");
            } else {
                a->radical_fully_verified = false;
            }
        }
    } else {
        if (!a->field.is_rational())
            throw Error("ValidationError", "over a prime field the radical must be supplied");
        rad = trace_form_kernel(*a);
    }
    // nilpotency
    {
        std::vector<Vec> pw = rad;
        int steps = 0;
        while (!pw.empty()) {
            std::vector<Vec> next = product_span(*a, pw, rad);
            if (next.size() >= pw.size() || ++steps > d)
                throw Error("RadicalNotNilpotent", "radical is not nilpotent");
            pw = std::move(next);
        }
    }
    a->radical = rad;
    a->local = static_cast<int>(rad.size()) == d - 1;
    check_idempotents(*a);

    // rad / rad^2 lifts
    {
        EchelonBasis e = span_of(a->field, d, product_span(*a, rad, rad));
        for (const auto& r : rad)
            if (e.insert(r)) a->rad_generators.push_back(r);
    }
    {
        std::vector<Vec> cand = a->rad_generators;
        for (const auto& e : a->idempotents) cand.push_back(e);
        for (int i = 0; i < d; ++i) cand.push_back(a->basis(i));
        std::vector<Vec> gens;
        int cur = 1;
        for (const auto& c : cand) {
            if (cur == d) break;
            if (generated_subalgebra(*a, gens).contains(c)) continue;
            gens.push_back(c);
            cur = generated_subalgebra(*a, gens).dim();
        }
        a->generators = gens;
    }
    fill_proj_types(*a);
    return a;
}

AlgebraPtr validate_algebra(AlgebraData raw) { return build_algebra(std::move(raw), true); }

AlgebraPtr opposite(const AlgebraPtr& a) {
    AlgebraData raw;
    raw.name = a->name + "^op";
    raw.field = a->field;
    raw.dim = a->dim;
    raw.labels = a->labels;
    raw.mult.assign(a->dim, std::vector<Vec>(a->dim));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) raw.mult[i][j] = a->mult[j][i];
    raw.unit = a->unit;
    raw.radical = a->radical;
    raw.idempotents = a->idempotents;
    raw.grading = a->grading;
    auto r = build_algebra(std::move(raw), false);
    auto m = std::const_pointer_cast<Algebra>(r);
    m->radical_fully_verified = a->radical_fully_verified;
    return r;
}

AlgebraPtr enveloping(const AlgebraPtr& a) {
    // one enveloping algebra per base algebra, so twists built on it stay comparable
    static std::map<const Algebra*, std::weak_ptr<const Algebra>> cache;
    if (auto it = cache.find(a.get()); it != cache.end())
        if (auto e = it->second.lock(); e && e->env_base == a) return e;
    const int d = a->dim;
    const Field f = a->field;
    AlgebraData raw;
    raw.name = a->name + "^e";
    raw.field = f;
    raw.dim = d * d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) raw.labels.push_back(a->labels[i] + "|" + a->labels[j]);
    raw.mult.assign(d * d, std::vector<Vec>(d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    // (b_i (x) b_j)(b_k (x) b_l) = b_i b_k (x) b_l b_j
                    Vec v = zero_vec(f, d * d);
                    for (const auto& s : a->smult[i][k])
                        for (const auto& t : a->smult[l][j]) v[s.k * d + t.k].addmul(s.c, t.c);
                    raw.mult[i * d + j][k * d + l] = std::move(v);
                }
    raw.unit = zero_vec(f, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) raw.unit[i * d + j] = a->unit[i] * a->unit[j];
    auto kron = [&](const Vec& u, const Vec& v) {
        Vec w = zero_vec(f, d * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!u[i].is_zero() && !v[j].is_zero()) w[i * d + j] = u[i] * v[j];
        return w;
    };
    std::vector<Vec> rad;
    for (const auto& r : a->radical)
        for (int i = 0; i < d; ++i) {
            rad.push_back(kron(r, a->basis(i)));
            rad.push_back(kron(a->basis(i), r));
        }
    raw.radical = rad;
    for (const auto& e : a->idempotents)
        for (const auto& g : a->idempotents) raw.idempotents.push_back(kron(e, g));
    if (!a->grading.empty())
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) raw.grading.push_back(a->grading[i] + a->grading[j]);
    auto r = build_algebra(std::move(raw), false);
    auto m = std::const_pointer_cast<Algebra>(r);
    m->env_base = a;
    m->radical_fully_verified = a->radical_fully_verified;
    cache[a.get()] = r;
    return r;
}

std::vector<Vec> center(const Algebra& a) {
    std::vector<Vec> gens = a.generators;
    if (gens.empty()) {
        std::vector<Vec> all;
        for (int i = 0; i < a.dim; ++i) all.push_back(a.basis(i));
        return all;
    }
    Matrix m(a.field, a.dim * static_cast<int>(gens.size()), a.dim);
    for (int j = 0; j < a.dim; ++j) {
        Vec z = a.basis(j);
        for (size_t g = 0; g < gens.size(); ++g) {
            Vec c = sub(a.mul(z, gens[g]), a.mul(gens[g], z));
            for (int i = 0; i < a.dim; ++i) m(static_cast<int>(g) * a.dim + i, j) = c[i];
        }
    }
    return span_of(a.field, a.dim, kernel_basis(m)).rows();
}

AlgebraMorphism AlgebraMorphism::identity(const AlgebraPtr& a) {
    return {a, a, Matrix::identity(a->field, a->dim)};
}

AlgebraMorphism make_morphism(const AlgebraPtr& src, const AlgebraPtr& tgt, const Matrix& m) {
    if (m.rows() != tgt->dim || m.cols() != src->dim) throw Error("ValidationError", "morphism matrix shape");
    AlgebraMorphism f{src, tgt, m};
    if (f.apply(src->unit) != tgt->unit) throw Error("NotMultiplicative", "morphism does not preserve the unit");
    for (int i = 0; i < src->dim; ++i)
        for (int j = 0; j < src->dim; ++j) {
            Vec lhs = f.apply(src->mul(src->basis(i), src->basis(j)));
            Vec rhs = tgt->mul(m.col(i), m.col(j));
            if (lhs != rhs)
                throw Error("NotMultiplicative",
                            "f(" + src->labels[i] + "*" + src->labels[j] + ") != f(" + src->labels[i] + ")f(" +
                                src->labels[j] + ")");
        }
    return f;
}

AlgebraMorphism make_automorphism(const AlgebraPtr& a, const Matrix& m) {
    AlgebraMorphism f = make_morphism(a, a, m);
    if (!invert(m)) throw Error("NotInvertible", "morphism matrix is singular");
    return f;
}

AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g) {
    if (g.target != f.source) throw Error("NotComposable", "morphisms are not composable");
    return {g.source, f.target, f.matrix * g.matrix};
}

AlgebraMorphism inverse(const AlgebraMorphism& f) {
    if (f.source != f.target) throw Error("NotInvertible", "not an endomorphism");
    auto inv = invert(f.matrix);
    if (!inv) throw Error("NotInvertible", "morphism matrix is singular");
    return {f.source, f.source, *inv};
}

AlgebraMorphism power(const AlgebraMorphism& f, long n) {
    if (f.source != f.target) throw Error("NotComposable", "power of a non-endomorphism");
    AlgebraMorphism base = n < 0 ? inverse(f) : f;
    if (n < 0) n = -n;
    AlgebraMorphism r = AlgebraMorphism::identity(f.source);
    while (n) {
        if (n & 1) r.matrix = r.matrix * base.matrix;
        base.matrix = base.matrix * base.matrix;
        n >>= 1;
    }
    return r;
}

AlgebraMorphism env_morphism(const AlgebraPtr& env, const AlgebraMorphism& f, const AlgebraMorphism& g) {
    if (!env->env_base || f.source != env->env_base || g.source != env->env_base)
        throw Error("WrongAlgebra", "morphisms do not live on the base of this enveloping algebra");
    const int d = env->env_base->dim;
    Matrix m(env->field, d * d, d * d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) {
            if (f.matrix(k, i).is_zero()) continue;
            for (int l = 0; l < d; ++l)
                for (int j = 0; j < d; ++j)
                    if (!g.matrix(l, j).is_zero()) m(k * d + l, i * d + j) = f.matrix(k, i) * g.matrix(l, j);
        }
    return {env, env, m};
}

Matrix FrobeniusForm::gram() const {
    const Algebra& a = *algebra;
    Matrix g(a.field, a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Scalar s(a.field);
            for (const auto& t : a.smult[i][j]) s.addmul(t.c, functional[t.k]);
            g(i, j) = s;
        }
    return g;
}

AlgebraMorphism nakayama(const FrobeniusForm& form) {
    const Algebra& a = *form.algebra;
    Matrix g = form.gram();
    if (!invert(g)) throw Error("DegenerateForm", "Frobenius pairing is degenerate");
    // functional(b_c b_x) = functional(nu(b_x) b_c): sum_l v_l g(l, c) = g(c, x)
    Solver sol(g.transpose());
    Matrix nu(a.field, a.dim, a.dim);
    for (int x = 0; x < a.dim; ++x) {
        auto v = sol.solve(g.col(x));
        if (!v) throw Error("DegenerateForm", "Nakayama system unsolvable");
        nu.set_col(x, *v);
    }
    return make_automorphism(form.algebra, nu);
}

FrobeniusForm env_form(const AlgebraPtr& env, const FrobeniusForm& base) {
    if (env->env_base != base.algebra) throw Error("WrongAlgebra", "form is not on the base algebra");
    const int d = base.algebra->dim;
    Vec f = zero_vec(env->field, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f[i * d + j] = base.functional[i] * base.functional[j];
    return {env, f};
}

}  // namespace twc
