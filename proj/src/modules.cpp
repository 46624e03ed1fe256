#include "twistcoh/modules.hpp"

#include <algorithm>
#include <random>

namespace twc {

Module::Module(AlgebraPtr a, int m, std::vector<Matrix> act, std::string nm)
    : alg(std::move(a)), dim(m), action(std::move(act)), name(std::move(nm)) {}

Matrix Module::action_of(const Vec& lambda) const {
    Matrix r(field(), dim, dim);
    for (int i = 0; i < alg->dim; ++i)
        if (!lambda[i].is_zero()) r.add_scaled(lambda[i], action[i]);
    return r;
}

Vec Module::act(const Vec& lambda, const Vec& v) const {
    Vec r = zero_vec(field(), dim);
    for (int i = 0; i < alg->dim; ++i) {
        if (lambda[i].is_zero()) continue;
        const Matrix& a = action[i];
        for (int c = 0; c < dim; ++c) {
            if (v[c].is_zero()) continue;
            Scalar s = lambda[i] * v[c];
            for (int r0 = 0; r0 < dim; ++r0)
                if (!a(r0, c).is_zero()) r[r0].addmul(s, a(r0, c));
        }
    }
    return r;
}

Vec Module::act_basis(int i, const Vec& v) const { return action[i] * v; }

void Module::validate() const {
    if (static_cast<int>(action.size()) != alg->dim)
        throw Error("ValidationError", "module " + name + ": need one action matrix per basis element");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw Error("ValidationError", "module " + name + ": action matrix has the wrong shape");
    if (!action_of(alg->unit).is_identity())
        throw Error("ValidationError", "module " + name + ": unit does not act as the identity");
    for (int i = 0; i < alg->dim; ++i)
        for (int j = 0; j < alg->dim; ++j) {
            Matrix lhs = action[i] * action[j];
            Matrix rhs(field(), dim, dim);
            for (const auto& t : alg->smult[i][j]) rhs.add_scaled(t.c, action[t.k]);
            if (lhs != rhs)
                throw Error("ValidationError", "module " + name + ": action of " + alg->labels[i] + "*" +
                                                   alg->labels[j] + " is not the product of the actions");
        }
}

bool ModuleMap::intertwines() const { return is_intertwiner(*source, *target, matrix); }

Module zero_module(const AlgebraPtr& a) {
    return Module(a, 0, std::vector<Matrix>(a->dim, Matrix(a->field, 0, 0)), "0");
}

Module regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> act;
    for (int i = 0; i < a->dim; ++i) act.push_back(a->left_mult_basis(i));
    return Module(a, a->dim, std::move(act), a->name);
}

Module regular_bimodule(const AlgebraPtr& env) {
    if (!env->env_base) throw Error("WrongAlgebra", "regular_bimodule needs an enveloping algebra");
    const Algebra& a = *env->env_base;
    const int d = a.dim;
    std::vector<Matrix> L, R;
    for (int i = 0; i < d; ++i) {
        L.push_back(a.left_mult_basis(i));
        R.push_back(a.right_mult(a.basis(i)));
    }
    std::vector<Matrix> act;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) act.push_back(L[i] * R[j]);
    return Module(env, d, std::move(act), a.name);
}

Module direct_sum(const Module& m, const Module& n) {
    if (m.alg != n.alg) throw Error("WrongAlgebra", "direct sum over different algebras");
    std::vector<Matrix> act;
    for (int i = 0; i < m.alg->dim; ++i) {
        Matrix a(m.field(), m.dim + n.dim, m.dim + n.dim);
        for (int r = 0; r < m.dim; ++r)
            for (int c = 0; c < m.dim; ++c) a(r, c) = m.action[i](r, c);
        for (int r = 0; r < n.dim; ++r)
            for (int c = 0; c < n.dim; ++c) a(m.dim + r, m.dim + c) = n.action[i](r, c);
        act.push_back(std::move(a));
    }
    return Module(m.alg, m.dim + n.dim, std::move(act), m.name + "+" + n.name);
}

Module twist_by(const Module& m, const AlgebraMorphism& phi) {
    if (phi.source != m.alg || phi.target != m.alg) throw Error("NotAutomorphism", "twist by a foreign morphism");
    std::vector<Matrix> act;
    for (int i = 0; i < m.alg->dim; ++i) act.push_back(m.action_of(phi.matrix.col(i)));
    return Module(m.alg, m.dim, std::move(act), m.name);
}

Module twist(const Module& m, const AlgebraMorphism& phi, long n) {
    if (n == 0) return m;
    return twist_by(m, power(phi, n));
}

Module bimodule_twist(const Module& b, const AlgebraMorphism& left, long a, const AlgebraMorphism& right, long c) {
    if (!b.alg->env_base) throw Error("WrongAlgebra", "bimodule_twist needs a module over an enveloping algebra");
    return twist_by(b, env_morphism(b.alg, power(left, a), power(right, c)));
}

namespace {

Vec kron(Field f, const Vec& u, const Vec& v) {
    Vec w = zero_vec(f, static_cast<int>(u.size() * v.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!u[i].is_zero() && !v[j].is_zero()) w[i * v.size() + j] = u[i] * v[j];
    return w;
}

}  // namespace

Module restrict_left(const Module& b) {
    const AlgebraPtr& base = b.alg->env_base;
    if (!base) throw Error("WrongAlgebra", "restrict_left needs a bimodule");
    std::vector<Matrix> act;
    for (int i = 0; i < base->dim; ++i) act.push_back(b.action_of(kron(b.field(), base->basis(i), base->unit)));
    return Module(base, b.dim, std::move(act), b.name);
}

Module restrict_right(const Module& b) {
    const AlgebraPtr& base = b.alg->env_base;
    if (!base) throw Error("WrongAlgebra", "restrict_right needs a bimodule");
    AlgebraPtr op = opposite(base);
    std::vector<Matrix> act;
    for (int i = 0; i < base->dim; ++i) act.push_back(b.action_of(kron(b.field(), base->unit, base->basis(i))));
    return Module(op, b.dim, std::move(act), b.name);
}

Submodule submodule(const Module& m, const std::vector<Vec>& span) {
    EchelonBasis e(m.field(), m.dim);
    for (const auto& v : span) e.insert(v);
    const int k = e.dim();
    std::vector<Matrix> act;
    for (int i = 0; i < m.alg->dim; ++i) {
        Matrix a(m.field(), k, k);
        for (int c = 0; c < k; ++c) {
            Vec img = m.action[i] * e.rows()[c];
            if (!e.contains(img)) throw Error("NotSubmodule", "span is not invariant under the action");
            a.set_col(c, e.coords(img));
        }
        act.push_back(std::move(a));
    }
    return {Module(m.alg, k, std::move(act), m.name), e.as_columns()};
}

Quotient quotient(const Module& m, const std::vector<Vec>& span) {
    EchelonBasis e(m.field(), m.dim);
    for (const auto& v : span) e.insert(v);
    std::vector<char> piv(m.dim, 0);
    for (int p : e.pivots()) piv[p] = 1;
    std::vector<int> freec;
    for (int j = 0; j < m.dim; ++j)
        if (!piv[j]) freec.push_back(j);
    const int k = static_cast<int>(freec.size());
    Matrix proj(m.field(), k, m.dim), sec(m.field(), m.dim, k);
    for (int j = 0; j < m.dim; ++j) {
        Vec r = e.reduce(unit_vec(m.field(), m.dim, j));
        for (int i = 0; i < k; ++i) proj(i, j) = r[freec[i]];
    }
    for (int i = 0; i < k; ++i) sec(freec[i], i) = Scalar::one(m.field());
    std::vector<Matrix> act;
    for (int i = 0; i < m.alg->dim; ++i) act.push_back(proj * (m.action[i] * sec));
    return {Module(m.alg, k, std::move(act), m.name), proj, sec};
}

// ---------------------------------------------------------------- ProjTerm

ProjTerm::ProjTerm(AlgebraPtr a, std::vector<int> t) : alg(std::move(a)), types(std::move(t)) {
    if (alg->proj_types.empty() && !types.empty())
        throw Error("NeedIdempotents", "algebra " + alg->name + " is not local and has no idempotent data");
    for (int ty : types) {
        offset.push_back(dim);
        dim += alg->proj_types[ty].dim;
    }
}

Vec ProjTerm::act(const Vec& lambda, const Vec& p) const {
    Vec out = zero();
    for (int g = 0; g < rank(); ++g) {
        const ProjType& pt = type_of(g);
        const int off = offset[g];
        for (int c = 0; c < pt.dim; ++c) {
            const Scalar& pc = p[off + c];
            if (pc.is_zero()) continue;
            for (int i = 0; i < alg->dim; ++i) {
                if (lambda[i].is_zero()) continue;
                const auto& col = pt.action[i].col[c];
                if (col.empty()) continue;
                Scalar s = lambda[i] * pc;
                for (const auto& t : col) out[off + t.k].addmul(s, t.c);
            }
        }
    }
    return out;
}

Vec ProjTerm::act_basis(int i, const Vec& p) const {
    Vec out = zero();
    for (int g = 0; g < rank(); ++g) {
        const ProjType& pt = type_of(g);
        const int off = offset[g];
        for (int c = 0; c < pt.dim; ++c) {
            const Scalar& pc = p[off + c];
            if (pc.is_zero()) continue;
            for (const auto& t : pt.action[i].col[c]) out[off + t.k].addmul(pc, t.c);
        }
    }
    return out;
}

Vec ProjTerm::embed(int g, const Vec& a) const {
    Vec out = zero();
    const ProjType& pt = type_of(g);
    for (int c = 0; c < pt.dim; ++c) out[offset[g] + c] = a[pt.pivots[c]];
    return out;
}

Vec ProjTerm::generator(int g) const { return embed(g, type_of(g).idempotent); }

Vec ProjTerm::block(const Vec& p, int g) const {
    const ProjType& pt = type_of(g);
    Vec a = zero_vec(alg->field, alg->dim);
    for (int c = 0; c < pt.dim; ++c) {
        const Scalar& pc = p[offset[g] + c];
        if (pc.is_zero()) continue;
        for (int i = 0; i < alg->dim; ++i)
            if (!pt.basis(i, c).is_zero()) a[i].addmul(pc, pt.basis(i, c));
    }
    return a;
}

bool ProjTerm::block_zero(const Vec& p, int g) const {
    for (int c = 0; c < type_of(g).dim; ++c)
        if (!p[offset[g] + c].is_zero()) return false;
    return true;
}

Module ProjTerm::as_module() const {
    std::vector<Matrix> act;
    for (int i = 0; i < alg->dim; ++i) {
        Matrix m(alg->field, dim, dim);
        for (int g = 0; g < rank(); ++g) {
            const ProjType& pt = type_of(g);
            for (int c = 0; c < pt.dim; ++c)
                for (const auto& t : pt.action[i].col[c]) m(offset[g] + t.k, offset[g] + c) = t.c;
        }
        act.push_back(std::move(m));
    }
    return Module(alg, dim, std::move(act), "P");
}

Vec eval_on(const ProjTerm& p, const std::vector<Vec>& images, const Module& n, const AlgebraMorphism* theta,
            const Vec& elem) {
    Vec out = zero_vec(n.field(), n.dim);
    for (int g = 0; g < p.rank(); ++g) {
        if (p.block_zero(elem, g)) continue;
        Vec a = p.block(elem, g);
        if (theta) a = theta->apply(a);
        Vec v = n.act(a, images[g]);
        for (int i = 0; i < n.dim; ++i) out[i] += v[i];
    }
    return out;
}

Matrix map_matrix(const ProjTerm& p, const std::vector<Vec>& images, const Module& n, const AlgebraMorphism* theta) {
    Matrix m(n.field(), n.dim, p.dim);
    for (int g = 0; g < p.rank(); ++g) {
        const ProjType& pt = p.type_of(g);
        for (int c = 0; c < pt.dim; ++c) {
            Vec a = pt.basis.col(c);
            if (theta) a = theta->apply(a);
            m.set_col(p.offset[g] + c, n.act(a, images[g]));
        }
    }
    return m;
}

CoverChoice choose_cover(const Algebra& a, const std::vector<Vec>& w, int ambient, const ActFn& act) {
    CoverChoice out;
    if (w.empty()) return out;
    if (a.proj_types.empty())
        throw Error("NeedIdempotents", "algebra " + a.name + " is not local and has no idempotent data");
    EchelonBasis span(a.field, ambient);
    for (const auto& v : w)
        for (const auto& s : a.rad_generators) span.insert(act(s, v));
    const bool unit_only = a.proj_types.size() == 1 && a.proj_types[0].idempotent == a.unit;
    for (size_t t = 0; t < a.proj_types.size(); ++t) {
        const Vec& e = a.proj_types[t].idempotent;
        for (const auto& v : w) {
            Vec ev = unit_only ? v : act(e, v);
            if (span.insert(ev)) {
                out.types.push_back(static_cast<int>(t));
                out.gens.push_back(ev);
            }
        }
    }
    return out;
}

Top top(const Module& m) {
    std::vector<Vec> rad;
    for (const auto& s : m.alg->rad_generators) {
        Matrix a = m.action_of(s);
        for (int j = 0; j < m.dim; ++j) rad.push_back(a.col(j));
    }
    Quotient q = quotient(m, rad);
    return {q.module, q.projection};
}

Submodule radical_submodule(const Module& m) {
    std::vector<Vec> rad;
    for (const auto& s : m.alg->rad_generators) {
        Matrix a = m.action_of(s);
        for (int j = 0; j < m.dim; ++j) rad.push_back(a.col(j));
    }
    return submodule(m, rad);
}

Cover projective_cover(const Module& m) {
    std::vector<Vec> basis;
    for (int j = 0; j < m.dim; ++j) basis.push_back(unit_vec(m.field(), m.dim, j));
    CoverChoice ch = choose_cover(*m.alg, basis, m.dim, [&](const Vec& l, const Vec& v) { return m.act(l, v); });
    ProjTerm term(m.alg, ch.types);
    Module p = term.as_module();
    Matrix f = map_matrix(term, ch.gens, m, nullptr);
    auto ps = std::make_shared<const Module>(p);
    auto ms = std::make_shared<const Module>(m);
    return {term, p, ch.gens, ModuleMap{ps, ms, f}};
}

Module syzygy(const Module& m) {
    Cover c = projective_cover(m);
    return submodule(c.projective, kernel_basis(c.map.matrix)).module;
}

Module syzygy(const Module& m, int n) {
    Module r = m;
    for (int i = 0; i < n; ++i) r = syzygy(r);
    return r;
}

bool is_intertwiner(const Module& m, const Module& n, const Matrix& f) {
    if (m.alg != n.alg || f.rows() != n.dim || f.cols() != m.dim) return false;
    for (const auto& g : m.alg->generators)
        if (f * m.action_of(g) != n.action_of(g) * f) return false;
    return true;
}

namespace {

std::vector<Matrix> hom_direct(const Module& m, const Module& n) {
    const int a = n.dim, b = m.dim;
    const auto& gens = m.alg->generators;
    // unknown f(r, c) at index c * a + r
    Matrix sys(m.field(), static_cast<int>(gens.size()) * a * b, a * b);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        Matrix mg = m.action_of(gens[gi]), ng = n.action_of(gens[gi]);
        const int base = static_cast<int>(gi) * a * b;
        for (int r = 0; r < a; ++r)
            for (int c = 0; c < b; ++c) {
                const int row = base + c * a + r;
                for (int k = 0; k < b; ++k)
                    if (!mg(k, c).is_zero()) sys(row, k * a + r) += mg(k, c);
                for (int k = 0; k < a; ++k)
                    if (!ng(r, k).is_zero()) sys(row, c * a + k) -= ng(r, k);
            }
    }
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(sys)) {
        Matrix f(m.field(), a, b);
        for (int r = 0; r < a; ++r)
            for (int c = 0; c < b; ++c) f(r, c) = v[c * a + r];
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<Matrix> hom_basis(const Module& m, const Module& n) {
    if (m.alg != n.alg) throw Error("WrongAlgebra", "hom between modules over different algebras");
    if (m.dim == 0 || n.dim == 0) return {};
    if (m.alg->proj_types.empty()) return hom_direct(m, n);
    const Field f = m.field();
    // Hom(M, N) as the kernel of Hom(P0, N) -> Hom(P1, N) on a presentation
    Cover c = projective_cover(m);
    const ProjTerm& p0 = c.term;
    const Matrix& eps = c.map.matrix;
    std::vector<Vec> ker = kernel_basis(eps);
    CoverChoice rel = choose_cover(*m.alg, ker, p0.dim, [&](const Vec& l, const Vec& v) { return p0.act(l, v); });
    std::vector<Matrix> U;
    int nu = 0;
    for (int g = 0; g < p0.rank(); ++g) {
        const Vec& e = p0.type_of(g).idempotent;
        if (e == m.alg->unit) {
            U.push_back(Matrix::identity(f, n.dim));
        } else {
            Matrix a = n.action_of(e);
            EchelonBasis eb(f, n.dim);
            for (int j = 0; j < n.dim; ++j) eb.insert(a.col(j));
            U.push_back(Matrix::from_cols(f, eb.rows(), n.dim));
        }
        nu += U.back().cols();
    }
    Matrix sys(f, static_cast<int>(rel.gens.size()) * n.dim, nu);
    for (size_t r = 0; r < rel.gens.size(); ++r) {
        int col = 0;
        for (int g = 0; g < p0.rank(); ++g) {
            if (!p0.block_zero(rel.gens[r], g)) {
                Matrix blk = n.action_of(p0.block(rel.gens[r], g)) * U[g];
                for (int i = 0; i < n.dim; ++i)
                    for (int j = 0; j < blk.cols(); ++j) sys(static_cast<int>(r) * n.dim + i, col + j) = blk(i, j);
            }
            col += U[g].cols();
        }
    }
    Solver pre(eps);
    std::vector<Vec> lifts;
    for (int j = 0; j < m.dim; ++j) lifts.push_back(*pre.solve(unit_vec(f, m.dim, j)));
    std::vector<Matrix> out;
    for (const auto& sol : kernel_basis(sys)) {
        std::vector<Vec> imgs;
        int col = 0;
        for (int g = 0; g < p0.rank(); ++g) {
            Vec u(sol.begin() + col, sol.begin() + col + U[g].cols());
            imgs.push_back(U[g] * u);
            col += U[g].cols();
        }
        Matrix fm(f, n.dim, m.dim);
        for (int j = 0; j < m.dim; ++j) fm.set_col(j, eval_on(p0, imgs, n, nullptr, lifts[j]));
        out.push_back(std::move(fm));
    }
    return out;
}

TensorProduct tensor_over_algebra(const Module& b, const Module& m) {
    const AlgebraPtr& base = b.alg->env_base;
    if (!base || base != m.alg) throw Error("WrongAlgebra", "tensor_over_algebra needs a bimodule over M's algebra");
    const Field f = m.field();
    const int nb = b.dim, nm = m.dim, n = nb * nm;
    EchelonBasis rel(f, n);
    for (const auto& g : base->generators) {
        Matrix br = b.action_of(kron(f, base->unit, g));
        Matrix mg = m.action_of(g);
        for (int bi = 0; bi < nb; ++bi)
            for (int w = 0; w < nm; ++w) {
                Vec v = zero_vec(f, n);
                for (int r = 0; r < nb; ++r)
                    if (!br(r, bi).is_zero()) v[r * nm + w] += br(r, bi);
                for (int r = 0; r < nm; ++r)
                    if (!mg(r, w).is_zero()) v[bi * nm + r] -= mg(r, w);
                rel.insert(v);
            }
    }
    std::vector<char> piv(n, 0);
    for (int p : rel.pivots()) piv[p] = 1;
    std::vector<int> freec;
    for (int j = 0; j < n; ++j)
        if (!piv[j]) freec.push_back(j);
    const int k = static_cast<int>(freec.size());
    Matrix proj(f, k, n), sec(f, n, k);
    for (int j = 0; j < n; ++j) {
        Vec r = rel.reduce(unit_vec(f, n, j));
        for (int i = 0; i < k; ++i) proj(i, j) = r[freec[i]];
    }
    for (int i = 0; i < k; ++i) sec(freec[i], i) = Scalar::one(f);
    std::vector<Matrix> act;
    for (int i = 0; i < base->dim; ++i) {
        Matrix bl = b.action_of(kron(f, base->basis(i), base->unit));
        // (bl (x) 1) restricted to the free coordinates, then projected
        Matrix a(f, k, k);
        for (int c = 0; c < k; ++c) {
            const int bi = freec[c] / nm, w = freec[c] % nm;
            Vec img = zero_vec(f, n);
            for (int r = 0; r < nb; ++r)
                if (!bl(r, bi).is_zero()) img[r * nm + w] = bl(r, bi);
            a.set_col(c, proj * img);
        }
        act.push_back(std::move(a));
    }
    return {Module(base, k, std::move(act), b.name + "(x)" + m.name), proj, sec};
}

Matrix tensor_map(const TensorProduct& src, const TensorProduct& tgt, const Matrix& fmap, int dim_m) {
    const Field f = fmap.field();
    const int nb = fmap.cols(), nb2 = fmap.rows();
    Matrix big(f, nb2 * dim_m, nb * dim_m);
    for (int r = 0; r < nb2; ++r)
        for (int c = 0; c < nb; ++c)
            if (!fmap(r, c).is_zero())
                for (int w = 0; w < dim_m; ++w) big(r * dim_m + w, c * dim_m + w) = fmap(r, c);
    return tgt.projection * (big * src.section);
}

// ------------------------------------------------------------- isomorphism

bool verify_iso_certificate(const Module& m, const Module& n, const Matrix& f) {
    if (m.dim != n.dim || f.rows() != n.dim || f.cols() != m.dim) return false;
    if (!is_intertwiner(m, n, f)) return false;
    auto inv = invert(f);
    return inv && (f * *inv).is_identity();
}

const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "Isomorphic";
        case IsoVerdict::NotIsomorphic: return "NotIsomorphic";
        default: return "Inconclusive";
    }
}

IsoResult is_isomorphic(const Module& m, const Module& n, const IsoOptions& opt) {
    IsoResult res;
    if (m.alg != n.alg) throw Error("WrongAlgebra", "is_isomorphic over different algebras");
    if (m.dim != n.dim) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "dimensions differ (" + std::to_string(m.dim) + " vs " + std::to_string(n.dim) + ")";
        return res;
    }
    const Field f = m.field();
    if (m.dim == 0) {
        res.verdict = IsoVerdict::Isomorphic;
        res.certificate = Matrix(f, 0, 0);
        res.reason = "zero modules";
        return res;
    }
    const int tm = top(m).module.dim, tn = top(n).module.dim;
    if (tm != tn) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "tops differ in dimension";
        return res;
    }
    std::vector<Matrix> hmn = hom_basis(m, n);
    std::vector<Matrix> hnm = hom_basis(n, m);
    if (hmn.size() != hnm.size()) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "dim Hom(M,N) = " + std::to_string(hmn.size()) + " but dim Hom(N,M) = " +
                     std::to_string(hnm.size());
        return res;
    }
    const size_t em = hom_basis(m, m).size(), en = hom_basis(n, n).size();
    if (em != en || hmn.size() != em) {
        res.verdict = IsoVerdict::NotIsomorphic;
        res.reason = "dim End(M) = " + std::to_string(em) + ", dim End(N) = " + std::to_string(en) +
                     ", dim Hom(M,N) = " + std::to_string(hmn.size());
        return res;
    }
    const int h = static_cast<int>(hmn.size());
    auto combo = [&](const std::vector<long>& c) {
        Matrix g(f, n.dim, m.dim);
        for (int i = 0; i < h; ++i)
            if (c[i]) g.add_scaled(Scalar(f, c[i]), hmn[i]);
        return g;
    };
    auto try_combo = [&](const std::vector<long>& c) {
        Matrix g = combo(c);
        if (rank(g) == m.dim && verify_iso_certificate(m, n, g)) {
            res.verdict = IsoVerdict::Isomorphic;
            res.certificate = g;
            return true;
        }
        return false;
    };
    int tried = 0;
    for (int i = 0; i < h; ++i) {
        std::vector<long> c(h, 0);
        c[i] = 1;
        ++tried;
        if (try_combo(c)) return res.reason = "basis element", res;
    }
    for (long box = 1; box <= 3 && tried < opt.box_cap; ++box) {
        std::vector<long> c(h, -box);
        while (tried < opt.box_cap) {
            long mx = 0;
            for (long v : c) mx = std::max(mx, v < 0 ? -v : v);
            if (mx == box) {
                ++tried;
                if (try_combo(c)) return res.reason = "box search", res;
            }
            int pos = 0;
            while (pos < h && c[pos] == box) c[pos++] = -box;
            if (pos == h) break;
            ++c[pos];
        }
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> dist(-10, 10);
    for (int t = 0; t < opt.random_trials; ++t) {
        std::vector<long> c(h);
        for (auto& v : c) v = dist(rng);
        if (try_combo(c)) return res.reason = "random search", res;
    }
    res.verdict = IsoVerdict::Inconclusive;
    res.reason = "no invertible homomorphism found among " + std::to_string(tried + opt.random_trials) + " candidates";
    return res;
}

}  // namespace twc
