#include "twistcoh/hochschild.hpp"

#include "twistcoh/qexterior.hpp"

namespace twc {

namespace {

Vec kron(Field f, const Vec& u, const Vec& v) {
    Vec w = zero_vec(f, static_cast<int>(u.size() * v.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!u[i].is_zero() && !v[j].is_zero()) w[i * v.size() + j] = u[i] * v[j];
    return w;
}

size_t ipow(size_t b, int e) {
    size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void require_local_env(const AlgebraPtr& env) {
    if (env->proj_types.size() != 1 || env->proj_types[0].idempotent != env->unit)
        throw Error("Unsupported", "free bimodule terms need a local enveloping algebra");
}

void require_regular_target(const Resolution& r) {
    if (!r.alg->env_base || !(r.target == regular_bimodule(r.alg)))
        throw Error("Unsupported", "expected a bimodule resolution of the algebra itself");
}

// psi with psi (x) 1 equal to the given automorphism of A^e
AlgebraMorphism base_twist(const AlgebraMorphism& big) {
    const AlgebraPtr& env = big.source;
    const AlgebraPtr& a = env->env_base;
    if (!a) throw Error("WrongAlgebra", "not an automorphism of an enveloping algebra");
    const int d = a->dim;
    int u0 = 0;
    while (a->unit[u0].is_zero()) ++u0;
    const Scalar inv = a->unit[u0].inv();
    Matrix m(a->field, d, d);
    for (int i = 0; i < d; ++i) {
        Vec img = big.apply(kron(a->field, a->basis(i), a->unit));
        for (int k = 0; k < d; ++k) m(k, i) = img[k * d + u0] * inv;
    }
    AlgebraMorphism psi{a, a, m};
    if (env_morphism(env, psi, AlgebraMorphism::identity(a)).matrix != big.matrix)
        throw Error("TwistMismatch", "automorphism does not twist only the left action");
    return psi;
}

void require_twist(const ExtClass& eta, const AlgebraMorphism& psi) {
    const AlgebraPtr& env = eta.space->res->alg;
    if (env_morphism(env, psi, AlgebraMorphism::identity(psi.source)).matrix != eta.space->psi.matrix)
        throw Error("TwistMismatch", "class is twisted by a different automorphism");
}

std::vector<Vec> generator_values(const ExtClass& c) {
    std::vector<Vec> v;
    for (int g = 0; g < c.space->res->term(c.degree()).rank(); ++g) v.push_back(c.space->value(c.cocycle, g));
    return v;
}

}  // namespace

// ------------------------------------------------------------------- bar

ResolutionPtr bar_resolution(const AlgebraPtr& a, size_t cap) {
    AlgebraPtr env = enveloping(a);
    require_local_env(env);
    const int d = a->dim;
    const Field f = a->field;
    auto b = [=](int n, std::vector<int>& types, std::vector<Vec>& images, Resolution& self) {
        const size_t gens = ipow(d, n);
        if (cap && gens * ipow(d, n + 1) > cap)
            throw Error("SizeCap", "bar term " + std::to_string(n) + " has " + std::to_string(gens) +
                                       " generators, too many for the configured cap");
        types.assign(gens, 0);
        images.clear();
        if (n == 0) {
            images.push_back(a->unit);
            return;
        }
        const ProjTerm& prev = self.term(n - 1);
        const Vec one_env = kron(f, a->unit, a->unit);
        std::vector<int> digits(n);
        for (size_t idx = 0; idx < gens; ++idx) {
            size_t r = idx;
            for (int i = n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(r % d);
                r /= d;
            }
            auto index_of = [&](const std::vector<int>& ds) {
                size_t k = 0;
                for (int x : ds) k = k * d + x;
                return static_cast<int>(k);
            };
            Vec img = prev.zero();
            std::vector<int> rest(digits.begin() + 1, digits.end());
            axpy(img, Scalar::one(f), prev.embed(index_of(rest), kron(f, a->basis(digits[0]), a->unit)));
            for (int i = 1; i <= n - 1; ++i) {
                const Scalar sgn = i % 2 ? -Scalar::one(f) : Scalar::one(f);
                for (const auto& t : a->smult[digits[i - 1]][digits[i]]) {
                    std::vector<int> ds(digits.begin(), digits.begin() + (i - 1));
                    ds.push_back(t.k);
                    ds.insert(ds.end(), digits.begin() + i + 1, digits.end());
                    axpy(img, sgn * t.c, prev.embed(index_of(ds), one_env));
                }
            }
            std::vector<int> front(digits.begin(), digits.end() - 1);
            const Scalar sgn = n % 2 ? -Scalar::one(f) : Scalar::one(f);
            axpy(img, sgn, prev.embed(index_of(front), kron(f, a->unit, a->basis(digits[n - 1]))));
            images.push_back(std::move(img));
        }
    };
    auto r = std::make_shared<ExplicitResolution>(env, regular_bimodule(env), "bar", b);
    r->dense_cap = cap;
    return r;
}

// ----------------------------------------------------------- P (x)_A M

ResolutionPtr tensor_resolution(const ResolutionPtr& p, const Module& m) {
    require_regular_target(*p);
    require_local_env(p->alg);
    const AlgebraPtr base = p->alg->env_base;
    if (m.alg != base) throw Error("WrongAlgebra", "module is not over the base algebra");
    if (base->proj_types.size() != 1) throw Error("Unsupported", "tensoring down needs a local algebra");
    const int d = base->dim, dm = m.dim;
    const Field f = base->field;
    auto b = [=](int n, std::vector<int>& types, std::vector<Vec>& images, Resolution& self) {
        const ProjTerm& pn = p->term(n);
        types.assign(pn.rank() * dm, 0);
        images.clear();
        if (n == 0) {
            const auto& aug = p->augmentation();
            for (int k = 0; k < pn.rank(); ++k)
                for (int w = 0; w < dm; ++w) images.push_back(m.act(aug[k], unit_vec(f, dm, w)));
            return;
        }
        const ProjTerm& prev = p->term(n - 1);
        const ProjTerm& q = self.term(n - 1);
        const auto& dn = p->diff(n);
        for (int k = 0; k < pn.rank(); ++k)
            for (int w = 0; w < dm; ++w) {
                Vec img = q.zero();
                for (int i = 0; i < prev.rank(); ++i) {
                    if (prev.block_zero(dn[k], i)) continue;
                    const Vec c = prev.block(dn[k], i);
                    for (int w2 = 0; w2 < dm; ++w2) {
                        Vec coeff = zero_vec(f, d);
                        bool any = false;
                        for (int l1 = 0; l1 < d; ++l1)
                            for (int l2 = 0; l2 < d; ++l2) {
                                const Scalar& s = c[l1 * d + l2];
                                if (s.is_zero() || m.action[l2](w2, w).is_zero()) continue;
                                coeff[l1].addmul(s, m.action[l2](w2, w));
                                any = true;
                            }
                        if (any) axpy(img, Scalar::one(f), q.embed(i * dm + w2, coeff));
                    }
                }
                images.push_back(std::move(img));
            }
    };
    return std::make_shared<ExplicitResolution>(base, m, "tensor", b);
}

// ---------------------------------------------------------------- HH

HHMethod parse_method(const std::string& s) {
    if (s == "minimal") return HHMethod::Minimal;
    if (s == "bar") return HHMethod::Bar;
    if (s == "builtin") return HHMethod::Builtin;
    throw Error("BadArgument", "unknown method '" + s + "' (minimal, bar, builtin)");
}

const char* to_string(HHMethod m) {
    switch (m) {
        case HHMethod::Minimal: return "minimal";
        case HHMethod::Bar: return "bar";
        default: return "builtin";
    }
}

ResolutionPtr hh_resolution(const AlgebraPtr& a, HHMethod method) {
    AlgebraPtr env = enveloping(a);
    switch (method) {
        case HHMethod::Minimal: return std::make_shared<MinimalResolution>(env, regular_bimodule(env));
        case HHMethod::Bar: return bar_resolution(a);
        default:
            auto q = detect_qexterior(*a);
            if (!q) throw Error("BuiltinUnavailable", "no built-in resolution for algebra " + a->name);
            return buchweitz_resolution(env, *q);
    }
}

HHSample hh_twisted_on(const ResolutionPtr& res, const AlgebraMorphism& psi, int t, int max_index,
                       bool with_products) {
    require_regular_target(*res);
    HHSample s;
    s.env = res->alg;
    s.alg = s.env->env_base;
    s.psi = psi;
    s.psi_env = env_morphism(s.env, psi, AlgebraMorphism::identity(s.alg));
    s.method = res->kind == "bar" ? HHMethod::Bar : res->kind == "buchweitz" ? HHMethod::Builtin : HHMethod::Minimal;
    s.ring = ring_sample(res, s.psi_env, t, max_index, with_products);
    return s;
}

HHSample hh_twisted(const AlgebraPtr& a, const AlgebraMorphism& psi, int t, int max_index, HHMethod method,
                    bool with_products) {
    return hh_twisted_on(hh_resolution(a, method), psi, t, max_index, with_products);
}

// --------------------------------------------------------- tensor down

ExtClass tensor_down(const ExtClass& eta, const AlgebraMorphism& psi, const ResolutionPtr& res_m) {
    require_twist(eta, psi);
    const ResolutionPtr& p = eta.space->res;
    const Module& m = res_m->target;
    const int n = eta.degree();
    const long pw = eta.power();
    ResolutionPtr q = tensor_resolution(p, m);
    ChainMap h = lift_values(res_m, 0, res_m->augmentation(), q, AlgebraMorphism::identity(m.alg), n);
    const auto fe = generator_values(eta);
    std::vector<Vec> vals;
    for (int k = 0; k < p->term(n).rank(); ++k)
        for (int w = 0; w < m.dim; ++w) vals.push_back(m.act(fe[k], unit_vec(m.field(), m.dim, w)));
    AlgebraMorphism tw = power(psi, -pw);
    const ProjTerm& qn = q->term(n);
    std::vector<Vec> out;
    for (int g = 0; g < res_m->term(n).rank(); ++g) out.push_back(eval_on(qn, vals, m, &tw, h.images[n][g]));
    return class_from_values(ext_space_for(res_m, n, psi, pw, m), out);
}

ExtClass act_right(const ExtClass& zeta, const ExtClass& eta, const AlgebraMorphism& psi) {
    return twisted_product(zeta, tensor_down(eta, psi, zeta.space->res));
}

ExtClass act_left(const ExtClass& eta, const ExtClass& zeta, const AlgebraMorphism& psi, const ResolutionPtr& res_n) {
    return twisted_product(tensor_down(eta, psi, res_n), zeta);
}

// ------------------------------------------------- strong commutativity

ExtClass conjugate_class(const ExtClass& eta, const AlgebraMorphism& psi, long n) {
    require_twist(eta, psi);
    const ResolutionPtr& p = eta.space->res;
    require_regular_target(*p);
    const AlgebraPtr& env = p->alg;
    const int deg = eta.degree();
    const AlgebraMorphism back = power(psi, -n), fwd = power(psi, n);
    // lift psi^{-n} o eps along P; the lift is semilinear for psi^{-n} (x) psi^{-n}
    std::vector<Vec> tops;
    for (const auto& v : p->augmentation()) tops.push_back(back.apply(v));
    ChainMap l = lift_values(p, 0, tops, p, env_morphism(env, back, back), deg);
    const auto fe = generator_values(eta);
    const ProjTerm& pd = p->term(deg);
    std::vector<Vec> vals;
    for (int g = 0; g < pd.rank(); ++g)
        vals.push_back(fwd.apply(eval_on(pd, fe, eta.space->target, &eta.space->theta, l.images[deg][g])));
    return class_from_values(eta.space, vals);
}

bool strong_comm_check(const ExtClass& eta, const AlgebraMorphism& psi, long n) {
    return class_equal(conjugate_class(eta, psi, n), eta);
}

bool bar_criterion_check(const ExtClass& eta, const AlgebraMorphism& psi, long n, size_t cap) {
    require_twist(eta, psi);
    const ResolutionPtr& p = eta.space->res;
    require_regular_target(*p);
    const AlgebraPtr& a = p->alg->env_base;
    const int d = a->dim, deg = eta.degree();
    ResolutionPtr bar = bar_resolution(a, cap);
    ChainMap c = lift_values(bar, 0, bar->augmentation(), p, AlgebraMorphism::identity(p->alg), deg);
    const auto fe = generator_values(eta);
    const ProjTerm& pd = p->term(deg);
    const size_t gens = ipow(d, deg);
    std::vector<Vec> fhat;
    for (size_t g = 0; g < gens; ++g)
        fhat.push_back(eval_on(pd, fe, eta.space->target, &eta.space->theta, c.images[deg][g]));
    const Matrix t = power(psi, -n).matrix;
    // apply t along every tensor factor: lhs[a] = sum_{a'} prod_i t(a'_i, a_i) fhat[a']
    std::vector<Vec> cur = fhat;
    size_t stride = 1;
    for (int mode = deg - 1; mode >= 0; --mode, stride *= d) {
        std::vector<Vec> next(gens, zero_vec(a->field, d));
        for (size_t idx = 0; idx < gens; ++idx) {
            const int ai = static_cast<int>((idx / stride) % d);
            const size_t base = idx - static_cast<size_t>(ai) * stride;
            for (int src = 0; src < d; ++src) {
                const Scalar& s = t(src, ai);
                if (s.is_zero()) continue;
                axpy(next[idx], s, cur[base + static_cast<size_t>(src) * stride]);
            }
        }
        cur = std::move(next);
    }
    const AlgebraMorphism back = power(psi, -n);
    for (size_t g = 0; g < gens; ++g)
        if (cur[g] != back.apply(fhat[g])) return false;
    return true;
}

ExtClass class_power(const ExtClass& eta, int k) {
    if (k < 0) throw Error("OutOfRange", "negative power");
    if (k == 0) return identity_class(eta.space->res, eta.space->psi);
    ExtClass acc = eta;
    for (int i = 1; i < k; ++i) acc = twisted_product(eta, acc);
    return acc;
}

std::vector<ExtClass> sample_generators(const GradedRingSample& s) {
    std::vector<ExtClass> out;
    const Field f = s.res->alg->field;
    for (const auto& c : s.basis[0]) out.push_back(c);
    std::vector<std::vector<Vec>> chosen(s.max_index + 1);
    for (int j = 1; j <= s.max_index; ++j) {
        const int dj = static_cast<int>(s.basis[j].size());
        EchelonBasis dec(f, dj);
        for (int j1 = 1; j1 < j; ++j1) {
            const int j2 = j - j1;
            for (size_t a = 0; a < s.basis[j1].size(); ++a)
                for (size_t b = 0; b < s.basis[j2].size(); ++b)
                    dec.insert(s.product_coords(j1, unit_vec(f, static_cast<int>(s.basis[j1].size()), static_cast<int>(a)),
                                                j2, unit_vec(f, static_cast<int>(s.basis[j2].size()), static_cast<int>(b))));
        }
        for (int i = 0; i < dj; ++i) {
            Vec e = unit_vec(f, dj, i);
            if (!dec.insert(e)) continue;
            out.push_back(s.basis[j][i]);
            // degree-0 multiples of a chosen generator are not new
            for (size_t z = 0; z < s.basis[0].size(); ++z)
                dec.insert(s.product_coords(0, unit_vec(f, static_cast<int>(s.basis[0].size()), static_cast<int>(z)), j, e));
        }
    }
    return out;
}

StrongifyResult strongify(const GradedRingSample& s, int s_max) {
    AlgebraMorphism psi = base_twist(s.psi);
    std::vector<ExtClass> gens = sample_generators(s);
    StrongifyResult r;
    for (int k = 1; k <= s_max; ++k) {
        std::vector<ExtClass> pw;
        bool ok = true;
        for (const auto& g : gens) {
            ExtClass p = class_power(g, k);
            if (!strong_comm_check(p, psi, k)) {
                ok = false;
                break;
            }
            pw.push_back(p);
        }
        if (ok) {
            r.found = true;
            r.s = k;
            r.generators = std::move(pw);
            return r;
        }
    }
    return r;
}

// ------------------------------------------------------------------ K_eta

bool short_exact(const Matrix& inclusion, const Matrix& projection, int dim_l, int dim_m, int dim_r) {
    if (inclusion.rows() != dim_m || inclusion.cols() != dim_l) return false;
    if (projection.rows() != dim_r || projection.cols() != dim_m) return false;
    if (dim_l + dim_r != dim_m) return false;
    if (rank(inclusion) != dim_l || rank(projection) != dim_r) return false;
    return (projection * inclusion).is_zero();
}

KEtaExtension k_eta(const ExtClass& eta) {
    const int n = eta.degree();
    if (n < 1) throw Error("DegreeZero", "K_eta needs a class of positive degree");
    const ResolutionPtr& p = eta.space->res;
    require_regular_target(*p);
    const Module& lam = eta.space->target;
    const Field f = lam.field();
    const Module pt = twist(p->term(n - 1).as_module(), eta.space->psi, eta.power());
    const Module v = direct_sum(lam, pt);
    const auto fe = generator_values(eta);
    const ProjTerm& pn = p->term(n);
    const Solver& sol = p->diff_solver(n);
    const std::vector<Vec>& omega = p->kernel(n - 1).rows();
    std::vector<Vec> rels;
    for (const auto& w : omega) {
        auto pre = sol.solve(w);
        if (!pre) throw Error("LiftFailed", "syzygy element outside the image of the differential");
        Vec fb = eval_on(pn, fe, lam, &eta.space->theta, *pre);
        Vec r = fb;
        for (const auto& x : w) r.push_back(-x);
        rels.push_back(std::move(r));
    }
    Quotient k = quotient(v, rels);
    Quotient right = quotient(pt, omega);
    Matrix into(f, v.dim, lam.dim), sel(f, pt.dim, v.dim);
    for (int i = 0; i < lam.dim; ++i) into(i, i) = Scalar::one(f);
    for (int i = 0; i < pt.dim; ++i) sel(i, lam.dim + i) = Scalar::one(f);
    KEtaExtension out{eta, k.module, right.module, k.projection * into, right.projection * (sel * k.section)};
    out.k_eta.name = "K_eta";
    out.quotient.name = "Omega^" + std::to_string(n - 1);
    out.exact = short_exact(out.inclusion, out.projection, lam.dim, out.k_eta.dim, out.quotient.dim);
    out.maps_are_homomorphisms =
        is_intertwiner(lam, out.k_eta, out.inclusion) && is_intertwiner(out.k_eta, out.quotient, out.projection);
    return out;
}

TensoredSequence tensor_sequence(const KEtaExtension& k, const Module& m) {
    TensorProduct tl = tensor_over_algebra(k.eta.space->target, m);
    TensorProduct tk = tensor_over_algebra(k.k_eta, m);
    TensorProduct tr = tensor_over_algebra(k.quotient, m);
    TensoredSequence s{tl.module, tk.module, tr.module, tensor_map(tl, tk, k.inclusion, m.dim),
                       tensor_map(tk, tr, k.projection, m.dim), false};
    s.exact = short_exact(s.inclusion, s.projection, s.left.dim, s.middle.dim, s.right.dim) &&
              is_intertwiner(s.left, s.middle, s.inclusion) && is_intertwiner(s.middle, s.right, s.projection);
    return s;
}

}  // namespace twc
