#include "twistcoh/ext.hpp"

#include <sstream>

namespace twc {

namespace {

bool same_morphism(const AlgebraMorphism& a, const AlgebraMorphism& b) {
    return a.source == b.source && a.matrix == b.matrix;
}

// columns spanning theta(e) N for the idempotent e of each generator
std::vector<Matrix> value_ranges(const ProjTerm& p, const AlgebraMorphism& theta, const Module& n) {
    std::vector<Matrix> out;
    for (int g = 0; g < p.rank(); ++g) {
        const Vec& e = p.type_of(g).idempotent;
        if (e == p.alg->unit) {
            out.push_back(Matrix::identity(n.field(), n.dim));
            continue;
        }
        Matrix a = n.action_of(theta.apply(e));
        EchelonBasis eb(n.field(), n.dim);
        for (int j = 0; j < n.dim; ++j) eb.insert(a.col(j));
        out.push_back(Matrix::from_cols(n.field(), eb.rows(), n.dim));
    }
    return out;
}

Matrix block_diag(Field f, const std::vector<Matrix>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    Matrix m(f, r, c);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

// cochains on P_{k-1} -> cochains on P_k, (delta f)(h) = f(d h)
Matrix cochain_differential(Resolution& res, int k, const AlgebraMorphism& theta, const Module& n) {
    const ProjTerm& src = res.term(k);
    const ProjTerm& tgt = res.term(k - 1);
    const auto& d = res.diff(k);
    Matrix m(n.field(), src.rank() * n.dim, tgt.rank() * n.dim);
    for (int h = 0; h < src.rank(); ++h)
        for (int g = 0; g < tgt.rank(); ++g) {
            if (tgt.block_zero(d[h], g)) continue;
            Matrix a = n.action_of(theta.apply(tgt.block(d[h], g)));
            for (int i = 0; i < n.dim; ++i)
                for (int j = 0; j < n.dim; ++j) m(h * n.dim + i, g * n.dim + j) = a(i, j);
        }
    return m;
}

}  // namespace

ExtSpace::ExtSpace(ResolutionPtr r, int n, AlgebraMorphism psi_, long power_, Module target_)
    : res(std::move(r)), degree(n), psi(std::move(psi_)), power(power_), target(std::move(target_)) {
    if (target.alg != res->alg) throw Error("WrongAlgebra", "Ext target lives over a different algebra");
    theta = twc::power(psi, -power);
    const Field f = res->alg->field;
    const int nd = target.dim;
    res->ensure(n + 1);
    const ProjTerm& p = res->term(n);
    cochain_dim_ = p.rank() * nd;
    Matrix u = block_diag(f, value_ranges(p, theta, target));
    const size_t out_entries = static_cast<size_t>(res->term(n + 1).rank()) * nd * cochain_dim_;
    if (res->dense_cap && out_entries > res->dense_cap)
        throw Error("SizeCap", res->kind + ": cochain differential in degree " + std::to_string(n) + " has " +
                                   std::to_string(out_entries) + " entries, above the cap of " +
                                   std::to_string(res->dense_cap));
    delta_out_ = cochain_differential(*res, n + 1, theta, target);

    EchelonBasis e(f, cochain_dim_);
    if (n >= 1) {
        Matrix din = cochain_differential(*res, n, theta, target);
        Matrix u_prev = block_diag(f, value_ranges(res->term(n - 1), theta, target));
        Matrix b = din * u_prev;
        for (int j = 0; j < b.cols(); ++j) e.insert(b.col(j));
    }
    std::vector<Vec> bnd = e.rows();
    std::vector<Vec> cocycles;
    for (const auto& k : kernel_basis(delta_out_ * u)) cocycles.push_back(u * k);
    cocycle_dim_ = static_cast<int>(cocycles.size());
    for (const auto& z : cocycles)
        if (e.insert(z)) reps_.push_back(z);
    std::vector<Vec> cols = reps_;
    cols.insert(cols.end(), bnd.begin(), bnd.end());
    coord_solver_ = Solver(Matrix::from_cols(f, cols, cochain_dim_));
}

Vec ExtSpace::value(const Vec& cochain, int g) const {
    const int nd = target.dim;
    return Vec(cochain.begin() + g * nd, cochain.begin() + (g + 1) * nd);
}

Vec ExtSpace::coboundary(const Vec& cochain) const { return delta_out_ * cochain; }

bool ExtSpace::is_cocycle(const Vec& cochain) const {
    return static_cast<int>(cochain.size()) == cochain_dim_ && twc::is_zero(coboundary(cochain));
}

Vec ExtSpace::coords(const Vec& cocycle) const {
    if (!is_cocycle(cocycle)) throw Error("NotCocycle", "cochain is not a cocycle in degree " + std::to_string(degree));
    auto x = coord_solver_.solve(cocycle);
    if (!x) throw Error("NotCocycle", "cochain values violate the idempotent constraints");
    return Vec(x->begin(), x->begin() + dim());
}

Vec ExtSpace::cochain(const Vec& c) const {
    Vec v = zero_vec(res->alg->field, cochain_dim_);
    for (int i = 0; i < dim(); ++i) axpy(v, c[i], reps_[i]);
    return v;
}

bool ExtSpace::compatible(const ExtSpace& o) const {
    return res == o.res && degree == o.degree && theta.matrix == o.theta.matrix && target == o.target;
}

ExtSpacePtr ext_space_for(const ResolutionPtr& res, int degree, const AlgebraMorphism& psi, long power,
                          const Module& target) {
    static std::map<const Resolution*, std::vector<std::weak_ptr<const ExtSpace>>> cache;
    auto& list = cache[res.get()];
    for (auto it = list.begin(); it != list.end();) {
        auto s = it->lock();
        if (!s) {
            it = list.erase(it);
            continue;
        }
        if (s->res == res && s->degree == degree && s->power == power && same_morphism(s->psi, psi) &&
            s->target == target)
            return s;
        ++it;
    }
    auto s = std::make_shared<const ExtSpace>(res, degree, psi, power, target);
    list.push_back(s);
    return s;
}

std::string ExtClass::str() const {
    std::ostringstream os;
    os << "Ext^" << degree() << "[" << power() << "]" << to_string(coords);
    return os.str();
}

ExtClass make_class(const ExtSpacePtr& space, const Vec& cocycle) {
    return ExtClass{space, cocycle, space->coords(cocycle)};
}

ExtClass class_from_coords(const ExtSpacePtr& space, const Vec& coords) {
    return ExtClass{space, space->cochain(coords), coords};
}

ExtClass class_from_values(const ExtSpacePtr& space, const std::vector<Vec>& values) {
    Vec c;
    for (const auto& v : values) c.insert(c.end(), v.begin(), v.end());
    return make_class(space, c);
}

ExtClass zero_class(const ExtSpacePtr& space) {
    const Field f = space->res->alg->field;
    return ExtClass{space, zero_vec(f, space->cochain_dim()), zero_vec(f, space->dim())};
}

static void require_same_space(const ExtClass& a, const ExtClass& b) {
    if (a.space != b.space && !a.space->compatible(*b.space))
        throw Error("SpaceMismatch", "classes live in different Ext spaces");
}

ExtClass add(const ExtClass& a, const ExtClass& b) {
    require_same_space(a, b);
    return ExtClass{a.space, twc::add(a.cocycle, b.cocycle), twc::add(a.coords, b.coords)};
}

ExtClass scale(const Scalar& s, const ExtClass& a) {
    return ExtClass{a.space, twc::scale(s, a.cocycle), twc::scale(s, a.coords)};
}

bool class_equal(const ExtClass& a, const ExtClass& b) {
    require_same_space(a, b);
    return a.coords == b.coords;
}

std::vector<ExtClass> basis(const ExtSpacePtr& space) {
    std::vector<ExtClass> out;
    const Field f = space->res->alg->field;
    for (int i = 0; i < space->dim(); ++i) out.push_back(class_from_coords(space, unit_vec(f, space->dim(), i)));
    return out;
}

std::vector<ExtClass> ext_space(const Module& m, const Module& n, int degree) {
    ResolutionPtr r = minimal_resolution(m, degree + 1);
    return basis(ext_space_for(r, degree, AlgebraMorphism::identity(m.alg), 0, n));
}

ExtSpacePtr twisted_ext_space(const ResolutionPtr& res, const Module& n, const AlgebraMorphism& psi, int t, long j) {
    return ext_space_for(res, static_cast<int>(t * j), psi, j, n);
}

// ---------------------------------------------------------------- lifting

Vec ChainMap::apply(int i, const Vec& p) const {
    const ProjTerm& src = source->term(shift + i);
    const ProjTerm& tgt = target->term(i);
    Vec out = tgt.zero();
    for (int g = 0; g < src.rank(); ++g) {
        if (src.block_zero(p, g)) continue;
        Vec v = tgt.act(twist.apply(src.block(p, g)), images[i][g]);
        for (int k = 0; k < tgt.dim; ++k)
            if (!v[k].is_zero()) out[k] += v[k];
    }
    return out;
}

void extend_chain_map(ChainMap& f, int length) {
    Resolution& src = *f.source;
    Resolution& tgt = *f.target;
    for (int i = f.length() + 1; i <= length; ++i) {
        const ProjTerm& ps = src.term(f.shift + i);
        const ProjTerm& pt = tgt.term(i);
        const Solver& sol = tgt.diff_solver(i);
        std::vector<Vec> imgs;
        for (int g = 0; g < ps.rank(); ++g) {
            Vec w = i == 0 ? f.top_values[g] : f.apply(i - 1, src.diff(f.shift + i)[g]);
            auto z = sol.solve(w);
            if (!z)
                throw Error("LiftFailed", "no lift at step " + std::to_string(i) + " for generator " +
                                              std::to_string(g) + " (" + tgt.kind + " resolution)");
            const Vec& e = ps.type_of(g).idempotent;
            if (e != ps.alg->unit) *z = pt.act(f.twist.apply(e), *z);
            imgs.push_back(std::move(*z));
        }
        f.images.push_back(std::move(imgs));
    }
}

ChainMap lift_values(const ResolutionPtr& source, int shift, const std::vector<Vec>& values,
                     const ResolutionPtr& target, const AlgebraMorphism& twist, int length) {
    ChainMap f{source, target, shift, twist, values, {}};
    extend_chain_map(f, length);
    return f;
}

ChainMap lift_chain_map(const ExtClass& c, int length, ResolutionPtr target) {
    const ExtSpace& s = *c.space;
    if (!target) target = s.res;
    if (!(target->target == s.target))
        throw Error("TargetMismatch", "the lifting resolution does not resolve the class's target");
    std::vector<Vec> values;
    for (int g = 0; g < s.res->term(s.degree).rank(); ++g) values.push_back(s.value(c.cocycle, g));
    return lift_values(s.res, s.degree, values, target, s.theta, length);
}

bool verify_chain_map(const ChainMap& f) {
    Resolution& src = *f.source;
    Resolution& tgt = *f.target;
    for (int i = 0; i <= f.length(); ++i) {
        const ProjTerm& ps = src.term(f.shift + i);
        for (int g = 0; g < ps.rank(); ++g) {
            Vec lhs = tgt.apply_diff(i, f.images[i][g]);
            Vec rhs = i == 0 ? f.top_values[g] : f.apply(i - 1, src.diff(f.shift + i)[g]);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

static ExtClass product_with_lift(const ExtClass& eta, const ExtClass& theta, const ChainMap& lift) {
    const ExtSpace& se = *eta.space;
    const ExtSpace& st = *theta.space;
    const int deg = se.degree + st.degree;
    auto space = ext_space_for(st.res, deg, st.psi, se.power + st.power, se.target);
    const ProjTerm& pe = se.res->term(se.degree);
    std::vector<Vec> fe;
    for (int g = 0; g < pe.rank(); ++g) fe.push_back(se.value(eta.cocycle, g));
    const ProjTerm& ps = st.res->term(deg);
    Vec cochain;
    for (int g = 0; g < ps.rank(); ++g) {
        Vec v = eval_on(pe, fe, se.target, &se.theta, lift.images[se.degree][g]);
        cochain.insert(cochain.end(), v.begin(), v.end());
    }
    return make_class(space, cochain);
}

ExtClass twisted_product(const ExtClass& eta, const ExtClass& theta) {
    const ExtSpace& se = *eta.space;
    const ExtSpace& st = *theta.space;
    if (!same_morphism(se.psi, st.psi)) throw Error("TwistMismatch", "classes are twisted by different automorphisms");
    if (se.power && st.power && se.degree * st.power != st.degree * se.power)
        throw Error("DegreeMismatch", "classes use different strides");
    ChainMap lift = lift_chain_map(theta, se.degree, eta.space->res);
    return product_with_lift(eta, theta, lift);
}

// ------------------------------------------------------------ ring samples

std::vector<int> GradedRingSample::dims() const {
    std::vector<int> d;
    for (const auto& b : basis) d.push_back(static_cast<int>(b.size()));
    return d;
}

ExtClass identity_class(const ResolutionPtr& res, const AlgebraMorphism& psi) {
    return class_from_values(ext_space_for(res, 0, psi, 0, res->target), res->augmentation());
}

ExtClass GradedRingSample::unit() const { return identity_class(res, psi); }

Vec GradedRingSample::product_coords(int j1, const Vec& a, int j2, const Vec& b) const {
    if (j1 + j2 > max_index) throw Error("OutOfWindow", "product beyond the sampled window");
    const Field f = res->alg->field;
    Vec out = zero_vec(f, static_cast<int>(basis[j1 + j2].size()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t k = 0; k < b.size(); ++k) {
            if (b[k].is_zero()) continue;
            const Vec& p = products.at({j1, static_cast<int>(i), j2, static_cast<int>(k)});
            axpy(out, a[i] * b[k], p);
        }
    }
    return out;
}

ExtClass GradedRingSample::product(const ExtClass& a, const ExtClass& b) const {
    const int j1 = static_cast<int>(a.power()), j2 = static_cast<int>(b.power());
    Vec c = product_coords(j1, a.coords, j2, b.coords);
    if (basis[j1 + j2].empty()) return zero_class(ext_space_for(res, t * (j1 + j2), psi, j1 + j2, res->target));
    return class_from_coords(basis[j1 + j2][0].space, c);
}

GradedRingSample ring_sample(const ResolutionPtr& res, const AlgebraMorphism& psi, int t, int max_index,
                             bool with_products) {
    GradedRingSample s;
    s.res = res;
    s.psi = psi;
    s.t = t;
    s.max_index = max_index;
    std::vector<ExtSpacePtr> spaces;
    for (int j = 0; j <= max_index; ++j) {
        spaces.push_back(ext_space_for(res, t * j, psi, j, res->target));
        s.basis.push_back(basis(spaces.back()));
        std::vector<std::string> lab;
        for (size_t a = 0; a < s.basis.back().size(); ++a)
            lab.push_back("e" + std::to_string(t * j) + "_" + std::to_string(a));
        s.labels.push_back(std::move(lab));
    }
    if (!with_products) return s;
    for (int j2 = 0; j2 <= max_index; ++j2)
        for (size_t b = 0; b < s.basis[j2].size(); ++b) {
            const ExtClass& th = s.basis[j2][b];
            ChainMap lift = lift_chain_map(th, t * (max_index - j2), res);
            for (int j1 = 0; j1 + j2 <= max_index; ++j1)
                for (size_t a = 0; a < s.basis[j1].size(); ++a) {
                    ExtClass p = product_with_lift(s.basis[j1][a], th, lift);
                    s.products[{j1, static_cast<int>(a), j2, static_cast<int>(b)}] = p.coords;
                }
        }
    return s;
}

int associativity_violations(const GradedRingSample& s) {
    int bad = 0;
    const int D = s.max_index;
    const Field f = s.res->alg->field;
    for (int j1 = 0; j1 <= D; ++j1)
        for (int j2 = 0; j1 + j2 <= D; ++j2)
            for (int j3 = 0; j1 + j2 + j3 <= D; ++j3)
                for (size_t a = 0; a < s.basis[j1].size(); ++a)
                    for (size_t b = 0; b < s.basis[j2].size(); ++b)
                        for (size_t c = 0; c < s.basis[j3].size(); ++c) {
                            Vec ea = unit_vec(f, static_cast<int>(s.basis[j1].size()), static_cast<int>(a));
                            Vec eb = unit_vec(f, static_cast<int>(s.basis[j2].size()), static_cast<int>(b));
                            Vec ec = unit_vec(f, static_cast<int>(s.basis[j3].size()), static_cast<int>(c));
                            Vec lhs = s.product_coords(j1 + j2, s.product_coords(j1, ea, j2, eb), j3, ec);
                            Vec rhs = s.product_coords(j1, ea, j2 + j3, s.product_coords(j2, eb, j3, ec));
                            if (lhs != rhs) ++bad;
                        }
    return bad;
}

}  // namespace twc
