#include "twistcoh/resolution.hpp"

#include <algorithm>

namespace twc {

void Resolution::ensure(int n) {
    while (built() < n) {
        const int k = built() + 1;
        Step s = build_term(k);
        terms_.emplace_back(alg, s.types);
        diffs_.push_back(std::move(s.images));
    }
}

const ProjTerm& Resolution::term(int n) {
    ensure(n);
    return terms_[n];
}

const std::vector<Vec>& Resolution::augmentation() {
    ensure(0);
    return diffs_[0];
}

const std::vector<Vec>& Resolution::diff(int n) {
    if (n < 1) throw Error("OutOfRange", "diff index must be >= 1");
    ensure(n);
    return diffs_[n];
}

const Matrix& Resolution::diff_matrix(int n) {
    auto it = mats_.find(n);
    if (it != mats_.end()) return it->second;
    ensure(n);
    const ProjTerm& src = terms_[n];
    Matrix m;
    if (n == 0) {
        if (dense_cap && static_cast<size_t>(target.dim) * src.dim > dense_cap)
            throw Error("SizeCap", kind + ": augmentation matrix exceeds the size cap");
        m = map_matrix(src, diffs_[0], target, nullptr);
    } else {
        const ProjTerm& tgt = terms_[n - 1];
        if (dense_cap && static_cast<size_t>(tgt.dim) * src.dim > dense_cap)
            throw Error("SizeCap", kind + ": differential " + std::to_string(n) + " has " +
                                       std::to_string(static_cast<size_t>(tgt.dim) * src.dim) +
                                       " entries, above the cap of " + std::to_string(dense_cap));
        m = Matrix(alg->field, tgt.dim, src.dim);
        for (int g = 0; g < src.rank(); ++g) {
            const ProjType& pt = src.type_of(g);
            const bool unit_type = pt.dim == alg->dim;
            for (int c = 0; c < pt.dim; ++c) {
                Vec img = unit_type ? tgt.act_basis(pt.pivots[c], diffs_[n][g])
                                    : tgt.act(pt.basis.col(c), diffs_[n][g]);
                m.set_col(src.offset[g] + c, img);
            }
        }
    }
    return mats_.emplace(n, std::move(m)).first->second;
}

const Solver& Resolution::diff_solver(int n) {
    auto it = solvers_.find(n);
    if (it != solvers_.end()) return it->second;
    Solver s(diff_matrix(n));
    return solvers_.emplace(n, std::move(s)).first->second;
}

Vec Resolution::apply_diff(int n, const Vec& p) {
    ensure(n);
    const ProjTerm& src = terms_[n];
    if (n == 0) return eval_on(src, diffs_[0], target, nullptr, p);
    const ProjTerm& tgt = terms_[n - 1];
    Vec out = tgt.zero();
    for (int g = 0; g < src.rank(); ++g) {
        if (src.block_zero(p, g)) continue;
        Vec v = tgt.act(src.block(p, g), diffs_[n][g]);
        for (int i = 0; i < tgt.dim; ++i)
            if (!v[i].is_zero()) out[i] += v[i];
    }
    return out;
}

const EchelonBasis& Resolution::kernel(int n) {
    auto it = kernels_.find(n);
    if (it != kernels_.end()) return it->second;
    const Matrix& m = diff_matrix(n);
    EchelonBasis e(alg->field, m.cols());
    for (const auto& v : kernel_basis(m)) e.insert(v);
    return kernels_.emplace(n, std::move(e)).first->second;
}

Module Resolution::syzygy_module(int n) {
    if (n == 0) return target;
    const EchelonBasis& k = kernel(n - 1);
    Module p = term(n - 1).as_module();
    Module s = submodule(p, k.rows()).module;
    s.name = "Omega^" + std::to_string(n) + "(" + target.name + ")";
    return s;
}

std::vector<int> Resolution::lengths(int upto) {
    std::vector<int> out;
    for (int n = 0; n <= upto; ++n) out.push_back(term(n).dim);
    return out;
}

bool Resolution::is_complex_at(int n) {
    ensure(n + 1);
    for (const auto& img : diffs_[n + 1])
        if (!is_zero(apply_diff(n, img))) return false;
    return true;
}

bool Resolution::exact_at(int n) {
    if (n < 0) return twc::rank(diff_matrix(0)) == target.dim;
    return twc::rank(diff_matrix(n + 1)) == kernel(n).dim();
}

bool Resolution::minimal_at(int n) {
    if (n < 1) return true;
    ensure(n);
    EchelonBasis rad(alg->field, alg->dim);
    for (const auto& r : alg->radical) rad.insert(r);
    const ProjTerm& tgt = terms_[n - 1];
    for (const auto& img : diffs_[n])
        for (int g = 0; g < tgt.rank(); ++g)
            if (!tgt.block_zero(img, g) && !rad.contains(tgt.block(img, g))) return false;
    return true;
}

MinimalResolution::MinimalResolution(AlgebraPtr a, Module t) : Resolution(std::move(a), std::move(t)) {
    kind = "minimal";
    minimal = true;
}

Resolution::Step MinimalResolution::build_term(int n) {
    Step s;
    if (n == 0) {
        std::vector<Vec> basis;
        for (int j = 0; j < target.dim; ++j) basis.push_back(unit_vec(alg->field, target.dim, j));
        CoverChoice c =
            choose_cover(*alg, basis, target.dim, [&](const Vec& l, const Vec& v) { return target.act(l, v); });
        s.types = c.types;
        s.images = c.gens;
        return s;
    }
    const ProjTerm& prev = term(n - 1);
    const EchelonBasis& k = kernel(n - 1);
    CoverChoice c = choose_cover(*alg, k.rows(), prev.dim, [&](const Vec& l, const Vec& v) { return prev.act(l, v); });
    s.types = c.types;
    s.images = c.gens;
    return s;
}

ExplicitResolution::ExplicitResolution(AlgebraPtr a, Module t, std::string kind_name, Builder b)
    : Resolution(std::move(a), std::move(t)), builder_(std::move(b)) {
    kind = std::move(kind_name);
}

Resolution::Step ExplicitResolution::build_term(int n) {
    Step s;
    builder_(n, s.types, s.images, *this);
    return s;
}

ResolutionPtr minimal_resolution(const Module& m, int steps) {
    auto r = std::make_shared<MinimalResolution>(m.alg, m);
    r->ensure(steps);
    return r;
}

std::vector<int> betti_lengths(Resolution& r, int steps) { return r.lengths(steps); }

std::vector<int> betti_ranks(Resolution& r, int steps) {
    std::vector<int> out;
    for (int n = 0; n <= steps; ++n) out.push_back(r.term(n).rank());
    return out;
}

const char* to_string(GrowthVerdict v) {
    switch (v) {
        case GrowthVerdict::EventuallyZero: return "EventuallyZero";
        case GrowthVerdict::Bounded: return "Bounded";
        case GrowthVerdict::PolynomialDegree: return "PolynomialDegree";
        default: return "Inconclusive";
    }
}

GrowthEstimate classify_growth(const std::vector<long>& values, int stride) {
    GrowthEstimate g;
    g.values = values;
    g.stride = stride;
    g.start = 0;
    g.end = static_cast<int>(values.size()) - 1;
    const size_t w = values.size();
    if (w == 0) return g;
    const size_t tail_len = (w + 1) / 2;
    std::vector<long> tail(values.end() - static_cast<long>(tail_len), values.end());
    if (std::all_of(tail.begin(), tail.end(), [](long v) { return v == 0; })) {
        g.verdict = GrowthVerdict::EventuallyZero;
        g.gamma = 0;
        return g;
    }
    const auto [mn, mx] = std::minmax_element(tail.begin(), tail.end());
    if (*mn == *mx) {
        g.verdict = GrowthVerdict::Bounded;
        g.gamma = 1;
        return g;
    }
    // c-th differences; claim degree c only if at least two c-th differences are seen
    std::vector<long> diff = tail;
    for (int c = 1; diff.size() >= 3; ++c) {
        std::vector<long> next;
        for (size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        const bool zero = std::all_of(next.begin(), next.end(), [](long v) { return v == 0; });
        if (zero) {
            g.verdict = GrowthVerdict::PolynomialDegree;
            g.degree = c;
            g.gamma = c;
            return g;
        }
        diff = std::move(next);
    }
    return g;
}

GrowthEstimate complexity(Resolution& r, int t, int window) {
    std::vector<long> vals;
    for (int n = 0; n < window; ++n) vals.push_back(r.term(t * n).dim);
    GrowthEstimate g = classify_growth(vals, t);
    return g;
}

GrowthEstimate complexity(const Module& m, int t, int window) {
    MinimalResolution r(m.alg, m);
    return complexity(r, t, window);
}

std::vector<Module> twisted_syzygy_track(Resolution& r, const AlgebraMorphism& psi, int t, int steps) {
    std::vector<Module> out;
    for (int n = 0; n <= steps; ++n) out.push_back(twist(r.syzygy_module(t * n), psi, n));
    return out;
}

}  // namespace twc
