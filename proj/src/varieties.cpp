#include "twistcoh/varieties.hpp"

#include <algorithm>

namespace twc {

const char* to_string(FgVerdict v) {
    switch (v) {
        case FgVerdict::PassEvidence: return "PassEvidence";
        case FgVerdict::FailWitness: return "FailWitness";
        case FgVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

Module simple_top(const AlgebraPtr& a) { return top(regular_module(a)).module; }

// columns = coordinates of g . zeta for the basis zeta of the source space
Matrix action_matrix(const std::vector<ExtClass>& src, const ExtClass& tg, const ExtSpacePtr& dst) {
    Matrix out(dst->res->alg->field, dst->dim(), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        ExtClass p = twisted_product(src[c], tg);
        if (p.space != dst) throw Error("SpaceMismatch", "action landed outside the sampled space");
        out.set_col(static_cast<int>(c), p.coords);
    }
    return out;
}

}  // namespace

FgEvidence fg_check(const Module& m, const std::vector<ExtClass>& gens, const AlgebraMorphism& psi, int t, int D) {
    if (t < 1) throw Error("OutOfRange", "t must be positive");
    FgEvidence ev;
    ev.module = m;
    ev.psi = psi;
    ev.t = t;
    ev.window = D;
    const Field f = m.field();
    const int J = D / t;
    ResolutionPtr res = minimal_resolution(m, J * t + 1);
    const Module k = simple_top(m.alg);

    std::vector<ExtSpacePtr> spaces;
    std::vector<std::vector<ExtClass>> bases;
    for (int j = 0; j <= J; ++j) {
        spaces.push_back(twisted_ext_space(res, k, psi, t, j));
        bases.push_back(basis(spaces.back()));
        ev.ext_dims.push_back(spaces.back()->dim());
    }

    // positive-degree generators, carried down to M
    struct Gen {
        int index;
        ExtClass down;
    };
    std::vector<Gen> active;
    for (const auto& g : gens) {
        if (g.degree() % t != 0 || g.degree() != t * g.power())
            throw Error("DegreeMismatch", "generator degree is not t times its twist power");
        ev.generator_degrees.push_back(g.degree());
        if (g.degree() == 0) continue;
        active.push_back({static_cast<int>(g.power()), tensor_down(g, psi, res)});
    }
    int h = 1;
    for (const auto& g : active) h = std::max(h, g.index);

    // act[a][j]: E_j -> E_{j + index_a}
    std::vector<std::vector<Matrix>> act(active.size());
    for (size_t a = 0; a < active.size(); ++a)
        for (int j = 0; j + active[a].index <= J; ++j)
            act[a].push_back(action_matrix(bases[j], active[a].down, spaces[j + active[a].index]));

    std::vector<EchelonBasis> image;
    for (int j = 0; j <= J; ++j) {
        EchelonBasis span(f, ev.ext_dims[j]);
        for (size_t a = 0; a < active.size(); ++a) {
            const int src = j - active[a].index;
            if (src < 0) continue;
            for (int c = 0; c < act[a][src].cols(); ++c) span.insert(act[a][src].col(c));
        }
        ev.new_generators.push_back(ev.ext_dims[j] - span.dim());
        image.push_back(std::move(span));
    }

    int reach = J + 1;
    while (reach > 0 && ev.new_generators[reach - 1] == 0) --reach;
    ev.generated_up_to = reach <= J ? t * reach : -1;

    auto injective_at = [&](int j) {
        for (size_t a = 0; a < active.size(); ++a)
            if (j < static_cast<int>(act[a].size()) && rank(act[a][j]) != act[a][j].cols()) return false;
        return true;
    };
    if (!active.empty()) {
        int inj = J + 1;
        while (inj > 0 && injective_at(inj - 1)) --inj;
        int min_index = J + 1;
        for (const auto& g : active) min_index = std::min(min_index, g.index);
        if (inj + min_index <= J) ev.action_injective_from = t * inj;
    }

    bool positive_ext = false;
    for (int j = 1; j <= J; ++j) positive_ext = positive_ext || ev.ext_dims[j] > 0;
    if (!positive_ext) {
        ev.verdict = FgVerdict::PassEvidence;
        ev.generated_up_to = t;
        ev.note = "positive-degree Ext vanishes on the window";
        return ev;
    }
    if (J < h + 1) {
        ev.note = "window too small for the generator degrees";
        return ev;
    }

    bool tail_reached = true, tail_unreached = true;
    for (int j = h; j <= J; ++j) {
        tail_reached = tail_reached && ev.new_generators[j] == 0;
        tail_unreached = tail_unreached && ev.new_generators[j] > 0;
    }
    if (tail_reached && ev.action_injective_from) {
        ev.verdict = FgVerdict::PassEvidence;
        return ev;
    }
    if (!tail_unreached) {
        ev.note = tail_reached ? "action not injective on the tail" : "new generators appear intermittently";
        return ev;
    }

    ev.verdict = FgVerdict::FailWitness;
    // prefer a class killed by every generator while the target degrees persist
    for (int j = 0; j <= J && !ev.witness; ++j) {
        if (ev.ext_dims[j] == 0) continue;
        std::vector<Vec> rows;
        int transition = -1;
        for (size_t a = 0; a < active.size(); ++a) {
            if (j >= static_cast<int>(act[a].size())) continue;
            if (ev.ext_dims[j + active[a].index] == 0) continue;
            for (int r = 0; r < act[a][j].rows(); ++r) rows.push_back(act[a][j].row(r));
            if (transition < 0 || t * (j + active[a].index) < transition) transition = t * (j + active[a].index);
        }
        if (transition < 0) continue;
        auto ker = rows.empty() ? std::vector<Vec>{unit_vec(f, ev.ext_dims[j], 0)}
                                : kernel_basis(Matrix::from_rows(f, rows, ev.ext_dims[j]));
        if (ker.empty()) continue;
        ev.witness = class_from_coords(spaces[j], ker.front());
        ev.witness_degree = t * j;
        ev.transition_degree = transition;
        ev.witness_annihilated = true;
    }
    if (!ev.witness) {
        for (int c = 0; c < ev.ext_dims[h]; ++c) {
            Vec e = unit_vec(f, ev.ext_dims[h], c);
            if (image[h].contains(e)) continue;
            ev.witness = class_from_coords(spaces[h], e);
            break;
        }
        ev.witness_degree = ev.transition_degree = t * h;
    }
    ev.note = "Ext needs new generators at every sampled degree from " + std::to_string(t * h);
    return ev;
}

VarietyReport variety_report(const Module& m, const AlgebraMorphism& psi, int t, const std::vector<ExtClass>& gens,
                             int window, int fg_window) {
    VarietyReport r;
    r.module = m;
    r.psi = psi;
    r.t = t;
    r.growth = complexity(m, t, window);
    r.dim = r.growth.gamma;
    r.trivial = r.dim && *r.dim == 0;
    ResolutionPtr res = minimal_resolution(m, 3 * t + 1);
    r.ext_vanishes = true;
    for (int n = 1; n <= 3; ++n) r.ext_vanishes = r.ext_vanishes && twisted_ext_space(res, m, psi, t, n)->dim() == 0;
    r.fg = fg_check(m, gens, psi, t, fg_window);
    if (!r.dim) r.caveats.push_back("complexity inconclusive on the window");
    if (r.fg.verdict != FgVerdict::PassEvidence)
        r.caveats.push_back(std::string("fg evidence: ") + to_string(r.fg.verdict));
    if (r.ext_vanishes != r.trivial) r.caveats.push_back("Ext vanishing and complexity disagree on the window");
    if (!m.alg->radical_fully_verified) r.caveats.push_back("radical not fully verified");
    return r;
}

PeriodicityCertificate periodicity(const Module& m, const AlgebraMorphism& psi, int t, int j_max, int w_max,
                                   uint64_t seed) {
    PeriodicityCertificate c;
    if (m.dim == 0) {
        c.found = c.vacuous = c.verified = true;
        c.source = c.target = m;
        c.w = 1;
        c.note = "zero module";
        return c;
    }
    ResolutionPtr res = minimal_resolution(m, t * (j_max + w_max));
    IsoOptions opt;
    opt.seed = seed;
    bool inconclusive = false;
    for (int j = 0; j <= j_max; ++j) {
        Module s = res->syzygy_module(t * j);
        if (s.dim == 0) {
            c.note = "finite projective dimension";
            return c;
        }
        for (int w = 1; w <= w_max; ++w) {
            Module tg = twist(res->syzygy_module(t * (j + w)), psi, w);
            if (tg.dim != s.dim) continue;
            IsoResult iso = is_isomorphic(s, tg, opt);
            if (iso.verdict == IsoVerdict::Inconclusive) inconclusive = true;
            if (iso.verdict != IsoVerdict::Isomorphic) continue;
            c.found = true;
            c.j = j;
            c.w = w;
            c.source = s;
            c.target = tg;
            c.intertwiner = iso.certificate;
            c.verified = verify_iso_certificate(s, tg, iso.certificate);
            return c;
        }
    }
    c.note = inconclusive ? "not found; some isomorphism probes inconclusive" : "not found";
    return c;
}

PeriodicityCertificate tau_periodicity(const Module& m, const FrobeniusForm& form, int p_max, uint64_t seed) {
    if (form.algebra != m.alg) throw Error("NotFrobenius", "form belongs to another algebra");
    AlgebraMorphism nu;
    try {
        nu = nakayama(form);
    } catch (const Error& e) {
        throw Error("NotFrobenius", e.what());
    }
    return periodicity(m, nu, 2, 0, p_max, seed);
}

Module reduce_dimension(const Module& m, const ExtClass& eta) {
    KEtaExtension k = k_eta(eta);
    return tensor_over_algebra(syzygy(k.k_eta), m).module;
}

}  // namespace twc
