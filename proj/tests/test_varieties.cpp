#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "twistcoh/varieties.hpp"

using namespace twc;
using namespace fx;

namespace {

struct Setup {
    QExterior qe;
    ResolutionPtr f;
    std::vector<ExtClass> gens;
};

Setup setup(long num, long den = 1) {
    Setup s{lq(num, den), nullptr, {}};
    s.f = buchweitz(s.qe);
    s.gens = {g_class(s.qe, s.f, 1)};
    return s;
}

// dim Ext^{2j}(_{nu^j} M, k) straight from a fresh minimal resolution
std::vector<int> ext_dims_oracle(const Setup& s, const Module& m, int jmax) {
    ResolutionPtr res = minimal_resolution(m, 2 * jmax + 2);
    std::vector<int> out;
    for (int j = 0; j <= jmax; ++j) out.push_back(twisted_ext_space(res, s.qe.simple, s.qe.nu, 2, j)->dim());
    return out;
}

}  // namespace

TEST_CASE("fg evidence") {
    for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {1, 2}}) {
        Setup s = setup(n, d);
        Module m = build_module(s.qe, r(1), r(2));
        FgEvidence e = fg_check(m, s.gens, s.qe.nu, 2, 10);
        CHECK(e.verdict == FgVerdict::PassEvidence);
        CHECK(e.ext_dims == ext_dims_oracle(s, m, 5));
        CHECK(e.action_injective_from.has_value());
        CHECK(e.generated_up_to >= 0);
        for (int j = e.generated_up_to; j < static_cast<int>(e.new_generators.size()); ++j)
            CHECK(e.new_generators[j] == 0);

        // M_(1,0) is Omega-periodic but its twisted Ext is killed by g_4
        for (const Module& w : {build_module(s.qe, r(1), r(0)), build_module(s.qe, r(0), r(1))}) {
            FgEvidence f = fg_check(w, s.gens, s.qe.nu, 2, 10);
            CHECK(f.verdict == FgVerdict::FailWitness);
            REQUIRE(f.witness.has_value());
            CHECK(!f.witness->is_zero());
            CHECK(f.witness_annihilated);
            for (const auto& g : s.gens)
                CHECK(twisted_product(*f.witness, tensor_down(g, s.qe.nu, f.witness->space->res)).is_zero());
        }

        FgEvidence k = fg_check(s.qe.simple, s.gens, s.qe.nu, 2, 10);
        CHECK(k.verdict == FgVerdict::FailWitness);
        CHECK(k.ext_dims == std::vector<int>{1, 3, 5, 7, 9, 11});
        CHECK(k.ext_dims == ext_dims_oracle(s, s.qe.simple, 5));

        FgEvidence p = fg_check(regular_module(s.qe.alg), s.gens, s.qe.nu, 2, 10);
        CHECK(p.verdict == FgVerdict::PassEvidence);
        // window too short for a transition
        CHECK(fg_check(m, s.gens, s.qe.nu, 2, 4).verdict == FgVerdict::Inconclusive);
    }
}

TEST_CASE("variety dimensions") {
    for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {1, 2}}) {
        Setup s = setup(n, d);
        Module m = build_module(s.qe, r(1), r(2));
        VarietyReport vm = variety_report(m, s.qe.nu, 2, s.gens);
        REQUIRE(vm.dim.has_value());
        CHECK(*vm.dim == 1);
        CHECK(!vm.trivial);
        CHECK(!vm.ext_vanishes);
        // complexity computed independently from the betti numbers
        CHECK(*vm.dim == *complexity(m, 2, 10).gamma);

        VarietyReport vk = variety_report(s.qe.simple, s.qe.nu, 2, s.gens);
        REQUIRE(vk.dim.has_value());
        CHECK(*vk.dim == 2);
        CHECK(!vk.caveats.empty());

        VarietyReport vp = variety_report(regular_module(s.qe.alg), s.qe.nu, 2, s.gens);
        REQUIRE(vp.dim.has_value());
        CHECK(*vp.dim == 0);
        CHECK(vp.trivial);
        CHECK(vp.ext_vanishes);
    }
}

TEST_CASE("periodicity certificates") {
    for (long qn : {2L, 3L}) {
        QExterior qe = lq(qn);
        for (long b : {1L, 2L, -1L}) {
            Module m = build_module(qe, r(1), r(b));
            PeriodicityCertificate c = periodicity(m, qe.nu, 2, 2, 2);
            REQUIRE(c.found);
            CHECK(c.j == 0);
            CHECK(c.w == 1);
            CHECK(c.verified);
            // independent check of the intertwiner
            CHECK(is_intertwiner(c.source, c.target, c.intertwiner));
            CHECK(invert(c.intertwiner).has_value());
            CHECK(c.target.dim == syzygy(twist(m, qe.nu, 1), 2).dim);

            PeriodicityCertificate tc = tau_periodicity(m, qe.form, 2);
            CHECK(tc.found);
            CHECK(tc.verified);
        }
        CHECK(!periodicity(qe.simple, qe.nu, 2, 2, 2).found);
        PeriodicityCertificate z = periodicity(zero_module(qe.alg), qe.nu, 2, 1, 1);
        CHECK(z.found);
        CHECK(z.vacuous);
        PeriodicityCertificate p = periodicity(regular_module(qe.alg), qe.nu, 2, 1, 1);
        CHECK(p.note.find("projective") != std::string::npos);
        // a degenerate form is rejected
        FrobeniusForm bad{qe.alg, unit_vec(Q, 4, Q1)};
        CHECK_THROWS_AS(tau_periodicity(qe.simple, bad, 1), Error);
    }
}

TEST_CASE("dimension reduction") {
    Setup s = setup(2);
    Module m = build_module(s.qe, r(1), r(2));
    Module red = reduce_dimension(m, s.gens[0]);
    CHECK_NOTHROW(red.validate());
    CHECK(*complexity(red, 1, 6).gamma == 0);
    HHSample h0 = hh_twisted_on(s.f, s.qe.nu, 2, 0, false);
    CHECK_THROWS_AS(reduce_dimension(m, h0.ring.basis[0][0]), Error);
}
