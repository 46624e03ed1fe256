#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace twc;
using namespace fx;

namespace {

// ranks of the minimal resolution by iterating syzygies and tops directly
std::vector<int> syzygy_rank_oracle(Module m, int steps) {
    std::vector<int> out;
    for (int n = 0; n <= steps; ++n) {
        out.push_back(top(m).module.dim);
        m = syzygy(m);
    }
    return out;
}

}  // namespace

TEST_CASE("resolution of M_(1,beta)") {
    for (long qn : {2L, 3L}) {
        QExterior qe = lq(qn);
        const Scalar q = qe.q();
        for (long b : {1L, 2L, -1L}) {
            const Scalar beta = r(b);
            Module m = build_module(qe, r(1), beta);
            ResolutionPtr res = minimal_resolution(m, 6);
            CHECK(betti_ranks(*res, 6) == std::vector<int>(7, 1));
            CHECK(betti_lengths(*res, 6) == std::vector<int>(7, 4));
            for (int n = 1; n <= 6; ++n) {
                // d_n is right multiplication by w; its linear part is proportional to x + q^n beta y
                const Vec& w = res->diff(n)[0];
                CHECK(w[Q1].is_zero());
                CHECK(!w[QX].is_zero());
                CHECK(w[QY] == w[QX] * q.pow(n) * beta);
                CHECK(res->is_complex_at(n));
                CHECK(res->exact_at(n));
                CHECK(res->minimal_at(n));
            }
            ResolutionPtr per = periodic_resolution(qe, m, r(1), beta);
            for (int n = 0; n <= 6; ++n) {
                CHECK(per->is_complex_at(n));
                CHECK(per->exact_at(n));
            }
        }
    }
}

TEST_CASE("resolution of k and of projectives") {
    QExterior qe = lq(2);
    ResolutionPtr rk = minimal_resolution(qe.simple, 5);
    CHECK(betti_ranks(*rk, 5) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(betti_ranks(*rk, 5) == syzygy_rank_oracle(qe.simple, 5));
    CHECK(betti_lengths(*rk, 3) == std::vector<int>{4, 8, 12, 16});
    ResolutionPtr rp = minimal_resolution(regular_module(qe.alg), 3);
    CHECK(betti_ranks(*rp, 3) == std::vector<int>{1, 0, 0, 0});
    ResolutionPtr rz = minimal_resolution(zero_module(qe.alg), 2);
    CHECK(betti_lengths(*rz, 2) == std::vector<int>{0, 0, 0});
}

TEST_CASE("growth classification") {
    CHECK(classify_growth({3, 0, 0, 0, 0, 0}).verdict == GrowthVerdict::EventuallyZero);
    auto b = classify_growth({4, 4, 4, 4, 4, 4});
    CHECK(b.verdict == GrowthVerdict::Bounded);
    CHECK(*b.gamma == 1);
    auto l = classify_growth({1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(l.verdict == GrowthVerdict::PolynomialDegree);
    CHECK(*l.gamma == 2);
    auto sq = classify_growth({1, 4, 9, 16, 25, 36, 49, 64, 81, 100});
    CHECK(*sq.gamma == 3);
    CHECK(!classify_growth({1, 2, 4, 8, 16, 32, 64, 128, 256, 512}).gamma);
}

TEST_CASE("complexity") {
    QExterior qe = lq(2);
    Module m = build_module(qe, r(1), r(2));
    auto cm = complexity(m, 2, 8);
    CHECK(cm.verdict == GrowthVerdict::Bounded);
    CHECK(*cm.gamma == 1);
    auto cp = complexity(regular_module(qe.alg), 1, 6);
    CHECK(cp.verdict == GrowthVerdict::EventuallyZero);
    CHECK(*cp.gamma == 0);
    auto ck = complexity(qe.simple, 1, 10);
    CHECK(ck.verdict == GrowthVerdict::PolynomialDegree);
    CHECK(*ck.gamma == 2);
    // sums take the larger complexity; syzygies keep it
    CHECK(*complexity(direct_sum(m, qe.simple), 1, 10).gamma == 2);
    CHECK(*complexity(direct_sum(m, regular_module(qe.alg)), 2, 8).gamma == 1);
    CHECK(*complexity(syzygy(qe.simple, 2), 1, 10).gamma == 2);
    CHECK(*complexity(syzygy(m, 2), 2, 8).gamma == 1);
}

TEST_CASE("twisted syzygy track") {
    QExterior qe = lq(3);
    Module m = build_module(qe, r(1), r(2));
    ResolutionPtr res = minimal_resolution(m, 6);
    auto track = twisted_syzygy_track(*res, qe.nu, 2, 3);
    REQUIRE(track.size() == 4);
    CHECK(track[0] == m);
    for (int n = 0; n <= 3; ++n) CHECK(track[n].dim == res->syzygy_module(2 * n).dim);
    IsoResult iso = is_isomorphic(track[1], m);
    CHECK(iso.verdict == IsoVerdict::Isomorphic);
    CHECK(verify_iso_certificate(track[1], m, iso.certificate));
}

TEST_CASE("bimodule resolutions of the quantum exterior algebra") {
    QExterior qe = lq(2);
    ResolutionPtr f = buchweitz(qe);
    for (int n = 0; n <= 10; ++n) {
        CHECK(f->term(n).rank() == n + 1);
        CHECK(f->is_complex_at(n));
        CHECK(f->exact_at(n));
        CHECK(f->minimal_at(n + 1));
    }
    auto generic = std::make_shared<MinimalResolution>(qe.env, qe.bimodule);
    CHECK(generic->lengths(6) == f->lengths(6));
}
