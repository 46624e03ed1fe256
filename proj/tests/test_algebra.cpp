#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace twc;
using namespace fx;

namespace {

std::string kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

// brute-force associativity over basis triples, independent of validate_algebra
bool associative(const Algebra& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                if (a.mul(a.mul(a.basis(i), a.basis(j)), a.basis(k)) != a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k))))
                    return false;
    return true;
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate_algebra(lq_data(r(2)))->dim == 4);
    CHECK(ground()->dim == 1);
    AlgebraData bad = lq_data(r(2));
    bad.mult[QX][QY] = unit_vec(Q, 4, Q1);
    CHECK(kind_of([&] { validate_algebra(bad); }) == "NonAssociative");
    AlgebraData nounit = lq_data(r(2));
    nounit.unit = unit_vec(Q, 4, QX);
    CHECK(kind_of([&] { validate_algebra(nounit); }) == "BadUnit");
}

TEST_CASE("opposite") {
    AlgebraPtr d = dual_numbers();
    CHECK(opposite(d)->mult == d->mult);
    AlgebraPtr l = lq(2).alg;
    AlgebraPtr op = opposite(l);
    CHECK(opposite(op)->mult == l->mult);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(op->mult[i][j] == l->mult[j][i]);
    // x * y in the opposite is y x
    CHECK(op->mult[QX][QY] == unit_vec(Q, 4, QYX));
    CHECK(associative(*op));
}

TEST_CASE("enveloping algebra") {
    AlgebraPtr l = lq(3).alg;
    AlgebraPtr e = enveloping(l);
    CHECK(e->dim == 16);
    CHECK(enveloping(ground())->dim == 1);
    CHECK(enveloping(l) == e);
    CHECK(associative(*e));
    // (a (x) b)(a' (x) b') = a a' (x) b' b
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 4; ++b2) {
                    Vec lhs = e->mul(e->basis(a * 4 + b), e->basis(a2 * 4 + b2));
                    Vec left = l->mul(l->basis(a), l->basis(a2)), right = l->mul(l->basis(b2), l->basis(b));
                    Vec rhs = zero_vec(Q, 16);
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) rhs[i * 4 + j] = left[i] * right[j];
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("center") {
    for (long q : {2L, 3L}) {
        auto z = center(*lq(q).alg);
        REQUIRE(z.size() == 2);
        EchelonBasis span(Q, 4);
        for (const auto& v : z) span.insert(v);
        CHECK(span.contains(unit_vec(Q, 4, Q1)));
        CHECK(span.contains(unit_vec(Q, 4, QYX)));
    }
    CHECK(center(*dual_numbers()).size() == 2);
}

TEST_CASE("nakayama automorphism") {
    for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {1, 2}}) {
        QExterior qe = lq(n, d);
        const Scalar q = qe.q();
        CHECK(invert(qe.form.gram()).has_value());
        Matrix expect = diag(Q, {r(1), -q.inv(), -q, r(1)});
        CHECK(qe.nu.matrix == expect);
        CHECK(power(qe.nu, 0).is_identity());
        CHECK(power(qe.nu, 2).apply(unit_vec(Q, 4, QX)) == scale(q.pow(-2), unit_vec(Q, 4, QX)));
        CHECK(compose(power(qe.nu, -1), qe.nu).is_identity());
        // defining identity on the enveloping algebra, all basis pairs
        FrobeniusForm ef = env_form(qe.env, qe.form);
        AlgebraMorphism nu_e = nakayama(ef);
        for (int c = 0; c < 16; ++c)
            for (int x = 0; x < 16; ++x) {
                Scalar lhs = Scalar::zero(Q), rhs = Scalar::zero(Q);
                Vec bcx = qe.env->mul(qe.env->basis(c), qe.env->basis(x));
                Vec nxc = qe.env->mul(nu_e.apply(qe.env->basis(x)), qe.env->basis(c));
                for (int i = 0; i < 16; ++i) lhs += ef.functional[i] * bcx[i], rhs += ef.functional[i] * nxc[i];
                CHECK(lhs == rhs);
            }
    }
    AlgebraPtr d = dual_numbers();
    CHECK(nakayama(FrobeniusForm{d, unit_vec(Q, 2, 1)}).is_identity());
    CHECK(kind_of([&] { nakayama(FrobeniusForm{d, unit_vec(Q, 2, 0)}); }) == "DegenerateForm");
}

TEST_CASE("morphisms") {
    QExterior qe = lq(2);
    CHECK(kind_of([&] { make_automorphism(qe.alg, diag(Q, {r(1), r(2), r(1), r(1)})); }) == "NotMultiplicative");
    CHECK(kind_of([&] { make_automorphism(qe.alg, diag(Q, {r(1), r(0), r(1), r(0)})); }) != "");
    AlgebraMorphism a = make_automorphism(qe.alg, diag(Q, {r(1), r(2), r(5), r(10)}));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(power(a, -2) == inverse(compose(a, a)));
}

TEST_CASE("prime fields") {
    const Field f = Field::prime(7);
    QExterior qe = build_qexterior({f, Scalar(f, 3L)});
    CHECK(center(*qe.alg).size() == 2);
    CHECK(qe.nu.matrix == diag(f, {Scalar::one(f), -Scalar(f, 3L).inv(), -Scalar(f, 3L), Scalar::one(f)}));
    CHECK(kind_of([] { build_qexterior({Field::prime(2), Scalar(Field::prime(2), 1L)}); }) == "BadParams");
    CHECK(kind_of([] { build_qexterior({Q, r(1)}); }) == "BadParams");
    CHECK(kind_of([] { build_qexterior({Q, r(-1)}); }) == "BadParams");
}
