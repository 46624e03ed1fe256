#ifndef TWISTCOH_TEST_FIXTURES_HPP
#define TWISTCOH_TEST_FIXTURES_HPP

#include "twistcoh/qexterior.hpp"

namespace fx {

using namespace twc;

inline const Field Q = Field::rationals();

inline Scalar r(long num, long den = 1) { return Scalar(Q, mpq_class(num, den)); }

inline QExterior lq(long num, long den = 1) { return build_qexterior({Q, r(num, den)}); }

// k[x]/(x^2) with basis 1, x
inline AlgebraPtr dual_numbers(Field f = Q) {
    AlgebraData d;
    d.name = "D";
    d.field = f;
    d.dim = 2;
    d.labels = {"1", "x"};
    d.mult.assign(2, std::vector<Vec>(2, zero_vec(f, 2)));
    d.mult[0][0] = unit_vec(f, 2, 0);
    d.mult[0][1] = d.mult[1][0] = unit_vec(f, 2, 1);
    d.unit = unit_vec(f, 2, 0);
    return validate_algebra(d);
}

// the ground field as a 1-dimensional algebra
inline AlgebraPtr ground(Field f = Q) {
    AlgebraData d;
    d.name = "k";
    d.field = f;
    d.dim = 1;
    d.labels = {"1"};
    d.mult = {{unit_vec(f, 1, 0)}};
    d.unit = unit_vec(f, 1, 0);
    return validate_algebra(d);
}

// raw structure constants of the quantum exterior algebra
inline AlgebraData lq_data(const Scalar& q) {
    QExterior qe = build_qexterior({q.field(), q});
    AlgebraData d;
    d.name = "L";
    d.field = q.field();
    d.dim = 4;
    d.labels = qe.alg->labels;
    d.mult = qe.alg->mult;
    d.unit = qe.alg->unit;
    return d;
}

inline Matrix diag(Field f, const std::vector<Scalar>& v) {
    Matrix m(f, static_cast<int>(v.size()), static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = v[i];
    return m;
}

}  // namespace fx

#endif
