#include "shimrel/quat.hpp"

#include <stdexcept>

namespace shimrel::quatalg {

QuaternionElement QuaternionElement::operator+(const QuaternionElement& o) const {
    return {x[0] + o.x[0], x[1] + o.x[1], x[2] + o.x[2], x[3] + o.x[3]};
}

QuaternionElement QuaternionElement::operator-(const QuaternionElement& o) const {
    return {x[0] - o.x[0], x[1] - o.x[1], x[2] - o.x[2], x[3] - o.x[3]};
}

QuaternionElement QuaternionElement::operator*(const mpq_class& s) const {
    return {x[0] * s, x[1] * s, x[2] * s, x[3] * s};
}

QuaternionElement quat_mul(const QuaternionElement& x, const QuaternionElement& y,
                           const HashimotoModel& m) {
    const mpq_class D(m.d()), p(m.p);
    const auto& a = x.x;
    const auto& b = y.x;
    // basis products: i^2=-D, j^2=p, (ij)^2=Dp, ij=-ji,
    // i(ij)=-Dj, (ij)i=Dj, j(ij)=-pi, (ij)j=pi
    QuaternionElement z;
    z.x[0] = a[0] * b[0] - D * a[1] * b[1] + p * a[2] * b[2] + D * p * a[3] * b[3];
    z.x[1] = a[0] * b[1] + a[1] * b[0] - p * a[2] * b[3] + p * a[3] * b[2];
    z.x[2] = a[0] * b[2] + a[2] * b[0] - D * a[1] * b[3] + D * a[3] * b[1];
    z.x[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1];
    return z;
}

QuaternionElement conjugate(const QuaternionElement& x) {
    return {x.x[0], -x.x[1], -x.x[2], -x.x[3]};
}

mpq_class reduced_trace(const QuaternionElement& x) { return 2 * x.x[0]; }

mpq_class reduced_norm(const QuaternionElement& x, const HashimotoModel& m) {
    const mpq_class D(m.d()), p(m.p);
    return x.x[0] * x.x[0] + D * x.x[1] * x.x[1] - p * x.x[2] * x.x[2] -
           D * p * x.x[3] * x.x[3];
}

std::array<QuaternionElement, 4> eichler_basis(const HashimotoModel& m) {
    const mpq_class half(1, 2);
    mpq_class aD(m.a);
    aD *= m.d();
    mpq_class invp(1, m.p);
    QuaternionElement e1{1, 0, 0, 0};
    QuaternionElement e2{half, 0, half, 0};
    QuaternionElement e3{0, 0, aD * invp, invp};
    QuaternionElement e4{0, half, 0, half};
    return {e1, e2, e3, e4};
}

mpq_class pairing_E(const QuaternionElement& x, const QuaternionElement& y,
                    const HashimotoModel& m) {
    // i^{-1} = -i/D
    QuaternionElement iinv{0, mpq_class(-1, m.d()), 0, 0};
    return reduced_trace(quat_mul(quat_mul(x, conjugate(y), m), iinv, m));
}

std::array<QuaternionElement, 4> eta_basis(const HashimotoModel& m) {
    auto e = eichler_basis(m);
    mpq_class half_pm1((m.p - 1) / 2);  // p odd
    mpq_class aD(m.a);
    aD *= m.d();
    QuaternionElement eta1 = e[3] - e[2] * half_pm1;
    QuaternionElement eta2 = (e[0] * -aD) - e[2];
    return {eta1, eta2, e[0], e[1]};
}

QuaternionElement rosati(const QuaternionElement& x, const HashimotoModel& m) {
    QuaternionElement i{0, 1, 0, 0};
    QuaternionElement iinv{0, mpq_class(-1, m.d()), 0, 0};
    return quat_mul(quat_mul(iinv, conjugate(x), m), i, m);
}

std::array<std::array<mpz_class, 3>, 3> ns_intersection_matrix(const HashimotoModel& m) {
    if (m.p % 2 == 0)
        throw std::domain_error("ns_intersection_matrix: p must be odd");
    mpz_class aD = mpz_class(m.a) * m.d();
    mpz_class half(mpz_class(1 - m.p) / 2);
    mpz_class bD2 = 2 * mpz_class(m.b) * m.d();
    return {{{2, 1, 0}, {1, half, aD}, {0, aD, bD2}}};
}

std::array<std::array<mpz_class, 2>, 2> humbert_gram(const HashimotoModel& m) {
    mpz_class aD2 = 2 * mpz_class(m.a) * m.d();
    mpz_class bD4 = 4 * mpz_class(m.b) * m.d();
    return {{{mpz_class(m.p), aD2}, {aD2, bD4}}};
}

bool SingularRelation::is_primitive() const {
    mpz_class g = gcd(gcd(gcd(gcd(alpha, beta), gamma), delta), epsilon);
    return g == 1;
}

mpz_class humbert_invariant(const SingularRelation& v) {
    return v.beta * v.beta - 4 * v.alpha * v.gamma - 4 * v.delta * v.epsilon;
}

mpz_class humbert_invariant_matrix(const SkewMatrixParams& m) {
    return (m.b1 + m.b4) * (m.b1 + m.b4) - 4 * (m.b1 * m.b4 - m.b3 * m.b2 - m.a * m.dd);
}

SingularRelation matrix_to_tuple(const SkewMatrixParams& m) {
    return SingularRelation{m.b2, m.b4 - m.b1, -m.b3, -m.a, m.dd};
}

}  // namespace shimrel::quatalg
