#pragma once

#include <gmpxx.h>

#include <array>

namespace shimrel::quatalg {

// Parameters of Hashimoto's model of the quaternion algebra (-D, p) and its
// level-D Eichler order: d = d0*n_level, a^2 d + 1 = b p.  k enters only
// through the coprimality constraint on isogeny degrees.
struct HashimotoModel {
    long d0 = 0;
    long n_level = 1;
    long p = 0;
    long a = 0;
    long b = 0;
    long k = 3;

    long d() const { return d0 * n_level; }
    bool operator==(const HashimotoModel&) const = default;
};

// Element x0 + x1 i + x2 j + x3 ij with i^2 = -D, j^2 = p, ij = -ji.
struct QuaternionElement {
    std::array<mpq_class, 4> x{};

    QuaternionElement() = default;
    QuaternionElement(mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3)
        : x{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}
    static QuaternionElement scalar(const mpq_class& s) { return {s, 0, 0, 0}; }

    bool operator==(const QuaternionElement& o) const { return x == o.x; }
    QuaternionElement operator+(const QuaternionElement& o) const;
    QuaternionElement operator-(const QuaternionElement& o) const;
    QuaternionElement operator*(const mpq_class& s) const;
};

QuaternionElement quat_mul(const QuaternionElement& x, const QuaternionElement& y,
                           const HashimotoModel& m);
QuaternionElement conjugate(const QuaternionElement& x);
mpq_class reduced_trace(const QuaternionElement& x);
mpq_class reduced_norm(const QuaternionElement& x, const HashimotoModel& m);

// e1 = 1, e2 = (1+j)/2, e3 = (aDj+ij)/p, e4 = (i+ij)/2
std::array<QuaternionElement, 4> eichler_basis(const HashimotoModel& m);

// E(x,y) = tr(x ybar i^{-1}); skew, Z-valued on the order
mpq_class pairing_E(const QuaternionElement& x, const QuaternionElement& y,
                    const HashimotoModel& m);

// eta1 = e4 - ((p-1)/2) e3, eta2 = -aD e1 - e3, eta3 = e1, eta4 = e2:
// a symplectic basis for the order under E
std::array<QuaternionElement, 4> eta_basis(const HashimotoModel& m);

// Rosati involution x -> i^{-1} xbar i
QuaternionElement rosati(const QuaternionElement& x, const HashimotoModel& m);

// Gram of (e1, e2, e3) in the generic Neron-Severi:
// [[2,1,0],[1,(1-p)/2,aD],[0,aD,2bD]].  Needs p odd.
std::array<std::array<mpz_class, 3>, 3> ns_intersection_matrix(const HashimotoModel& m);

// Humbert-norm Gram of (e2bar, e3bar): [[p,2aD],[2aD,4bD]], determinant 4D.
std::array<std::array<mpz_class, 2>, 2> humbert_gram(const HashimotoModel& m);

// Singular relation alpha t1 + beta t2 + gamma t3 + delta(t2^2-t1 t3) + eps = 0
struct SingularRelation {
    mpz_class alpha, beta, gamma, delta, epsilon;
    bool operator==(const SingularRelation&) const = default;
    bool is_primitive() const;
};

// H(v) = beta^2 - 4 alpha gamma - 4 delta epsilon
mpz_class humbert_invariant(const SingularRelation& v);

// Skew 4x4 matrix data ((0,a,b1,b2),(-a,0,b3,b4),(-b1,-b3,0,dd),(-b2,-b4,-dd,0))
struct SkewMatrixParams {
    mpz_class a, b1, b2, b3, b4, dd;
};

// H = (b1+b4)^2 - 4(b1 b4 - b3 b2 - a dd)
mpz_class humbert_invariant_matrix(const SkewMatrixParams& m);

// Expansion of tau A tau + tau B - B^t tau + D = 0 into 5-tuple form:
// (alpha,beta,gamma,delta,eps) = (b2, b4-b1, -b3, -a, dd)
SingularRelation matrix_to_tuple(const SkewMatrixParams& m);

}  // namespace shimrel::quatalg
