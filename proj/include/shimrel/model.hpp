#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "shimrel/quat.hpp"

namespace shimrel::model {

struct ModelSearchParams {
    long d0 = 1;
    long n_level = 1;
    long p_bound = 1000;
    bool require_all = false;   // all valid p up to the bound vs first hit
    bool all_residues = false;  // all a with a^2 D = -1 (mod p), not just the smallest
    long k = 3;
};

// Scan primes p <= p_bound with the ramification pattern
// (-D,p)_l = -1 exactly at l | d0, and solve a^2 D = -1 (mod p).
std::vector<quatalg::HashimotoModel> find_models(const ModelSearchParams& params);

struct ValidationResult {
    bool valid = false;
    std::string diagnostic;  // names the first failed condition; empty when valid
};

ValidationResult validate_model(long d0, long n_level, long p,
                                long a, long b, long k = 3);

// validate_model or throw std::invalid_argument with the diagnostic
quatalg::HashimotoModel make_model(long d0, long n_level, long p,
                                   long a, long b, long k = 3);

// v1 = (1, 1, -(p-1)/4, 0, 0)           H(v1) = p
// v2 = (0, 2aD, 0, 1, (a^2 D - b) D)    H(v2) = 4bD
// Requires p = 1 (mod 4).
std::pair<quatalg::SingularRelation, quatalg::SingularRelation> curve_singular_relations(
    const quatalg::HashimotoModel& m);

struct PsiEmbedding {
    std::complex<double> tau1, tau2, tau3;  // symmetric 2x2: [[tau1,tau2],[tau2,tau3]]
    double residual1 = 0.0;                 // relative residuals of the two
    double residual2 = 0.0;                 // curve singular relations
    bool within_tolerance = false;
};

// Numeric embedding of the upper half plane into the Siegel space; the only
// floating-point computation in the library.  Checks its own output against
// both curve singular relations.
PsiEmbedding psi_embed(const quatalg::HashimotoModel& m, std::complex<double> tau,
                       double tol = 1e-9);

struct RSExtract {
    mpz_class r, s, s1;
};

// r = beta - 2 gamma - ((1-p)/2) alpha
// s = 2aD beta - 2 eps - 2D delta (a^2 D - b)    (always even)
// s1 = p(s/2) - aD r
// n only labels the intended isogeny degree: s1^2 - D(n^2 p - r^2) = p delta(r,s,n).
RSExtract rs_from_relation(const quatalg::HashimotoModel& m,
                           const quatalg::SingularRelation& v, long n = 1);

}  // namespace shimrel::model
