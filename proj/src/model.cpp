#include "shimrel/model.hpp"

#include <numeric>
#include <stdexcept>

#include "shimrel/arith.hpp"

namespace shimrel::model {

namespace {

using arith::Place;

// Ramification pattern (-D,p)_l = -1 exactly at l | d0, checked over every
// place dividing 2 D p and at infinity.
bool hilbert_pattern_holds(long d0, long d, long p) {
    mpq_class mD(-d), qp(p);
    mpz_class support = 2 * mpz_class(d) * p;
    for (const auto& ell : arith::prime_factors(support)) {
        bool want_ramified = (mpz_class(d0) % ell == 0);
        if (arith::hilbert_symbol(mD, qp, Place::finite(ell)) != (want_ramified ? -1 : 1))
            return false;
    }
    return arith::hilbert_symbol(mD, qp, Place::infinity()) == 1;
}

}  // namespace

ValidationResult validate_model(long d0, long n_level, long p,
                                long a, long b, long k) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    if (d0 < 1) return fail("d0 must be positive");
    if (n_level < 1) return fail("n_level must be positive");
    if (!arith::is_squarefree(mpz_class(d0))) return fail("d0 must be squarefree");
    if (d0 > 1 && arith::prime_factors(mpz_class(d0)).size() % 2 != 0)
        return fail("d0 must be 1 or have an even number of prime factors");
    if (std::gcd(d0, n_level) != 1) return fail("n_level must be coprime to d0");
    long d = d0 * n_level;
    if (!arith::is_prime(mpz_class(p))) return fail("p must be prime");
    if (p == 2 || d % p == 0) return fail("p must be odd and coprime to d");
    if (a < 0) return fail("a must be nonnegative");
    if (b < 1) return fail("b must be positive");
    if (mpz_class(a) * a * d + 1 != mpz_class(b) * p)
        return fail("a^2 d + 1 = b p fails");
    if (k < 1 || k % 2 == 0) return fail("k must be a positive odd integer");
    if (std::gcd(k, 2 * n_level) != 1) return fail("k must be coprime to 2 n_level");
    if (!hilbert_pattern_holds(d0, d, p))
        return fail("hilbert symbol pattern fails: (-d,p) must ramify exactly at primes dividing d0");
    return ValidationResult{true, ""};
}

quatalg::HashimotoModel make_model(long d0, long n_level, long p,
                                   long a, long b, long k) {
    auto res = validate_model(d0, n_level, p, a, b, k);
    if (!res.valid) throw std::invalid_argument("invalid model: " + res.diagnostic);
    return quatalg::HashimotoModel{d0, n_level, p, a, b, k};
}

std::vector<quatalg::HashimotoModel> find_models(const ModelSearchParams& params) {
    if (params.d0 < 1 || params.n_level < 1 || params.p_bound < 2 ||
        std::gcd(params.d0, params.n_level) != 1)
        throw std::invalid_argument("find_models: bad search parameters");
    if (!arith::is_squarefree(mpz_class(params.d0)) ||
        (params.d0 > 1 &&
         arith::prime_factors(mpz_class(params.d0)).size() % 2 != 0))
        throw std::invalid_argument(
            "find_models: d0 must be 1 or squarefree with an even number of prime factors");

    std::vector<quatalg::HashimotoModel> out;
    long d = params.d0 * params.n_level;
    for (long p = 3; p <= params.p_bound; p += 2) {
        if (!arith::is_prime(mpz_class(p)) || d % p == 0) continue;
        if (!hilbert_pattern_holds(params.d0, d, p)) continue;
        // smallest a >= 0 with a^2 d = -1 (mod p); existence is forced by the
        // split condition (-d,p)_p = +1 at p coprime to d0
        bool found_any = false;
        for (long a = 0; a < p; ++a) {
            if ((mpz_class(a) * a * d + 1) % p != 0) continue;
            mpz_class bb = (mpz_class(a) * a * d + 1) / p;
            quatalg::HashimotoModel m{params.d0, params.n_level, p,
                                      a,         bb.get_si(),    params.k};
            out.push_back(m);
            found_any = true;
            if (!params.all_residues) break;
        }
        if (found_any && !params.require_all) break;
    }
    return out;
}

std::pair<quatalg::SingularRelation, quatalg::SingularRelation> curve_singular_relations(
    const quatalg::HashimotoModel& m) {
    if (m.p % 4 != 1)
        throw std::domain_error(
            "curve_singular_relations: requires p = 1 (mod 4); p = " + std::to_string(m.p));
    mpz_class aD = mpz_class(m.a) * m.d();
    quatalg::SingularRelation v1{1, 1, mpz_class(-(m.p - 1) / 4), 0, 0};
    quatalg::SingularRelation v2{0, 2 * aD, 0, 1,
                                 (mpz_class(m.a) * m.a * m.d() - m.b) * m.d()};
    return {v1, v2};
}

PsiEmbedding psi_embed(const quatalg::HashimotoModel& m, std::complex<double> tau,
                       double tol) {
    if (!(tau.imag() > 0))
        throw std::invalid_argument("psi_embed: tau must lie in the upper half plane");
    using C = std::complex<double>;
    const double p = double(m.p);
    const double D = double(m.d());
    const double aD = double(m.a) * D;
    const double kap = (1.0 + std::sqrt(p)) / 2.0;
    const double kbar = (1.0 - std::sqrt(p)) / 2.0;

    C pt = p * tau;
    C t2 = tau * tau;
    PsiEmbedding out;
    out.tau1 = (-kbar * kbar + ((p - 1.0) * aD / 2.0) * tau + D * kap * kap * t2) / pt;
    out.tau2 = (kbar - (p - 1.0) * aD * tau - D * kap * t2) / pt;
    out.tau3 = (-1.0 - 2.0 * aD * tau + D * t2) / pt;

    // residual of v = al t1 + be t2 + ga t3 + de (t2^2 - t1 t3) + ep against
    // the scale of its largest term
    auto rel_residual = [&](const quatalg::SingularRelation& v) {
        auto cd = [](const mpz_class& z) { return z.get_d(); };
        C terms[5] = {cd(v.alpha) * out.tau1, cd(v.beta) * out.tau2, cd(v.gamma) * out.tau3,
                      cd(v.delta) * (out.tau2 * out.tau2 - out.tau1 * out.tau3),
                      C(cd(v.epsilon), 0.0)};
        C sum = 0;
        double scale = 0;
        for (const C& t : terms) {
            sum += t;
            scale = std::max(scale, std::abs(t));
        }
        if (scale == 0.0) return 0.0;
        return std::abs(sum) / scale;
    };
    auto [v1, v2] = curve_singular_relations(m);
    out.residual1 = rel_residual(v1);
    out.residual2 = rel_residual(v2);
    out.within_tolerance = out.residual1 < tol && out.residual2 < tol;
    return out;
}

RSExtract rs_from_relation(const quatalg::HashimotoModel& m,
                           const quatalg::SingularRelation& v, long n) {
    if (n < 1) throw std::invalid_argument("rs_from_relation: n must be positive");
    mpz_class aD = mpz_class(m.a) * m.d();
    RSExtract out;
    out.r = v.beta - 2 * v.gamma - mpz_class((1 - m.p)) / 2 * v.alpha;
    out.s = 2 * aD * v.beta - 2 * v.epsilon -
            2 * m.d() * v.delta * (mpz_class(m.a) * m.a * m.d() - m.b);
    out.s1 = m.p * (out.s / 2) - aD * out.r;
    return out;
}

}  // namespace shimrel::model
