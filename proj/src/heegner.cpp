#include "shimrel/heegner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shimrel::heegner {

namespace {

void require_even(const mpz_class& s, const char* where) {
    if (s % 2 != 0)
        throw std::invalid_argument(std::string(where) + ": s must be even, got " +
                                    s.get_str());
}

}  // namespace

mpz_class delta(const HashimotoModel& m, long n, const mpz_class& r,
                const mpz_class& s) {
    if (n < 1) throw std::invalid_argument("delta: n must be positive");
    require_even(s, "delta");
    mpz_class np = mpz_class(n) * n * m.p;
    if ((np - r * r) % 4 != 0)
        throw std::invalid_argument("delta: r^2 = n^2 p (mod 4) fails for r = " +
                                    r.get_str());
    mpz_class D = m.d();
    mpz_class s2 = s / 2;
    return m.p * s2 * s2 - m.a * D * r * s + m.b * D * r * r - D * n * n;
}

mpz_class s1_of(const HashimotoModel& m, const mpz_class& r, const mpz_class& s) {
    require_even(s, "s1_of");
    return m.p * (s / 2) - m.a * mpz_class(m.d()) * r;
}

CMVector cm_vector(const HashimotoModel& m, const mpz_class& r, const mpz_class& s) {
    mpz_class D = m.d();
    CMVector v;
    v.c2 = m.a * D * s - 2 * m.b * D * r;
    v.c3 = mpq_class(2 * m.a * D * r - m.p * s) / 2;
    v.c4 = 2 * D;
    return v;
}

mpz_class humbert_norm_cm(long d, const mpz_class& delta) { return -4 * d * delta; }

std::vector<RSTuple> enumerate_rs(const HashimotoModel& m, long n) {
    if (n < 1 || n % 2 == 0 || std::gcd(n, 2 * m.k) != 1)
        throw std::invalid_argument(
            "enumerate_rs: n must be a positive integer coprime to 2k, got n = " +
            std::to_string(n));
    mpz_class D = m.d();
    mpz_class np = mpz_class(n) * n * m.p;
    mpz_class r_bound = arith::isqrt(np);
    mpz_class s_bound = arith::isqrt(4 * m.b * D * n * n);

    std::vector<RSTuple> out;
    for (mpz_class r = -r_bound; r <= r_bound; ++r) {
        if ((np - r * r) % 4 != 0) continue;
        for (mpz_class s = -(s_bound - s_bound % 2); s <= s_bound; s += 2) {
            if (gcd(gcd(r, s), mpz_class(n)) != 1) continue;
            mpz_class dlt = delta(m, n, r, s);
            if (dlt >= 0 || !arith::is_discriminant(dlt)) continue;
            out.push_back(RSTuple{r, s, n, s1_of(m, r, s), dlt});
        }
    }
    std::sort(out.begin(), out.end(), [](const RSTuple& x, const RSTuple& y) {
        if (x.delta != y.delta) return x.delta < y.delta;
        if (x.r != y.r) return x.r > y.r;
        return x.s > y.s;
    });
    return out;
}

std::vector<mpz_class> orientations(const HashimotoModel& m, const mpz_class& delta) {
    return orientations(m, delta, mpz_class(m.p));
}

std::vector<mpz_class> orientations(const HashimotoModel& m, const mpz_class& delta,
                                    const mpz_class& multiplier) {
    return arith::sqrt_residues(multiplier * delta, mpz_class(m.d()));
}

std::string tag_str(ConfigTag t) { return t == ConfigTag::I ? "I" : "II"; }

SupportExpansion expand_support(long d, const mpz_class& delta) {
    SupportExpansion out;
    auto forms = arith::reduced_forms(delta);
    out.h = long(forms.size());
    out.t = long(arith::prime_factors(d).size());
    mpz_class count = out.h;
    count <<= out.t;
    out.oriented_point_count = count;
    out.entries.reserve(forms.size() * 2);
    for (const auto& f : forms) {
        out.entries.push_back(SupportEntry{f, ConfigTag::I});
        out.entries.push_back(SupportEntry{f, ConfigTag::II});
    }
    return out;
}

}  // namespace shimrel::heegner
