#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "shimrel/arith.hpp"
#include "shimrel/quat.hpp"
#include "shimrel/theta.hpp"

namespace shimrel::heegner {

using quatalg::HashimotoModel;

// Admissible pair (r, s) at isogeny degree n, with the orientation seed
// s1 = p(s/2) - aDr and discriminant delta = (ps^2 - 4aDrs + 4bDr^2 - 4Dn^2)/4.
struct RSTuple {
    mpz_class r;
    mpz_class s;  // even
    long n = 1;
    mpz_class s1;
    mpz_class delta;  // negative discriminant
    bool operator==(const RSTuple&) const = default;
};

// Cycle label Z_{disc, [level], mu, -mu} carried with an integer multiplier.
struct HeegnerCycleLabel {
    mpz_class disc;  // < 0, = 0 or 1 mod 4
    thetasign::ThetaCharacteristic level_class;  // even
    mpz_class mu;  // orientation mod 2D, kept as a signed representative
    mpz_class coefficient;
    bool operator==(const HeegnerCycleLabel&) const = default;
};

// CM-cycle coordinates in the basis (e2bar, e3bar, e4bar).
struct CMVector {
    mpq_class c2, c3, c4;
    bool operator==(const CMVector&) const = default;
};

// delta = (ps^2 - 4aDrs + 4bDr^2 - 4Dn^2)/4 = p(s/2)^2 - aDrs + bDr^2 - Dn^2.
// Requires n >= 1, s even, r^2 = n^2 p (mod 4).
mpz_class delta(const HashimotoModel& m, long n, const mpz_class& r,
                const mpz_class& s);

// s1 = p(s/2) - aDr.  Requires s even.
mpz_class s1_of(const HashimotoModel& m, const mpz_class& r, const mpz_class& s);

// (aDs - 2bDr, (2aDr - ps)/2, 2D): the integral multiple of the CM cycle,
// orthogonal to e2bar and e3bar under the extended Gram
// [[p,2aD,r],[2aD,4bD,s],[r,s,1]].
CMVector cm_vector(const HashimotoModel& m, const mpz_class& r, const mpz_class& s);

// Self-intersection of the CM cycle of discriminant delta: -4 d delta.
mpz_class humbert_norm_cm(long d, const mpz_class& delta);

// All (r, s), both signs, with (n^2 p - r^2)/4 and (4bD n^2 - s^2)/4 in Z>=0,
// gcd(r, s, n) = 1, and delta a negative discriminant.  Ordered by delta
// ascending, then r descending, then s descending.  n must be >= 1 and
// coprime to 2k.
std::vector<RSTuple> enumerate_rs(const HashimotoModel& m, long n);

// Residues mu in [0, 2D] with mu^2 = mult * delta (mod 4D).  The default
// multiplier is p; the overload taking `multiplier` is for experimentation.
std::vector<mpz_class> orientations(const HashimotoModel& m, const mpz_class& delta);
std::vector<mpz_class> orientations(const HashimotoModel& m, const mpz_class& delta,
                                    const mpz_class& multiplier);

// The two point configurations a cycle label expands into; the Fricke flip
// exchanges them together with mu -> -mu.
enum class ConfigTag { I, II };
std::string tag_str(ConfigTag t);

struct SupportEntry {
    arith::QuadForm form;
    ConfigTag tag;
    bool operator==(const SupportEntry&) const = default;
};

// Class-group expansion of a label of discriminant delta over an algebra of
// discriminant d: each reduced form once per configuration tag, plus the
// oriented-point count 2^t h(delta), t = number of distinct primes dividing d.
struct SupportExpansion {
    std::vector<SupportEntry> entries;
    long h = 0;  // class number of delta
    long t = 0;  // distinct primes dividing d
    mpz_class oriented_point_count;  // 2^t * h
};

SupportExpansion expand_support(long d, const mpz_class& delta);

}  // namespace shimrel::heegner
