#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace shimrel::arith {

// Place of Q: a finite prime or the archimedean place.
struct Place {
    bool infinite = false;
    mpz_class prime;  // meaningful only when !infinite

    static Place infinity() { return Place{true, 0}; }
    static Place finite(mpz_class p) { return Place{false, std::move(p)}; }

    bool operator==(const Place&) const = default;
    std::string str() const;
};

// Kronecker symbol (a|n), n != 0.
int kronecker_symbol(const mpz_class& a, const mpz_class& n);

// Hilbert symbol (a,b)_v for nonzero rationals, v a prime or infinity.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);

// v = 0,1 mod 4
bool is_discriminant(const mpz_class& v);

// Positive definite integral binary quadratic form ax^2 + bxy + cy^2.
struct QuadForm {
    mpz_class a, b, c;

    mpz_class disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;   // |b| <= a <= c, b >= 0 when |b|=a or a=c
    bool is_primitive() const; // gcd(a,b,c) = 1
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// All primitive reduced forms of negative discriminant `disc`, sorted
// lexicographically by (a, b, c).
std::vector<QuadForm> reduced_forms(const mpz_class& disc);

// h(disc) = #reduced_forms(disc)
long class_number(const mpz_class& disc);

// All d >= 1 with d^2 | disc, ascending.  disc != 0.
std::vector<mpz_class> square_divisors(const mpz_class& disc);

// All mu in [0, 2D] with mu^2 = c (mod 4D), ascending.  The upper endpoint is
// inclusive: 0 and 2D are congruent mod 2D but both are reported when they
// solve the congruence.
std::vector<mpz_class> sqrt_residues(const mpz_class& c, const mpz_class& D);

// --- small shared helpers -------------------------------------------------

// nonnegative remainder of a mod m, m > 0
mpz_class mod_pos(const mpz_class& a, const mpz_class& m);

// floor(sqrt(n)), n >= 0
mpz_class isqrt(const mpz_class& n);

bool is_prime(const mpz_class& n);

// distinct prime factors of |n|, ascending; n != 0
std::vector<mpz_class> prime_factors(const mpz_class& n);

bool is_squarefree(const mpz_class& n);

}  // namespace shimrel::arith
