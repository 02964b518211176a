#include "shimrel/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace shimrel::arith {

std::string Place::str() const {
    return infinite ? "inf" : prime.get_str();
}

int kronecker_symbol(const mpz_class& a, const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("kronecker_symbol: n must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<mpz_class> prime_factors(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("prime_factors: n must be nonzero");
    std::vector<mpz_class> out;
    mpz_class m = abs(n);
    for (mpz_class q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_squarefree(const mpz_class& n) {
    if (n == 0) return false;
    mpz_class m = abs(n);
    for (mpz_class q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            m /= q;
            if (m % q == 0) return false;
        }
    }
    return true;
}

namespace {

// valuation of x != 0 at prime p, and the unit part x / p^val
std::pair<long, mpq_class> val_unit(const mpq_class& x, const mpz_class& p) {
    long v = 0;
    mpz_class num = x.get_num(), den = x.get_den();
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    mpq_class u(num, den);
    u.canonicalize();
    return {v, u};
}

// residue of a p-unit rational modulo m (m a power of the same p):
// num * den^{-1} mod m
mpz_class unit_residue(const mpq_class& u, const mpz_class& m) {
    mpz_class num = mod_pos(u.get_num(), m);
    mpz_class den = mod_pos(u.get_den(), m);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("unit_residue: denominator not invertible");
    return mod_pos(num * inv, m);
}

// Legendre symbol of a p-unit rational mod an odd prime p.
// (num/den | p) = (num*den | p) since den enters as a square times itself.
int legendre_unit(const mpq_class& u, const mpz_class& p) {
    mpz_class t = u.get_num() * u.get_den();
    return kronecker_symbol(t, p);
}

}  // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (v.infinite)
        return (a < 0 && b < 0) ? -1 : 1;

    const mpz_class& p = v.prime;
    if (!is_prime(p))
        throw std::invalid_argument("hilbert_symbol: place must be a prime or infinity");

    auto [alpha, u] = val_unit(a, p);
    auto [beta, w] = val_unit(b, p);

    if (p == 2) {
        // (a,b)_2 = (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}
        // with eps(x) = (x-1)/2, omega(x) = (x^2-1)/8 taken mod 2.
        mpz_class u8 = unit_residue(u, 8), w8 = unit_residue(w, 8);
        auto eps = [](const mpz_class& r) { return (r % 4 == 3) ? 1 : 0; };
        auto omega = [](const mpz_class& r) { return (r == 3 || r == 5) ? 1 : 0; };
        long e = long(eps(u8)) * eps(w8) + (alpha % 2) * omega(w8) + (beta % 2) * omega(u8);
        return (e % 2 != 0) ? -1 : 1;
    }

    // odd p: (a,b)_p = (-1|p)^{alpha*beta} * (u|p)^beta * (w|p)^alpha
    int sign = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && kronecker_symbol(-1, p) == -1)
        sign = -sign;
    if (beta % 2 != 0) sign *= legendre_unit(u, p);
    if (alpha % 2 != 0) sign *= legendre_unit(w, p);
    return sign;
}

bool is_discriminant(const mpz_class& v) {
    mpz_class r = mod_pos(v, 4);
    return r == 0 || r == 1;
}

bool QuadForm::is_reduced() const {
    mpz_class ab = abs(b);
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

bool QuadForm::is_primitive() const {
    mpz_class g = gcd(gcd(a, b), c);
    return g == 1;
}

std::vector<QuadForm> reduced_forms(const mpz_class& disc) {
    if (disc >= 0 || !is_discriminant(disc))
        throw std::invalid_argument("reduced_forms: disc must be negative and = 0,1 mod 4");
    std::vector<QuadForm> out;
    mpz_class absd = -disc;
    // reduced implies 3a^2 <= |disc|
    for (mpz_class a = 1; 3 * a * a <= absd; ++a) {
        for (mpz_class b = -a + 1; b <= a; ++b) {
            if (mod_pos(b - disc, 2) != 0) continue;
            mpz_class num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            mpz_class c = num / (4 * a);
            QuadForm f{a, b, c};
            if (!f.is_reduced() || !f.is_primitive()) continue;
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long class_number(const mpz_class& disc) {
    return static_cast<long>(reduced_forms(disc).size());
}

std::vector<mpz_class> square_divisors(const mpz_class& disc) {
    if (disc == 0) throw std::invalid_argument("square_divisors: disc must be nonzero");
    mpz_class m = abs(disc);
    std::vector<mpz_class> out{1};
    for (mpz_class q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        int e = 0;
        while (m % q == 0) { m /= q; ++e; }
        int half = e / 2;
        if (half == 0) continue;
        size_t n = out.size();
        mpz_class qe = 1;
        for (int i = 1; i <= half; ++i) {
            qe *= q;
            for (size_t j = 0; j < n; ++j) out.push_back(out[j] * qe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> sqrt_residues(const mpz_class& c, const mpz_class& D) {
    if (D < 1) throw std::invalid_argument("sqrt_residues: D must be positive");
    std::vector<mpz_class> out;
    mpz_class mod = 4 * D;
    mpz_class target = mod_pos(c, mod);
    for (mpz_class mu = 0; mu <= 2 * D; ++mu) {
        if (mod_pos(mu * mu, mod) == target) out.push_back(mu);
    }
    return out;
}

}  // namespace shimrel::arith
