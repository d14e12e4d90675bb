#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ed1 {

/// Polynomial with arbitrary-precision integer coefficients, stored
/// low-to-high.  The zero polynomial has an empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly from_ints(std::initializer_list<long> coeffs);
    static IntPoly x_power_minus_one(int64_t n);  // x^n - 1

    bool is_zero() const { return coeffs_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }  // -1 for zero
    const mpz_class& leading() const { return coeffs_.back(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(int64_t i) const;  // 0 beyond degree
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient of an exact division by a monic polynomial; the remainder
    /// must vanish.
    IntPoly div_exact(const IntPoly& divisor) const;
    bool divides(const IntPoly& dividend) const;

    mpz_class eval(const mpz_class& x) const;

    /// Coefficients reduced into [0, p).
    std::vector<int64_t> mod_p(int64_t p) const;

    std::string to_string() const;  // human form, e.g. "x^2 + x - 1"

private:
    std::vector<mpz_class> coeffs_;
    void normalize();
};

/// n-th cyclotomic polynomial, monic of degree phi(n).  Memoized.
const IntPoly& cyclotomic_poly(int64_t n);

/// Minimal polynomial over Q of zeta_n + zeta_n^{-1}, monic irreducible of
/// degree max(1, phi(n)/2).  Memoized.
const IntPoly& eta_min_poly(int64_t n);

int64_t euler_phi(int64_t n);
bool is_prime(int64_t n);
/// Factors q as p^k with p prime; returns false if q is not a prime power.
bool factor_prime_power(int64_t q, int64_t& p, int64_t& k);
int64_t mul_order_mod(int64_t a, int64_t mod);  // multiplicative order of a mod `mod`, gcd(a,mod)=1
int64_t gcd_i64(int64_t a, int64_t b);
int64_t lcm_i64(int64_t a, int64_t b);
int64_t pow_i64(int64_t base, int64_t exp);  // throws on overflow
std::vector<int64_t> prime_factors(int64_t n);  // distinct primes

}  // namespace ed1
