#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmnd/errors.hpp"

namespace cmnd {

using i64 = std::int64_t;

// Checked 64-bit arithmetic: throws OverflowError instead of wrapping.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long power_mod(long base, long exp, long mod);
long inverse_mod(long a, long mod);
bool is_prime(long n);
long euler_phi(long n);
// Prime factorization by trial division, ascending primes.
std::vector<std::pair<long, int>> factorize(long n);

// Largest modulus accepted by unit_group_structure.  All moduli in this
// toolkit are small; tables below are sized by it.
inline constexpr long kMaxModulus = 100000;

// Independent-generator presentation of (Z/mZ)^x together with the discrete
// logarithm of every unit in the generator basis.
struct UnitGroupPresentation {
    long modulus = 0;
    std::vector<long> generators;  // CRT-lifted residues, deterministic choice
    std::vector<long> orders;      // exact order of generators[i]; product = phi(m)
    // dlog[r] is the exponent vector of the unit r (empty for non-units).
    std::vector<std::vector<int>> dlog;
};

// Presentation of (Z/mZ)^x via prime-power factorization: smallest primitive
// root for odd prime powers, the {-1, 5} presentation for powers of two.
UnitGroupPresentation unit_group_structure(long m);

// Multiplicative order of a mod m; requires gcd(a, m) = 1.
long element_order(long m, long a);

// Dense integer polynomial, lowest degree first, no trailing zeros.
struct IntPolynomial {
    std::vector<i64> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<i64> c) : coeffs(std::move(c)) { trim(); }

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    i64 at(long i) const {
        return (i >= 0 && i < static_cast<long>(coeffs.size())) ? coeffs[i] : 0;
    }
    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
// Exact division; throws InvalidInput if the division leaves a remainder.
IntPolynomial poly_divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// n-th cyclotomic polynomial, degree phi(n).  Memoized.
IntPolynomial cyclotomic_polynomial(long n);

// Element of Z[zeta_e] in the power basis 1, zeta, ..., zeta^{phi(e)-1},
// reduced modulo the e-th cyclotomic polynomial.  The representation is
// canonical: equality and the zero test are coefficient comparisons.
class CycInt {
  public:
    CycInt() = default;

    static CycInt zero(long e);
    static CycInt from_integer(long e, i64 n);

    long order() const { return order_; }
    const std::vector<i64>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    bool operator==(const CycInt&) const = default;

    // Complex evaluation at zeta_e = exp(2*pi*i/e); sanity checks only, the
    // exact coefficient test is authoritative.
    std::pair<double, double> to_complex() const;
    std::string to_string() const;

  private:
    friend CycInt zeta_power(long e, long k);
    friend CycInt reduce_zeta_coeffs(long e, std::span<const i64> powers);

    long order_ = 0;
    std::vector<i64> coeffs_;  // exactly phi(order_) entries
};

// zeta_e^k reduced to the power basis; k may be any integer.
CycInt zeta_power(long e, long k);

// Reduces sum_i powers[i] * zeta_e^i for an arbitrary-length coefficient
// vector (the workhorse behind zeta_power and multiplication).
CycInt reduce_zeta_coeffs(long e, std::span<const i64> powers);

}  // namespace cmnd
