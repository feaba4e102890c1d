#include "cmnd/arith.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <sstream>

namespace cmnd {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

long power_mod(long base, long exp, long mod) {
    if (mod <= 0) throw InvalidInput("power_mod: modulus must be positive");
    long r = 1 % mod;
    long b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return r;
}

long inverse_mod(long a, long mod) {
    a = ((a % mod) + mod) % mod;
    long t = 0, new_t = 1;
    long r = mod, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw InvalidInput("inverse_mod: argument not invertible");
    return ((t % mod) + mod) % mod;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw InvalidInput("factorize: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.emplace_back(p, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    long phi = 1;
    for (auto [p, k] : factorize(n)) {
        long q = 1;
        for (int i = 1; i < k; ++i) q *= p;
        phi *= q * (p - 1);
    }
    return phi;
}

long element_order(long m, long a) {
    a = ((a % m) + m) % m;
    if (m < 1 || gcd_long(a, m) != 1)
        throw InvalidInput("element_order: argument not coprime to modulus");
    long x = a % m, d = 1;
    while (x != 1) {
        x = (x * a) % m;
        ++d;
    }
    return d;
}

namespace {

// CRT lift: x = g mod q, x = 1 mod (m/q).
long crt_lift(long g, long q, long m) {
    long rest = m / q;
    if (rest == 1) return g % m;
    long t = ((1 - g) % rest + rest) % rest;
    t = (t * inverse_mod(q % rest, rest)) % rest;
    return (g + q * t) % m;
}

}  // namespace

UnitGroupPresentation unit_group_structure(long m) {
    if (m < 3) throw InvalidInput("unit_group_structure: modulus must be >= 3");
    if (m > kMaxModulus) throw InvalidInput("unit_group_structure: modulus too large");

    UnitGroupPresentation pres;
    pres.modulus = m;

    for (auto [p, k] : factorize(m)) {
        long q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        if (p == 2) {
            if (k == 1) continue;  // (Z/2)^x is trivial
            if (k == 2) {
                pres.generators.push_back(crt_lift(3, q, m));
                pres.orders.push_back(2);
            } else {
                pres.generators.push_back(crt_lift(q - 1, q, m));
                pres.orders.push_back(2);
                pres.generators.push_back(crt_lift(5, q, m));
                pres.orders.push_back(q / 4);
            }
        } else {
            long phi_q = q / p * (p - 1);
            long g = 2;
            while (g % p == 0 || element_order(q, g) != phi_q) ++g;
            pres.generators.push_back(crt_lift(g, q, m));
            pres.orders.push_back(phi_q);
        }
    }

    // Discrete-log table: enumerate all exponent vectors.
    pres.dlog.assign(static_cast<size_t>(m), {});
    std::vector<long> residues = {1};
    std::vector<std::vector<int>> exps = {{}};
    for (size_t i = 0; i < pres.generators.size(); ++i) {
        std::vector<long> next_res;
        std::vector<std::vector<int>> next_exps;
        long pw = 1;
        for (long e = 0; e < pres.orders[i]; ++e) {
            for (size_t j = 0; j < residues.size(); ++j) {
                next_res.push_back(residues[j] * pw % m);
                auto v = exps[j];
                v.push_back(static_cast<int>(e));
                next_exps.push_back(std::move(v));
            }
            pw = pw * pres.generators[i] % m;
        }
        residues = std::move(next_res);
        exps = std::move(next_exps);
    }
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (size_t j = 0; j < residues.size(); ++j) {
        long r = residues[j];
        if (seen[static_cast<size_t>(r)])
            throw Error("unit_group_structure: generators not independent");
        seen[static_cast<size_t>(r)] = 1;
        pres.dlog[static_cast<size_t>(r)] = exps[j];
    }
    if (static_cast<long>(residues.size()) != euler_phi(m))
        throw Error("unit_group_structure: presentation does not cover the units");
    return pres;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    std::vector<i64> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw InvalidInput("poly_divide_exact: division by zero polynomial");
    if (num.is_zero()) return IntPolynomial{};
    if (num.degree() < den.degree())
        throw InvalidInput("poly_divide_exact: division leaves a remainder");
    std::vector<i64> rem = num.coeffs;
    std::vector<i64> quot(static_cast<size_t>(num.degree() - den.degree() + 1), 0);
    const i64 lead = den.coeffs.back();
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
        i64 top = rem[static_cast<size_t>(i + den.degree())];
        if (top % lead != 0) throw InvalidInput("poly_divide_exact: division leaves a remainder");
        i64 q = top / lead;
        quot[static_cast<size_t>(i)] = q;
        if (q != 0)
            for (size_t j = 0; j < den.coeffs.size(); ++j)
                rem[static_cast<size_t>(i) + j] =
                    checked_sub(rem[static_cast<size_t>(i) + j], checked_mul(q, den.coeffs[j]));
    }
    for (i64 v : rem)
        if (v != 0) throw InvalidInput("poly_divide_exact: division leaves a remainder");
    return IntPolynomial(std::move(quot));
}

IntPolynomial cyclotomic_polynomial(long n) {
    if (n < 1) throw InvalidInput("cyclotomic_polynomial: n must be >= 1");

    static std::map<long, IntPolynomial> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<i64> xn(static_cast<size_t>(n + 1), 0);
    xn[0] = -1;
    xn[static_cast<size_t>(n)] = 1;
    IntPolynomial result(std::move(xn));
    for (long d = 1; d < n; ++d)
        if (n % d == 0) result = poly_divide_exact(result, cyclotomic_polynomial(d));

    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(result));
    (void)inserted;
    return it->second;
}

CycInt CycInt::zero(long e) {
    if (e < 1) throw InvalidInput("CycInt: order must be >= 1");
    CycInt z;
    z.order_ = e;
    z.coeffs_.assign(static_cast<size_t>(euler_phi(e)), 0);
    return z;
}

CycInt CycInt::from_integer(long e, i64 n) {
    CycInt z = zero(e);
    z.coeffs_[0] = n;
    return z;
}

bool CycInt::is_zero() const {
    if (order_ == 0) throw InvalidInput("CycInt: uninitialized value");
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c == 0; });
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (order_ != o.order_) throw InvalidInput("CycInt: mixed orders");
    CycInt r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c = checked_sub(0, c);
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
    if (order_ != o.order_) throw InvalidInput("CycInt: mixed orders");
    std::vector<i64> conv(coeffs_.size() + o.coeffs_.size(), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            conv[i + j] = checked_add(conv[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
    return reduce_zeta_coeffs(order_, conv);
}

std::pair<double, double> CycInt::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * std::acos(-1.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        acc += static_cast<double>(coeffs_[i]) *
               std::polar(1.0, tau * static_cast<double>(i) / static_cast<double>(order_));
    return {acc.real(), acc.imag()};
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        i64 c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        i64 a = c < 0 ? -c : c;
        if (a != 1 || i == 0) os << a;
        if (i == 1)
            os << (a != 1 ? "*z" : "z");
        else if (i > 1)
            os << (a != 1 ? "*z^" : "z^") << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

CycInt reduce_zeta_coeffs(long e, std::span<const i64> powers) {
    const IntPolynomial& phi = cyclotomic_polynomial(e);
    const size_t deg = static_cast<size_t>(phi.degree());
    std::vector<i64> work(powers.begin(), powers.end());
    if (work.size() < deg) work.resize(deg, 0);
    for (size_t i = work.size(); i-- > deg;) {
        i64 c = work[i];
        if (c == 0) continue;
        work[i] = 0;
        // x^i = -sum_{j<deg} phi[j] * x^{i-deg+j}  since phi is monic.
        for (size_t j = 0; j < deg; ++j)
            work[i - deg + j] = checked_sub(work[i - deg + j], checked_mul(c, phi.coeffs[j]));
    }
    CycInt r;
    r.order_ = e;
    r.coeffs_.assign(work.begin(), work.begin() + static_cast<long>(deg));
    return r;
}

CycInt zeta_power(long e, long k) {
    if (e < 1) throw InvalidInput("zeta_power: order must be >= 1");
    k = ((k % e) + e) % e;
    std::vector<i64> powers(static_cast<size_t>(e), 0);
    powers[static_cast<size_t>(k)] = 1;
    return reduce_zeta_coeffs(e, powers);
}

}  // namespace cmnd
