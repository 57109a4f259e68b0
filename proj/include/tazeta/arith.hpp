#pragma once

// Integer and rational helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tazeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

/// Floor-style remainder in [0, |m|).
inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt result = 1;
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline Rational rpow(const Rational& base, int exp) {
    Rational r = 1;
    Rational b = exp < 0 ? Rational(1) / base : base;
    for (int e = exp < 0 ? -exp : exp; e > 0; --e) r *= b;
    return r;
}

/// Inverse of a modulo m; throws if not invertible.
inline BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt x, y;
    BigInt g = ext_gcd(mod(a, m), m, x, y);
    if (g != 1) throw Error(Errc::invalid_argument, "element not invertible modulo " + m.str());
    return mod(x, m);
}

/// p-adic valuation; v_p(0) is reported as -1.
inline int valuation(BigInt a, const BigInt& p) {
    if (a == 0) return -1;
    a = abs(a);
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

/// Trial-division factorization of |n| into (prime, exponent) pairs.
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    n = abs(n);
    if (n < 2) return out;
    for (BigInt d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

/// Positive divisors of |n| in increasing order (n != 0).
inline std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> ds{1};
    for (auto& [p, e] : factorize(n)) {
        std::vector<BigInt> next;
        for (auto& d : ds) {
            BigInt pk = 1;
            for (int k = 0; k <= e; ++k, pk *= p) next.push_back(d * pk);
        }
        ds = std::move(next);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Largest square dividing n splits n = kernel * f^2 with kernel squarefree.
inline std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& n) {
    BigInt kernel = n < 0 ? BigInt(-1) : BigInt(1);
    BigInt f = 1;
    for (auto& [p, e] : factorize(n)) {
        f *= ipow(p, static_cast<unsigned>(e / 2));
        if (e % 2) kernel *= p;
    }
    return {kernel, f};
}

inline bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

inline std::string to_string(const BigInt& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace tazeta
