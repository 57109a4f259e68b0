#pragma once

// Dense univariate polynomials over an exact coefficient ring, plus the
// truncated power-series operations used for Euler factors.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace tazeta {

/// How a coefficient renders inside a polynomial term.
struct TermText {
    bool negative = false;
    std::string magnitude;  // absolute value, without sign
    bool compound = false;  // needs parentheses when followed by a variable
};

inline TermText term_text(const BigInt& c) { return {c < 0, abs(c).str(), false}; }

inline TermText term_text(const Rational& c) {
    Rational a = c < 0 ? Rational(-c) : c;
    return {c < 0, to_string(a), !is_integer(a)};
}

/// Exact quotient a / b; throws when the ring has no such element.
inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
    if (b == 0 || a % b != 0)
        throw Error(Errc::non_integral_quotient, a.str() + " / " + b.str() + " is not integral");
    return a / b;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) {
    if (b == 0) throw Error(Errc::non_integral_quotient, "division by zero");
    return a / b;
}

template <class R>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(R constant) {  // NOLINT: implicit lift of scalars is intended
        if (!(constant == R(0))) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(R coeff, int k) {
        if (coeff == R(0)) return {};
        std::vector<R> c(static_cast<std::size_t>(k) + 1, R(0));
        c[static_cast<std::size_t>(k)] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    R operator[](int k) const {
        if (k < 0 || k > degree()) return R(0);
        return c_[static_cast<std::size_t>(k)];
    }
    R lead() const { return c_.empty() ? R(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

    void set(int k, R value) {
        if (k > degree()) c_.resize(static_cast<std::size_t>(k) + 1, R(0));
        c_[static_cast<std::size_t>(k)] = std::move(value);
        trim();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<R> c = a.c_;
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Multiply by x^k.
    Polynomial shift(int k) const {
        if (is_zero()) return {};
        std::vector<R> c(static_cast<std::size_t>(k), R(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Polynomial(std::move(c));
    }

    /// Keep terms of degree <= k.
    Polynomial truncate(int k) const {
        if (degree() <= k) return *this;
        return Polynomial(std::vector<R>(c_.begin(), c_.begin() + k + 1));
    }

    Polynomial derivative() const {
        std::vector<R> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * R(static_cast<long>(i)));
        return Polynomial(std::move(c));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }

    /// Composition this(g(x)).
    Polynomial compose(const Polynomial& g) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + Polynomial(*it);
        return acc;
    }

    template <class S>
    Polynomial<S> convert() const {
        std::vector<S> c;
        c.reserve(c_.size());
        for (auto& x : c_) c.push_back(S(x));
        return Polynomial<S>(std::move(c));
    }

    /// Division with remainder; the divisor's leading coefficient must divide
    /// every intermediate leading coefficient exactly.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw Error(Errc::invalid_argument, "polynomial division by zero");
        Polynomial q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            R coef = exact_quotient(r.lead(), d.lead());
            Polynomial term = monomial(coef, r.degree() - d.degree());
            q += term;
            r -= term * d;
        }
        return {q, r};
    }

    /// Quotient that must leave no remainder.
    Polynomial exact_div(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw Error(Errc::non_integral_quotient, "polynomial division leaves a remainder");
        return q;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= degree(); ++k) {
            const R& c = c_[static_cast<std::size_t>(k)];
            if (c == R(0)) continue;
            TermText tt = term_text(c);
            if (first) {
                if (tt.negative) os << "-";
            } else {
                os << (tt.negative ? " - " : " + ");
            }
            first = false;
            bool unit = tt.magnitude == "1" && !tt.compound;
            if (k == 0) {
                os << (tt.compound ? "(" + tt.magnitude + ")" : tt.magnitude);
                continue;
            }
            if (!unit) os << (tt.compound ? "(" + tt.magnitude + ")" : tt.magnitude);
            os << var;
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
std::ostream& operator<<(std::ostream& os, const Polynomial<R>& p) {
    return os << p.to_string();
}

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

inline RatPoly to_rational(const IntPoly& p) { return p.convert<Rational>(); }

/// Integer polynomial from a rational one whose coefficients are integral.
inline IntPoly to_integer(const RatPoly& p) {
    std::vector<BigInt> c;
    for (auto& x : p.coeffs()) {
        if (!is_integer(x)) throw Error(Errc::non_integral_quotient, "coefficient " + to_string(x) + " is not integral");
        c.push_back(num(x));
    }
    return IntPoly(std::move(c));
}

inline RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rational l = p.lead();
    std::vector<Rational> c = p.coeffs();
    for (auto& x : c) x /= l;
    return RatPoly(std::move(c));
}

/// Monic gcd over Q.
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended Euclid over Q: returns g = gcd(a,b) monic with s*a + t*b = g.
inline RatPoly ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b, s0 = Rational(1), s1, t0, t1 = Rational(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        RatPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational l = r0.lead();
    s = s0 * RatPoly(Rational(1) / l);
    t = t0 * RatPoly(Rational(1) / l);
    return make_monic(r0);
}

/// Squarefree part p / gcd(p, p') of a monic integer polynomial.
inline IntPoly squarefree_part(const IntPoly& p) {
    RatPoly rp = to_rational(p);
    RatPoly g = gcd(rp, rp.derivative());
    return to_integer(make_monic(rp.divmod(g).first));
}

// ---------------------------------------------------------------------------
// Truncated power series

/// Coefficients of num/den up to t^kmax; den(0) must be a unit of the ring.
template <class R>
std::vector<R> series_divide(const Polynomial<R>& numer, const Polynomial<R>& denom, int kmax) {
    if (denom[0] == R(0)) throw Error(Errc::invalid_argument, "series denominator vanishes at 0");
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        R acc = numer[k];
        for (int j = 1; j <= std::min(k, denom.degree()); ++j) acc -= denom[j] * out[static_cast<std::size_t>(k - j)];
        out.push_back(exact_quotient(acc, denom[0]));
    }
    return out;
}

template <class R>
std::vector<R> series_multiply(const std::vector<R>& a, const std::vector<R>& b, int kmax) {
    std::vector<R> out(static_cast<std::size_t>(kmax) + 1, R(0));
    for (int i = 0; i <= kmax && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= kmax && j < static_cast<int>(b.size()); ++j)
            out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
}

/// (1 - t)^k as a polynomial.
template <class R>
Polynomial<R> one_minus_t_pow(int k) {
    Polynomial<R> base{R(1), R(-1)};
    Polynomial<R> acc(R(1));
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

}  // namespace tazeta
