#pragma once

// Coefficients that are rational functions of an indeterminate standing for
// the prime p. Kept in lowest terms with a monic denominator.

#include <string>

#include "polynomial.hpp"

namespace tazeta {

class PExpr {
public:
    PExpr() = default;
    PExpr(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
    PExpr(const BigInt& c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
    PExpr(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    PExpr(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// The indeterminate p.
    static PExpr p() { return PExpr(RatPoly::x(), RatPoly(Rational(1))); }
    static PExpr p_pow(int e) {
        if (e >= 0) return PExpr(RatPoly::monomial(Rational(1), e), RatPoly(Rational(1)));
        return PExpr(RatPoly(Rational(1)), RatPoly::monomial(Rational(1), -e));
    }

    const RatPoly& numerator() const { return num_; }
    const RatPoly& denominator() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    /// Integer polynomial in p; throws when this is not one.
    IntPoly to_int_poly() const {
        if (!is_polynomial()) throw Error(Errc::non_integral_quotient, "'" + to_string() + "' is not a polynomial in p");
        return to_integer(num_);
    }

    Rational eval(const Rational& p) const {
        Rational d = den_.eval(p);
        if (d == 0) throw Error(Errc::non_integral_quotient, "denominator vanishes at p = " + tazeta::to_string(p));
        return num_.eval(p) / d;
    }

    friend PExpr operator+(const PExpr& a, const PExpr& b) { return PExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend PExpr operator-(const PExpr& a) { return PExpr(-a.num_, a.den_); }
    friend PExpr operator-(const PExpr& a, const PExpr& b) { return a + (-b); }
    friend PExpr operator*(const PExpr& a, const PExpr& b) { return PExpr(a.num_ * b.num_, a.den_ * b.den_); }
    friend PExpr operator/(const PExpr& a, const PExpr& b) {
        if (b.is_zero()) throw Error(Errc::non_integral_quotient, "division by zero");
        return PExpr(a.num_ * b.den_, a.den_ * b.num_);
    }
    PExpr& operator+=(const PExpr& o) { return *this = *this + o; }
    PExpr& operator-=(const PExpr& o) { return *this = *this - o; }
    PExpr& operator*=(const PExpr& o) { return *this = *this * o; }
    friend bool operator==(const PExpr& a, const PExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const PExpr& a, const PExpr& b) { return !(a == b); }

    /// Descending powers of p, e.g. "p^2 - 2p + 1" or "(p - 1)/p^2".
    std::string to_string() const {
        std::string n = poly_text(num_);
        if (is_polynomial()) return n;
        std::string d = poly_text(den_);
        bool dm = den_.coeffs().size() > 1 && count_terms(den_) > 1;
        bool nm = count_terms(num_) > 1;
        return (nm ? "(" + n + ")" : n) + "/" + (dm ? "(" + d + ")" : d);
    }

private:
    static int count_terms(const RatPoly& f) {
        int c = 0;
        for (auto& x : f.coeffs())
            if (x != 0) ++c;
        return c;
    }

    static std::string poly_text(const RatPoly& f) {
        if (f.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int k = f.degree(); k >= 0; --k) {
            Rational c = f[k];
            if (c == 0) continue;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::string mag = tazeta::to_string(a);
            if (k == 0) {
                out += mag;
                continue;
            }
            if (a != 1) out += is_integer(a) ? mag : "(" + mag + ")";
            out += "p";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    void normalize() {
        if (den_.is_zero()) throw Error(Errc::non_integral_quotient, "zero denominator");
        if (num_.is_zero()) {
            den_ = RatPoly(Rational(1));
            return;
        }
        RatPoly g = gcd(num_, den_);
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
        Rational l = den_.lead();
        num_ = num_ * RatPoly(Rational(1) / l);
        den_ = den_ * RatPoly(Rational(1) / l);
    }

    RatPoly num_{};
    RatPoly den_{Rational(1)};
};

inline std::string to_string(const PExpr& e) { return e.to_string(); }

inline TermText term_text(const PExpr& c) {
    const RatPoly& n = c.numerator();
    int terms = 0;
    for (auto& x : n.coeffs())
        if (x != 0) ++terms;
    if (terms == 1 && c.is_polynomial()) {
        bool neg = n.lead() < 0;
        PExpr a = neg ? -c : c;
        return {neg, a.to_string(), !is_integer(n.lead())};
    }
    return {false, c.to_string(), true};
}

inline PExpr exact_quotient(const PExpr& a, const PExpr& b) { return a / b; }

}  // namespace tazeta
