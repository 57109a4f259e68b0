#pragma once

// Real algebraic numbers via Sturm sequences, factorization of small integer
// polynomials, and arithmetic in simple number fields Q[x]/(f).

#include <algorithm>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace tazeta {

class SturmSequence {
public:
    explicit SturmSequence(const RatPoly& f) {
        seq_.push_back(f);
        seq_.push_back(f.derivative());
        while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
            RatPoly r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
            if (r.is_zero()) break;
            seq_.push_back(-r);
        }
    }

    int sign_changes(const Rational& x) const {
        int changes = 0, last = 0;
        for (auto& s : seq_) {
            Rational v = s.eval(x);
            int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++changes;
            last = sg;
        }
        return changes;
    }

    /// Distinct real roots in the half-open interval (a, b].
    int count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

    /// Distinct real roots in the closed interval [a, b].
    int count_closed(const Rational& a, const Rational& b) const {
        return count(a, b) + (seq_.front().eval(a) == 0 ? 1 : 0);
    }

private:
    std::vector<RatPoly> seq_;
};

/// Cauchy bound: every complex root has absolute value below the result.
inline Rational root_bound(const RatPoly& f) {
    Rational m = 0;
    for (int k = 0; k < f.degree(); ++k) {
        Rational q = f[k] / f.lead();
        if (q < 0) q = -q;
        m = std::max(m, q);
    }
    return m + 1;
}

/// A real root of an irreducible monic integer polynomial, isolated by a
/// closed rational interval containing no other root.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(IntPoly minpoly, Rational lo, Rational hi)
        : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    static AlgebraicNumber rational(const BigInt& a) { return {IntPoly{BigInt(-a), BigInt(1)}, Rational(a), Rational(a)}; }

    const IntPoly& minpoly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    BigInt rational_value() const {
        if (!is_rational()) throw Error(Errc::invalid_argument, "algebraic number is irrational");
        return -minpoly_[0];
    }

    void refine(const Rational& width) {
        if (is_rational()) {
            lo_ = hi_ = Rational(rational_value());
            return;
        }
        SturmSequence s(to_rational(minpoly_));
        while (hi_ - lo_ > width) {
            Rational mid = (lo_ + hi_) / 2;
            if (s.count_closed(lo_, mid) > 0)
                hi_ = mid;
            else
                lo_ = mid;
        }
    }

    double approx() const {
        AlgebraicNumber c = *this;
        c.refine(Rational(1, 1000000000));
        return static_cast<double>((c.lo_ + c.hi_) / 2);
    }

    /// Does the closed interval [a, b] contain this root?
    bool in_interval(const Rational& a, const Rational& b) const {
        Rational l = std::max(a, lo_), h = std::min(b, hi_);
        if (l > h) return false;
        return SturmSequence(to_rational(minpoly_)).count_closed(l, h) > 0;
    }

    friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
        if (x.minpoly_ != y.minpoly_) return false;
        return x.in_interval(y.lo_, y.hi_);
    }
    friend bool operator!=(const AlgebraicNumber& x, const AlgebraicNumber& y) { return !(x == y); }

    std::string to_string() const {
        if (is_rational()) return rational_value().str();
        return "root of " + minpoly_.to_string() + " in [" + tazeta::to_string(lo_) + ", " + tazeta::to_string(hi_) + "]";
    }

private:
    IntPoly minpoly_;
    Rational lo_, hi_;
};

/// Integer roots of a monic integer polynomial.
inline std::vector<BigInt> integer_roots(const IntPoly& f) {
    std::vector<BigInt> roots;
    if (f.degree() < 1) return roots;
    int low = 0;
    while (f[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    for (auto& d : divisors(f[low])) {
        for (BigInt c : {BigInt(d), BigInt(-d)})
            if (f.eval(c) == 0) roots.push_back(c);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace detail {

/// Monic quartic without rational roots as a product of two monic quadratics,
/// if such a splitting exists over Z.
inline std::vector<IntPoly> split_quartic(const IntPoly& f) {
    const BigInt a = f[3], b = f[2], c = f[1], d = f[0];
    for (auto& dd : divisors(d)) {
        for (BigInt q : {BigInt(dd), BigInt(-dd)}) {
            BigInt s = d / q;
            // p^2 - a p + (b - q - s) = 0
            BigInt disc = a * a - 4 * (b - q - s);
            if (!is_square(disc)) continue;
            BigInt root = boost::multiprecision::sqrt(disc);
            for (BigInt twice_p : {BigInt(a + root), BigInt(a - root)}) {
                if (twice_p % 2 != 0) continue;
                BigInt p = twice_p / 2, r = a - p;
                if (p * s + q * r != c) continue;
                return {IntPoly{q, p, BigInt(1)}, IntPoly{s, r, BigInt(1)}};
            }
        }
    }
    return {};
}

}  // namespace detail

inline bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

/// Complete factorization over Q of a monic squarefree integer polynomial of
/// degree at most 4; factors sorted by degree, then coefficients.
inline std::vector<IntPoly> factor_min_poly(const IntPoly& mu) {
    if (!mu.is_monic()) throw Error(Errc::invalid_argument, "polynomial is not monic");
    if (mu.degree() > 4) throw Error(Errc::degree_too_large, "degree " + std::to_string(mu.degree()) + " exceeds 4");
    std::vector<IntPoly> out;
    IntPoly rest = mu;
    for (auto& r : integer_roots(mu)) {
        IntPoly lin{BigInt(-r), BigInt(1)};
        out.push_back(lin);
        rest = rest.exact_div(lin);
    }
    if (rest.degree() == 4) {
        auto q = detail::split_quartic(rest);
        if (!q.empty()) {
            out.insert(out.end(), q.begin(), q.end());
            rest = IntPoly(BigInt(1));
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

/// Largest real root of a monic integer polynomial, together with its minimal
/// polynomial.
inline AlgebraicNumber largest_real_root(const IntPoly& f) {
    IntPoly sf = squarefree_part(f);
    RatPoly rf = to_rational(sf);
    SturmSequence s(rf);
    Rational hi = root_bound(rf), lo = -hi;
    if (s.count(lo, hi) == 0) throw Error(Errc::invalid_argument, "polynomial has no real root");
    while (s.count(lo, hi) > 1) {
        Rational mid = (lo + hi) / 2;
        if (s.count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    // The root lies in (lo, hi]; find its irreducible factor.
    for (auto& r : integer_roots(sf))
        if (r > lo && r <= hi) return AlgebraicNumber::rational(r);
    IntPoly rest = sf;
    for (auto& r : integer_roots(sf)) rest = rest.exact_div(IntPoly{BigInt(-r), BigInt(1)});
    std::vector<IntPoly> candidates;
    if (rest.degree() <= 4)
        candidates = factor_min_poly(rest);
    else
        throw Error(Errc::degree_too_large, "cannot factor " + rest.to_string());
    for (auto& g : candidates) {
        SturmSequence sg(to_rational(g));
        if (sg.count(lo, hi) == 1) return AlgebraicNumber(g, lo, hi);
    }
    throw Error(Errc::invalid_argument, "root isolation failed for " + f.to_string());
}

/// Arithmetic in Q[x]/(f) for a monic irreducible f.
class NumberField {
public:
    explicit NumberField(RatPoly modulus) : f_(std::move(modulus)) {}
    explicit NumberField(const IntPoly& modulus) : f_(to_rational(modulus)) {}

    const RatPoly& modulus() const { return f_; }
    int degree() const { return f_.degree(); }

    RatPoly reduce(const RatPoly& a) const { return a.divmod(f_).second; }
    RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }

    RatPoly inv(const RatPoly& a) const {
        RatPoly s, t;
        RatPoly g = ext_gcd(reduce(a), f_, s, t);
        if (g.degree() != 0) throw Error(Errc::invalid_argument, "element is not invertible in the field");
        return reduce(s);
    }

    Rational trace(const RatPoly& a) const {
        Rational tr = 0;
        RatPoly xk(Rational(1));
        for (int k = 0; k < degree(); ++k) {
            tr += mul(a, xk)[k];
            xk = mul(xk, RatPoly::x());
        }
        return tr;
    }

    /// Rational value of an element lying in Q, or nothing.
    static bool is_rational(const RatPoly& a) { return a.degree() <= 0; }

private:
    RatPoly f_;
};

}  // namespace tazeta
