#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adsig/numbers.hpp"

namespace adsig {

// Univariate polynomial with exact coefficients, stored ascending by degree.
// Canonical form: no trailing zero coefficient; the zero polynomial has an
// empty coefficient vector and degree -1.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

    static Polynomial constant(const T& v) { return Polynomial({v}); }

    // x - root
    static Polynomial linear_root(const T& root) { return Polynomial({-root, T(1)}); }

    static Polynomial x_power(std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = T(1);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const T& leading() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        std::vector<T> out(c_);
        for (auto& v : out) v = -v;
        return Polynomial(std::move(out));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<T> out(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial operator*(const T& s) const {
        std::vector<T> out(c_);
        for (auto& v : out) v *= s;
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    Polynomial pow(unsigned long e) const {
        Polynomial out = constant(T(1));
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) out = out * b;
            if (e > 1) b = b * b;
            e >>= 1;
        }
        return out;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<T> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(out));
    }

    // Horner evaluation; the point type may be wider than the coefficient
    // type (an Int polynomial evaluated at a Rat point).
    template <typename P>
    P eval(const P& x) const {
        P acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + P(c_[i]);
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == T(0)) continue;
            if (!s.empty()) s += " + ";
            s += adsig::to_string(c_[i]);
            if (i > 0) s += "*x^" + std::to_string(i);
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

// Clears denominators and divides out the integer content; leading
// coefficient made positive. Preserves the root set.
inline IntPoly to_integer_primitive(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int den_lcm(1);
    for (const auto& q : p.coeffs()) {
        Int d = q.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        Rat scaled = q * Rat(den_lcm);
        c.push_back(scaled.get_num());  // exact: denominator is 1 after scaling
    }
    Int content(0);
    for (const auto& z : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content == 0) return IntPoly();
    if (sign_of(c.back()) < 0) content = -content;
    for (auto& z : c) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    return IntPoly(std::move(c));
}

// Quotient and remainder over the rationals; divisor must be nonzero.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {RatPoly(), num};
    std::vector<Rat> quot(static_cast<std::size_t>(dn - dd + 1), Rat(0));
    const Rat& lead = den.leading();
    for (int k = dn; k >= dd; --k) {
        Rat q = rem[static_cast<std::size_t>(k)] / lead;
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= q * den.coeff(static_cast<std::size_t>(j));
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

inline RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rat inv = Rat(1) / p.leading();
    return p * inv;
}

// Monic gcd over the rationals (Euclid with monic normalization per step).
inline RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

}  // namespace adsig
