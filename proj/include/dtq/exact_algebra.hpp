#pragma once

#include "dtq/quiver.hpp"
#include "dtq/rational.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace dtq {

/// Univariate polynomial in v over Q, coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}
    Polynomial(const Rational& constant);  // NOLINT: implicit constants are convenient
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

    static Polynomial monomial(const Rational& coeff, unsigned degree);
    static Polynomial v() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; throws on a zero divisor.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem);
    /// Monic gcd (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);
    Polynomial monic() const;

    std::string to_string(const char* var = "v") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Rational function in one variable v (q = v^2 by convention), kept in
/// reduced form: gcd(num, den) = 1 and den monic.
class RationalFunc {
public:
    RationalFunc() : num_(0), den_(1) {}
    RationalFunc(const Polynomial& num);  // NOLINT
    RationalFunc(const Rational& c) : RationalFunc(Polynomial(c)) {}  // NOLINT
    RationalFunc(long c) : RationalFunc(Polynomial(c)) {}  // NOLINT
    RationalFunc(Polynomial num, Polynomial den);

    static RationalFunc v() { return RationalFunc(Polynomial::v()); }
    /// q = v^2.
    static RationalFunc q() { return RationalFunc(Polynomial::monomial(1, 2)); }
    /// v^k for any integer k.
    static RationalFunc v_pow(long k);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Value at a point; throws Error if the denominator vanishes there.
    Rational operator()(const Rational& x) const;
    bool regular_at(const Rational& x) const { return sgn(den_(x)) != 0; }

    RationalFunc& operator+=(const RationalFunc& o);
    RationalFunc& operator-=(const RationalFunc& o);
    RationalFunc& operator*=(const RationalFunc& o);
    RationalFunc& operator/=(const RationalFunc& o);
    friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
    friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
    friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
    friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
    RationalFunc operator-() const;
    RationalFunc pow(long k) const;
    friend bool operator==(const RationalFunc&, const RationalFunc&) = default;

    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

/// Raised by polar_limit when f has a pole of order > 1 at v = -1.
class PoleOrderError : public Error {
public:
    PoleOrderError() : Error("element not supported on virtual indecomposables") {}
};

/// f evaluated at v^2 = q; f must involve only even powers of v.
Rational eval_at_q(const RationalFunc& f, const Rational& q);

/// Value of (v^2 - 1) f at v = -1.
Rational polar_limit(const RationalFunc& f);

/// Multi-graded power series over Q truncated to a componentwise box.
class GradedSeries {
public:
    explicit GradedSeries(DimVector box);
    /// The constant series c.
    static GradedSeries constant(const DimVector& box, const Rational& c);
    /// c * x^d (zero if d lies outside the box).
    static GradedSeries monomial(const DimVector& box, const DimVector& d, const Rational& c);

    const DimVector& box() const { return box_; }
    Rational operator[](const DimVector& d) const;
    void set(const DimVector& d, const Rational& c);
    void add(const DimVector& d, const Rational& c);
    /// Nonzero coefficients in lexicographic order.
    const std::map<DimVector, Rational>& terms() const { return terms_; }

    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    GradedSeries scaled(const Rational& c) const;
    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

private:
    void check_box(const GradedSeries& o) const;
    DimVector box_;
    std::map<DimVector, Rational> terms_;
};

/// Truncated product.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
/// exp(a), requires a[0] == 0.
GradedSeries series_exp(const GradedSeries& a);
/// log(a), requires a[0] == 1.
GradedSeries series_log(const GradedSeries& a);
/// a^k for any integer k, requires a[0] == 1.
GradedSeries series_pow(const GradedSeries& a, long k);

}  // namespace dtq
