#include "dtq/exact_algebra.hpp"

#include <sstream>

namespace dtq {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(const Rational& constant)
{
    if (sgn(constant) != 0) {
        coeffs_.push_back(constant);
    }
}

Polynomial Polynomial::monomial(const Rational& coeff, unsigned degree)
{
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem)
{
    if (b.is_zero()) {
        throw Error("polynomial division by zero");
    }
    std::vector<Rational> r = a.coeffs_;
    const int db = b.degree();
    std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    const Rational lead_inv = 1 / b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational c = r[static_cast<std::size_t>(k + db)] * lead_inv;
        q[static_cast<std::size_t>(k)] = c;
        if (sgn(c) == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(k + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    quot = Polynomial(std::move(q));
    rem = Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    Polynomial r = *this;
    const Rational inv = 1 / leading();
    for (auto& c : r.coeffs_) {
        c *= inv;
    }
    return r;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial q;
        Polynomial r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::string Polynomial::to_string(const char* var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag.get_str();
            if (k != 0) {
                os << '*';
            }
        }
        if (k >= 1) {
            os << var;
        }
        if (k >= 2) {
            os << '^' << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- RationalFunc

RationalFunc::RationalFunc(const Polynomial& num) : num_(num), den_(1) {}

RationalFunc::RationalFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw Error("rational function with zero denominator");
    }
    normalize();
}

void RationalFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        Polynomial q;
        Polynomial r;
        Polynomial::divmod(num_, g, q, r);
        num_ = std::move(q);
        Polynomial::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= Polynomial(inv);
        den_ *= Polynomial(inv);
    }
}

RationalFunc RationalFunc::v_pow(long k)
{
    if (k >= 0) {
        return RationalFunc(Polynomial::monomial(1, static_cast<unsigned>(k)));
    }
    return RationalFunc(Polynomial(1), Polynomial::monomial(1, static_cast<unsigned>(-k)));
}

namespace {

Rational eval_even(const Polynomial& p, const Rational& q)
{
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (k % 2 == 1) {
            if (sgn(c[k]) != 0) {
                throw Error("odd power of v in a function evaluated at q");
            }
            continue;
        }
        acc = acc * q + c[k];
    }
    return acc;
}

}  // namespace

Rational eval_at_q(const RationalFunc& f, const Rational& q)
{
    const Rational d = eval_even(f.den(), q);
    if (sgn(d) == 0) {
        throw Error("rational function has a pole at q = " + q.get_str());
    }
    return eval_even(f.num(), q) / d;
}

Rational RationalFunc::operator()(const Rational& x) const
{
    const Rational d = den_(x);
    if (sgn(d) == 0) {
        throw Error("rational function has a pole at " + x.get_str());
    }
    return num_(x) / d;
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o)
{
    return *this += -o;
}

RationalFunc& RationalFunc::operator*=(const RationalFunc& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o)
{
    if (o.is_zero()) {
        throw Error("rational function division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunc RationalFunc::operator-() const
{
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::pow(long k) const
{
    RationalFunc base = k >= 0 ? *this : RationalFunc(1) / *this;
    unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
    RationalFunc result(1);
    while (e != 0) {
        if (e & 1UL) {
            result *= base;
        }
        base *= base;
        e >>= 1UL;
    }
    return result;
}

std::string RationalFunc::to_string() const
{
    if (den_ == Polynomial(1)) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational polar_limit(const RationalFunc& f)
{
    const RationalFunc g = f * RationalFunc(Polynomial({-1, 0, 1}));
    if (!g.regular_at(-1)) {
        throw PoleOrderError();
    }
    return g(-1);
}

// ---------------------------------------------------------------- GradedSeries

GradedSeries::GradedSeries(DimVector box) : box_(std::move(box))
{
    if (!box_.is_nonnegative()) {
        throw Error("series box must be nonnegative");
    }
}

GradedSeries GradedSeries::constant(const DimVector& box, const Rational& c)
{
    GradedSeries s(box);
    s.set(DimVector::zero(box.size()), c);
    return s;
}

GradedSeries GradedSeries::monomial(const DimVector& box, const DimVector& d, const Rational& c)
{
    GradedSeries s(box);
    if (d.fits_in(box)) {
        s.set(d, c);
    }
    return s;
}

Rational GradedSeries::operator[](const DimVector& d) const
{
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSeries::set(const DimVector& d, const Rational& c)
{
    if (!d.is_nonnegative() || !d.fits_in(box_)) {
        throw Error("class " + d.to_string() + " outside series box " + box_.to_string());
    }
    if (sgn(c) == 0) {
        terms_.erase(d);
    } else {
        terms_[d] = c;
    }
}

void GradedSeries::add(const DimVector& d, const Rational& c)
{
    set(d, (*this)[d] + c);
}

void GradedSeries::check_box(const GradedSeries& o) const
{
    if (!(box_ == o.box_)) {
        throw Error("series box mismatch: " + box_.to_string() + " vs " + o.box_.to_string());
    }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o)
{
    check_box(o);
    for (const auto& [d, c] : o.terms_) {
        add(d, c);
    }
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o)
{
    check_box(o);
    for (const auto& [d, c] : o.terms_) {
        add(d, -c);
    }
    return *this;
}

GradedSeries GradedSeries::scaled(const Rational& c) const
{
    GradedSeries r(box_);
    for (const auto& [d, x] : terms_) {
        r.set(d, x * c);
    }
    return r;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b)
{
    if (!(a.box() == b.box())) {
        throw Error("series box mismatch: " + a.box().to_string() + " vs " + b.box().to_string());
    }
    GradedSeries out(a.box());
    std::map<DimVector, Rational> acc;
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            DimVector d = da + db;
            if (d.fits_in(a.box())) {
                acc[d] += ca * cb;
            }
        }
    }
    for (const auto& [d, c] : acc) {
        out.set(d, c);
    }
    return out;
}

// Both exp and log use the Euler derivation D = sum_v x_v d/dx_v, which acts on
// x^d by multiplication with |d|: D(exp f) = exp(f) D f and D(log g) = Dg / g.
// Classes are visited in lexicographic order, so every d - e with e > 0 is
// already known.

GradedSeries series_exp(const GradedSeries& a)
{
    const DimVector zero = DimVector::zero(a.box().size());
    if (sgn(a[zero]) != 0) {
        throw Error("series_exp: constant term must be 0");
    }
    std::map<DimVector, Rational> g;
    g[zero] = 1;
    for (const auto& d : nonzero_classes_in_box(a.box())) {
        Rational acc = 0;
        for (const auto& [e, ce] : a.terms()) {
            if (!e.fits_in(d)) {
                continue;
            }
            auto it = g.find(d - e);
            if (it != g.end()) {
                acc += ce * e.total() * it->second;
            }
        }
        if (sgn(acc) != 0) {
            g[d] = acc / d.total();
        }
    }
    GradedSeries out(a.box());
    for (const auto& [d, c] : g) {
        out.set(d, c);
    }
    return out;
}

GradedSeries series_log(const GradedSeries& a)
{
    const DimVector zero = DimVector::zero(a.box().size());
    if (a[zero] != 1) {
        throw Error("series_log: constant term must be 1");
    }
    std::map<DimVector, Rational> f;
    for (const auto& d : nonzero_classes_in_box(a.box())) {
        Rational acc = a[d] * d.total();
        for (const auto& [e, fe] : f) {
            if (e == d || !e.fits_in(d)) {
                continue;
            }
            const Rational rest = a[d - e];
            if (sgn(rest) != 0) {
                acc -= fe * e.total() * rest;
            }
        }
        if (sgn(acc) != 0) {
            f[d] = acc / d.total();
        }
    }
    GradedSeries out(a.box());
    for (const auto& [d, c] : f) {
        out.set(d, c);
    }
    return out;
}

GradedSeries series_pow(const GradedSeries& a, long k)
{
    return series_exp(series_log(a).scaled(Rational(k)));
}

}  // namespace dtq
