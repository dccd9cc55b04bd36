#include "dtq/hall_engine.hpp"

#include <vector>

namespace dtq {

void require_no_potential(const Superpotential& w)
{
    if (!w.is_zero()) {
        throw PotentialUnsupported();
    }
}

const Rational& DTTable::at(const DimVector& d) const
{
    auto it = values.find(d);
    if (it == values.end()) {
        throw MissingEntry("missing table entry at class " + d.to_string());
    }
    return it->second;
}

Polynomial gl_order(unsigned n)
{
    // q^n - q^i = v^{2n} - v^{2i}
    Polynomial out(1);
    for (unsigned i = 0; i < n; ++i) {
        out *= Polynomial::monomial(1, 2 * n) - Polynomial::monomial(1, 2 * i);
    }
    return out;
}

RationalFunc stacky_count_all(const Quiver& q, const DimVector& d)
{
    q.check(d);
    if (!d.is_nonnegative()) {
        throw Error("stacky_count_all: negative dimension vector");
    }
    long arrow_dim = 0;
    for (const auto& a : q.arrows()) {
        arrow_dim += static_cast<long>(d[a.tail]) * d[a.head];
    }
    Polynomial den(1);
    for (std::size_t v = 0; v < d.size(); ++v) {
        den *= gl_order(static_cast<unsigned>(d[v]));
    }
    return RationalFunc(Polynomial::monomial(1, static_cast<unsigned>(2 * arrow_dim)), den);
}

HallEngine::HallEngine(Quiver quiver, Stability stability)
    : quiver_(std::move(quiver)), stability_(std::move(stability))
{
    if (stability_.size() != quiver_.vertex_count()) {
        throw VertexMismatch("stability is defined on " + std::to_string(stability_.size())
                             + " vertices, quiver has " + std::to_string(quiver_.vertex_count()));
    }
}

void HallEngine::check_class(const DimVector& d) const
{
    quiver_.check(d);
    if (!d.is_nonnegative()) {
        throw Error("negative dimension vector " + d.to_string());
    }
    if (d.is_zero()) {
        throw Error("invariants are undefined on the zero class");
    }
}

RationalFunc HallEngine::bounded_count(const DimVector& e, const std::optional<Rational>& bound) const
{
    if (e.is_zero()) {
        return RationalFunc(1);
    }
    RationalFunc total;
    for (const auto& first : nonzero_classes_in_box(e)) {
        const Rational mu = stability_.slope(first);
        if (bound && !(mu < *bound)) {
            continue;
        }
        const DimVector rest = e - first;
        const RationalFunc tail = bounded_count(rest, mu);
        if (tail.is_zero()) {
            continue;
        }
        const long twist = -2 * euler_form_nonsym(quiver_, rest, first);
        total += semistable_count(first) * RationalFunc::v_pow(twist) * tail;
    }
    return total;
}

RationalFunc HallEngine::semistable_count(const DimVector& d) const
{
    check_class(d);
    {
        std::shared_lock lock(mutex_);
        auto it = semistable_cache_.find(d);
        if (it != semistable_cache_.end()) {
            return it->second;
        }
    }
    // a_d minus every HN type with at least two factors; the leading factor
    // d1 != d has the largest slope, the rest have slopes strictly below it.
    RationalFunc result = stacky_count_all(quiver_, d);
    for (const auto& first : nonzero_classes_in_box(d)) {
        if (first == d) {
            continue;
        }
        const DimVector rest = d - first;
        const RationalFunc tail = bounded_count(rest, stability_.slope(first));
        if (tail.is_zero()) {
            continue;
        }
        const long twist = -2 * euler_form_nonsym(quiver_, rest, first);
        result -= semistable_count(first) * RationalFunc::v_pow(twist) * tail;
    }
    std::unique_lock lock(mutex_);
    semistable_cache_.emplace(d, result);
    return result;
}

RationalFunc HallEngine::epsilon_hat(const DimVector& d) const
{
    check_class(d);
    {
        std::shared_lock lock(mutex_);
        auto it = epsilon_cache_.find(d);
        if (it != epsilon_cache_.end()) {
            return it->second;
        }
    }
    const Rational mu = stability_.slope(d);
    std::vector<DimVector> sector;
    for (const auto& c : nonzero_classes_in_box(d)) {
        if (stability_.slope(c) == mu) {
            sector.push_back(c);
        }
    }
    // by_parts[s][n]: sum over ordered compositions of s into n sector parts
    // of the twisted product of normalized semistable counts.
    std::map<DimVector, std::vector<RationalFunc>> by_parts;
    const DimVector zero = DimVector::zero(d.size());
    by_parts[zero] = {RationalFunc(1)};
    for (const auto& s : sector) {
        std::vector<RationalFunc> row;
        for (const auto& part : sector) {
            if (!part.fits_in(s)) {
                continue;
            }
            const DimVector prefix = s - part;
            auto it = by_parts.find(prefix);
            if (it == by_parts.end()) {
                continue;
            }
            const long twist = euler_form_nonsym(quiver_, part, part) + euler_form_antisym(quiver_, prefix, part);
            const RationalFunc factor = RationalFunc::v_pow(twist) * semistable_count(part);
            const auto& prev = it->second;
            if (row.size() < prev.size() + 1) {
                row.resize(prev.size() + 1);
            }
            for (std::size_t n = 0; n < prev.size(); ++n) {
                if (!prev[n].is_zero()) {
                    row[n + 1] += prev[n] * factor;
                }
            }
        }
        by_parts[s] = std::move(row);
    }
    RationalFunc result;
    const auto& row = by_parts[d];
    for (std::size_t n = 1; n < row.size(); ++n) {
        const Rational coeff = frac(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        result += RationalFunc(coeff) * row[n];
    }
    std::unique_lock lock(mutex_);
    epsilon_cache_.emplace(d, result);
    return result;
}

Rational HallEngine::dtbar(const DimVector& d) const
{
    return -polar_limit(epsilon_hat(d));
}

DTTable HallEngine::dtbar_table(const DimVector& box) const
{
    quiver_.check(box);
    DTTable table;
    for (const auto& d : nonzero_classes_in_box(box)) {
        table.values.emplace(d, dtbar(d));
    }
    table.provenance = "hall_engine box=" + box.to_string();
    return table;
}

RationalFunc hn_semistable_count(const Quiver& q, const Stability& s, const DimVector& d)
{
    return HallEngine(q, s).semistable_count(d);
}

RationalFunc epsilon_hat(const Quiver& q, const Stability& s, const DimVector& d)
{
    return HallEngine(q, s).epsilon_hat(d);
}

Rational dtbar(const Quiver& q, const Stability& s, const DimVector& d)
{
    return HallEngine(q, s).dtbar(d);
}

DTTable dtbar_table(const Quiver& q, const Stability& s, const DimVector& box)
{
    return HallEngine(q, s).dtbar_table(box);
}

}  // namespace dtq
