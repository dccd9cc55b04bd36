#include "dtq/invariants.hpp"

#include <algorithm>
#include <set>

namespace dtq {

long Framing::pairing(const DimVector& d) const
{
    if (d.size() != weights_.size()) {
        throw VertexMismatch("framing and class sizes differ");
    }
    long s = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        s += static_cast<long>(weights_[v]) * d[v];
    }
    return s;
}

const Rational& PairTable::at(const DimVector& d) const
{
    auto it = values.find(d);
    if (it == values.end()) {
        throw MissingEntry("missing pair invariant at class " + d.to_string());
    }
    return it->second;
}

const Rational& BPSTable::at(const DimVector& d) const
{
    auto it = values.find(d);
    if (it == values.end()) {
        throw MissingEntry("missing BPS invariant at class " + d.to_string());
    }
    return it->second;
}

// ------------------------------------------------------------ Moebius pair

BPSTable bps_from_dtbar(const DTTable& t)
{
    BPSTable out;
    for (const auto& [d, _] : t.values) {
        const long g = d.content();
        Rational sum = 0;
        for (long m = 1; m <= g; ++m) {
            if (g % m != 0) {
                continue;
            }
            const int mu = moebius(m);
            if (mu == 0) {
                continue;
            }
            sum += frac(mu, m * m) * t.at(d.divided(m));
        }
        out.values.emplace(d, sum);
    }
    return out;
}

DTTable dtbar_from_bps(const BPSTable& t)
{
    DTTable out;
    for (const auto& [d, _] : t.values) {
        const long g = d.content();
        Rational sum = 0;
        for (long m = 1; m <= g; ++m) {
            if (g % m == 0) {
                sum += frac(1, m * m) * t.at(d.divided(m));
            }
        }
        out.values.emplace(d, sum);
    }
    out.provenance = "dtbar_from_bps";
    return out;
}

IntegralityReport integrality_report(const BPSTable& t, const Quiver& q, const Stability& s, const DimVector& box,
                                     const Superpotential& w)
{
    IntegralityReport r;
    r.genericity = is_generic(q, s, box);
    r.potential_zero = w.is_zero();
    for (const auto& [d, x] : t.values) {
        if (d.fits_in(box) && !is_integer(x)) {
            r.non_integral.push_back(d);
        }
    }
    r.violation = r.genericity.generic && r.potential_zero && !r.non_integral.empty();
    return r;
}

// ------------------------------------------------------------ pair identity

namespace {

/// Nonzero classes in box grouped by slope, each group in lexicographic order.
std::map<Rational, std::vector<DimVector>> slope_sectors(const Stability& s, const DimVector& box)
{
    std::map<Rational, std::vector<DimVector>> out;
    for (const auto& d : nonzero_classes_in_box(box)) {
        out[s.slope(d)].push_back(d);
    }
    return out;
}

bool sector_commutes(const Quiver& q, const std::vector<DimVector>& sector)
{
    for (std::size_t i = 0; i < sector.size(); ++i) {
        for (std::size_t j = i + 1; j < sector.size(); ++j) {
            if (euler_form_antisym(q, sector[i], sector[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

/// (-1)^f f
Rational signed_factor(long f)
{
    return Rational(f % 2 == 0 ? f : -f);
}

/// sum_l (-1)^l / l! row[l], starting at l = first.
Rational alternating_exp_sum(const std::vector<Rational>& row, std::size_t first)
{
    Rational out = 0;
    for (std::size_t l = first; l < row.size(); ++l) {
        if (sgn(row[l]) == 0) {
            continue;
        }
        Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(l)));
        out += (l % 2 == 0 ? c : -c) * row[l];
    }
    return out;
}

/// Ordered-composition evaluation over one slope sector. rows[s][l] sums, over
/// compositions of s into l sector parts, the product of the prefix-dependent
/// factors.
void composition_sector(const DTTable& t, const Quiver& q, const Framing& framing,
                        const std::vector<DimVector>& sector, PairTable& out)
{
    std::map<DimVector, std::vector<Rational>> rows;
    rows[DimVector::zero(framing.weights().size())] = {Rational(1)};
    for (const auto& s : sector) {
        std::vector<Rational> row;
        for (const auto& part : sector) {
            if (!part.fits_in(s)) {
                continue;
            }
            const DimVector prefix = s - part;
            auto it = rows.find(prefix);
            if (it == rows.end()) {
                continue;
            }
            const long f = framing.pairing(part) - euler_form_antisym(q, prefix, part);
            if (f == 0) {
                continue;
            }
            const Rational g = signed_factor(f) * t.at(part);
            const auto& prev = it->second;
            if (row.size() < prev.size() + 1) {
                row.resize(prev.size() + 1);
            }
            for (std::size_t l = 0; l < prev.size(); ++l) {
                row[l + 1] += prev[l] * g;
            }
        }
        out.values[s] = alternating_exp_sum(row, 1);
        rows[s] = std::move(row);
    }
}

void exponential_sector(const DTTable& t, const Framing& framing, const DimVector& box,
                        const std::vector<DimVector>& sector, PairTable& out)
{
    GradedSeries f(box);
    for (const auto& d : sector) {
        f.set(d, -signed_factor(framing.pairing(d)) * t.at(d));
    }
    const GradedSeries g = series_exp(f);
    for (const auto& d : sector) {
        out.values[d] = g[d];
    }
}

}  // namespace

bool sectors_commute(const Quiver& q, const Stability& s, const DimVector& box)
{
    for (const auto& [_, sector] : slope_sectors(s, box)) {
        if (!sector_commutes(q, sector)) {
            return false;
        }
    }
    return true;
}

PairTable pair_from_dtbar(const DTTable& t, const Quiver& q, const Framing& framing, const Stability& s,
                          const DimVector& box, PairMethod method)
{
    q.check(box);
    q.check(framing.weights());
    PairTable out;
    out.framing = framing.weights();
    for (const auto& [_, sector] : slope_sectors(s, box)) {
        const bool commutes = sector_commutes(q, sector);
        switch (method) {
        case PairMethod::composition:
            composition_sector(t, q, framing, sector, out);
            break;
        case PairMethod::exponential:
            if (!commutes) {
                throw Error("exponential form requires chi-bar to vanish on every slope sector");
            }
            exponential_sector(t, framing, box, sector, out);
            break;
        case PairMethod::automatic:
            if (commutes) {
                exponential_sector(t, framing, box, sector, out);
            } else {
                composition_sector(t, q, framing, sector, out);
            }
            break;
        }
    }
    return out;
}

PairInversion dtbar_from_pair(const PairTable& p, const Quiver& q, const Framing& framing, const Stability& s,
                              const DimVector& box)
{
    q.check(box);
    q.check(framing.weights());
    PairInversion result;
    result.table.provenance = "dtbar_from_pair box=" + box.to_string();
    std::set<DimVector> undetermined;
    for (const auto& [_, sector] : slope_sectors(s, box)) {
        std::map<DimVector, std::vector<Rational>> rows;
        rows[DimVector::zero(box.size())] = {Rational(1)};
        for (const auto& d : sector) {
            // Every composition with at least two parts uses only classes
            // strictly below d, so it is known already.
            std::vector<Rational> row(1);
            auto accumulate = [&](const DimVector& part, const Rational& value) {
                const DimVector prefix = d - part;
                const auto& prev = rows.at(prefix);
                const long f = framing.pairing(part) - euler_form_antisym(q, prefix, part);
                if (f == 0) {
                    return;
                }
                if (row.size() < prev.size() + 1) {
                    row.resize(prev.size() + 1);
                }
                const Rational g = signed_factor(f) * value;
                for (std::size_t l = 0; l < prev.size(); ++l) {
                    row[l + 1] += prev[l] * g;
                }
            };
            for (const auto& part : sector) {
                if (part == d || !part.fits_in(d)) {
                    continue;
                }
                const DimVector prefix = d - part;
                if (!rows.count(prefix)) {
                    continue;
                }
                if (undetermined.count(part)) {
                    const long f = framing.pairing(part) - euler_form_antisym(q, prefix, part);
                    const auto& prev = rows.at(prefix);
                    const bool reached = std::any_of(prev.begin(), prev.end(),
                                                     [](const Rational& x) { return sgn(x) != 0; });
                    if (f != 0 && reached) {
                        throw DegenerateIdentity(part);
                    }
                    continue;
                }
                accumulate(part, result.table.values.at(part));
            }
            const Rational rest = alternating_exp_sum(row, 2);
            const long w = framing.pairing(d);
            const Rational residual = rest - p.at(d);
            if (w == 0) {
                if (sgn(residual) != 0) {
                    throw DegenerateIdentity(d);
                }
                undetermined.insert(d);
                rows[d] = std::move(row);
                continue;
            }
            // P^d = -(-1)^w w DT^d + rest
            const Rational value = residual / signed_factor(w);
            result.table.values.emplace(d, value);
            // Fold in the single-part composition now that DT^d is known.
            if (row.size() < 2) {
                row.resize(2);
            }
            row[1] += signed_factor(w) * value;
            rows[d] = std::move(row);
        }
    }
    result.undetermined.assign(undetermined.begin(), undetermined.end());
    return result;
}

// ------------------------------------------------------------ demos

GradedSeries hilbert_points_series(long euler_characteristic, int max_degree)
{
    const DimVector box{max_degree};
    GradedSeries log_series(box);
    // log prod_k (1 - (-s)^k)^{-k chi} = chi sum_k k sum_j (-s)^{kj} / j
    for (int k = 1; k <= max_degree; ++k) {
        for (int j = 1; k * j <= max_degree; ++j) {
            const int deg = k * j;
            Rational c = frac(euler_characteristic * k, j);
            if (deg % 2 == 1) {
                c = -c;
            }
            log_series.add(DimVector{deg}, c);
        }
    }
    return series_exp(log_series);
}

GradedSeries conifold_ndt_series(const DimVector& box)
{
    if (box.size() != 2) {
        throw VertexMismatch("conifold series needs a two-entry box");
    }
    GradedSeries log_series(box);
    // log (1 - c x^a)^e = -e sum_j c^j x^{ja} / j
    auto add_factor = [&](int sign, const DimVector& a, long exponent) {
        for (int j = 1;; ++j) {
            const DimVector dj = a.scaled(j);
            if (!dj.fits_in(box)) {
                break;
            }
            Rational c = frac(-exponent, j);
            if (sign < 0 && j % 2 == 1) {
                c = -c;
            }
            log_series.add(dj, c);
        }
    };
    const int kmax = std::max(box[0], box[1]) + 1;
    for (int k = 1; k <= kmax; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        add_factor(sign, DimVector{k, k}, -2L * k);
        add_factor(sign, DimVector{k, k - 1}, k);
        add_factor(sign, DimVector{k, k + 1}, k);
    }
    return series_exp(log_series);
}

Rational conifold_dtbar(const DimVector& d)
{
    const long d0 = d[0];
    const long d1 = d[1];
    if (d0 == d1) {
        Rational s = 0;
        for (long l = 1; l <= d0; ++l) {
            if (d0 % l == 0) {
                s += frac(1, l * l);
            }
        }
        return -2 * s;
    }
    const long l = std::labs(d0 - d1);
    if (d0 % l == 0) {
        return frac(1, l * l);
    }
    return 0;
}

Rational conifold_bps(const DimVector& d)
{
    if (d[0] == d[1]) {
        return -2;
    }
    if (std::labs(d[0] - d[1]) == 1) {
        return 1;
    }
    return 0;
}

namespace {

void add_row(DemoReport& r, const DimVector& cls, std::string quantity, const Rational& expected,
             const Rational& computed)
{
    DemoRow row{cls, std::move(quantity), expected, computed, expected == computed};
    r.pass = r.pass && row.pass;
    r.rows.push_back(std::move(row));
}

PairTable pair_table_from_series(const GradedSeries& series, const DimVector& framing)
{
    PairTable p;
    p.framing = framing;
    for (const auto& d : nonzero_classes_in_box(series.box())) {
        p.values[d] = series[d];
    }
    return p;
}

}  // namespace

DemoReport demo_grassmannian(long pairing_value, int max_multiple)
{
    DemoReport r;
    r.name = "grassmannian";
    const Quiver lattice = Quiver::point();
    const Stability mu = Stability::trivial(1);
    const DimVector box{max_multiple};
    const Framing framing(DimVector{static_cast<int>(pairing_value)});
    PairTable pi;
    pi.framing = framing.weights();
    for (int m = 1; m <= max_multiple; ++m) {
        const long sign_exp = static_cast<long>(m) * (pairing_value - m);
        Rational v(binomial(pairing_value, m));
        pi.values[DimVector{m}] = (sign_exp % 2 == 0) ? v : Rational(-v);
    }
    const auto inv = dtbar_from_pair(pi, lattice, framing, mu, box);
    for (int m = 1; m <= max_multiple; ++m) {
        add_row(r, DimVector{m}, "DT", frac(1, static_cast<long>(m) * m), inv.table.at(DimVector{m}));
    }
    const auto bps = bps_from_dtbar(inv.table);
    for (int m = 1; m <= max_multiple; ++m) {
        add_row(r, DimVector{m}, "BPS", m == 1 ? 1 : 0, bps.at(DimVector{m}));
    }
    const auto forward = pair_from_dtbar(inv.table, lattice, framing, mu, box, PairMethod::composition);
    for (int m = 1; m <= max_multiple; ++m) {
        add_row(r, DimVector{m}, "PI(roundtrip)", pi.at(DimVector{m}), forward.at(DimVector{m}));
    }
    r.notes.push_back("input PI^{m} = (-1)^{m(P-m)} binomial(P, m) with P = " + std::to_string(pairing_value));
    return r;
}

DemoReport demo_hilbert_points(long euler_characteristic, int max_degree)
{
    DemoReport r;
    r.name = "hilbert_points";
    const Quiver lattice = Quiver::point();
    const Stability mu = Stability::trivial(1);
    const DimVector box{max_degree};
    const Framing framing(DimVector{1});
    const auto pi = pair_table_from_series(hilbert_points_series(euler_characteristic, max_degree), box);
    const auto inv = dtbar_from_pair(pi, lattice, framing, mu, box);
    for (int d = 1; d <= max_degree; ++d) {
        Rational expected = 0;
        for (long l = 1; l <= d; ++l) {
            if (d % l == 0) {
                expected += frac(1, l * l);
            }
        }
        expected *= -euler_characteristic;
        add_row(r, DimVector{d}, "DT", expected, inv.table.at(DimVector{d}));
    }
    const auto bps = bps_from_dtbar(inv.table);
    for (int d = 1; d <= max_degree; ++d) {
        add_row(r, DimVector{d}, "BPS", Rational(-euler_characteristic), bps.at(DimVector{d}));
    }

    // The same inversion applied to the unsigned product prod_k (1 - s^k)^{-k chi}.
    GradedSeries unsigned_log(box);
    for (int k = 1; k <= max_degree; ++k) {
        for (int j = 1; k * j <= max_degree; ++j) {
            unsigned_log.add(DimVector{k * j}, frac(euler_characteristic * k, j));
        }
    }
    const auto pi_unsigned = pair_table_from_series(series_exp(unsigned_log), box);
    const auto inv_unsigned = dtbar_from_pair(pi_unsigned, lattice, framing, mu, box);
    r.notes.push_back("series convention: the PI generating function is taken as prod_k (1-(-s)^k)^{-k chi}");
    r.notes.push_back("with prod_k (1-s^k)^{-k chi} instead, the same inversion gives DT^1 = "
                      + to_string(inv_unsigned.table.at(DimVector{1})) + " and DT^2 = "
                      + (max_degree >= 2 ? to_string(inv_unsigned.table.at(DimVector{2})) : std::string("n/a"))
                      + ", i.e. the DT values acquire the sign (-1)^d");
    return r;
}

DemoReport demo_conifold(const DimVector& box)
{
    DemoReport r;
    r.name = "conifold";
    const Quiver q = Quiver::conifold();
    q.check(box);
    const Stability mu = Stability::trivial(2);
    const Framing framing(DimVector{1, 0});
    const auto ndt = pair_table_from_series(conifold_ndt_series(box), framing.weights());
    auto inv = dtbar_from_pair(ndt, q, framing, mu, box);
    DTTable dt = inv.table;
    // Swapping v0 <-> v1 (e_i <-> f_i) preserves the quiver, mu = 0 and W up to
    // sign, so DT^{(d0,d1)} = DT^{(d1,d0)}; this supplies the d0 = 0 classes,
    // which the framing (1,0) does not see.
    for (const auto& d : inv.undetermined) {
        const DimVector swapped{d[1], d[0]};
        if (dt.contains(swapped)) {
            dt.values[d] = dt.at(swapped);
            r.notes.push_back("class " + d.to_string() + " filled from " + swapped.to_string()
                              + " by the vertex-swap symmetry");
        } else {
            r.notes.push_back("class " + d.to_string() + " not determined by framing (1,0)");
        }
    }
    for (const auto& [d, value] : dt.values) {
        add_row(r, d, "DT", conifold_dtbar(d), value);
    }
    const auto bps = bps_from_dtbar(dt);
    for (const auto& [d, value] : bps.values) {
        add_row(r, d, "BPS", conifold_bps(d), value);
    }
    const auto forward = pair_from_dtbar(dt, q, framing, mu, box);
    for (const auto& [d, value] : forward.values) {
        add_row(r, d, "NDT(roundtrip)", ndt.at(d), value);
    }
    r.notes.push_back("chi-bar vanishes identically on the conifold quiver; framing e = (1,0), mu = 0");
    return r;
}

}  // namespace dtq
