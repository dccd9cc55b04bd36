#include "dtq/hall_engine.hpp"
#include "dtq/invariants.hpp"
#include "dtq/oracle.hpp"
#include "dtq/wall_crossing.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dtq;

namespace {

/// Collects failures of one criterion; the criterion passes when none were recorded.
class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ += ok ? 0 : 1;
    }
    void expect_equal(const Rational& expected, const Rational& observed, const std::string& what)
    {
        expect(expected == observed, what + ": expected " + to_string(expected) + ", got " + to_string(observed));
    }
    bool ok() const { return failed_ == 0 && checks_ > 0; }
    std::string summary() const
    {
        std::ostringstream s;
        s << checks_ << " checks, " << failed_ << " failed";
        for (const auto& f : failures_) {
            s << "; " << f;
        }
        return s.str();
    }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

void check_demo(Checker& c, const DemoReport& r, std::size_t expected_rows)
{
    c.expect(r.rows.size() == expected_rows, r.name + ": row count " + std::to_string(r.rows.size()));
    for (const auto& row : r.rows) {
        c.expect_equal(row.expected, row.computed, r.name + " " + row.quantity + " " + row.cls.to_string());
    }
}

void ac1(Checker& c)
{
    for (long P = 5; P <= 12; ++P) {
        check_demo(c, demo_grassmannian(P, 6), 3 * 6);
    }
}

void ac2(Checker& c)
{
    const DimVector box{5, 5};
    const auto r = demo_conifold(box);
    check_demo(c, r, 3 * nonzero_classes_in_box(box).size());
    for (int k = 1; k <= 5; ++k) {
        c.expect_equal(-2, conifold_bps(DimVector{k, k}), "BPS diagonal");
        c.expect_equal(1, conifold_bps(DimVector{k, k - 1}), "BPS (k,k-1)");
        c.expect_equal(1, conifold_bps(DimVector{k - 1, k}), "BPS (k-1,k)");
    }
}

void ac3(Checker& c)
{
    for (long chi : {-200L, -6L, 2L}) {
        const auto r = demo_hilbert_points(chi, 8);
        check_demo(c, r, 2 * 8);
        bool flagged = false;
        for (const auto& note : r.notes) {
            flagged = flagged || note.find("convention") != std::string::npos;
        }
        c.expect(flagged, "series convention note missing");
    }
}

void ac4(Checker& c)
{
    const Quiver pt = Quiver::point();
    const Stability zero1 = Stability::trivial(1);
    for (int m = 1; m <= 6; ++m) {
        c.expect_equal(frac(1, static_cast<long>(m) * m), dtbar(pt, zero1, DimVector{m}), "point dtbar");
    }
    const Quiver k2 = Quiver::kronecker();
    const Stability gen({1, 0}, {1, 1});
    c.expect_equal(-2, dtbar(k2, gen, DimVector{1, 1}), "K2 generic (1,1)");
    c.expect_equal(-1, dtbar(k2, Stability::trivial(2), DimVector{1, 1}), "K2 zero (1,1)");

    struct Generic {
        Quiver q;
        Stability s;
        DimVector box;
    };
    const std::vector<Generic> generic{{pt, zero1, DimVector{6}},
                                       {k2, gen, DimVector{3, 3}},
                                       {k2, Stability({0, 1}, {1, 1}), DimVector{3, 3}},
                                       {Quiver::a2(), Stability({0, 1}, {1, 1}), DimVector{3, 3}},
                                       {Quiver::a2(), Stability({1, 0}, {1, 1}), DimVector{3, 3}}};
    for (const auto& g : generic) {
        const auto report = integrality_report(bps_from_dtbar(dtbar_table(g.q, g.s, g.box)), g.q, g.s, g.box);
        c.expect(report.genericity.generic, "stability expected generic");
        c.expect(report.non_integral.empty() && !report.violation, "non-integral BPS value");
    }
}

void ac5(Checker& c)
{
    const std::vector<Stability> stabilities{Stability({1, 0}, {1, 1}), Stability({0, 1}, {1, 1}),
                                             Stability({frac(1, 3), 2}, {2, 1})};
    for (const Quiver& q : {Quiver::a2(), Quiver::kronecker()}) {
        for (const auto& box : {DimVector{1, 1}, DimVector{2, 1}, DimVector{1, 2}, DimVector{2, 2}}) {
            for (const auto& tau : stabilities) {
                c.expect(is_generic(q, tau, box).generic, "stability expected generic");
                const auto source = dtbar_table(q, tau, box);
                c.expect(transform_table(q, source, tau, tau, box).values == source.values, "identity transform");
                for (const auto& tt : stabilities) {
                    const auto moved = transform_table(q, source, tau, tt, box);
                    c.expect(moved.values == dtbar_table(q, tt, box).values,
                             "transform differs from recomputation in box " + box.to_string());
                    c.expect(transform_table(q, moved, tt, tau, box).values == source.values, "round trip");
                }
            }
        }
    }
}

void ac6(Checker& c)
{
    struct Case {
        Quiver q;
        std::vector<Stability> stabilities;
    };
    const std::vector<Case> cases{
        {Quiver::a2(), {Stability::trivial(2), Stability({1, 0}, {1, 1}), Stability({0, 1}, {1, 1})}},
        {Quiver::kronecker(), {Stability::trivial(2), Stability({1, 0}, {1, 1}), Stability({0, 1}, {1, 1})}},
        {Quiver::one_loop(), {Stability::trivial(1)}}};
    for (const auto& k : cases) {
        const DimVector box = k.q.vertex_count() == 1 ? DimVector{3} : DimVector{3, 3};
        std::vector<DimVector> classes;
        for (const auto& d : nonzero_classes_in_box(box)) {
            if (d.total() <= 3) {
                classes.push_back(d);
            }
        }
        for (int p : {2, 3}) {
            const Rational pq(p);
            for (const auto& d : classes) {
                const std::string where = k.q.vertices()[0] + " d=" + d.to_string() + " p=" + std::to_string(p);
                c.expect_equal(stacky_count_oracle(k.q, d, p), eval_at_q(stacky_count_all(k.q, d), pq),
                               "stacky " + where);
                for (const auto& s : k.stabilities) {
                    c.expect_equal(semistable_count_oracle(k.q, s, d, p),
                                   eval_at_q(hn_semistable_count(k.q, s, d), pq), "semistable " + where);
                }
            }
            for (const auto& d1 : classes) {
                for (const auto& d3 : classes) {
                    if ((d1 + d3).total() <= 3) {
                        c.expect_equal(hall_twist_prediction(k.q, d1, d3, p), hall_twist_oracle(k.q, d1, d3, p),
                                       "twist d1=" + d1.to_string() + " d3=" + d3.to_string());
                    }
                }
            }
        }
    }
    const Quiver pt = Quiver::point();
    for (int e = 1; e <= oracle_max_framing_total; ++e) {
        for (int d = 1; d <= std::min(e, 3); ++d) {
            for (int p : {2, 3}) {
                c.expect(framed_stable_count_oracle(pt, Stability::trivial(1), DimVector{d}, DimVector{e}, p)
                             == gaussian_binomial(e, d, p),
                         "framed point d=" + std::to_string(d) + " e=" + std::to_string(e));
            }
        }
    }
}

void compositions(const DimVector& d, std::vector<DimVector>& parts,
                  const std::function<void(const std::vector<DimVector>&)>& f)
{
    if (d.is_zero()) {
        f(parts);
        return;
    }
    for (const auto& first : nonzero_classes_in_box(d)) {
        parts.push_back(first);
        compositions(d - first, parts, f);
        parts.pop_back();
    }
}

DTTable random_table(std::mt19937& rng, const DimVector& box)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    DTTable t;
    for (const auto& d : nonzero_classes_in_box(box)) {
        t.values[d] = frac(num(rng), den(rng));
    }
    return t;
}

void ac7(Checker& c)
{
    for (int n = 2; n <= 7; ++n) {
        long expected = 1;
        for (int i = 0; i < n - 2; ++i) {
            expected *= n;
        }
        c.expect(static_cast<long>(enumerate_ordered_trees(n).size()) == expected,
                 "tree count n=" + std::to_string(n));
    }

    // Semistable element from the epsilon elements by the 1/n! sum over
    // equal-slope compositions.
    struct Case {
        Quiver q;
        Stability s;
        DimVector box;
    };
    const std::vector<Case> cases{{Quiver::point(), Stability::trivial(1), DimVector{4}},
                                  {Quiver::one_loop(), Stability::trivial(1), DimVector{3}},
                                  {Quiver::a2(), Stability::trivial(2), DimVector{2, 2}},
                                  {Quiver::a2(), Stability({1, 0}, {1, 1}), DimVector{2, 2}},
                                  {Quiver::kronecker(), Stability::trivial(2), DimVector{2, 2}},
                                  {Quiver::kronecker(), Stability({1, 0}, {1, 1}), DimVector{2, 2}}};
    for (const auto& k : cases) {
        const HallEngine engine(k.q, k.s);
        for (const auto& d : nonzero_classes_in_box(k.box)) {
            const Rational mu = k.s.slope(d);
            RationalFunc total;
            std::vector<DimVector> parts;
            compositions(d, parts, [&](const std::vector<DimVector>& p) {
                long twist = 0;
                RationalFunc prod(1);
                DimVector prefix = DimVector::zero(d.size());
                for (const auto& x : p) {
                    if (k.s.slope(x) != mu) {
                        return;
                    }
                    twist += euler_form_antisym(k.q, prefix, x);
                    prod *= engine.epsilon_hat(x);
                    prefix += x;
                }
                total += RationalFunc(Rational(1) / Rational(factorial(static_cast<unsigned>(p.size()))))
                         * RationalFunc::v_pow(twist) * prod;
            });
            c.expect(total == RationalFunc::v_pow(euler_form_nonsym(k.q, d, d)) * engine.semistable_count(d),
                     "inverse sum at " + d.to_string());
        }
    }

    std::mt19937 rng(20240611);
    const DimVector box{4, 4};
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_table(rng, box);
        c.expect(dtbar_from_bps(bps_from_dtbar(t)).values == t.values, "Moebius round trip");
    }
    const Quiver k2 = Quiver::kronecker();
    for (const auto& s : {Stability::trivial(2), Stability({1, 0}, {1, 1})}) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto t = random_table(rng, box);
            const Framing e(DimVector{2, 3});
            const auto inv = dtbar_from_pair(pair_from_dtbar(t, k2, e, s, box), k2, e, s, box);
            c.expect(inv.undetermined.empty() && inv.table.values == t.values, "pair round trip");
        }
    }
    DTTable conifold;
    for (const auto& d : nonzero_classes_in_box(box)) {
        conifold.values[d] = conifold_dtbar(d);
    }
    const Framing e10(DimVector{1, 0});
    const auto inv = dtbar_from_pair(pair_from_dtbar(conifold, Quiver::conifold(), e10, Stability::trivial(2), box),
                                     Quiver::conifold(), e10, Stability::trivial(2), box);
    for (const auto& [d, value] : inv.table.values) {
        c.expect_equal(conifold.at(d), value, "conifold pair round trip " + d.to_string());
    }
}

struct Criterion {
    const char* name;
    double limit_seconds;
    void (*run)(Checker&);
};

}  // namespace

int main()
{
    const Criterion criteria[] = {
        {"AC1 grassmannian multiple covers", 1.0, ac1}, {"AC2 conifold", 5.0, ac2},
        {"AC3 hilbert points", 2.0, ac3},               {"AC4 engine anchors", 5.0, ac4},
        {"AC5 wall-crossing", 30.0, ac5},               {"AC6 oracle equivalence", 120.0, ac6},
        {"AC7 combinatorics", 30.0, ac7},
    };
    int failed = 0;
    for (const auto& crit : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            crit.run(c);
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < crit.limit_seconds;
        const bool pass = error.empty() && c.ok() && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s: %s (%.3f s, limit %.0f s; %s%s)\n", crit.name, pass ? "PASS" : "FAIL", seconds,
                    crit.limit_seconds, error.empty() ? c.summary().c_str() : error.c_str(),
                    in_time ? "" : "; time limit exceeded");
    }
    return failed == 0 ? 0 : 1;
}
