#include "dtq/quiver.hpp"
#include "dtq/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dtq;

namespace {

DimVector random_class(std::mt19937& rng, std::size_t n, int max)
{
    std::uniform_int_distribution<int> dist(0, max);
    std::vector<int> e(n);
    for (auto& x : e) {
        x = dist(rng);
    }
    return DimVector(e);
}

}  // namespace

TEST_CASE("dimension vectors")
{
    const DimVector d{2, 1};
    CHECK(d.to_string() == "2,1");
    CHECK(DimVector::parse("2,1") == d);
    CHECK(d.total() == 3);
    CHECK(DimVector{4, 6}.content() == 2);
    CHECK(DimVector{4, 6}.divided(2) == DimVector{2, 3});
    CHECK(d.fits_in(DimVector{2, 2}));
    CHECK_FALSE(d.fits_in(DimVector{1, 5}));
    CHECK(nonzero_classes_in_box(DimVector{1, 1}) == std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(classes_in_box(DimVector{2}).size() == 3);
}

TEST_CASE("quiver validation")
{
    CHECK_THROWS_AS(Quiver::from_names({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Quiver::from_names({"a"}, {{"a", "b", "x"}}), Error);
    CHECK_THROWS_AS(Quiver::from_names({"a"}, {{"a", "a", "x"}, {"a", "a", "x"}}), Error);
    const Quiver k2 = Quiver::kronecker();
    CHECK(k2.vertex_index("v1") == 1);
    CHECK(k2.arrow_index("b") == 1);
    CHECK_FALSE(k2.arrow_index("zz").has_value());
    CHECK_THROWS_AS(k2.check(DimVector{1}), VertexMismatch);
}

TEST_CASE("euler forms")
{
    const Quiver k2 = Quiver::kronecker();
    CHECK(euler_form_nonsym(Quiver::point(), DimVector{2}, DimVector{3}) == 6);
    CHECK(euler_form_nonsym(k2, DimVector{1, 0}, DimVector{0, 1}) == -2);
    CHECK(euler_form_nonsym(k2, DimVector{0, 1}, DimVector{1, 0}) == 0);
    CHECK(euler_form_antisym(k2, DimVector{1, 0}, DimVector{0, 1}) == -2);
    CHECK(euler_form_antisym(k2, DimVector{2, 1}, DimVector{2, 1}) == 0);
    CHECK_THROWS_AS(euler_form_nonsym(k2, DimVector{1}, DimVector{1, 0}), VertexMismatch);

    const Quiver con = Quiver::conifold();
    for (const auto& d : nonzero_classes_in_box(DimVector{3, 3})) {
        for (const auto& e : nonzero_classes_in_box(DimVector{3, 3})) {
            CHECK(euler_form_antisym(con, d, e) == 0);
        }
    }
}

TEST_CASE("euler form properties on random classes")
{
    std::mt19937 rng(7);
    for (const Quiver& q : {Quiver::a2(), Quiver::kronecker(), Quiver::conifold()}) {
        for (int i = 0; i < 50; ++i) {
            const auto d = random_class(rng, 2, 4);
            const auto e = random_class(rng, 2, 4);
            CHECK(euler_form_antisym(q, d, e) == -euler_form_antisym(q, e, d));
            CHECK(euler_form_antisym(q, d, e) == euler_form_nonsym(q, d, e) - euler_form_nonsym(q, e, d));
        }
    }
}

TEST_CASE("euler form equals hom minus ext over a finite field")
{
    for (const Quiver& q : {Quiver::a2(), Quiver::kronecker(), Quiver::one_loop()}) {
        const DimVector box = q.vertex_count() == 2 ? DimVector{3, 3} : DimVector{3};
        std::uint64_t seed = 11;
        for (const auto& d : nonzero_classes_in_box(box)) {
            for (const auto& e : nonzero_classes_in_box(box)) {
                if (d.total() > 3 || e.total() > 3) {
                    continue;
                }
                for (int p : {2, 3}) {
                    const auto he = hom_ext_oracle(q, random_rep(q, d, p, seed), random_rep(q, e, p, seed + 1));
                    seed += 2;
                    CHECK(he.hom - he.ext1 == euler_form_nonsym(q, d, e));
                }
            }
        }
    }
}

TEST_CASE("slope stability")
{
    const Stability gen({1, 0}, {1, 1});
    CHECK(gen.slope(DimVector{1, 1}) == frac(1, 2));
    CHECK(gen.slope(DimVector{1, 0}) == 1);
    CHECK(Stability::trivial(2).slope(DimVector{3, 1}) == 0);
    CHECK_THROWS_WITH_AS(gen.slope(DimVector{0, 0}), "slope undefined on zero class", Error);
    CHECK_THROWS_AS(Stability({1, 0}, {1, 0}), Error);
    CHECK_THROWS_AS(Stability({1, 0}, {1, -1}), Error);
    CHECK(gen.rescaled(frac(7, 3)).slope(DimVector{2, 1}) == gen.slope(DimVector{2, 1}));
}

TEST_CASE("seesaw")
{
    std::mt19937 rng(3);
    const Stability s({frac(3, 2), -2}, {1, frac(5, 2)});
    for (int i = 0; i < 200; ++i) {
        const auto a = random_class(rng, 2, 4);
        const auto b = random_class(rng, 2, 4);
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        const Rational x = s.slope(a) - s.slope(a + b);
        const Rational y = s.slope(a + b) - s.slope(b);
        CHECK(sgn(x) == sgn(y));
    }
}

TEST_CASE("genericity")
{
    CHECK(is_generic(Quiver::conifold(), Stability::trivial(2), DimVector{3, 3}).generic);
    const auto k2_zero = is_generic(Quiver::kronecker(), Stability::trivial(2), DimVector{1, 1});
    CHECK_FALSE(k2_zero.generic);
    REQUIRE(k2_zero.witness.has_value());
    CHECK(k2_zero.witness->first == DimVector{1, 0});
    CHECK(k2_zero.witness->second == DimVector{0, 1});
    CHECK(is_generic(Quiver::kronecker(), Stability({1, 0}, {1, 1}), DimVector{2, 2}).generic);
    CHECK(is_generic(Quiver::point(), Stability::trivial(1), DimVector{6}).generic);
}

TEST_CASE("superpotential validation")
{
    const Quiver con = Quiver::conifold();
    CHECK_THROWS_AS(Superpotential(con, {{1, {"e1", "f1"}}}), Error);
    CHECK_THROWS_AS(Superpotential(con, {{1, {"e1", "e2", "f1"}}}), Error);
    CHECK_THROWS_AS(Superpotential(con, {{1, {"e1", "f1", "zz"}}}), Error);
    CHECK(Superpotential().is_zero());
    CHECK_FALSE(Superpotential::conifold(con).is_zero());
}

TEST_CASE("cyclic derivatives of the conifold potential")
{
    const Quiver con = Quiver::conifold();
    const auto w = Superpotential::conifold(con);
    const auto de1 = cyclic_derivative(con, w, "e1");
    REQUIRE(de1.size() == 2);
    CHECK(de1[0] == PathTerm{1, {"f1", "e2", "f2"}});
    CHECK(de1[1] == PathTerm{-1, {"f2", "e2", "f1"}});

    const auto df2 = cyclic_derivative(con, w, "f2");
    REQUIRE(df2.size() == 2);
    CHECK(df2[0] == PathTerm{1, {"e1", "f1", "e2"}});
    CHECK(df2[1] == PathTerm{-1, {"e2", "f1", "e1"}});

    CHECK_THROWS_AS(cyclic_derivative(con, w, "zz"), Error);
    const Quiver loop = Quiver::from_names({"v"}, {{"v", "v", "x"}, {"v", "v", "y"}});
    CHECK(cyclic_derivative(loop, Superpotential(loop, {{1, {"x", "x", "x"}}}), "y").empty());
}

TEST_CASE("cyclic derivative is rotation invariant")
{
    const Quiver con = Quiver::conifold();
    const Superpotential w(con, {{1, {"e1", "f1", "e2", "f2"}}, {-1, {"e1", "f2", "e2", "f1"}}});
    const Superpotential rotated(con, {{1, {"e2", "f2", "e1", "f1"}}, {-1, {"f1", "e1", "f2", "e2"}}});
    for (const auto& a : con.arrows()) {
        CHECK(cyclic_derivative(con, w, a.label) == cyclic_derivative(con, rotated, a.label));
    }
}

TEST_CASE("potential trace evaluation")
{
    const Quiver con = Quiver::conifold();
    const auto w = Superpotential::conifold(con);
    auto scalar = [](long x) {
        RationalMatrix m(1, 1);
        m.at(0, 0) = x;
        return m;
    };
    std::vector<RationalMatrix> ones(4, scalar(1));
    CHECK(potential_trace_eval(con, w, DimVector{1, 1}, ones) == 0);

    std::vector<RationalMatrix> zeros(4, scalar(0));
    CHECK(potential_trace_eval(con, w, DimVector{1, 1}, zeros) == 0);

    std::vector<RationalMatrix> vals{scalar(2), scalar(3), scalar(5), scalar(7)};
    CHECK(potential_trace_eval(con, w, DimVector{1, 1}, vals) == 0);

    // Non-commuting matrices at d = (1,2) exercise the trace order.
    RationalMatrix e1(2, 1), e2(2, 1), f1(1, 2), f2(1, 2);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    f1.at(0, 0) = 1;
    f1.at(0, 1) = 2;
    f2.at(0, 1) = 3;
    std::vector<RationalMatrix> m{e1, e2, f1, f2};
    // Tr(f2 e2 f1 e1) - Tr(f1 e2 f2 e1) = (f2 e2)(f1 e1) - (f1 e2)(f2 e1) = 3*1 - 2*0
    CHECK(potential_trace_eval(con, w, DimVector{1, 2}, m) == 3);

    std::vector<RationalMatrix> empty{RationalMatrix(0, 1), RationalMatrix(0, 1), RationalMatrix(1, 0),
                                      RationalMatrix(1, 0)};
    CHECK(potential_trace_eval(con, w, DimVector{1, 0}, empty) == 0);
    CHECK_THROWS_AS(potential_trace_eval(con, w, DimVector{1, 1}, m), Error);
}
