#include "doctest.h"
#include "support.hpp"

#include "twd/catalog.hpp"
#include "twd/lie.hpp"

using namespace twd;
using twd::test::vec;

namespace {

// Der(g) by brute force over the dim² unit endomorphisms, using only the
// vector bracket.
Index brute_force_der_dim(const LieAlgebra& g)
{
    const int n = g.dim();
    std::map<std::pair<Index, Index>, Q> entries;
    for (Index c = 0; c < n * n; ++c) {
        const DenseMat<Q> d = unflatten_endo(n, unit_vec<Q>(n * n, c));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Vec<Q> ei = unit_vec<Q>(n, i);
                const Vec<Q> ej = unit_vec<Q>(n, j);
                const Vec<Q> r = Vec<Q>(d * g.bracket(ei, ej)) - g.bracket(d * ei, ej) - g.bracket(ei, d * ej);
                for (int k = 0; k < n; ++k)
                    if (r(k) != 0)
                        entries[{(i * n + j) * n + k, c}] += r(k);
            }
    }
    return kernel_basis(from_entries<Q>(Index(n) * n * n, Index(n) * n, entries)).dim();
}

LieAlgebra sl2_permuted()
{
    // Basis order h, e, f.
    std::vector<StructureConstant> sc;
    auto both = [&](int i, int j, int k, long c) {
        sc.push_back({i, j, k, Q(c)});
        sc.push_back({j, i, k, Q(-c)});
    };
    both(1, 2, 0, 1);
    both(0, 1, 1, 2);
    both(0, 2, 2, -2);
    return LieAlgebra("sl2_perm", {"h", "e", "f"}, sc);
}

} // namespace

TEST_CASE("catalog Lie algebras satisfy antisymmetry and Jacobi")
{
    for (const auto& name : catalog::lie_names()) {
        const LieAlgebra g = catalog::lie_algebra(name);
        INFO(name);
        CHECK(verify_lie(g).passed());
    }
    CHECK(catalog::lie_sl2().bracket(unit_vec<Q>(3, 0), unit_vec<Q>(3, 2)) == vec({0, 1, 0}));
    CHECK_THROWS_AS(catalog::lie_algebra("gl3"), FormatError);
}

TEST_CASE("broken brackets are reported")
{
    const LieAlgebra one_sided("bad", {"x", "y"}, {{0, 1, 1, Q(1)}});
    const VerificationReport r = verify_lie(one_sided);
    CHECK_FALSE(r.find("antisymmetry")->passed);
    CHECK(r.find("antisymmetry")->witness == "(x,y)");

    // [x,y] = y, [x,z] = y, [y,z] = x is antisymmetric but not Jacobi.
    std::vector<StructureConstant> sc;
    auto both = [&](int i, int j, int k) {
        sc.push_back({i, j, k, Q(1)});
        sc.push_back({j, i, k, Q(-1)});
    };
    both(0, 1, 1);
    both(0, 2, 1);
    both(1, 2, 0);
    const VerificationReport r2 = verify_lie(LieAlgebra("nonjacobi", {"x", "y", "z"}, sc));
    CHECK(r2.find("antisymmetry")->passed);
    CHECK_FALSE(r2.find("Jacobi")->passed);

    CHECK_THROWS_AS(LieAlgebra("oob", {"x"}, {{0, 0, 1, Q(1)}}), FormatError);
    CHECK_THROWS_AS(LieAlgebra("dup", {"x", "x"}, {}), FormatError);
}

TEST_CASE("derivations, inner derivations and centre")
{
    const LieAlgebra sl2 = catalog::lie_sl2();
    CHECK(lie_derivations(sl2).dim() == 3);
    CHECK(inner_derivations(sl2) == lie_derivations(sl2));
    CHECK(outer_derivations(sl2).outer.dim() == 0);
    CHECK(lie_centre(sl2).dim() == 0);

    const LieAlgebra ab2 = catalog::lie_ab2();
    CHECK(lie_derivations(ab2).dim() == 4);
    CHECK(inner_derivations(ab2).dim() == 0);
    CHECK(outer_derivations(ab2).outer.dim() == 4);
    CHECK(lie_centre(ab2).dim() == 2);

    const LieAlgebra h3 = catalog::lie_heis3();
    CHECK(lie_derivations(h3).dim() == 6);
    CHECK(inner_derivations(h3).dim() == 2);
    CHECK(outer_derivations(h3).outer.dim() == 4);
    REQUIRE(lie_centre(h3).dim() == 1);
    CHECK(lie_centre(h3).contains(vec({0, 0, 1})));

    const LieAlgebra n2 = catalog::lie_nonab2();
    CHECK(lie_derivations(n2).dim() == 2);
    CHECK(outer_derivations(n2).outer.dim() == 0);

    for (const auto& name : catalog::lie_names()) {
        const LieAlgebra g = catalog::lie_algebra(name);
        INFO(name);
        CHECK(lie_derivations(g).dim() == brute_force_der_dim(g));
        CHECK(lie_derivations(g).contains(inner_derivations(g)));
    }
}

TEST_CASE("outer derivation bracket of ab2 is the gl2 commutator")
{
    const LieAlgebra ab2 = catalog::lie_ab2();
    const OuterDerivations o = outer_derivations(ab2);
    REQUIRE(o.outer.dim() == 4);
    for (Index u = 0; u < 4; ++u)
        for (Index v = 0; v < 4; ++v) {
            const DenseMat<Q> a = o.lift(2, u);
            const DenseMat<Q> b = o.lift(2, v);
            const Vec<Q> expect = o.outer.to_quotient(*o.der.coordinates(flatten_endo(a * b - b * a)));
            CHECK(o.bracket[static_cast<std::size_t>(u * 4 + v)] == expect);
        }
}

TEST_CASE("exterior basis and wedge")
{
    const auto b = exterior_basis(4, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.front() == std::vector<int>{0, 1});
    CHECK(b.back() == std::vector<int>{2, 3});
    for (std::size_t i = 0; i < b.size(); ++i)
        CHECK(exterior_index(4, b[i]) == static_cast<Index>(i));
    const auto b3 = exterior_basis(5, 3);
    for (std::size_t i = 0; i < b3.size(); ++i)
        CHECK(exterior_index(5, b3[i]) == static_cast<Index>(i));
    CHECK(exterior_basis(3, 0).size() == 1);
    CHECK(exterior_basis(3, 4).empty());

    const Vec<Q> x = vec({1, 0, 0});
    const Vec<Q> y = vec({0, 1, 0});
    CHECK(wedge(3, {x, y}) == vec({1, 0, 0}));
    CHECK(wedge(3, {y, x}) == vec({-1, 0, 0}));
    CHECK(is_zero(wedge(3, {x, x})));
    CHECK(wedge(3, {vec({1, 1, 0}), vec({0, 1, 1})}) == vec({1, 1, 1}));
    CHECK(wedge_product(3, 1, x, 1, y) == wedge(3, {x, y}));
}

TEST_CASE("exterior invariants")
{
    const LieAlgebra sl2 = catalog::lie_sl2();
    CHECK(exterior_invariants(sl2, 0).dim() == 1);
    CHECK(exterior_invariants(sl2, 1).dim() == 0);
    CHECK(exterior_invariants(sl2, 2).dim() == 0);
    CHECK(exterior_invariants(sl2, 3).dim() == 1);

    const LieAlgebra ab2 = catalog::lie_ab2();
    const Subspace<Q> inv = exterior_invariants(ab2, 2);
    REQUIRE(inv.dim() == 1);
    CHECK(inv.contains(vec({1})));

    const LieAlgebra h3 = catalog::lie_heis3();
    const Subspace<Q> h3inv = exterior_invariants(h3, 2);
    CHECK(h3inv.dim() == 2);
    CHECK(h3inv.contains(wedge(3, {vec({1, 0, 0}), vec({0, 0, 1})})));
    CHECK(h3inv.contains(wedge(3, {vec({0, 1, 0}), vec({0, 0, 1})})));

    const LieAlgebra perm = sl2_permuted();
    CHECK(verify_lie(perm).passed());
    for (int n = 0; n <= 3; ++n)
        CHECK(exterior_invariants(perm, n).dim() == exterior_invariants(sl2, n).dim());

    // Equal to the kernel of the assembled action matrix.
    for (int n = 1; n <= 3; ++n)
        for (const auto& v : exterior_invariants(h3, n).vectors())
            for (int i = 0; i < 3; ++i)
                CHECK(is_zero(Vec<Q>(exterior_action(3, lie_ad(h3, unit_vec<Q>(3, i)), n) * v)));
}

TEST_CASE("Schouten bracket")
{
    const LieAlgebra sl2 = catalog::lie_sl2();
    test::Gen gen(11);
    for (int k = 0; k < 10; ++k) {
        const Vec<Q> x = gen.vector(3);
        const Vec<Q> y = gen.vector(3);
        CHECK(schouten(sl2, 1, x, 1, y) == sl2.bracket(x, y));
    }

    const LieAlgebra ab2 = catalog::lie_ab2();
    CHECK(is_zero(schouten(ab2, 1, vec({1, 2}), 2, vec({3}))));
    CHECK(is_zero(schouten(ab2, 2, vec({1}), 1, vec({1, 0}))));

    // e∧h with h∧f against the formula expanded over vector factors.
    const Vec<Q> e = vec({1, 0, 0});
    const Vec<Q> h = vec({0, 1, 0});
    const Vec<Q> f = vec({0, 0, 1});
    const std::vector<Vec<Q>> xs{e, h};
    const std::vector<Vec<Q>> ys{h, f};
    Vec<Q> oracle = zero_vec<Q>(1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<Vec<Q>> factors{sl2.bracket(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)])};
            factors.push_back(xs[static_cast<std::size_t>(1 - i)]);
            factors.push_back(ys[static_cast<std::size_t>(1 - j)]);
            const Vec<Q> term = wedge(3, factors);
            oracle += (i + j) % 2 == 0 ? term : Vec<Q>(-term);
        }
    const Vec<Q> s = schouten(sl2, 2, wedge(3, xs), 2, wedge(3, ys));
    CHECK(s == oracle);
    // [e,h]∧h∧f = -2e∧h∧f and [h,f]∧e∧h = -2e∧h∧f; the other two terms vanish.
    CHECK(s == vec({-4}));

    for (const auto& name : catalog::lie_names()) {
        const LieAlgebra g = catalog::lie_algebra(name);
        for (int m = 1; m <= g.dim(); ++m)
            for (int n = 1; n <= g.dim() && m + n - 1 <= g.dim(); ++n)
                for (const auto& a : exterior_invariants(g, m).vectors())
                    for (const auto& b : exterior_invariants(g, n).vectors()) {
                        INFO(name << " " << m << " " << n);
                        CHECK(is_zero(schouten(g, m, a, n, b)));
                    }
    }
}

TEST_CASE("semidirect product OutDer ⋉ (Λ²g)^g")
{
    const LieAlgebra ab2 = catalog::lie_ab2();
    const Semidirect s = semidirect_outder_tw(ab2);
    CHECK(s.report.passed());
    REQUIRE(s.outer_dim() == 4);
    REQUIRE(s.twist_dim() == 1);
    CHECK(s.algebra.dim() == 5);
    // d·(x∧y) = tr(d) x∧y on every gl2 generator.
    for (int u = 0; u < 4; ++u) {
        const DenseMat<Q> d = s.out.lift(2, u);
        const Q tr = d(0, 0) + d(1, 1);
        const Vec<Q> act = s.algebra.bracket(unit_vec<Q>(5, u), unit_vec<Q>(5, 4));
        Vec<Q> expect = zero_vec<Q>(5);
        expect(4) = tr;
        CHECK(act == expect);
    }
    CHECK(is_zero(s.algebra.bracket(unit_vec<Q>(5, 4), unit_vec<Q>(5, 4))));

    CHECK(semidirect_outder_tw(catalog::lie_sl2()).algebra.dim() == 0);
    CHECK(semidirect_outder_tw(catalog::lie_nonab2()).algebra.dim() == 0);

    for (const auto& name : catalog::lie_names()) {
        INFO(name);
        const Semidirect sd = semidirect_outder_tw(catalog::lie_algebra(name));
        CHECK(sd.report.passed());
    }
    const Semidirect h = semidirect_outder_tw(catalog::lie_heis3());
    CHECK(h.outer_dim() == 4);
    CHECK(h.twist_dim() == 2);
}
