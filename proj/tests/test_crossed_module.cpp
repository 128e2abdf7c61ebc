#include "doctest.h"
#include "support.hpp"

#include "twd/crossed_module.hpp"

using namespace twd;
using twd::test::vec;

namespace {

// Heisenberg algebra x, y, z with [x,y] = z.
Vec<Q> h3_bracket(const Vec<Q>& u, const Vec<Q>& v)
{
    return vec({0, 0, 0}) + (u(0) * v(1) - u(1) * v(0)) * vec({0, 0, 1});
}

DenseMat<Q> mat_of(const Vec<Q>& packed)
{
    DenseMat<Q> m(3, 3);
    for (Index i = 0; i < 3; ++i)
        for (Index k = 0; k < 3; ++k)
            m(k, i) = packed(i * 3 + k);
    return m;
}

Vec<Q> packed_of(const DenseMat<Q>& m)
{
    Vec<Q> v(9);
    for (Index i = 0; i < 3; ++i)
        for (Index k = 0; k < 3; ++k)
            v(i * 3 + k) = m(k, i);
    return v;
}

// Der(h3) by brute force: D[u,v] = [Du,v] + [u,Dv] on basis pairs.
Subspace<Q> h3_derivations()
{
    std::map<std::pair<Index, Index>, Q> entries;
    for (Index c = 0; c < 9; ++c) {
        const DenseMat<Q> d = mat_of(unit_vec<Q>(9, c));
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 3; ++j) {
                const Vec<Q> ei = unit_vec<Q>(3, i);
                const Vec<Q> ej = unit_vec<Q>(3, j);
                const Vec<Q> r = Vec<Q>(d * h3_bracket(ei, ej)) - h3_bracket(d * ei, ej) - h3_bracket(ei, d * ej);
                for (Index k = 0; k < 3; ++k)
                    if (r(k) != 0)
                        entries[{(i * 3 + j) * 3 + k, c}] += r(k);
            }
    }
    return kernel_basis(from_entries<Q>(27, 9, entries));
}

LieCrossedModuleData h3_to_der()
{
    const Subspace<Q> der = h3_derivations();
    LieCrossedModuleData cm;
    cm.p_dim = der.dim();
    cm.n_dim = 3;
    cm.n_bracket = h3_bracket;
    cm.p_bracket = [der](const Vec<Q>& u, const Vec<Q>& v) {
        const DenseMat<Q> a = mat_of(der.combine(u));
        const DenseMat<Q> b = mat_of(der.combine(v));
        return *der.coordinates(packed_of(a * b - b * a));
    };
    cm.boundary = from_columns<Q>(cm.p_dim, 3, [&](Index j) {
        DenseMat<Q> ad(3, 3);
        for (Index i = 0; i < 3; ++i)
            ad.col(i) = h3_bracket(unit_vec<Q>(3, j), unit_vec<Q>(3, i));
        return sparse_of(*der.coordinates(packed_of(ad)));
    });
    cm.action = [der](const Vec<Q>& p, const Vec<Q>& n) { return Vec<Q>(mat_of(der.combine(p)) * n); };
    return cm;
}

} // namespace

TEST_CASE("Heisenberg algebra into its derivations")
{
    const LieCrossedModuleData cm = h3_to_der();
    CHECK(cm.p_dim == 6);
    const CrossedModuleInvariants inv = analyze_crossed_module(cm);
    for (const auto& c : inv.report.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.passed);
    }
    CHECK(inv.pi0_dim() == 4);
    REQUIRE(inv.pi1.dim() == 1);
    CHECK(inv.pi1.contains(vec({0, 0, 1})));
    CHECK(inv.jacobiator.size() == 64);
    for (const auto& j : inv.jacobiator)
        CHECK(inv.pi1.contains(j));
    for (Index u = 0; u < 4; ++u)
        for (Index v = 0; v < 4; ++v) {
            const Vec<Q>& a = inv.correction[static_cast<std::size_t>(u * 4 + v)];
            const Vec<Q> target = cm.p_bracket(inv.section.col(u), inv.section.col(v))
                - Vec<Q>(inv.section * inv.pi0_bracket[static_cast<std::size_t>(u * 4 + v)]);
            CHECK(apply(cm.boundary, a) == target);
            CHECK(a == Vec<Q>(-inv.correction[static_cast<std::size_t>(v * 4 + u)]));
        }
}

TEST_CASE("abelian double has zero Jacobiator")
{
    LieCrossedModuleData cm;
    cm.p_dim = 2;
    cm.n_dim = 2;
    auto zero = [](const Vec<Q>&, const Vec<Q>&) { return zero_vec<Q>(2); };
    cm.p_bracket = zero;
    cm.n_bracket = zero;
    cm.action = zero;
    cm.boundary = Matrix<Q>(2, 2);
    const CrossedModuleInvariants inv = analyze_crossed_module(cm);
    CHECK(inv.report.passed());
    CHECK(inv.pi0_dim() == 2);
    CHECK(inv.pi1.dim() == 2);
    for (const auto& j : inv.jacobiator)
        CHECK(is_zero(j));
}

TEST_CASE("a wrong action is caught")
{
    LieCrossedModuleData cm = h3_to_der();
    cm.action = [](const Vec<Q>&, const Vec<Q>&) { return zero_vec<Q>(3); };
    const CrossedModuleInvariants inv = analyze_crossed_module(cm);
    const Check* c = inv.report.find("∂(p·n) = [p,∂n]");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK_FALSE(c->witness.empty());
}

TEST_CASE("bilinear and trilinear evaluation")
{
    const BilinearTable t = {vec({1}), vec({2}), vec({3}), vec({4})};
    CHECK(eval_bilinear(t, 2, vec({1, 1}), vec({0, 1}), 1) == vec({6}));
    TrilinearTable tri(8, vec({0}));
    tri[7] = vec({5});
    CHECK(eval_trilinear(tri, 2, vec({2, 1}), vec({0, 3}), vec({1, 1}), 1) == vec({15}));
}
