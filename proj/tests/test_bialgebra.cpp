#include "doctest.h"
#include "support.hpp"

#include "twd/catalog.hpp"

using namespace twd;
using twd::test::vec;

namespace {

const std::vector<std::string> kH4Names = {"1", "g", "x", "gx"};

Tensor t2(int i, int j, long c = 1) { return Tensor::basis(4, {i, j}, Q(c)); }
Tensor t3(int i, int j, int k, long c = 1) { return Tensor::basis(4, {i, j, k}, Q(c)); }

Bialgebra with_counit(const Bialgebra& b, Vec<Q> counit)
{
    return Bialgebra(b.name(), b.basis_names(), b.mult_constants(), b.unit(), b.comult_constants(), std::move(counit),
        b.antipode());
}

} // namespace

TEST_CASE("catalog bialgebras verify")
{
    for (const auto& name : catalog::bialgebra_names()) {
        const VerificationReport rep = verify_bialgebra(catalog::bialgebra(name));
        INFO(name);
        CHECK(rep.passed());
        CHECK(rep.find("antipode") != nullptr);
    }
}

TEST_CASE("broken counit is caught with witness")
{
    const Bialgebra h = catalog::h4_sweedler();
    const Bialgebra bad = with_counit(h, vec({1, 0, 0, 0}));
    const VerificationReport rep = verify_bialgebra(bad);
    const Check* c = rep.find("ε multiplicative");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK(c->witness == "(g,g)");
}

TEST_CASE("printed antipode S(x) = -x is rejected for this coproduct")
{
    const Bialgebra h = catalog::h4_sweedler();
    DenseMat<Q> s = DenseMat<Q>::Constant(4, 4, Q(0));
    s(0, 0) = 1;
    s(1, 1) = 1;
    s(2, 2) = -1;
    s(3, 3) = 1; // S(gx) = S(x)S(g) = -xg = gx
    const Bialgebra printed(h.name(), h.basis_names(), h.mult_constants(), h.unit(), h.comult_constants(), h.counit(), s);
    const Check* c = verify_bialgebra(printed).find("antipode");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
}

TEST_CASE("malformed structure constants")
{
    CHECK_THROWS_AS(Bialgebra("bad", {"1"}, {{0, 0, 3, Q(1)}}, vec({1}), {{0, 0, 0, Q(1)}}, vec({1})), FormatError);
}

TEST_CASE("tensor_mult in H4")
{
    const Bialgebra h = catalog::h4_sweedler();
    CHECK(tensor_mult(h, t2(2, 3), t2(2, 3)).is_zero());
    const Tensor u = t2(2, 3, 3) + t2(1, 0, -2);
    CHECK(tensor_mult(h, u, unit_tensor(h, 2)) == u);
    const Tensor dg = apply_delta_at(h, basis_element(h, 1), 0);
    const Tensor dx = apply_delta_at(h, basis_element(h, 2), 0);
    CHECK(tensor_mult(h, dg, dx) == t2(1, 3) + t2(3, 0));
    CHECK_THROWS(tensor_mult(h, t2(0, 0), basis_element(h, 0)));
}

TEST_CASE("apply_delta_at in H4")
{
    const Bialgebra h = catalog::h4_sweedler();
    CHECK(apply_delta_at(h, basis_element(h, 2), 0) == t2(0, 2) + t2(2, 1));
    CHECK(apply_delta_at(h, unit_tensor(h, 1), 0) == unit_tensor(h, 2));
    CHECK(apply_delta_at(h, t2(2, 3), 1) == t3(2, 1, 3) + t3(2, 3, 0));
    CHECK_THROWS(apply_delta_at(h, t2(2, 3), 2));
    CHECK(format_tensor(apply_delta_at(h, basis_element(h, 2), 0), kH4Names) == "1⊗x + x⊗g");
}

TEST_CASE("iterated coproduct is coassociative in every nesting")
{
    const Bialgebra h = catalog::h4_sweedler();
    for (int i = 0; i < 4; ++i) {
        const Tensor left = iterated_coproduct(h, unit_vec<Q>(4, i), 3);
        const Tensor right = apply_delta_at(h, apply_delta_at(h, basis_element(h, i), 0), 1);
        CHECK(left == right);
    }
    CHECK(iterated_delta_at(h, t2(2, 3), 1, 0) == Tensor::basis(4, {2}, Q(0)));
    CHECK(iterated_delta_at(h, t2(2, 1), 1, 0) == basis_element(h, 2));
}

TEST_CASE("primitives and g-primitives")
{
    const Bialgebra h = catalog::h4_sweedler();
    CHECK(primitives(h).dim() == 0);
    CHECK(primitives(catalog::cyclic_group(2)).dim() == 0);

    const Subspace<Q> gp = g_primitives(h, unit_vec<Q>(4, 1));
    CHECK(gp == Subspace<Q>::span(4, {vec({0, 0, 1, 0}), vec({1, -1, 0, 0})}));
    CHECK(g_primitives(h, unit_vec<Q>(4, 0)) == primitives(h));
    CHECK_THROWS_AS(g_primitives(h, unit_vec<Q>(4, 2)), PreconditionError);

    const Bialgebra z2 = catalog::cyclic_group(2);
    CHECK(g_primitives(z2, unit_vec<Q>(2, 1)) == Subspace<Q>::span(2, {vec({1, -1})}));

    for (const auto& name : catalog::bialgebra_names()) {
        const Bialgebra b = catalog::bialgebra(name);
        CHECK(augmentation_ideal(b).contains(primitives(b)));
    }
}

TEST_CASE("centre and adjoint invariants")
{
    const Bialgebra h = catalog::h4_sweedler();
    const Subspace<Q> z = centre(h);
    CHECK(z == Subspace<Q>::span(4, {vec({1, 0, 0, 0})}));
    CHECK(intersect(z, augmentation_ideal(h)).dim() == 0);
    CHECK(intersect(z, primitives(h)).dim() == 0);
    CHECK(centre(catalog::cyclic_group(3)).dim() == 3);

    const Subspace<Q> inv2 = adjoint_invariants(h, 2);
    CHECK(inv2.contains(t2(2, 3).to_dense()));
    CHECK(adjoint_invariants(catalog::cyclic_group(2), 2).dim() == 4);
    for (const auto& name : catalog::bialgebra_names()) {
        const Bialgebra b = catalog::bialgebra(name);
        CHECK(adjoint_invariants(b, 1) == centre(b));
    }
}

TEST_CASE("dual algebra")
{
    const Bialgebra z2 = catalog::cyclic_group(2);
    const Bialgebra d = dual_algebra(z2);
    CHECK(verify_bialgebra(d).passed());
    // e^1 and e^g are orthogonal idempotents summing to the unit.
    const Tensor p0 = basis_element(d, 0);
    const Tensor p1 = basis_element(d, 1);
    CHECK(tensor_mult(d, p0, p0) == p0);
    CHECK(tensor_mult(d, p1, p1) == p1);
    CHECK(tensor_mult(d, p0, p1).is_zero());
    CHECK(d.unit() == vec({1, 1}));

    for (const auto& name : catalog::bialgebra_names()) {
        const Bialgebra b = catalog::bialgebra(name);
        const Bialgebra dd = dual_algebra(dual_algebra(b));
        CHECK(verify_bialgebra(dual_algebra(b)).passed());
        CHECK(dd.mult_constants().size() == b.mult_constants().size());
        bool same = dd.unit() == b.unit() && dd.counit() == b.counit();
        const auto m1 = b.mult_constants();
        const auto m2 = dd.mult_constants();
        for (std::size_t i = 0; i < m1.size() && same; ++i)
            same = m1[i].i == m2[i].i && m1[i].j == m2[i].j && m1[i].k == m2[i].k && m1[i].value == m2[i].value;
        CHECK(same);
    }
}

TEST_CASE("sub-bialgebra check")
{
    const Bialgebra h = catalog::h4_sweedler();
    CHECK_FALSE(sub_bialgebra_defect(h, Subspace<Q>::span(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})})).has_value());
    CHECK(sub_bialgebra_defect(h, Subspace<Q>::span(4, {vec({1, 0, 0, 0}), vec({0, 0, 1, 0})})).has_value());
    CHECK(sub_bialgebra_defect(h, Subspace<Q>::span(4, {vec({0, 1, 0, 0})})).has_value());
}
