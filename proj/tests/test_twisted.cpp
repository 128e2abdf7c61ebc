#include "doctest.h"
#include "support.hpp"

#include "twd/catalog.hpp"
#include "twd/twisted.hpp"

using namespace twd;
using twd::test::vec;

namespace {

Tensor t2(int i, int j, const Q& c = Q(1)) { return Tensor::basis(4, {i, j}, c); }

// (d, 0) with d(g) = 0, d(x) = x on H4.
TwistedDerivation h4_d()
{
    TwistedDerivation t;
    t.d = DenseMat<Q>::Constant(4, 4, Q(0));
    t.d(2, 2) = 1;
    t.d(3, 3) = 1;
    t.phi = Tensor(4, 2);
    return t;
}

// (0, ψ) with ψ = x⊗gx.
TwistedDerivation h4_psi()
{
    TwistedDerivation t;
    t.d = DenseMat<Q>::Constant(4, 4, Q(0));
    t.phi = t2(2, 3);
    return t;
}

Vec<Q> pi0_class(const Bialgebra& b, const TwistedCrossedModule& cm, const TwistedDerivation& t)
{
    return cm.inv.pi0.to_quotient(*cm.der.coordinates(pack(b, t)));
}

} // namespace

TEST_CASE("Der_tw(H4) has dimension 5")
{
    const Bialgebra h = catalog::h4_sweedler();
    const Subspace<Q> der = twisted_derivation_space(h);
    CHECK(der.dim() == 5);
    for (const auto& v : der.vectors())
        CHECK(verify_twisted_derivation(h, unpack(h, v)).passed());
    CHECK(verify_twisted_derivation(h, zero_twisted_derivation(h)).passed());
    CHECK(der.contains(pack(h, h4_d())));
    CHECK(der.contains(pack(h, h4_psi())));
}

TEST_CASE("constraint violations carry witnesses")
{
    const Bialgebra h = catalog::h4_sweedler();
    TwistedDerivation t = h4_psi();
    t.phi = t2(2, 2);
    const VerificationReport rep = verify_twisted_derivation(h, t);
    CHECK_FALSE(rep.passed());
    TwistedDerivation u = zero_twisted_derivation(h);
    u.d(0, 1) = 1; // d(g) = 1
    const Check* n = verify_twisted_derivation(h, u).find("normd");
    REQUIRE(n != nullptr);
    CHECK_FALSE(n->passed);
    CHECK(n->witness == "(g)");
}

TEST_CASE("Der_tw(k[Z/2]) has only d = 0")
{
    const Bialgebra z2 = catalog::cyclic_group(2);
    const Subspace<Q> der = twisted_derivation_space(z2);
    for (const auto& v : der.vectors())
        CHECK(is_zero(Vec<Q>(v.head(4))));
    const TwistedCrossedModule cm = crossed_module(z2);
    CHECK(cm.inv.pi0_dim() == 0);
    CHECK(cm.inv.pi1.dim() == 0);
}

TEST_CASE("H4 bracket [(d,0),(0,ψ)] = (0,2ψ)")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedDerivation br = bracket(h, h4_d(), h4_psi());
    CHECK(is_zero(Vec<Q>(br.d.reshaped())));
    CHECK(br.phi == t2(2, 3, Q(2)));
    CHECK(bracket(h, h4_psi(), h4_psi()) == zero_twisted_derivation(h));
}

TEST_CASE("bracket is antisymmetric, satisfies Jacobi and stays in Der_tw")
{
    for (const auto& name : catalog::bialgebra_names()) {
        const Bialgebra b = catalog::bialgebra(name);
        const Subspace<Q> der = twisted_derivation_space(b);
        INFO(name);
        std::vector<TwistedDerivation> basis;
        for (const auto& v : der.vectors())
            basis.push_back(unpack(b, v));
        for (const auto& x : basis)
            for (const auto& y : basis) {
                const TwistedDerivation xy = bracket(b, x, y);
                CHECK(xy == Q(-1) * bracket(b, y, x));
                CHECK(der.contains(pack(b, xy)));
            }
        if (basis.size() > 6)
            basis.resize(6);
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    const TwistedDerivation j = bracket(b, x, bracket(b, y, z)) + bracket(b, y, bracket(b, z, x))
                        + bracket(b, z, bracket(b, x, y));
                    CHECK(j == zero_twisted_derivation(b));
                }
    }
}

TEST_CASE("boundary examples in H4")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedDerivation bx = boundary(h, vec({0, 0, 1, 0}));
    CHECK(bx.d == ad_matrix(h, vec({0, 0, 1, 0})));
    CHECK(bx.phi == t2(2, 0) - t2(2, 1));

    const TwistedDerivation bg = boundary(h, vec({-1, 1, 0, 0}));
    CHECK(bg.d == ad_matrix(h, vec({0, 1, 0, 0})));
    const Tensor g1 = t2(1, 0) - t2(0, 0);
    const Tensor expect = g1 + flip(g1) - t2(1, 1) + t2(0, 0);
    CHECK(bg.phi == expect);

    CHECK_THROWS_AS(boundary(h, vec({1, 0, 0, 0})), PreconditionError);
}

TEST_CASE("∂ is a Lie homomorphism with image an ideal")
{
    for (const auto& name : catalog::bialgebra_names()) {
        const Bialgebra b = catalog::bialgebra(name);
        const auto eps = augmentation_ideal(b).vectors();
        INFO(name);
        for (const auto& a : eps)
            for (const auto& c : eps) {
                const Vec<Q> ac = commutator(b, element(b, a), element(b, c)).to_dense();
                CHECK(boundary(b, ac) == bracket(b, boundary(b, a), boundary(b, c)));
            }
        const TwistedCrossedModule cm = crossed_module(b);
        const Check* ideal = cm.inv.report.find("image of ∂ is an ideal");
        REQUIRE(ideal != nullptr);
        CHECK(ideal->passed);
    }
}

TEST_CASE("gauge_between")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedDerivation t = h4_d() + h4_psi();
    const auto same = gauge_between(h, t, t);
    REQUIRE(same.has_value());
    CHECK(is_zero(*same));

    const Vec<Q> x = vec({0, 0, 1, 0});
    const auto a = gauge_between(h, t, t + boundary(h, x));
    REQUIRE(a.has_value());
    CHECK(*a == x);

    CHECK_FALSE(gauge_between(h, h4_d(), h4_psi()).has_value());
}

TEST_CASE("crossed module of H4")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedCrossedModule cm = crossed_module(h);
    for (const auto& c : cm.inv.report.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.passed);
    }
    REQUIRE(cm.inv.pi0_dim() == 2);
    CHECK(cm.inv.pi1.dim() == 0);
    const Vec<Q> D = pi0_class(h, cm, h4_d());
    const Vec<Q> P = pi0_class(h, cm, h4_psi());
    CHECK(Subspace<Q>::span(2, {D, P}).dim() == 2);
    CHECK(eval_bilinear(cm.inv.pi0_bracket, 2, D, P, 2) == Vec<Q>(Q(2) * P));
    for (const auto& j : cm.inv.jacobiator)
        CHECK(is_zero(j));
    for (Index u = 0; u < 2; ++u)
        CHECK(verify_twisted_derivation(h, cm.section(h, u)).passed());
}

TEST_CASE("π1 is the central primitives for every catalog bialgebra")
{
    for (const auto& name : catalog::bialgebra_names()) {
        const Bialgebra b = catalog::bialgebra(name);
        const TwistedCrossedModule cm = crossed_module(b);
        INFO(name);
        CHECK(cm.inv.report.passed());
        const Subspace<Q> zp = intersect(centre(b), primitives(b));
        CHECK(Subspace<Q>::span(b.dim(), cm.pi1_vectors()) == zp);
    }
}

TEST_CASE("invariant twists, bialgebra derivations and outer quotients of H4")
{
    const Bialgebra h = catalog::h4_sweedler();
    CHECK(invariant_twists(h) == Subspace<Q>::span(16, {t2(2, 3).to_dense()}));
    CHECK(bialgebra_derivations(h) == Subspace<Q>::span(16, {Vec<Q>(pack(h, h4_d()).head(16))}));

    const OuterQuotients oq = outer_quotients(h);
    CHECK(oq.out_der0.dim() == 1);
    CHECK(oq.out_bialg.dim() == 1);
    CHECK(oq.separated);
    CHECK(oq.semidirect.passed());
    CHECK(oq.semidirect.checks.size() == 4);
    CHECK(is_zero(oq.out_der0_bracket[0]));
    CHECK(is_zero(oq.out_bialg_bracket[0]));
}

TEST_CASE("outer quotients of group algebras vanish")
{
    for (const char* name : {"group_Z2", "group_Z3"}) {
        const Bialgebra b = catalog::bialgebra(name);
        const OuterQuotients oq = outer_quotients(b);
        INFO(name);
        CHECK(oq.out_der0.dim() == 0);
        CHECK(oq.out_bialg.dim() == 0);
        CHECK(oq.separated);
        CHECK(oq.semidirect.passed());
    }
}

TEST_CASE("separation in H4")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedCrossedModule cm = crossed_module(h);
    const Subspace<Q> inv2 = adjoint_invariants(h, 2);
    for (const auto& v : cm.der.vectors()) {
        const auto s = separate(h, unpack(h, v));
        REQUIRE(s.has_value());
        CHECK(verify_twisted_derivation(h, s->separated).passed());
        CHECK(bialgebra_derivations(h).contains(Vec<Q>(pack(h, s->separated).head(16))));
        CHECK(inv2.contains(s->separated.phi.to_dense()));
    }
    const auto psi = separate(h, h4_psi());
    REQUIRE(psi.has_value());
    CHECK(is_zero(psi->a));
    CHECK(psi->separated == h4_psi());

    const auto inner = separate(h, boundary(h, vec({0, 0, 1, 0})));
    REQUIRE(inner.has_value());
    CHECK(is_zero(pi0_class(h, cm, inner->separated)));
}

TEST_CASE("identity twisted automorphism")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedAutomorphism id = identity_automorphism(h);
    CHECK(verify_twisted_automorphism(h, id).passed());
    const TwistedAutomorphism t{catalog::h4_scaling(Q(3)), catalog::h4_twist(Q(5))};
    const TwistedAutomorphism l = compose(h, id, t);
    const TwistedAutomorphism r = compose(h, t, id);
    CHECK(l.f == t.f);
    CHECK(l.F == t.F);
    CHECK(r.f == t.f);
    CHECK(r.F == t.F);
}

TEST_CASE("H4 remark family f_c, Φ_a")
{
    const Bialgebra h = catalog::h4_sweedler();
    const std::vector<Q> cs = {Q(2), Q(3), Q(1) / Q(2)};
    const std::vector<Q> as = {Q(1), Q(5), Q(-2)};
    for (const Q& c : cs)
        for (const Q& a : as) {
            const TwistedAutomorphism ta{catalog::h4_scaling(c), catalog::h4_twist(a)};
            CHECK(verify_twisted_automorphism(h, ta).passed());
            CHECK(apply_endo_all(catalog::h4_twist(a), catalog::h4_scaling(c)) == catalog::h4_twist(c * c * a));
            for (const Q& a2 : as)
                CHECK(tensor_mult(h, catalog::h4_twist(a), catalog::h4_twist(a2)) == catalog::h4_twist(a + a2));
            for (const Q& c2 : cs) {
                CHECK(catalog::h4_scaling(c) * catalog::h4_scaling(c2) == catalog::h4_scaling(c * c2));
                const TwistedAutomorphism other{catalog::h4_scaling(c2), catalog::h4_twist(a)};
                const TwistedAutomorphism comp = compose(h, ta, other);
                CHECK(comp.f == catalog::h4_scaling(c * c2));
                CHECK(comp.F == catalog::h4_twist(c * c * a + a));
                CHECK(verify_twisted_automorphism(h, comp).passed());
            }
        }
}

TEST_CASE("twisted automorphism failures")
{
    const Bialgebra h = catalog::h4_sweedler();
    TwistedAutomorphism bad = identity_automorphism(h);
    bad.F = t2(0, 0) + t2(2, 2);
    const VerificationReport rep = verify_twisted_automorphism(h, bad);
    CHECK_FALSE(rep.passed());
    CHECK_THROWS_AS(verify_twisted_automorphism(h, {identity_automorphism(h).f, Tensor(4, 2)}), PreconditionError);
    TwistedAutomorphism singular = identity_automorphism(h);
    singular.f(2, 2) = 0;
    CHECK_THROWS_AS(verify_twisted_automorphism(h, singular), PreconditionError);
}

TEST_CASE("gauge transformations of twisted automorphisms")
{
    const Bialgebra h = catalog::h4_sweedler();
    const TwistedAutomorphism id = identity_automorphism(h);
    // Conjugation by g with the identity twist.
    TwistedAutomorphism conj_g = id;
    const Vec<Q> g = vec({0, 1, 0, 0});
    conj_g.f = left_mult_matrix(h, g) * right_mult_matrix(h, g);
    CHECK(verify_twisted_automorphism(h, conj_g).passed());
    CHECK(gauge_auto(h, id, conj_g, g).passed());
    CHECK_FALSE(gauge_auto(h, id, id, g).passed());
    CHECK_THROWS_AS(gauge_auto(h, id, id, vec({0, 0, 1, 0})), PreconditionError);

    const auto inv = tensor_inverse(h, catalog::h4_twist(Q(4)));
    REQUIRE(inv.has_value());
    CHECK(*inv == catalog::h4_twist(Q(-4)));
}

TEST_CASE("R-matrices of k[Z/2]")
{
    const Bialgebra z2 = catalog::cyclic_group(2);
    const Tensor one = unit_tensor(z2, 2);
    CHECK(r_matrix_verify(z2, one).passed());
    CHECK(r_matrix_verify(z2, one, TriangleForm::Printed).passed());
    CHECK(tangent_r_space(z2, one).dim() == 0);
    CHECK(tangent_r_space(z2, one, TriangleForm::Printed).dim() == 0);

    const Tensor bichar = catalog::z2_r_matrix();
    CHECK(r_matrix_verify(z2, bichar).passed());
    CHECK_FALSE(r_matrix_verify(z2, bichar, TriangleForm::Printed).passed());
    CHECK_THROWS_AS(r_matrix_verify(z2, Tensor(2, 2)), PreconditionError);
}

TEST_CASE("H4 R-matrix family and its tangent direction")
{
    const Bialgebra h = catalog::h4_sweedler();
    const Tensor direction = catalog::h4_r_matrix(Q(1)) - catalog::h4_r_matrix(Q(0));
    for (const Q& alpha : {Q(0), Q(1), Q(3), Q(-1) / Q(2)}) {
        const Tensor R = catalog::h4_r_matrix(alpha);
        CHECK(r_matrix_verify(h, R).passed());
        const VerificationReport printed = r_matrix_verify(h, R, TriangleForm::Printed);
        CHECK(printed.find("conjr")->passed);
        CHECK_FALSE(printed.passed());
        const Subspace<Q> tan = tangent_r_space(h, R);
        CHECK(tan.contains(direction.to_dense()));
    }
    const Tensor flipped = flip(catalog::h4_r_matrix(Q(1)));
    CHECK_FALSE(r_matrix_verify(h, flipped).passed());
}

TEST_CASE("action of twisted derivations on tangent R-matrices")
{
    const Bialgebra h = catalog::h4_sweedler();
    const Tensor R = catalog::h4_r_matrix(Q(1));
    CHECK(inf_twist_action(h, h4_d() + h4_psi(), Tensor(4, 2)).is_zero());

    const VerificationReport action = r_module_check(h, R, TriangleForm::Consistent, StabilizerForm::FromAction);
    for (const auto& c : action.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.passed);
    }
    const Subspace<Q> st = stabilizer_der(h, R, StabilizerForm::FromAction);
    for (const auto& v : st.vectors())
        CHECK(inf_twist_action(h, unpack(h, v), R).is_zero());
}

TEST_CASE("stabilizer forms differ on the H4 family")
{
    const Bialgebra h = catalog::h4_sweedler();
    const Subspace<Q> inner = Subspace<Q>::row_space(from_columns<Q>(32, 3, [&](Index j) {
        return sparse_of(pack(h, boundary(h, augmentation_ideal(h).vector(j))));
    }).transpose());
    for (const Q& alpha : {Q(0), Q(1)}) {
        const Tensor R = catalog::h4_r_matrix(alpha);
        const Subspace<Q> printed = stabilizer_der(h, R, StabilizerForm::Printed);
        const Subspace<Q> action = stabilizer_der(h, R, StabilizerForm::FromAction);
        CHECK(printed.contains(inner));
        CHECK(action.contains(inner));
        CHECK(action.dim() == 4);
        CHECK(printed.dim() == (alpha == 0 ? 4 : 3));
        CHECK(r_module_check(h, R, TriangleForm::Consistent, StabilizerForm::Printed).passed());
    }
}
