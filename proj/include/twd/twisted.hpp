#pragma once

// Twisted derivations (d, φ) of a finite-dimensional bialgebra, the crossed
// module ∂: H_ε → Der_tw(H), twisted automorphisms (f, F) and the action of
// twisted derivations on infinitesimal R-matrices.
//
// A twisted derivation is stored as d (columns are d(e_i)) and φ ∈ H⊗H.
// Its packed coordinate vector has length 2·dim²: d(k,i) at i*dim + k, then
// the linear indices of φ.

#include "twd/bialgebra.hpp"
#include "twd/crossed_module.hpp"

#include <optional>
#include <vector>

namespace twd {

struct TwistedDerivation {
    DenseMat<Q> d;
    Tensor phi;

    friend bool operator==(const TwistedDerivation& a, const TwistedDerivation& b)
    {
        return a.d == b.d && a.phi == b.phi;
    }
};

TwistedDerivation zero_twisted_derivation(const Bialgebra& b);
Index packed_size(const Bialgebra& b);
Vec<Q> pack(const Bialgebra& b, const TwistedDerivation& t);
TwistedDerivation unpack(const Bialgebra& b, const Vec<Q>& v);

TwistedDerivation operator+(const TwistedDerivation& a, const TwistedDerivation& b);
TwistedDerivation operator-(const TwistedDerivation& a, const TwistedDerivation& b);
TwistedDerivation operator*(const Q& c, const TwistedDerivation& t);

/// Checks "Leibniz", "conjd" ((I⊗d + d⊗I)Δx - Δ(dx) = [φ, Δx]),
/// "cocd" (1⊗φ + (I⊗Δ)φ = φ⊗1 + (Δ⊗I)φ) and "normd" (εd = 0,
/// (ε⊗I)φ = (I⊗ε)φ = 0).
VerificationReport verify_twisted_derivation(const Bialgebra& b, const TwistedDerivation& t);

/// Der_tw(H) in packed coordinates.
Subspace<Q> twisted_derivation_space(const Bialgebra& b);

/// ([d,d'], (d⊗I + I⊗d)φ' - (d'⊗I + I⊗d')φ - [φ,φ']).
TwistedDerivation bracket(const Bialgebra& b, const TwistedDerivation& t1, const TwistedDerivation& t2);

/// ∂(a) = ([a,-], a⊗1 + 1⊗a - Δa). Throws PreconditionError unless ε(a) = 0.
TwistedDerivation boundary(const Bialgebra& b, const Vec<Q>& a);

/// Some a ∈ H_ε with t2 - t1 = ∂(a).
std::optional<Vec<Q>> gauge_between(const Bialgebra& b, const TwistedDerivation& t1, const TwistedDerivation& t2);

struct TwistedCrossedModule {
    Subspace<Q> der;   ///< Der_tw(H), packed coordinates
    Subspace<Q> h_eps; ///< H_ε ⊂ H
    /// P in der coordinates, N in h_eps coordinates. The closures refer to
    /// the bialgebra passed to crossed_module().
    LieCrossedModuleData data;
    CrossedModuleInvariants inv;

    /// σ(u) for the u-th π0 basis vector.
    TwistedDerivation section(const Bialgebra& b, Index u) const;
    /// ker ∂ as vectors of H.
    std::vector<Vec<Q>> pi1_vectors() const;
};

/// The action is (d, φ)(α) = d(α).
TwistedCrossedModule crossed_module(const Bialgebra& b);

/// Der⁰_tw: φ with (0, φ) a twisted derivation. Ambient dim².
Subspace<Q> invariant_twists(const Bialgebra& b);
/// Der_bialg: d with (d, 0) a twisted derivation. Ambient dim², d(k,i) at i*dim + k.
Subspace<Q> bialgebra_derivations(const Bialgebra& b);

struct Separation {
    Vec<Q> a; ///< in H_ε
    TwistedDerivation separated; ///< t - ∂(a)
};
/// Finds a ∈ H_ε with d - [a,-] a bialgebra derivation.
std::optional<Separation> separate(const Bialgebra& b, const TwistedDerivation& t);

struct OuterQuotients {
    Subspace<Q> der0;
    Subspace<Q> der0_inner; ///< ∂(Z(H)_ε), φ-parts
    Quotient<Q> out_der0;
    BilinearTable out_der0_bracket;
    Subspace<Q> bialg;
    Subspace<Q> bialg_inner; ///< ∂(Prim(H)), d-parts
    Quotient<Q> out_bialg;
    BilinearTable out_bialg_bracket;
    bool separated = false; ///< every twisted derivation is separable
    /// When separated: dimension count, the induced map being an isomorphism,
    /// OutDer⁰ an ideal and OutDer_bialg a subalgebra of OutDer_tw.
    VerificationReport semidirect;
};
OuterQuotients outer_quotients(const Bialgebra& b);

// Twisted automorphisms.

struct TwistedAutomorphism {
    DenseMat<Q> f;
    Tensor F;
};

TwistedAutomorphism identity_automorphism(const Bialgebra& b);

/// Two-sided inverse of an element of H^{⊗n}.
std::optional<Tensor> tensor_inverse(const Bialgebra& b, const Tensor& t);

/// Checks "f multiplicative", "f unital", "conj" (FΔ(f(x)) = (f⊗f)(Δx)F),
/// "coc" and "norm". Throws PreconditionError when f or F is not invertible.
VerificationReport verify_twisted_automorphism(const Bialgebra& b, const TwistedAutomorphism& ta);

/// (f,F)∘(f',F') = (ff', (f⊗f)(F')·F).
TwistedAutomorphism compose(const Bialgebra& b, const TwistedAutomorphism& t1, const TwistedAutomorphism& t2);

/// Checks that a is a gauge transformation t1 → t2: a f(x) = f'(x) a and
/// F'Δ(a) = (a⊗a)F. Throws PreconditionError when a is not invertible.
VerificationReport gauge_auto(const Bialgebra& b, const TwistedAutomorphism& t1, const TwistedAutomorphism& t2,
    const Vec<Q>& a);

// Infinitesimal R-matrices. t denotes the flip of tensor factors.

/// Pairing of the triangle equations with RtΔ(x) = Δ(x)R.
enum class TriangleForm {
    /// (I⊗Δ)R = R12R13, (Δ⊗I)R = R23R13: the pairing compatible with the
    /// conjugation rule.
    Consistent,
    /// (I⊗Δ)R = R23R13, (Δ⊗I)R = R12R13.
    Printed,
};

Tensor leg12(const Bialgebra& b, const Tensor& r);
Tensor leg13(const Bialgebra& b, const Tensor& r);
Tensor leg23(const Bialgebra& b, const Tensor& r);

/// Checks "conjr", "treq (I⊗Δ)" and "treq (Δ⊗I)". Throws PreconditionError
/// when R is not invertible.
VerificationReport r_matrix_verify(const Bialgebra& b, const Tensor& r_matrix, TriangleForm form = TriangleForm::Consistent);

/// r with the linearised triangle equations at R and Δ(x)r = rtΔ(x).
/// Ambient dim².
Subspace<Q> tangent_r_space(const Bialgebra& b, const Tensor& r_matrix, TriangleForm form = TriangleForm::Consistent);

/// (d,φ)(r) = (I⊗d + d⊗I)(r) - φr + rφ21.
Tensor inf_twist_action(const Bialgebra& b, const TwistedDerivation& t, const Tensor& r);

enum class StabilizerForm {
    /// (I⊗d + d⊗I)(R) = φ21R - Rφ
    Printed,
    /// (d,φ)(R) = 0, i.e. (I⊗d + d⊗I)(R) = φR - Rφ21
    FromAction,
};

/// Twisted derivations satisfying the stabilizer condition, packed coordinates.
Subspace<Q> stabilizer_der(const Bialgebra& b, const Tensor& r_matrix, StabilizerForm form = StabilizerForm::Printed);

/// Checks on the basis of the stabilizer and of the tangent space:
/// "stabilizer preserves tangent space", "module axiom", "inner derivations
/// act trivially" and "inner derivations stabilize R". Failures are findings
/// about the chosen conventions, not errors.
VerificationReport r_module_check(const Bialgebra& b, const Tensor& r_matrix,
    TriangleForm form = TriangleForm::Consistent, StabilizerForm stab = StabilizerForm::Printed);

} // namespace twd
