#pragma once

// Bounded-degree computations in U(g) and S(g).
//
// Elements of U(g)^{⊗n} and S(g)^{⊗n} share one representation: a sparse
// combination of n-tuples of words, where a word is a non-decreasing list of
// basis indices (an ordered PBW monomial, or a commutative monomial). Both
// coalgebra structures act on such words by the same formula, Δ(w) = Σ over
// subsets S of positions of w_S ⊗ w_{S^c}, so the two only differ in their
// products: PBW rewriting for U(g), merging for S(g).

#include "twd/cohochschild.hpp"
#include "twd/lie.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twd {

using Word = std::vector<int>;

struct UTensor {
    int degree = 0;
    std::map<std::vector<Word>, Q> terms;

    UTensor() = default;
    explicit UTensor(int deg)
        : degree(deg)
    {
    }

    void add(const std::vector<Word>& key, const Q& c);
    bool is_zero() const { return terms.empty(); }
    Q coeff(const std::vector<Word>& key) const;

    UTensor& operator+=(const UTensor& o);
    UTensor& operator-=(const UTensor& o);
    UTensor& operator*=(const Q& c);
    friend UTensor operator+(UTensor a, const UTensor& b) { return a += b; }
    friend UTensor operator-(UTensor a, const UTensor& b) { return a -= b; }
    friend UTensor operator*(const Q& c, UTensor a) { return a *= c; }
    friend bool operator==(const UTensor& a, const UTensor& b) { return a.degree == b.degree && a.terms == b.terms; }
};

/// Degree-1 element of U(g).
using PBWElement = UTensor;

/// Largest total word length among the terms.
int filtration_degree(const UTensor& t);

/// e_x as a degree-1 element.
UTensor u_generator(const Vec<Q>& x);
/// 1⊗...⊗1 (k slots).
UTensor u_unit(int k);
/// g^{⊗n} ⊂ U(g)^{⊗n}.
UTensor u_embed(const Tensor& t);
UTensor u_concat(const UTensor& a, const UTensor& b);
UTensor u_delta_at(const UTensor& t, int slot);
UTensor u_counit_at(const UTensor& t, int slot);
UTensor u_permute(const UTensor& t, const std::vector<int>& perm);
/// (1/n!) Σ_σ sgn(σ) σ(t).
UTensor u_alternate(const UTensor& t);
/// Flip of a degree-2 element.
UTensor u_flip(const UTensor& t);

std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_u(const UTensor& t, const std::vector<std::string>& names);

/// Rewrites e_j e_i → e_i e_j + [e_j, e_i] (j > i) to the ordered normal form.
PBWElement pbw_normal_form(const LieAlgebra& g, const Word& word);
/// Slotwise product in U(g)^{⊗n}.
UTensor u_mult(const LieAlgebra& g, const UTensor& u, const UTensor& v);
UTensor u_commutator(const LieAlgebra& g, const UTensor& u, const UTensor& v);
/// Extension of an endomorphism d of g to a derivation of U(g), applied in
/// every slot.
UTensor u_apply_derivation(const LieAlgebra& g, const DenseMat<Q>& d, const UTensor& t);

struct UgOps {
    const LieAlgebra& g;
    using Element = UTensor;

    int degree(const UTensor& t) const { return t.degree; }
    UTensor unit_power(int k) const { return u_unit(k); }
    UTensor concat(const UTensor& x, const UTensor& y) const { return u_concat(x, y); }
    UTensor mult(const UTensor& x, const UTensor& y) const { return u_mult(g, x, y); }
    UTensor delta_at(const UTensor& t, int slot) const { return u_delta_at(t, slot); }
    UTensor counit_at(const UTensor& t, int slot) const { return u_counit_at(t, slot); }
    UTensor scale(const Q& c, UTensor t) const { return c * std::move(t); }
    UTensor add(UTensor x, const UTensor& y) const { return x += y; }
};

/// Slotwise product in S(g)^{⊗n}.
UTensor s_mult(const UTensor& u, const UTensor& v);

struct SymOps {
    using Element = UTensor;

    int degree(const UTensor& t) const { return t.degree; }
    UTensor unit_power(int k) const { return u_unit(k); }
    UTensor concat(const UTensor& x, const UTensor& y) const { return u_concat(x, y); }
    UTensor mult(const UTensor& x, const UTensor& y) const { return s_mult(x, y); }
    UTensor delta_at(const UTensor& t, int slot) const { return u_delta_at(t, slot); }
    UTensor counit_at(const UTensor& t, int slot) const { return u_counit_at(t, slot); }
    UTensor scale(const Q& c, UTensor t) const { return c * std::move(t); }
    UTensor add(UTensor x, const UTensor& y) const { return x += y; }
};

/// For φ ∈ g⊗g: "invariance" ([φ, Δx] = 0 in U(g)⊗U(g) for every basis x),
/// "cocd" and "normd".
VerificationReport ug_invariant_twist_check(const LieAlgebra& g, const Tensor& phi);

/// Compares semidirect_outder_tw(g) with twisted derivations of U(g) built
/// from its basis: each is checked to be a twisted derivation on generators,
/// and each bracket computed in U(g) is compared with the structure
/// constants up to an inner derivation.
VerificationReport semidirect_ug_compare(const LieAlgebra& g, const Semidirect& s);

// Graded S(g).

/// Default truncation degree.
inline constexpr int kDefaultTruncation = 3;
/// Largest Lie algebra dimension accepted by the graded computations.
inline constexpr int kMaxGradedLieDim = 4;

struct GradedCoalgebra {
    int dim = 0;
    int N = 0;
    /// components[m]: monomial basis of S^m(g), lexicographic.
    std::vector<std::vector<Word>> components;
    /// "Δ preserves degree", "counit", "coassociativity".
    VerificationReport report;
};

/// Throws PreconditionError when dim g exceeds kMaxGradedLieDim or N < 0.
GradedCoalgebra sym_coalgebra(const LieAlgebra& g, int N);

struct GradedPiece {
    int m = 0;
    Index cochain_dim = 0;
    Index dim = 0;
    Index cocycle_dim = 0;
    Index coboundary_dim = 0;
};

struct GradedCohomology {
    int n = 0;
    int N = 0;
    bool invariant = false;
    std::vector<GradedPiece> pieces; ///< m = 0..N
    Index dim = 0;                   ///< sum over pieces
    Index expected = 0;              ///< binom(dim g, n), or dim (Λⁿg)^g
    std::vector<UTensor> representatives;
    /// Alt_n of each representative, restricted to g^{⊗n}, as Λⁿg coordinates.
    std::vector<Vec<Q>> alt_images;
    /// "dimension matches", "Λⁿg represents every class", "Alt_n onto",
    /// "concentrated in total degree n".
    VerificationReport report;
};

/// Co-Hochschild cohomology of S(g) in tensor degree n, split by total
/// degree m ≤ N. Throws PreconditionError when n > N.
GradedCohomology graded_cohomology(const LieAlgebra& g, int N, int n);
/// The same on the subcomplex of g-invariant cochains.
GradedCohomology invariant_graded_cohomology(const LieAlgebra& g, int N, int n);

/// ι(ω) = Σ_σ sgn(σ) e_{iσ(1)}⊗...⊗e_{iσ(n)} for ω ∈ Λⁿg.
UTensor wedge_to_u(int dim, int n, const Vec<Q>& omega);

/// For a 2-cocycle φ of S(g) within total degree ≤ N, some a with
/// φ - Alt_2(φ) = ∂a. The answer is unique up to adding an element of g.
std::optional<UTensor> cob_correction(const LieAlgebra& g, int N, const UTensor& phi);

} // namespace twd
