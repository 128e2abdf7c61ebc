#pragma once

// Finite-dimensional Lie algebras by structure constants: derivations,
// exterior powers with the adjoint action, the Schouten bracket, and the
// semidirect product OutDer(g) ⋉ (Λ²g)^g.

#include "twd/bialgebra.hpp"
#include "twd/crossed_module.hpp"

#include <string>
#include <vector>

namespace twd {

class LieAlgebra {
public:
    struct Term {
        int k;
        Q c;
    };

    /// Constants (i, j, k, c) mean [e_i, e_j] has e_k-coefficient c. Only the
    /// listed pairs are set; pass both orders.
    LieAlgebra(std::string name, std::vector<std::string> basis_names, const std::vector<StructureConstant>& bracket);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }
    const std::vector<std::string>& basis_names() const { return names_; }

    const std::vector<Term>& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i * dim_ + j)]; }
    Vec<Q> bracket(const Vec<Q>& u, const Vec<Q>& v) const;

    /// Sorted by (i, j, k).
    std::vector<StructureConstant> constants() const;
    int index_of(const std::string& name) const;

private:
    int dim_;
    std::string name_;
    std::string description_;
    std::vector<std::string> names_;
    std::vector<std::vector<Term>> table_;
};

/// "antisymmetry" and "Jacobi" on basis triples.
VerificationReport verify_lie(const LieAlgebra& g);

/// ad_x as a matrix (columns are [x, e_i]).
DenseMat<Q> lie_ad(const LieAlgebra& g, const Vec<Q>& x);

/// Endomorphisms D with D[x,y] = [Dx,y] + [x,Dy]. Ambient dim², D(k,i) at i*dim + k.
Subspace<Q> lie_derivations(const LieAlgebra& g);
Subspace<Q> inner_derivations(const LieAlgebra& g);
/// ker ad.
Subspace<Q> lie_centre(const LieAlgebra& g);

DenseMat<Q> unflatten_endo(int dim, const Vec<Q>& v);
Vec<Q> flatten_endo(const DenseMat<Q>& m);

struct OuterDerivations {
    Subspace<Q> der;
    Subspace<Q> inner;
    Quotient<Q> outer; ///< in der coordinates
    BilinearTable bracket;

    /// Lift of the u-th outer class to an endomorphism.
    DenseMat<Q> lift(int dim, Index u) const;
};
OuterDerivations outer_derivations(const LieAlgebra& g);

// Exterior powers. Λⁿg has the basis e_{i1}∧...∧e_{in}, i1 < ... < in, in
// lexicographic order.

std::vector<std::vector<int>> exterior_basis(int dim, int n);
/// Position of a strictly increasing index list in exterior_basis.
Index exterior_index(int dim, const std::vector<int>& idx);
/// x_1∧...∧x_k for vectors of g.
Vec<Q> wedge(int dim, const std::vector<Vec<Q>>& factors);
/// ω∧η for ω ∈ Λ^p, η ∈ Λ^q.
Vec<Q> wedge_product(int dim, int p, const Vec<Q>& omega, int q, const Vec<Q>& eta);
/// Matrix of the derivation extension of D to Λⁿg.
DenseMat<Q> exterior_action(int dim, const DenseMat<Q>& d, int n);
/// (Λⁿg)^g.
Subspace<Q> exterior_invariants(const LieAlgebra& g, int n);

/// [[x_1∧...∧x_m, y_1∧...∧y_n]] = Σ_{i,j} (-1)^{i+j} [x_i,y_j]∧x_1..x̂_i..x_m∧y_1..ŷ_j..y_n.
Vec<Q> schouten(const LieAlgebra& g, int m, const Vec<Q>& x, int n, const Vec<Q>& y);

struct Semidirect {
    /// Basis: the OutDer(g) classes, then the (Λ²g)^g basis.
    LieAlgebra algebra;
    OuterDerivations out;
    Subspace<Q> twists; ///< (Λ²g)^g
    VerificationReport report;

    Index outer_dim() const { return out.outer.dim(); }
    Index twist_dim() const { return twists.dim(); }
};
/// OutDer(g) ⋉ (Λ²g)^g with the abelian second factor and d·X = (d⊗1 + 1⊗d)X.
Semidirect semidirect_outder_tw(const LieAlgebra& g);

} // namespace twd
