#pragma once

// Lie crossed modules ∂: N → P in coordinates, with their homotopy invariants
// π0 = P/∂N and π1 = ker ∂, a section σ: π0 → P, the correction
// a(u,v) ∈ N with ∂a(u,v) = [σu,σv] - σ[u,v] and the Jacobiator.

#include "twd/linalg.hpp"
#include "twd/report.hpp"
#include "twd/scalar.hpp"

#include <functional>
#include <vector>

namespace twd {

struct LieCrossedModuleData {
    Index p_dim = 0;
    Index n_dim = 0;
    std::function<Vec<Q>(const Vec<Q>&, const Vec<Q>&)> p_bracket;
    std::function<Vec<Q>(const Vec<Q>&, const Vec<Q>&)> n_bracket;
    Matrix<Q> boundary; ///< p_dim × n_dim
    /// Action of p on n.
    std::function<Vec<Q>(const Vec<Q>&, const Vec<Q>&)> action;
};

/// Bilinear table on a basis: entry (i,j) at i*dim+j.
using BilinearTable = std::vector<Vec<Q>>;
/// Trilinear table: entry (i,j,k) at (i*dim+j)*dim+k.
using TrilinearTable = std::vector<Vec<Q>>;

struct CrossedModuleInvariants {
    Subspace<Q> boundary_image; ///< in P
    Quotient<Q> pi0;
    Subspace<Q> pi1; ///< ker ∂ in N
    /// p_dim × dim π0; column u is σ(u).
    DenseMat<Q> section;
    /// [u,v] in π0 coordinates.
    BilinearTable pi0_bracket;
    BilinearTable correction;
    TrilinearTable jacobiator;
    /// Axioms, π0 well-definedness, ∂J = 0 and the 3-cocycle identity.
    VerificationReport report;

    Index pi0_dim() const { return pi0.dim(); }
};

CrossedModuleInvariants analyze_crossed_module(const LieCrossedModuleData& cm);

/// Evaluates a bilinear table on coordinate vectors.
Vec<Q> eval_bilinear(const BilinearTable& t, Index dim, const Vec<Q>& u, const Vec<Q>& v, Index out_dim);
Vec<Q> eval_trilinear(const TrilinearTable& t, Index dim, const Vec<Q>& u, const Vec<Q>& v, const Vec<Q>& w,
    Index out_dim);

} // namespace twd
