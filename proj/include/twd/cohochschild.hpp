#pragma once

// The co-Hochschild complex C^n(H) = H^{⊗n} with
//   ∂X = 1⊗X + Σ_{i=1}^{n} (-1)^i Δ_i(X) + (-1)^{n+1} X⊗1,
// its cohomology, and the cup / circle / bracket operations on cochains.
//
// The operations are written once against a small "coalgebra ops" policy so
// that the same code runs on finite-dimensional bialgebras (BialgebraOps
// below) and on U(g) tensors from the PBW engine. A policy provides
//   using Element;
//   int degree(const Element&);
//   Element unit_power(int k);              // 1⊗...⊗1, k slots
//   Element concat(const Element&, const Element&);
//   Element mult(const Element&, const Element&);   // slotwise product
//   Element delta_at(const Element&, int slot);
//   Element counit_at(const Element&, int slot);
//   Element scale(const Q&, Element);
//   Element add(Element, const Element&);

#include "twd/bialgebra.hpp"

#include <cstdlib>
#include <optional>
#include <vector>

namespace twd {

struct BialgebraOps {
    const Bialgebra& b;
    using Element = Tensor;

    int degree(const Tensor& t) const { return t.degree(); }
    Tensor unit_power(int k) const { return unit_tensor(b, k); }
    Tensor concat(const Tensor& x, const Tensor& y) const { return twd::concat(x, y); }
    Tensor mult(const Tensor& x, const Tensor& y) const { return tensor_mult(b, x, y); }
    Tensor delta_at(const Tensor& t, int slot) const { return apply_delta_at(b, t, slot); }
    Tensor counit_at(const Tensor& t, int slot) const { return apply_counit_at(b, t, slot); }
    Tensor scale(const Q& c, Tensor t) const { return c * std::move(t); }
    Tensor add(Tensor x, const Tensor& y) const { return x += y; }
};

/// Sign of X∘_iY inside X∘Y for deg Y = n.
enum class CircleSign {
    Standard, ///< (-1)^{(n-1)(i-1)}
    Printed,  ///< (-1)^{ni}
};

/// [[X,Y]] = X∘Y - sign·Y∘X for deg X = m, deg Y = n.
enum class BracketSign {
    Shifted, ///< sign = (-1)^{(m-1)(n-1)}
    Printed, ///< sign = (-1)^{mn}
};

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

template <typename Ops>
typename Ops::Element coboundary_of(const Ops& ops, const typename Ops::Element& x)
{
    const int n = ops.degree(x);
    if (n == 0)
        return ops.scale(Q(0), ops.concat(x, ops.unit_power(1)));
    auto out = ops.concat(ops.unit_power(1), x);
    for (int i = 1; i <= n; ++i)
        out = ops.add(std::move(out), ops.scale(Q(parity_sign(i)), ops.delta_at(x, i - 1)));
    return ops.add(std::move(out), ops.scale(Q(parity_sign(n + 1)), ops.concat(x, ops.unit_power(1))));
}

/// X∘_iY = (I^{i-1}⊗Δ^{(n-1)}⊗I^{m-i})(X) · (1^{i-1}⊗Y⊗1^{m-i}), 1 ≤ i ≤ m.
template <typename Ops>
typename Ops::Element circle_i_of(const Ops& ops, const typename Ops::Element& x, const typename Ops::Element& y, int i)
{
    const int m = ops.degree(x);
    const int n = ops.degree(y);
    if (i < 1 || i > m)
        throw std::out_of_range("circle_i: i must lie in [1, deg X]");
    auto spread = x;
    if (n == 0)
        spread = ops.counit_at(spread, i - 1);
    for (int c = 1; c < n; ++c)
        spread = ops.delta_at(spread, i - 1);
    auto padded = ops.concat(ops.concat(ops.unit_power(i - 1), y), ops.unit_power(m - i));
    return ops.mult(spread, padded);
}

template <typename Ops>
typename Ops::Element circle_of(const Ops& ops, const typename Ops::Element& x, const typename Ops::Element& y,
    CircleSign sign = CircleSign::Standard)
{
    const int m = ops.degree(x);
    const int n = ops.degree(y);
    const int out_degree = m + n - 1;
    auto out = ops.scale(Q(0), ops.unit_power(out_degree < 0 ? 0 : out_degree));
    for (int i = 1; i <= m; ++i) {
        const int s = sign == CircleSign::Standard ? parity_sign(long(n - 1) * (i - 1)) : parity_sign(long(n) * i);
        out = ops.add(std::move(out), ops.scale(Q(s), circle_i_of(ops, x, y, i)));
    }
    return out;
}

template <typename Ops>
typename Ops::Element gerstenhaber_of(const Ops& ops, const typename Ops::Element& x, const typename Ops::Element& y,
    BracketSign sign = BracketSign::Shifted, CircleSign circle_sign = CircleSign::Standard)
{
    const long m = ops.degree(x);
    const long n = ops.degree(y);
    const int s = sign == BracketSign::Shifted ? parity_sign((m - 1) * (n - 1)) : parity_sign(m * n);
    return ops.add(circle_of(ops, x, y, circle_sign), ops.scale(Q(-s), circle_of(ops, y, x, circle_sign)));
}

/// Alt_n(t) = (1/n!) Σ_σ sgn(σ) σ(t).
Tensor alternate(const Tensor& t);

// Finite-dimensional bialgebras.

/// Tensor dimension cap: TWD_TENSOR_CAP if set to a positive integer, else 5000.
TensorIndex tensor_cap();
/// Throws CapExceeded when dim^degree exceeds the cap.
void check_cap(int dim, int degree);

Tensor coboundary(const Bialgebra& b, const Tensor& x);

/// Matrix of ∂: H^{⊗n} → H^{⊗(n+1)} in the lexicographic tensor basis.
Matrix<Q> differential(const Bialgebra& b, int n);

struct CohomologyResult {
    int degree = 0;
    Index dim = 0;
    Index cocycle_dim = 0;
    Index coboundary_dim = 0;
    std::vector<Tensor> representatives;
};

/// Cohomology of a complex given by its two neighbouring differentials
/// (d_in: C^{n-1} → C^n, d_out: C^n → C^{n+1}). Representatives are the
/// cocycle basis vectors on non-pivot positions of the coboundary span, in
/// cocycle-echelon coordinates.
struct LinearCohomology {
    Index dim = 0;
    Index cocycle_dim = 0;
    Index coboundary_dim = 0;
    std::vector<Vec<Q>> representatives;
    Subspace<Q> cocycles;
    Subspace<Q> coboundaries;
};
LinearCohomology linear_cohomology(const Matrix<Q>& d_in, const Matrix<Q>& d_out);

/// H^n(b). n = 0 gives k.
CohomologyResult cohomology(const Bialgebra& b, int n);

/// Some Z with ∂Z = target, if the target is a coboundary.
std::optional<Tensor> coboundary_preimage(const Bialgebra& b, const Tensor& target);

inline Tensor cup(const Tensor& x, const Tensor& y) { return concat(x, y); }

Tensor circle_i(const Bialgebra& b, const Tensor& x, const Tensor& y, int i);
Tensor circle(const Bialgebra& b, const Tensor& x, const Tensor& y, CircleSign sign = CircleSign::Standard);
Tensor gerstenhaber(const Bialgebra& b, const Tensor& x, const Tensor& y, BracketSign sign = BracketSign::Shifted);

/// Hochschild differential of the dual algebra H^∨ with trivial coefficients,
/// written in the basis of H^{⊗n} ≅ Hom((H^∨)^{⊗n}, k).
Matrix<Q> dual_hochschild_differential(const Bialgebra& b, int n);
VerificationReport dual_hochschild_compare(const Bialgebra& b, int n);

struct GPrimitiveCocycle {
    Tensor cochain;
    Tensor residual; ///< ∂F - (-1)^m F⊗(g_1...g_m - 1); zero on valid input
};
/// F = x_1 ⊗ g_1x_2 ⊗ g_1g_2x_3 ⊗ ... ⊗ g_1...g_{m-1}x_m. Throws
/// PreconditionError when some g_i is not group-like or x_i is not
/// g_i-primitive.
GPrimitiveCocycle gprimitive_cocycle(const Bialgebra& b, const std::vector<Vec<Q>>& gs, const std::vector<Vec<Q>>& xs);

/// Checks ∂(C^i(H)_m) ⊆ C^{i+1}(H)_m for i ≤ max_degree, where
/// C^i(H)_m = K^{⊗i} for i ≤ m and K^{⊗m}⊗H^{⊗(i-m)} beyond. Throws
/// PreconditionError when K is not a sub-bialgebra.
VerificationReport filtration_subcomplex(const Bialgebra& b, const Subspace<Q>& k, int m, int max_degree);

/// Alt_n on H^{⊗n} as a matrix.
Matrix<Q> alternation(int dim, int n);

struct Homotopy {
    Matrix<Q> lower; ///< a_n: C^n → C^{n-1}
    Matrix<Q> upper; ///< a_{n+1}: C^{n+1} → C^n
};
/// Solves target = d_in·a_n + a_{n+1}·d_out, with d_in: C^{n-1} → C^n and
/// d_out: C^n → C^{n+1}. nullopt when infeasible.
std::optional<Homotopy> solve_homotopy(const Matrix<Q>& d_in, const Matrix<Q>& d_out, const Matrix<Q>& target);
/// I - Alt_n = ∂a_n + a_{n+1}∂ on the full complex of b.
std::optional<Homotopy> alternation_homotopy(const Bialgebra& b, int n);

} // namespace twd
