#pragma once

#include "twd/linalg.hpp"
#include "twd/report.hpp"
#include "twd/scalar.hpp"
#include "twd/tensor.hpp"

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace twd {

/// One structure constant: m[i][j][k] = value (e_i e_j has e_k-coefficient
/// value), or for a coproduct c[i][j][k] (Δ e_i has e_j⊗e_k-coefficient value).
struct StructureConstant {
    int i = 0;
    int j = 0;
    int k = 0;
    Q value;
};

/// A finite-dimensional bialgebra given by structure constants.
class Bialgebra {
public:
    struct ProductTerm {
        int k;
        Q c;
    };
    struct CoproductTerm {
        int j;
        int k;
        Q c;
    };

    Bialgebra(std::string name, std::vector<std::string> basis_names, const std::vector<StructureConstant>& mult,
        Vec<Q> unit, const std::vector<StructureConstant>& comult, Vec<Q> counit,
        std::optional<DenseMat<Q>> antipode = std::nullopt);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }
    const std::vector<std::string>& basis_names() const { return names_; }

    const std::vector<ProductTerm>& product(int i, int j) const
    {
        return mult_[static_cast<std::size_t>(i * dim_ + j)];
    }
    const std::vector<CoproductTerm>& coproduct(int i) const { return comult_[static_cast<std::size_t>(i)]; }
    const Vec<Q>& unit() const { return unit_; }
    const Vec<Q>& counit() const { return counit_; }
    const std::optional<DenseMat<Q>>& antipode() const { return antipode_; }

    /// Sparse structure constants, sorted by (i, j, k).
    std::vector<StructureConstant> mult_constants() const;
    std::vector<StructureConstant> comult_constants() const;

    /// Basis element by name; throws FormatError when absent.
    int index_of(const std::string& name) const;

private:
    int dim_;
    std::string name_;
    std::string description_;
    std::vector<std::string> names_;
    std::vector<std::vector<ProductTerm>> mult_;
    std::vector<std::vector<CoproductTerm>> comult_;
    Vec<Q> unit_;
    Vec<Q> counit_;
    std::optional<DenseMat<Q>> antipode_;
};

/// Checks every bialgebra axiom. Failures carry a basis witness.
VerificationReport verify_bialgebra(const Bialgebra& b);

// Element helpers. Slots are 0-based throughout.

Tensor element(const Bialgebra& b, const Vec<Q>& coords);
Tensor basis_element(const Bialgebra& b, int i);
Tensor unit_tensor(const Bialgebra& b, int degree);

/// Product in the n-fold tensor-product algebra H^{⊗n}.
Tensor tensor_mult(const Bialgebra& b, const Tensor& u, const Tensor& v);
Tensor commutator(const Bialgebra& b, const Tensor& u, const Tensor& v);

/// Δ applied in one slot, identity elsewhere: degree n → n+1.
Tensor apply_delta_at(const Bialgebra& b, const Tensor& u, int slot);

/// Δ^{(copies-1)} in one slot: the slot is replaced by `copies` slots.
/// copies = 1 is the identity, copies = 0 applies ε.
Tensor iterated_delta_at(const Bialgebra& b, const Tensor& u, int slot, int copies);

/// Δ^{(n-1)}(x) ∈ H^{⊗n} for x ∈ H, nested to the left.
Tensor iterated_coproduct(const Bialgebra& b, const Vec<Q>& x, int n);

/// ε applied in one slot: degree n → n-1.
Tensor apply_counit_at(const Bialgebra& b, const Tensor& u, int slot);

/// Matrix of a linear map H^{⊗in} → H^{⊗out} evaluated on basis tensors.
Matrix<Q> matrix_of(const Bialgebra& b, int in_degree, int out_degree, const std::function<Tensor(const Tensor&)>& map);

/// Left multiplication matrix L_a and right multiplication matrix R_a on H.
DenseMat<Q> left_mult_matrix(const Bialgebra& b, const Vec<Q>& a);
DenseMat<Q> right_mult_matrix(const Bialgebra& b, const Vec<Q>& a);

/// ad_a = [a, -] as a matrix on H.
DenseMat<Q> ad_matrix(const Bialgebra& b, const Vec<Q>& a);

/// Witness text if g is not group-like (Δg = g⊗g, ε(g) = 1).
std::optional<std::string> group_like_defect(const Bialgebra& b, const Vec<Q>& g);

Subspace<Q> augmentation_ideal(const Bialgebra& b);
Subspace<Q> primitives(const Bialgebra& b);
/// Δx = 1⊗x + x⊗g. Throws PreconditionError unless g is group-like.
Subspace<Q> g_primitives(const Bialgebra& b, const Vec<Q>& g);
Subspace<Q> centre(const Bialgebra& b);

/// X ∈ H^{⊗n} with [X, Δ^{(n-1)}(e_i)] = 0 for every basis e_i.
Subspace<Q> adjoint_invariants(const Bialgebra& b, int n);

/// The dual bialgebra: multiplication and comultiplication transposed,
/// unit and counit exchanged, antipode transposed.
Bialgebra dual_algebra(const Bialgebra& b);

/// Witness text if span(basis) is not a sub-bialgebra (closed under product
/// and Δ, contains 1).
std::optional<std::string> sub_bialgebra_defect(const Bialgebra& b, const Subspace<Q>& k);

} // namespace twd
