#pragma once

#include "twd/linalg.hpp"
#include "twd/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twd {

using TensorIndex = std::uint64_t;
using MultiIndex = std::vector<int>;

/// Sparse element of H^{⊗n} in the basis e_{i1}⊗...⊗e_{in}. The linear index
/// is the multi-index read in base dim with the first slot most significant,
/// so map order is lexicographic order. Degree 0 elements are scalars.
class Tensor {
public:
    Tensor() = default;
    Tensor(int dim, int degree);

    static Tensor basis(int dim, const MultiIndex& idx, const Q& c = Q(1));
    static Tensor scalar(int dim, const Q& c);
    /// Degree-1 element with the given coordinates.
    static Tensor from_vector(const Vec<Q>& v);
    static Tensor from_dense(int dim, int degree, const Vec<Q>& v);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    TensorIndex size() const; // dim^degree
    const std::map<TensorIndex, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nnz() const { return terms_.size(); }

    Q coeff(TensorIndex idx) const;
    Q coeff(const MultiIndex& idx) const { return coeff(linear_index(idx)); }
    void add(TensorIndex idx, const Q& c);
    void add(const MultiIndex& idx, const Q& c) { add(linear_index(idx), c); }

    TensorIndex linear_index(std::span<const int> idx) const;
    MultiIndex multi_index(TensorIndex idx) const;

    Vec<Q> to_dense() const;
    SparseRow<Q> to_sparse() const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Q& c);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Q& c, Tensor a) { return a *= c; }
    friend Tensor operator-(Tensor a) { return a *= Q(-1); }
    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Tensor& o) const;

    int dim_ = 0;
    int degree_ = 0;
    std::map<TensorIndex, Q> terms_;
};

TensorIndex power(int dim, int degree);

/// a ⊗ b (the cup product on cochains).
Tensor concat(const Tensor& a, const Tensor& b);

/// Permutes tensor slots: slot k of the result is slot perm[k] of t.
Tensor permute(const Tensor& t, std::span<const int> perm);

/// φ ↦ φ_21 on degree 2.
Tensor flip(const Tensor& t);

/// 1⊗...⊗1 built from the unit coordinates (degree k).
Tensor unit_power(const Vec<Q>& unit, int k);

/// Applies a linear endomorphism of H (columns are images of basis vectors)
/// in one slot (0-based).
Tensor apply_endo_at(const Tensor& t, const DenseMat<Q>& endo, int slot);

/// Σ_slots (I⊗..⊗d⊗..⊗I)(t): the derivation extension of d.
Tensor apply_derivation(const Tensor& t, const DenseMat<Q>& d);

/// f⊗...⊗f applied to t.
Tensor apply_endo_all(const Tensor& t, const DenseMat<Q>& f);

std::string format_tensor(const Tensor& t, const std::vector<std::string>& names);

} // namespace twd
