#pragma once

#include "twd/bialgebra.hpp"
#include "twd/lie.hpp"

#include <string>
#include <vector>

namespace twd::catalog {

/// Sweedler's 4-dimensional Hopf algebra, basis (1, g, x, gx).
Bialgebra h4_sweedler();

/// Group algebra k[G] from a multiplication table over element indices;
/// element 0 must be the identity.
Bialgebra group_algebra(std::string name, std::vector<std::string> names, const std::vector<std::vector<int>>& table);

/// k[Z/n], basis 1, g, ..., g^{n-1}.
Bialgebra cyclic_group(int n);

/// k[S3], basis e, (12), (13), (23), (123), (132).
Bialgebra symmetric_group_3();

/// Φ_a = 1⊗1 + a·x⊗gx in H4⊗H4.
Tensor h4_twist(const Q& a);
/// f_c: g ↦ g, x ↦ cx on H4.
DenseMat<Q> h4_scaling(const Q& c);
/// R_α = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g) + (α/2)(x⊗x + gx⊗x + gx⊗gx - x⊗gx) in H4⊗H4.
Tensor h4_r_matrix(const Q& alpha);
/// ½(1⊗1 + 1⊗g + g⊗1 - g⊗g) in k[Z/2]⊗k[Z/2].
Tensor z2_r_matrix();

/// Bialgebra catalog names, in listing order.
const std::vector<std::string>& bialgebra_names();
/// Throws FormatError for an unknown name.
Bialgebra bialgebra(const std::string& name);

/// Abelian, basis x, y.
LieAlgebra lie_ab2();
/// Heisenberg, basis x, y, z with [x,y] = z.
LieAlgebra lie_heis3();
/// sl2, basis e, h, f with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra lie_sl2();
/// Non-abelian 2-dimensional, basis a, b with [a,b] = b.
LieAlgebra lie_nonab2();

const std::vector<std::string>& lie_names();
/// Throws FormatError for an unknown name.
LieAlgebra lie_algebra(const std::string& name);

} // namespace twd::catalog
