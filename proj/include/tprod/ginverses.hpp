#pragma once

// Generalized inverses of real tensors under the t-product, computed blockwise in the Fourier
// domain with conjugate pairing so every result is real.

#include "tprod/report.hpp"
#include "tprod/tensor3.hpp"

#include <cstddef>

namespace tprod {

/// tau_gi = 1e-9 (1 + max|a|)^2 p
double ginverse_tolerance(const Tensor3& a);

/// Two-sided inverse. Throws Singular naming the first Fourier block whose smallest singular
/// value is at or below rtol * sigma_max. rtol <= 0 selects default_rtol.
Tensor3 t_inverse(const Tensor3& a, double rtol = 0.0);

/// Moore-Penrose inverse as V * S^+ * U^T from the t-SVD.
Tensor3 t_pinv_svd(const Tensor3& a, double rtol = 0.0);
/// Moore-Penrose inverse from the paired blockwise matrix pseudoinverses.
Tensor3 t_pinv_blocks(const Tensor3& a, double rtol = 0.0);
/// Default route (blockwise).
inline Tensor3 t_pinv(const Tensor3& a, double rtol = 0.0) { return t_pinv_blocks(a, rtol); }

struct DrazinResult {
    Tensor3 AD;
    /// Largest Drazin index over the Fourier blocks.
    std::size_t index = 0;
    ResidualReport report;
};
DrazinResult t_drazin(const Tensor3& a, double rtol = 0.0);
/// Largest Drazin index over the Fourier blocks, without forming the inverse.
std::size_t t_drazin_index(const Tensor3& a, double rtol = 0.0);

/// Group inverse. Throws GroupInverseNotExist naming the first Fourier block with
/// rank(A_k^2) < rank(A_k).
Tensor3 t_group(const Tensor3& a, double rtol = 0.0);

struct UnitRegularWitness {
    Tensor3 W;  // V^{-1} * U^{-1}
    Tensor3 U;
    Tensor3 E;
    Tensor3 V;
    ResidualReport report;
};
UnitRegularWitness unit_regular_witness(const Tensor3& a, double rtol = 0.0);

/// Largest condition number over the Fourier blocks (infinity when one is singular).
double block_condition(const Tensor3& a);

ResidualReport verify_inverse(const Tensor3& a, const Tensor3& x, ToleranceOverride tol = {});
/// The four Penrose identities.
ResidualReport verify_pinv(const Tensor3& a, const Tensor3& x, ToleranceOverride tol = {});
/// A^{k+1} A^D = A^k, A^D A A^D = A^D, A A^D = A^D A with k = index.
ResidualReport verify_drazin(const Tensor3& a, const Tensor3& ad, std::size_t index,
                             ToleranceOverride tol = {});
/// A G A = A, G A G = G, A G = G A.
ResidualReport verify_group(const Tensor3& a, const Tensor3& g, ToleranceOverride tol = {});
ResidualReport verify_witness(const Tensor3& a, const Tensor3& w, ToleranceOverride tol = {});

} // namespace tprod
