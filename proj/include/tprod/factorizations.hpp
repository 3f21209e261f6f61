#pragma once

// Real tensor factorizations built from paired Fourier-block decompositions, their residual
// verifiers, and the structural predicates on frontal slices.

#include "tprod/fourier.hpp"
#include "tprod/report.hpp"
#include "tprod/tensor3.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tprod {

/// tau_rec = 1e-10 (1 + max|a|) p
double reconstruction_tolerance(const Tensor3& a);
/// tau_orth = 1e-10 n p
double orthogonality_tolerance(std::size_t n, std::size_t p);

struct TSvdResult {
    Tensor3 U;  // m x m x p, orthogonal
    Tensor3 S;  // m x n x p, f-diagonal
    Tensor3 V;  // n x n x p, orthogonal
    ResidualReport report;
};

struct TSchurResult {
    Tensor3 U;
    Tensor3 T;
    std::vector<std::size_t> realized_partition;
    ResidualReport report;
};

struct TJordanResult {
    Tensor3 P;
    Tensor3 J;
    std::vector<std::size_t> realized_partition;
    /// Largest condition number over the Fourier blocks of P (equals cond(bcirc(P))).
    double condition = 1.0;
    ResidualReport report;
};

struct IdempotentFactorization {
    Tensor3 U;
    Tensor3 E;
    Tensor3 V;
    /// Rank of each Fourier block of the input.
    std::vector<std::size_t> block_ranks;
    ResidualReport report;
};

/// a = U * S * V^T with orthogonal U, V and f-diagonal S, all real.
TSvdResult t_svd(const Tensor3& a);

/// a = U * T * U^T with orthogonal U and f-quasi-triangular T. Throws PartitionViolation when
/// the assembled T needs a diagonal block larger than 2 x 2.
TSchurResult t_schur(const Tensor3& a);

/// a = P * J * P^{-1} with J real and f-upper-block-bi-diagonal. Every Fourier block must be
/// diagonalizable (DefectiveBlock otherwise).
TJordanResult t_jordan(const Tensor3& a);

/// a = U * E * V with E * E = E and t-invertible U, V. rtol <= 0 selects default_rtol.
IdempotentFactorization idempotent_factorization(const Tensor3& a, double rtol = 0.0);

/// Per-block complex Jordan data assembled without conjugate pairing: every Fourier block is
/// decomposed on its own and the results are transformed back as they are.
struct NaiveJordan {
    FourierBlocks P_blocks;
    FourierBlocks J_blocks;
    ComplexTensor3 P;
    ComplexTensor3 J;
};

/// `eigen_order`, when given, holds one list of target eigenvalues per Fourier block; each
/// block's diagonal is arranged so that entry j is the computed eigenvalue closest to target j.
/// Without it each block keeps the ascending (real, imag) order of jordan_complex.
NaiveJordan t_jordan_naive(const Tensor3& a,
                           const std::optional<std::vector<std::vector<cplx>>>& eigen_order = {});

/// Whether Fourier block A_k could have an SVD with real orthogonal factors: that would make
/// A_k A_k^T = U Sigma^2 U^T real positive semidefinite.
struct NaiveSvdBlock {
    std::size_t index = 0;  // 0-based Fourier block
    Eigen::MatrixXcd gram;  // A_k A_k^T (plain transpose)
    double gram_max_imag = 0.0;
    /// Smallest eigenvalue of the symmetric part of Re(A_k A_k^T).
    double gram_min_eigenvalue = 0.0;
    bool real_orthogonal_svd_possible = true;
};
std::vector<NaiveSvdBlock> t_svd_naive_real_blocks(const Tensor3& a, double tol = 1e-10);

struct PartitionCheck {
    bool ok = false;
    /// Finest block partition (sizes 1 or 2) every slice conforms to; empty when none exists.
    std::vector<std::size_t> partition;
    /// Largest entry outside the permitted band (for the finest admissible partition).
    double residual = 0.0;
};

bool is_f_diagonal(const Tensor3& t, double tol);
PartitionCheck is_f_quasi_triangular(const Tensor3& t, double tol);
PartitionCheck is_f_upper_block_bidiagonal(const Tensor3& t, double tol);
bool is_t_symmetric(const Tensor3& t, double tol);
/// U^T * U = U * U^T = I within tol.
bool is_orthogonal(const Tensor3& t, double tol);

/// Largest entry off the diagonal of any slice.
double off_diagonal_max(const Tensor3& t);
/// max |t^T * t - I|.
double orthogonality_residual(const Tensor3& t);

/// Checks of the defining identities; the override replaces every default tolerance.
ResidualReport verify_tsvd(const Tensor3& a, const Tensor3& u, const Tensor3& s, const Tensor3& v,
                           ToleranceOverride tol = {});
ResidualReport verify_tschur(const Tensor3& a, const Tensor3& u, const Tensor3& t,
                             ToleranceOverride tol = {});
ResidualReport verify_tjordan(const Tensor3& a, const Tensor3& p, const Tensor3& j,
                              ToleranceOverride tol = {});
ResidualReport verify_idem(const Tensor3& a, const Tensor3& u, const Tensor3& e, const Tensor3& v,
                           ToleranceOverride tol = {});

} // namespace tprod
