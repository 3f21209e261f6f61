#pragma once

// Per-block matrix decompositions and generalized inverses. Every routine is deterministic
// for a fixed input and is instantiated for real (double) and complex (std::complex<double>)
// scalars where that makes sense.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace tprod::linalg {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// tau_dec: decomposition residuals relative to ||A||.
inline constexpr double kDecompositionTol = 1e-11;
/// tau_pen: Penrose equation residuals relative to ||A||.
inline constexpr double kPenroseTol = 1e-10;
/// tau_jord: Jordan reconstruction relative to ||A|| kappa(P).
inline constexpr double kJordanTol = 1e-8;
/// delta_eig: relative gap below which eigenvalues are treated as one cluster.
inline constexpr double kEigenGap = 1e-8;
/// Eigenvector bases with a larger condition number are reported as defective.
inline constexpr double kMaxEigenbasisCondition = 1e8;

/// Default relative threshold for numerical rank decisions on an m x n matrix:
/// singular values below default_rtol(m, n) * sigma_max count as zero.
double default_rtol(std::size_t rows, std::size_t cols);

template <class Scalar>
struct MatrixSvd {
    Mat<Scalar> U;          // m x m
    Eigen::VectorXd sigma;  // min(m, n), nonnegative, nonincreasing
    Mat<Scalar> V;          // n x n

    /// m x n matrix with sigma on the diagonal.
    Mat<Scalar> sigma_matrix() const;
};

/// Full SVD A = U diag(sigma) V^*. Each left singular vector is scaled so that its
/// largest-magnitude entry (first one on ties) is real positive; the matching right vector
/// receives the same phase. A zero matrix returns U = I, V = I.
template <class Scalar>
MatrixSvd<Scalar> svd(const Mat<Scalar>& a);

template <class Scalar>
struct MatrixSchur {
    Mat<Scalar> U;
    Mat<Scalar> T;
    /// Diagonal block sizes, each 1 or 2. All ones for the complex form.
    std::vector<std::size_t> partition;
};

/// A = U T U^* with T upper triangular.
MatrixSchur<std::complex<double>> schur_complex(const Mat<std::complex<double>>& a);

/// Real Schur form A = U T U^T with orthogonal U and every 1x1 block ahead of every 2x2 block.
/// Blocks are reordered by orthogonal exchanges of adjacent blocks; throws SwapFailure when an
/// exchange is ill-conditioned.
MatrixSchur<double> schur_real_ordered(const Mat<double>& a);

template <class Scalar>
struct MatrixJordan {
    Mat<Scalar> P;
    Mat<Scalar> J;
    std::vector<std::size_t> partition;
    /// 2-norm condition number of P.
    double condition = 1.0;
};

/// A = P J P^{-1} with J diagonal, eigenvalues in lexicographic (real, imag) order.
/// Supports diagonalizable matrices only; throws DefectiveBlock when a cluster of eigenvalues
/// lacks a full eigenvector basis.
MatrixJordan<std::complex<double>> jordan_complex(const Mat<std::complex<double>>& a);

/// Real Jordan form of a diagonalizable real matrix: real eigenvalues first (ascending), then
/// 2x2 blocks [[a, b], [-b, a]] for the pairs a +- ib with b > 0, ordered by (a, b).
MatrixJordan<double> jordan_real(const Mat<double>& a);

template <class Scalar>
struct RankNormalForm {
    Mat<Scalar> U;  // invertible, m x m
    Mat<Scalar> V;  // invertible, n x n
    Mat<Scalar> E;  // [[I_r, 0], [0, 0]], m x n
    std::size_t rank = 0;
};

/// U^{-1} A V^{-1} = [[I_r, 0], [0, 0]] with U = U_svd diag(sigma_1..sigma_r, 1, ..., 1),
/// V = V_svd^*.
template <class Scalar>
RankNormalForm<Scalar> rank_normal_form(const Mat<Scalar>& a, double rtol);

/// Number of singular values strictly above `threshold`.
template <class Scalar>
std::size_t numerical_rank(const Mat<Scalar>& a, double threshold);

template <class Scalar>
Mat<Scalar> mp_inverse(const Mat<Scalar>& a, double rtol);

/// Pseudoinverse that drops singular values at or below an absolute threshold.
template <class Scalar>
Mat<Scalar> mp_inverse_abs(const Mat<Scalar>& a, double threshold);

/// Least k with rank(A^{k+1}) = rank(A^k); rank(A^k) is decided against rtol ||A||_2^k.
template <class Scalar>
std::size_t drazin_index(const Mat<Scalar>& a, double rtol);

template <class Scalar>
struct DrazinInverse {
    Mat<Scalar> inverse;
    std::size_t index = 0;
};

/// Drazin inverse by successive full-rank factorizations (A = B_1 C_1, C_i B_i = B_{i+1} C_{i+1},
/// A^D = B_1 ... B_k (C_k B_k)^{-(k+1)} C_k ... C_1), k the Drazin index.
template <class Scalar>
DrazinInverse<Scalar> drazin_inverse(const Mat<Scalar>& a, double rtol);

struct GroupInvertibility {
    std::size_t rank_a = 0;
    std::size_t rank_a2 = 0;
    /// sigma_{rank_a}(A^2) divided by the rank threshold; values near 1 are close calls.
    double margin = 0.0;
    bool exists() const { return rank_a == rank_a2; }
};

template <class Scalar>
GroupInvertibility group_invertibility(const Mat<Scalar>& a, double rtol);

/// Group inverse B (C B)^{-2} C from a full-rank factorization A = B C; throws
/// GroupInverseNotExist (block 0) when rank(A^2) < rank(A).
template <class Scalar>
Mat<Scalar> group_inverse(const Mat<Scalar>& a, double rtol);

/// Condition number sigma_max / sigma_min (infinity for singular matrices).
template <class Scalar>
double condition_number(const Mat<Scalar>& a);

} // namespace tprod::linalg
