#pragma once

// Independent oracles and tensor constructions shared by the test programs. Nothing here calls
// the library's Fourier or inverse code: the oracles work on explicit block-circulant matrices.

#include "tprod/factorizations.hpp"
#include "tprod/fourier.hpp"
#include "tprod/generate.hpp"
#include "tprod/ginverses.hpp"
#include "tprod/tensor3.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace testing_support {

using tprod::Tensor3;

/// bcirc built entry by entry: block (r, c) holds slice (r - c) mod p.
inline Eigen::MatrixXd circulant_oracle(const Tensor3& t) {
    const std::size_t m = t.rows(), n = t.cols(), p = t.tubes();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(m * p), static_cast<Eigen::Index>(n * p));
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < p; ++c) {
            const std::size_t k = (r + p - c) % p;
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    out(static_cast<Eigen::Index>(r * m + i), static_cast<Eigen::Index>(c * n + j)) = t(i, j, k);
                }
            }
        }
    }
    return out;
}

/// Reads the first block column of a (supposedly) block-circulant matrix back into a tensor.
inline Tensor3 first_block_column(const Eigen::MatrixXd& m, std::size_t rows, std::size_t cols, std::size_t p) {
    std::vector<double> data(rows * cols * p);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                data[(k * rows + i) * cols + j] = m(static_cast<Eigen::Index>(k * rows + i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return {rows, cols, p, std::move(data)};
}

/// Unfold built entry by entry.
inline Eigen::MatrixXd unfold_oracle(const Tensor3& t) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(t.rows() * t.tubes()), static_cast<Eigen::Index>(t.cols()));
    for (std::size_t k = 0; k < t.tubes(); ++k) {
        for (std::size_t i = 0; i < t.rows(); ++i) {
            for (std::size_t j = 0; j < t.cols(); ++j) {
                out(static_cast<Eigen::Index>(k * t.rows() + i), static_cast<Eigen::Index>(j)) = t(i, j, k);
            }
        }
    }
    return out;
}

/// Fourier blocks straight from the defining sum with std::polar powers.
inline std::vector<Eigen::MatrixXcd> fourier_oracle(const Tensor3& t) {
    const std::size_t p = t.tubes();
    std::vector<Eigen::MatrixXcd> blocks;
    for (std::size_t i = 0; i < p; ++i) {
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(t.rows()), static_cast<Eigen::Index>(t.cols()));
        for (std::size_t k = 0; k < p; ++k) {
            const double angle = -2.0 * M_PI * static_cast<double>(i * k) / static_cast<double>(p);
            b += std::polar(1.0, angle) * Eigen::MatrixXd(t.slice(k)).cast<std::complex<double>>();
        }
        blocks.push_back(b);
    }
    return blocks;
}

/// Moore-Penrose inverse through a complete orthogonal decomposition with a relative threshold.
inline Eigen::MatrixXd pinv_oracle(const Eigen::MatrixXd& m, double rtol = 1e-10) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
    cod.setThreshold(rtol);
    return cod.pseudoInverse();
}

inline std::size_t rank_oracle(const Eigen::MatrixXd& m, double rtol = 1e-9) {
    if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0.0) {
        return 0;
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
    cod.setThreshold(rtol);
    return static_cast<std::size_t>(cod.rank());
}

/// Number of singular values above an absolute cutoff.
inline std::size_t rank_above(const Eigen::MatrixXd& m, double cutoff) {
    const Eigen::VectorXd sigma = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
    return static_cast<std::size_t>((sigma.array() > cutoff).count());
}

/// Pseudoinverse through a full SVD, dropping singular values at or below an absolute cutoff.
inline Eigen::MatrixXd pinv_above(const Eigen::MatrixXd& m, double cutoff) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd inv_sigma = Eigen::MatrixXd::Zero(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > cutoff) {
            inv_sigma(i, i) = 1.0 / svd.singularValues()(i);
        }
    }
    return svd.matrixV() * inv_sigma * svd.matrixU().transpose();
}

/// Least k with rank(M^{k+1}) = rank(M^k), the rank of M^k decided against 1e-8 ||M||_2^k.
inline std::size_t index_oracle(const Eigen::MatrixXd& m) {
    const auto n = m.rows();
    const double norm = std::max(1.0, Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0));
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    std::size_t prev = static_cast<std::size_t>(n);
    double scale = 1.0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        power = power * m;
        scale *= norm;
        const std::size_t r = rank_above(power, 1e-8 * scale);
        if (r == prev) {
            return k;
        }
        prev = r;
    }
    return static_cast<std::size_t>(n);
}

/// Drazin inverse M^k (M^{2k+1})^+ M^k with the brute-force index.
inline Eigen::MatrixXd drazin_oracle(const Eigen::MatrixXd& m) {
    const std::size_t k = index_oracle(m);
    const double norm = std::max(1.0, Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0));
    Eigen::MatrixXd mk = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (std::size_t i = 0; i < k; ++i) {
        mk = mk * m;
    }
    const Eigen::MatrixXd mid = mk * m * mk;
    return mk * pinv_above(mid, 1e-8 * std::pow(norm, static_cast<double>(2 * k + 1))) * mk;
}

/// t-inverse read off the inverse of the explicit block-circulant matrix.
inline Tensor3 inverse_oracle(const Tensor3& t) {
    return first_block_column(circulant_oracle(t).inverse(), t.rows(), t.cols(), t.tubes());
}

inline Tensor3 dense(std::uint64_t seed, std::size_t m, std::size_t n, std::size_t p) {
    return tprod::gen(seed, m, n, p, tprod::GenKind::dense);
}

/// Dense tensor shifted by a multiple of the identity so every Fourier block is well
/// conditioned.
inline Tensor3 well_conditioned(std::uint64_t seed, std::size_t n, std::size_t p) {
    return tprod::add(dense(seed, n, n, p),
                      tprod::scalar_mul(2.0 * static_cast<double>(n), Tensor3::identity(n, p)));
}

/// Q * T * Q^{-1} with T f-upper-triangular; the first `zero_tubes` diagonal tubes of T are
/// zero. With two zero tubes and a nonzero (1,2) tube every Fourier block has Drazin index 2.
inline Tensor3 similar_upper_triangular(std::uint64_t seed, std::size_t n, std::size_t p, std::size_t zero_tubes) {
    const Tensor3 q = well_conditioned(seed, n, p);
    const Tensor3 g = dense(seed + 7919, n, n, p);
    std::vector<double> data(n * n * p, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                double v = g(i, j, k);
                if (i == j && i < zero_tubes) {
                    v = 0.0;
                }
                if (i == j && i >= zero_tubes && k == 0) {
                    v += static_cast<double>(p) + 1.0;  // keep the nonzero diagonal tubes away from zero blocks
                }
                if (i == 0 && j == 1 && k == 0) {
                    v += static_cast<double>(p) + 1.0;
                }
                data[(k * n + i) * n + j] = v;
            }
        }
    }
    const Tensor3 t(n, n, p, std::move(data));
    return tprod::tprod(tprod::tprod(q, t), inverse_oracle(q));
}

/// Q * D * Q^{-1} with D f-diagonal and its first diagonal tube zero: singular but group
/// invertible in every Fourier block.
inline Tensor3 similar_singular_diagonal(std::uint64_t seed, std::size_t n, std::size_t p) {
    const Tensor3 q = well_conditioned(seed, n, p);
    const Tensor3 g = dense(seed + 104729, n, n, p);
    std::vector<double> data(n * n * p, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 1; i < n; ++i) {
            data[(k * n + i) * n + i] = g(i, i, k) + (k == 0 ? static_cast<double>(p) + 1.0 : 0.0);
        }
    }
    const Tensor3 d(n, n, p, std::move(data));
    return tprod::tprod(tprod::tprod(q, d), inverse_oracle(q));
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

} // namespace testing_support
