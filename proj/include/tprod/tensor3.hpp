#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace tprod {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Dims {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t p = 0;

    std::size_t size() const { return m * n * p; }
    bool operator==(const Dims&) const = default;
};

/// Dense real m x n x p tensor. Frontal slices are stored one after another (slice-major),
/// each slice row-major, so unfold/fold are plain reshapes of the same buffer.
/// Values never change after construction and every entry is finite.
class Tensor3 {
public:
    using SliceMap = Eigen::Map<const RowMatrix>;

    /// Zero tensor.
    Tensor3(std::size_t m, std::size_t n, std::size_t p);
    Tensor3(std::size_t m, std::size_t n, std::size_t p, std::vector<double> data);

    static Tensor3 zeros(std::size_t m, std::size_t n, std::size_t p) { return {m, n, p}; }
    /// I^(1) = I_n, all other slices zero.
    static Tensor3 identity(std::size_t n, std::size_t p);
    /// Slices must share one shape; at least one slice.
    static Tensor3 from_slices(const std::vector<Eigen::MatrixXd>& slices);

    std::size_t rows() const { return dims_.m; }
    std::size_t cols() const { return dims_.n; }
    std::size_t tubes() const { return dims_.p; }
    const Dims& dims() const { return dims_; }

    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(k * dims_.m + i) * dims_.n + j];
    }
    SliceMap slice(std::size_t k) const {
        return SliceMap(data_.data() + k * dims_.m * dims_.n, static_cast<Eigen::Index>(dims_.m),
                        static_cast<Eigen::Index>(dims_.n));
    }
    std::span<const double> data() const { return data_; }

    double max_abs() const;

    /// Bitwise-style equality of dims and entries.
    bool operator==(const Tensor3& other) const = default;

private:
    Dims dims_;
    std::vector<double> data_;
};

/// bcirc(A): mp x np matrix whose first block column is A^(1), ..., A^(p) and whose block
/// column c is the cyclic down-shift of the first by c.
class BlockCirculant {
public:
    BlockCirculant(Dims block_dims, Eigen::MatrixXd matrix);

    const Dims& block_dims() const { return dims_; }
    const Eigen::MatrixXd& matrix() const { return matrix_; }
    /// Block (r, c), 0-based, as an m x n view.
    auto block(std::size_t r, std::size_t c) const {
        return matrix_.block(static_cast<Eigen::Index>(r * dims_.m),
                             static_cast<Eigen::Index>(c * dims_.n),
                             static_cast<Eigen::Index>(dims_.m), static_cast<Eigen::Index>(dims_.n));
    }
    /// Largest deviation of any block (r, c) from block (r - c mod p, 0).
    double circulant_deviation() const;

private:
    Dims dims_;
    Eigen::MatrixXd matrix_;
};

/// Vertical stack [A^(1); ...; A^(p)] of size mp x n.
Eigen::MatrixXd unfold(const Tensor3& t);
/// Inverse of unfold. Throws DimensionError when the row count is not a multiple of p.
Tensor3 fold(const Eigen::MatrixXd& unfolded, std::size_t p);

BlockCirculant bcirc(const Tensor3& t);
/// Reads the first block column back into slices after checking the circulant structure
/// within 1e-10 * max|entry|; throws NotBlockCirculant otherwise.
Tensor3 bcirc_inv(const BlockCirculant& b);

/// t-product of m x n x p and n x l x p tensors. Dispatches to the direct slice convolution
/// for p * min(m, n, l) <= 64 and to the Fourier-domain product otherwise.
Tensor3 tprod(const Tensor3& a, const Tensor3& b);
/// fold(bcirc(a) unfold(b)), evaluated as a cyclic convolution of slices.
Tensor3 tprod_direct(const Tensor3& a, const Tensor3& b);
/// Blockwise products of Fourier blocks followed by the inverse transform.
Tensor3 tprod_fourier(const Tensor3& a, const Tensor3& b);

/// Slice 1 becomes A^(1)^T; slice k >= 2 becomes A^(p-k+2)^T.
Tensor3 transpose(const Tensor3& t);

Tensor3 add(const Tensor3& a, const Tensor3& b);
Tensor3 subtract(const Tensor3& a, const Tensor3& b);
Tensor3 scalar_mul(double alpha, const Tensor3& t);
/// t^k under the t-product, t^0 = I. Requires square slices.
Tensor3 power(const Tensor3& t, unsigned k);

/// max |a - b| over all entries; dims must agree.
double max_abs_diff(const Tensor3& a, const Tensor3& b);

} // namespace tprod
