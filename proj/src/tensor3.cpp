#include "tprod/tensor3.hpp"

#include "tprod/errors.hpp"
#include "tprod/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tprod {

namespace {

void check_positive(std::size_t m, std::size_t n, std::size_t p) {
    if (m == 0 || n == 0 || p == 0) {
        throw DimensionError("tensor dimensions must be positive, got " + std::to_string(m) + "x" +
                             std::to_string(n) + "x" + std::to_string(p));
    }
}

std::string dims_str(const Dims& d) {
    return std::to_string(d.m) + "x" + std::to_string(d.n) + "x" + std::to_string(d.p);
}

} // namespace

Tensor3::Tensor3(std::size_t m, std::size_t n, std::size_t p) : dims_{m, n, p} {
    check_positive(m, n, p);
    data_.assign(m * n * p, 0.0);
}

Tensor3::Tensor3(std::size_t m, std::size_t n, std::size_t p, std::vector<double> data)
    : dims_{m, n, p}, data_(std::move(data)) {
    check_positive(m, n, p);
    if (data_.size() != dims_.size()) {
        throw DimensionError("tensor " + dims_str(dims_) + " needs " + std::to_string(dims_.size()) +
                             " entries, got " + std::to_string(data_.size()));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw Error("tensor entries must be finite");
        }
    }
}

Tensor3 Tensor3::identity(std::size_t n, std::size_t p) {
    std::vector<double> data(n * n * p, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        data[i * n + i] = 1.0;
    }
    return {n, n, p, std::move(data)};
}

Tensor3 Tensor3::from_slices(const std::vector<Eigen::MatrixXd>& slices) {
    if (slices.empty()) {
        throw DimensionError("from_slices: need at least one slice");
    }
    const auto m = static_cast<std::size_t>(slices.front().rows());
    const auto n = static_cast<std::size_t>(slices.front().cols());
    std::vector<double> data;
    data.reserve(m * n * slices.size());
    for (const auto& s : slices) {
        if (static_cast<std::size_t>(s.rows()) != m || static_cast<std::size_t>(s.cols()) != n) {
            throw DimensionError("from_slices: slices differ in shape");
        }
        for (Eigen::Index i = 0; i < s.rows(); ++i) {
            for (Eigen::Index j = 0; j < s.cols(); ++j) {
                data.push_back(s(i, j));
            }
        }
    }
    return {m, n, slices.size(), std::move(data)};
}

double Tensor3::max_abs() const {
    double r = 0.0;
    for (double v : data_) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

BlockCirculant::BlockCirculant(Dims block_dims, Eigen::MatrixXd matrix)
    : dims_(block_dims), matrix_(std::move(matrix)) {
    check_positive(dims_.m, dims_.n, dims_.p);
    if (static_cast<std::size_t>(matrix_.rows()) != dims_.m * dims_.p ||
        static_cast<std::size_t>(matrix_.cols()) != dims_.n * dims_.p) {
        throw DimensionError("block-circulant matrix must be " + std::to_string(dims_.m * dims_.p) +
                             "x" + std::to_string(dims_.n * dims_.p));
    }
}

double BlockCirculant::circulant_deviation() const {
    double dev = 0.0;
    for (std::size_t c = 1; c < dims_.p; ++c) {
        for (std::size_t r = 0; r < dims_.p; ++r) {
            const std::size_t r0 = (r + dims_.p - c) % dims_.p;
            dev = std::max(dev, (block(r, c) - block(r0, 0)).cwiseAbs().maxCoeff());
        }
    }
    return dev;
}

Eigen::MatrixXd unfold(const Tensor3& t) {
    const auto& d = t.dims();
    return Eigen::Map<const RowMatrix>(t.data().data(), static_cast<Eigen::Index>(d.m * d.p),
                                       static_cast<Eigen::Index>(d.n));
}

Tensor3 fold(const Eigen::MatrixXd& unfolded, std::size_t p) {
    if (p == 0 || unfolded.rows() == 0 || static_cast<std::size_t>(unfolded.rows()) % p != 0) {
        throw DimensionError("fold: " + std::to_string(unfolded.rows()) +
                             " rows are not divisible into " + std::to_string(p) + " slices");
    }
    const RowMatrix rm = unfolded;
    std::vector<double> data(rm.data(), rm.data() + rm.size());
    return {static_cast<std::size_t>(unfolded.rows()) / p, static_cast<std::size_t>(unfolded.cols()), p,
            std::move(data)};
}

BlockCirculant bcirc(const Tensor3& t) {
    const auto& d = t.dims();
    Eigen::MatrixXd mat(d.m * d.p, d.n * d.p);
    for (std::size_t r = 0; r < d.p; ++r) {
        for (std::size_t c = 0; c < d.p; ++c) {
            mat.block(static_cast<Eigen::Index>(r * d.m), static_cast<Eigen::Index>(c * d.n),
                      static_cast<Eigen::Index>(d.m), static_cast<Eigen::Index>(d.n)) =
                t.slice((r + d.p - c) % d.p);
        }
    }
    return {d, std::move(mat)};
}

Tensor3 bcirc_inv(const BlockCirculant& b) {
    const double scale = b.matrix().size() ? b.matrix().cwiseAbs().maxCoeff() : 0.0;
    const double tol = 1e-10 * scale;
    const double dev = b.circulant_deviation();
    if (dev > tol) {
        throw NotBlockCirculant("matrix deviates from block-circulant structure by " +
                                    std::to_string(dev),
                                dev, tol);
    }
    const auto& d = b.block_dims();
    return fold(b.matrix().leftCols(static_cast<Eigen::Index>(d.n)), d.p);
}

Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
    const std::size_t smallest = std::min({a.rows(), a.cols(), b.cols()});
    if (a.tubes() * smallest <= 64) {
        return tprod_direct(a, b);
    }
    return tprod_fourier(a, b);
}

Tensor3 tprod_direct(const Tensor3& a, const Tensor3& b) {
    if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
        throw DimensionError("tprod: cannot multiply " + dims_str(a.dims()) + " by " +
                             dims_str(b.dims()));
    }
    const std::size_t m = a.rows();
    const std::size_t l = b.cols();
    const std::size_t p = a.tubes();
    // C^(i) = sum_k A^(i-k mod p) B^(k), i.e. block row i of bcirc(A) times unfold(B).
    std::vector<double> out(m * l * p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        Eigen::Map<RowMatrix> c(out.data() + i * m * l, static_cast<Eigen::Index>(m),
                                static_cast<Eigen::Index>(l));
        for (std::size_t k = 0; k < p; ++k) {
            c.noalias() += a.slice((i + p - k) % p) * b.slice(k);
        }
    }
    return {m, l, p, std::move(out)};
}

Tensor3 tprod_fourier(const Tensor3& a, const Tensor3& b) {
    if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
        throw DimensionError("tprod: cannot multiply " + dims_str(a.dims()) + " by " +
                             dims_str(b.dims()));
    }
    const FourierBlocks fa = to_fourier(a);
    const FourierBlocks fb = to_fourier(b);
    return from_fourier(lift(fa, [&fb](const Eigen::MatrixXcd& block, const BlockSite& site) {
        return Eigen::MatrixXcd(block * fb.blocks[site.index]);
    }));
}

Tensor3 transpose(const Tensor3& t) {
    const auto& d = t.dims();
    std::vector<double> out(d.size());
    for (std::size_t k = 0; k < d.p; ++k) {
        const std::size_t src = (d.p - k) % d.p;
        Eigen::Map<RowMatrix>(out.data() + k * d.m * d.n, static_cast<Eigen::Index>(d.n),
                              static_cast<Eigen::Index>(d.m)) = t.slice(src).transpose();
    }
    return {d.n, d.m, d.p, std::move(out)};
}

Tensor3 add(const Tensor3& a, const Tensor3& b) {
    if (a.dims() != b.dims()) {
        throw DimensionError("add: " + dims_str(a.dims()) + " vs " + dims_str(b.dims()));
    }
    std::vector<double> out(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.data()[i];
    }
    return {a.rows(), a.cols(), a.tubes(), std::move(out)};
}

Tensor3 subtract(const Tensor3& a, const Tensor3& b) {
    if (a.dims() != b.dims()) {
        throw DimensionError("subtract: " + dims_str(a.dims()) + " vs " + dims_str(b.dims()));
    }
    std::vector<double> out(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b.data()[i];
    }
    return {a.rows(), a.cols(), a.tubes(), std::move(out)};
}

Tensor3 scalar_mul(double alpha, const Tensor3& t) {
    std::vector<double> out(t.data().begin(), t.data().end());
    for (double& v : out) {
        v *= alpha;
    }
    return {t.rows(), t.cols(), t.tubes(), std::move(out)};
}

Tensor3 power(const Tensor3& t, unsigned k) {
    if (t.rows() != t.cols()) {
        throw DimensionError("power: slices must be square, got " + dims_str(t.dims()));
    }
    Tensor3 result = Tensor3::identity(t.rows(), t.tubes());
    for (unsigned i = 0; i < k; ++i) {
        result = tprod(t, result);
    }
    return result;
}

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
    if (a.dims() != b.dims()) {
        throw DimensionError("max_abs_diff: " + dims_str(a.dims()) + " vs " + dims_str(b.dims()));
    }
    double r = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        r = std::max(r, std::abs(a.data()[i] - b.data()[i]));
    }
    return r;
}

} // namespace tprod
