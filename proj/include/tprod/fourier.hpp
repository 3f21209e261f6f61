#pragma once

#include "tprod/errors.hpp"
#include "tprod/report.hpp"
#include "tprod/tensor3.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace tprod {

using cplx = std::complex<double>;

/// Powers of xi = exp(-2 pi i / p) and the normalized Fourier matrix
/// F_p = p^{-1/2} [xi^{(j-1)(k-1)}].
///
/// The power table is built so that xi^0 = 1 and xi^{p/2} = -1 exactly and
/// xi^{p-m} == conj(xi^m) bit for bit, which makes the transform of a real tensor satisfy
/// the conjugate pairing exactly rather than to rounding.
class FourierContext {
public:
    explicit FourierContext(std::size_t p);

    std::size_t p() const { return p_; }
    cplx xi() const { return powers_.size() > 1 ? powers_[1] : cplx(1.0, 0.0); }
    /// xi^m for any m >= 0.
    cplx xi_pow(std::size_t m) const { return powers_[m % p_]; }
    /// Normalized F_p; F_p^* F_p = I_p.
    const Eigen::MatrixXcd& dft_matrix() const { return dft_; }

private:
    std::size_t p_;
    std::vector<cplx> powers_;
    Eigen::MatrixXcd dft_;
};

/// The p Fourier blocks A_1, ..., A_p (stored 0-based) of an m x n x p tensor, with
/// A_i = sum_k xi^{(i-1)(k-1)} A^(k).
///
/// Block k (0-based) is paired with block p - k (mod p). Blocks 0 and, for even p, p/2 are
/// self-paired and must be real for a real tensor.
struct FourierBlocks {
    Dims dims;
    std::vector<Eigen::MatrixXcd> blocks;
    /// Set when the blocks come from a real tensor or from lift().
    bool real_origin = false;

    std::size_t partner(std::size_t k) const { return (dims.p - k) % dims.p; }
    bool self_paired(std::size_t k) const { return partner(k) == k; }
    /// 0, 1, ..., floor(p/2): block 1, the index set N and the middle block for even p.
    std::vector<std::size_t> evaluated_indices() const;
    double max_abs() const;
};

/// Where a block map is being evaluated. `real_forced` blocks are exactly real and the map
/// must return a real result for them.
struct BlockSite {
    std::size_t index = 0;
    std::size_t p = 1;
    bool real_forced = false;
};

/// A per-block matrix operation Phi_k. lift() only evaluates it on the representative
/// indices and fills partner blocks with exact conjugates, so the lifted result satisfies the
/// pairing bit-exactly whatever the numerical behaviour of Phi under conjugation.
using BlockMap = std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&, const BlockSite&)>;

struct ComplexTensor3 {
    Dims dims;
    std::vector<Eigen::MatrixXcd> slices;

    double max_imag() const;
    Eigen::MatrixXd real_slice(std::size_t k) const { return slices[k].real(); }
};

/// Real tensor rebuilt from Fourier blocks together with the imaginary residue discarded.
struct RealReconstruction {
    Tensor3 tensor;
    double max_imag = 0.0;
    double tolerance = 0.0;
};

/// tau_pair = 1e-10 (1 + max|entry|)
double pairing_tolerance(const FourierBlocks& fb);
/// tau_real = 1e-9 (1 + max|entry|) p
double realness_tolerance(const FourierBlocks& fb);

/// Unnormalized forward transform along the tubes. The result is tagged real-origin.
FourierBlocks to_fourier(const Tensor3& t);

/// Inverse transform A^(i) = (1/p) sum_k conj(xi^{(i-1)(k-1)}) A_k with realness enforcement.
/// Throws PairingViolation when the blocks are not conjugate-paired within tau_pair and
/// RealnessViolation when the reconstructed imaginary parts exceed tau_real anyway.
Tensor3 from_fourier(const FourierBlocks& fb);
RealReconstruction from_fourier_checked(const FourierBlocks& fb);
/// Inverse transform without any realness requirement.
ComplexTensor3 from_fourier_complex(const FourierBlocks& fb);

/// max|Im A_1|, max_k |A_{p-k+2} - conj(A_k)| and, for even p, max|Im A_{(p+2)/2}|,
/// each against tau_pair. Check names: "block1_imag", "pair_conjugacy", "mid_block_imag".
ResidualReport check_pairing(const FourierBlocks& fb);

namespace detail {
void require_real_origin(const FourierBlocks& fb);
/// Drops the imaginary part of a map result on a real-forced block after checking it is
/// negligible; throws RealnessViolation otherwise.
Eigen::MatrixXcd force_real(const Eigen::MatrixXcd& m);
[[noreturn]] void rethrow_as_block_error(std::size_t index);
} // namespace detail

/// Lifts a map returning N matrices per block to N paired block sets.
template <std::size_t N, class Fn>
std::array<FourierBlocks, N> lift_n(const FourierBlocks& fb, Fn&& phi) {
    detail::require_real_origin(fb);
    const std::size_t p = fb.dims.p;
    std::array<FourierBlocks, N> out;
    for (auto& o : out) {
        o.blocks.resize(p);
        o.real_origin = true;
    }
    for (std::size_t k : fb.evaluated_indices()) {
        const BlockSite site{k, p, fb.self_paired(k)};
        std::array<Eigen::MatrixXcd, N> result;
        try {
            result = phi(fb.blocks[k], site);
            if (site.real_forced) {
                for (auto& r : result) {
                    r = detail::force_real(r);
                }
            }
        } catch (...) {
            detail::rethrow_as_block_error(k);
        }
        const std::size_t partner = fb.partner(k);
        for (std::size_t j = 0; j < N; ++j) {
            if (partner != k) {
                out[j].blocks[partner] = result[j].conjugate();
            }
            out[j].blocks[k] = std::move(result[j]);
        }
    }
    for (auto& o : out) {
        o.dims = {static_cast<std::size_t>(o.blocks[0].rows()),
                  static_cast<std::size_t>(o.blocks[0].cols()), p};
        for (const auto& b : o.blocks) {
            if (static_cast<std::size_t>(b.rows()) != o.dims.m ||
                static_cast<std::size_t>(b.cols()) != o.dims.n) {
                throw DimensionError("lift: block map returned blocks of differing shapes");
            }
        }
    }
    return out;
}

FourierBlocks lift(const FourierBlocks& fb, const BlockMap& phi);

} // namespace tprod
