#include "tprod/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tprod {

FourierContext::FourierContext(std::size_t p) : p_(p) {
    if (p == 0) {
        throw DimensionError("FourierContext: p must be positive");
    }
    powers_.resize(p);
    for (std::size_t m = 0; m < p; ++m) {
        if (m == 0) {
            powers_[m] = {1.0, 0.0};
        } else if (2 * m == p) {
            powers_[m] = {-1.0, 0.0};
        } else if (4 * m == p) {
            powers_[m] = {0.0, -1.0};
        } else if (2 * m < p) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(p);
            powers_[m] = {std::cos(angle), -std::sin(angle)};
        } else {
            powers_[m] = std::conj(powers_[p - m]);
        }
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    dft_.resize(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < p; ++k) {
            dft_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = xi_pow(j * k) * norm;
        }
    }
}

std::vector<std::size_t> FourierBlocks::evaluated_indices() const {
    std::vector<std::size_t> idx(dims.p / 2 + 1);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        idx[k] = k;
    }
    return idx;
}

double FourierBlocks::max_abs() const {
    double r = 0.0;
    for (const auto& b : blocks) {
        if (b.size()) {
            r = std::max(r, b.cwiseAbs().maxCoeff());
        }
    }
    return r;
}

double ComplexTensor3::max_imag() const {
    double r = 0.0;
    for (const auto& s : slices) {
        if (s.size()) {
            r = std::max(r, s.imag().cwiseAbs().maxCoeff());
        }
    }
    return r;
}

double pairing_tolerance(const FourierBlocks& fb) { return 1e-10 * (1.0 + fb.max_abs()); }

double realness_tolerance(const FourierBlocks& fb) {
    return 1e-9 * (1.0 + fb.max_abs()) * static_cast<double>(fb.dims.p);
}

FourierBlocks to_fourier(const Tensor3& t) {
    const auto& d = t.dims();
    const FourierContext ctx(d.p);
    FourierBlocks fb;
    fb.dims = d;
    fb.real_origin = true;
    fb.blocks.assign(d.p, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d.m),
                                                 static_cast<Eigen::Index>(d.n)));
    for (std::size_t i = 0; i < d.p; ++i) {
        for (std::size_t k = 0; k < d.p; ++k) {
            fb.blocks[i] += ctx.xi_pow(i * k) * t.slice(k).cast<cplx>();
        }
    }
    return fb;
}

ComplexTensor3 from_fourier_complex(const FourierBlocks& fb) {
    const auto& d = fb.dims;
    if (fb.blocks.size() != d.p) {
        throw DimensionError("from_fourier: expected " + std::to_string(d.p) + " blocks");
    }
    const FourierContext ctx(d.p);
    ComplexTensor3 out;
    out.dims = d;
    out.slices.assign(d.p, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d.m),
                                                  static_cast<Eigen::Index>(d.n)));
    const double inv_p = 1.0 / static_cast<double>(d.p);
    for (std::size_t i = 0; i < d.p; ++i) {
        for (std::size_t k = 0; k < d.p; ++k) {
            out.slices[i] += std::conj(ctx.xi_pow(i * k)) * fb.blocks[k];
        }
        out.slices[i] *= inv_p;
    }
    return out;
}

RealReconstruction from_fourier_checked(const FourierBlocks& fb) {
    const ResidualReport pairing = check_pairing(fb);
    if (!pairing.pass()) {
        double worst = 0.0;
        for (const auto& c : pairing.checks()) {
            worst = std::max(worst, c.residual);
        }
        throw PairingViolation("Fourier blocks are not conjugate-paired (residual " +
                                   std::to_string(worst) + ")",
                               worst, pairing_tolerance(fb));
    }
    const ComplexTensor3 c = from_fourier_complex(fb);
    const double max_imag = c.max_imag();
    const double tol = realness_tolerance(fb);
    if (max_imag > tol) {
        throw RealnessViolation("inverse transform left imaginary parts of size " +
                                    std::to_string(max_imag),
                                max_imag, tol);
    }
    std::vector<Eigen::MatrixXd> slices;
    slices.reserve(c.slices.size());
    for (const auto& s : c.slices) {
        slices.emplace_back(s.real());
    }
    return {Tensor3::from_slices(slices), max_imag, tol};
}

Tensor3 from_fourier(const FourierBlocks& fb) { return from_fourier_checked(fb).tensor; }

ResidualReport check_pairing(const FourierBlocks& fb) {
    const double tol = pairing_tolerance(fb);
    ResidualReport report("check_pairing");
    const std::size_t p = fb.dims.p;
    report.add("block1_imag", fb.blocks[0].size() ? fb.blocks[0].imag().cwiseAbs().maxCoeff() : 0.0,
               tol);
    double pair = 0.0;
    for (std::size_t k = 1; k < p; ++k) {
        const auto& a = fb.blocks[k];
        const auto& b = fb.blocks[fb.partner(k)];
        if (fb.partner(k) != k && a.size()) {
            pair = std::max(pair, (b - a.conjugate()).cwiseAbs().maxCoeff());
        }
    }
    report.add("pair_conjugacy", pair, tol);
    if (p % 2 == 0) {
        const auto& mid = fb.blocks[p / 2];
        report.add("mid_block_imag", mid.size() ? mid.imag().cwiseAbs().maxCoeff() : 0.0, tol);
    }
    return report;
}

namespace detail {

void require_real_origin(const FourierBlocks& fb) {
    if (fb.blocks.size() != fb.dims.p || fb.dims.p == 0) {
        throw DimensionError("lift: block count does not match p");
    }
    if (fb.real_origin) {
        return;
    }
    const ResidualReport pairing = check_pairing(fb);
    if (!pairing.pass()) {
        throw PairingViolation("lift: input blocks are not conjugate-paired", 0.0,
                               pairing_tolerance(fb));
    }
}

Eigen::MatrixXcd force_real(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) {
        return m;
    }
    const double imag = m.imag().cwiseAbs().maxCoeff();
    const double tol = 1e-10 * (1.0 + m.cwiseAbs().maxCoeff());
    if (imag > tol) {
        throw RealnessViolation("block map returned a non-real result on a real-forced block", imag,
                                tol);
    }
    return m.real().cast<cplx>();
}

void rethrow_as_block_error(std::size_t index) {
    try {
        throw;
    } catch (const BlockOpError&) {
        throw;
    } catch (const std::exception& e) {
        throw BlockOpError(index, std::current_exception(), e.what());
    }
}

} // namespace detail

FourierBlocks lift(const FourierBlocks& fb, const BlockMap& phi) {
    return lift_n<1>(fb, [&phi](const Eigen::MatrixXcd& block, const BlockSite& site) {
        return std::array<Eigen::MatrixXcd, 1>{phi(block, site)};
    })[0];
}

} // namespace tprod
