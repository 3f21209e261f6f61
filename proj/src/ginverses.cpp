#include "tprod/ginverses.hpp"

#include "tprod/errors.hpp"
#include "tprod/factorizations.hpp"
#include "tprod/fourier.hpp"
#include "tprod/matrix_kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>

namespace tprod {

namespace {

Eigen::MatrixXcd complexify(const Eigen::MatrixXd& m) { return m.cast<cplx>(); }

void require_square(const Tensor3& t, const char* what) {
    if (t.rows() != t.cols()) {
        throw DimensionError(std::string(what) + ": frontal slices must be square");
    }
}

double resolve_rtol(double rtol, const Tensor3& a) {
    return rtol > 0.0 ? rtol : linalg::default_rtol(a.rows(), a.cols());
}

/// Applies a kernel available for both real and complex scalars, using the real instance on
/// real-forced blocks.
template <class Kernel>
Tensor3 lift_kernel(const FourierBlocks& fb, Kernel&& kernel) {
    return from_fourier(lift(fb, [&kernel](const Eigen::MatrixXcd& block, const BlockSite& site) {
        if (site.real_forced) {
            return complexify(kernel(Eigen::MatrixXd(block.real())));
        }
        return Eigen::MatrixXcd(kernel(block));
    }));
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

} // namespace

double ginverse_tolerance(const Tensor3& a) {
    const double s = 1.0 + a.max_abs();
    return 1e-9 * s * s * static_cast<double>(a.tubes());
}

double block_condition(const Tensor3& a) {
    const FourierBlocks fb = to_fourier(a);
    double worst = 1.0;
    for (std::size_t k : fb.evaluated_indices()) {
        worst = std::max(worst, linalg::condition_number<cplx>(fb.blocks[k]));
    }
    return worst;
}

Tensor3 t_inverse(const Tensor3& a, double rtol) {
    require_square(a, "t_inverse");
    rtol = resolve_rtol(rtol, a);
    const FourierBlocks fb = to_fourier(a);
    for (std::size_t k : fb.evaluated_indices()) {
        const Eigen::VectorXd sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(fb.blocks[k]).singularValues();
        const double smin = sigma(sigma.size() - 1);
        if (!(smin > rtol * sigma(0))) {
            throw Singular("Fourier block " + std::to_string(k + 1) +
                               " is singular (smallest singular value " + format_double(smin) + ")",
                           k, smin);
        }
    }
    return lift_kernel(fb, [](const auto& m) { return std::decay_t<decltype(m)>(m.fullPivLu().inverse()); });
}

Tensor3 t_pinv_svd(const Tensor3& a, double rtol) {
    rtol = resolve_rtol(rtol, a);
    const TSvdResult f = t_svd(a);
    const FourierBlocks sb = to_fourier(f.S);
    // S^+ blockwise: transpose the shape and invert the singular values above the threshold.
    const FourierBlocks s_pinv = lift(sb, [rtol](const Eigen::MatrixXcd& block, const BlockSite&) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(block.cols(), block.rows());
        const Eigen::Index k = std::min(block.rows(), block.cols());
        double smax = 0.0;
        for (Eigen::Index j = 0; j < k; ++j) {
            smax = std::max(smax, std::abs(block(j, j)));
        }
        for (Eigen::Index j = 0; j < k; ++j) {
            if (std::abs(block(j, j)) > rtol * smax) {
                out(j, j) = 1.0 / block(j, j);
            }
        }
        return out;
    });
    return tprod(tprod(f.V, from_fourier(s_pinv)), transpose(f.U));
}

Tensor3 t_pinv_blocks(const Tensor3& a, double rtol) {
    rtol = resolve_rtol(rtol, a);
    return lift_kernel(to_fourier(a), [rtol](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        return linalg::mp_inverse<typename M::Scalar>(m, rtol);
    });
}

std::size_t t_drazin_index(const Tensor3& a, double rtol) {
    require_square(a, "t_drazin_index");
    rtol = resolve_rtol(rtol, a);
    const FourierBlocks fb = to_fourier(a);
    std::size_t index = 0;
    for (std::size_t k : fb.evaluated_indices()) {
        index = std::max(index, linalg::drazin_index<cplx>(fb.blocks[k], rtol));
    }
    return index;
}

DrazinResult t_drazin(const Tensor3& a, double rtol) {
    const auto start = std::chrono::steady_clock::now();
    require_square(a, "t_drazin");
    rtol = resolve_rtol(rtol, a);
    std::size_t index = 0;
    Tensor3 ad = lift_kernel(to_fourier(a), [rtol, &index](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        auto d = linalg::drazin_inverse<typename M::Scalar>(m, rtol);
        index = std::max(index, d.index);
        return d.inverse;
    });
    DrazinResult result{ad, index, verify_drazin(a, ad, index)};
    result.report.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return result;
}

Tensor3 t_group(const Tensor3& a, double rtol) {
    require_square(a, "t_group");
    rtol = resolve_rtol(rtol, a);
    const FourierBlocks fb = to_fourier(a);
    for (std::size_t k : fb.evaluated_indices()) {
        const auto g = linalg::group_invertibility<cplx>(fb.blocks[k], rtol);
        if (!g.exists()) {
            throw GroupInverseNotExist("Fourier block " + std::to_string(k + 1) +
                                           " has no group inverse: rank(A^2) = " + std::to_string(g.rank_a2) +
                                           " < rank(A) = " + std::to_string(g.rank_a) +
                                           " (margin " + format_double(g.margin) + ")",
                                       k, g.rank_a, g.rank_a2, g.margin);
        }
    }
    return lift_kernel(fb, [rtol](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        return linalg::group_inverse<typename M::Scalar>(m, rtol);
    });
}

UnitRegularWitness unit_regular_witness(const Tensor3& a, double rtol) {
    const auto start = std::chrono::steady_clock::now();
    IdempotentFactorization f = idempotent_factorization(a, rtol);
    Tensor3 w = tprod(t_inverse(f.V), t_inverse(f.U));
    UnitRegularWitness result{w, f.U, f.E, f.V, verify_witness(a, w)};
    result.report.merge(f.report, "idem_");
    result.report.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return result;
}

// ---------------------------------------------------------------------------------------------

ResidualReport verify_inverse(const Tensor3& a, const Tensor3& x, ToleranceOverride tol) {
    require_square(a, "verify_inverse");
    if (x.dims() != a.dims()) {
        throw DimensionError("verify_inverse: inverse must have the dimensions of the input");
    }
    const Tensor3 id = Tensor3::identity(a.rows(), a.tubes());
    const double t = tol(ginverse_tolerance(a));
    ResidualReport report("tinv");
    report.add("right_inverse", max_abs_diff(tprod(a, x), id), t);
    report.add("left_inverse", max_abs_diff(tprod(x, a), id), t);
    return report;
}

ResidualReport verify_pinv(const Tensor3& a, const Tensor3& x, ToleranceOverride tol) {
    if (x.dims() != Dims{a.cols(), a.rows(), a.tubes()}) {
        throw DimensionError("verify_pinv: pseudoinverse must be n x m x p for an m x n x p input");
    }
    const double t = tol(ginverse_tolerance(a));
    const Tensor3 ax = tprod(a, x);
    const Tensor3 xa = tprod(x, a);
    ResidualReport report("pinv");
    report.add("penrose_axa", max_abs_diff(tprod(ax, a), a), t);
    report.add("penrose_xax", max_abs_diff(tprod(xa, x), x), t);
    report.add("penrose_ax_symmetric", max_abs_diff(transpose(ax), ax), t);
    report.add("penrose_xa_symmetric", max_abs_diff(transpose(xa), xa), t);
    return report;
}

ResidualReport verify_drazin(const Tensor3& a, const Tensor3& ad, std::size_t index, ToleranceOverride tol) {
    require_square(a, "verify_drazin");
    if (ad.dims() != a.dims()) {
        throw DimensionError("verify_drazin: Drazin inverse must have the dimensions of the input");
    }
    const double t = tol(ginverse_tolerance(a));
    const Tensor3 ak = power(a, static_cast<unsigned>(index));
    ResidualReport report("drazin");
    report.add("drazin_power", max_abs_diff(tprod(tprod(ak, a), ad), ak), t);
    report.add("drazin_outer", max_abs_diff(tprod(tprod(ad, a), ad), ad), t);
    report.add("drazin_commute", max_abs_diff(tprod(a, ad), tprod(ad, a)), t);
    return report;
}

ResidualReport verify_group(const Tensor3& a, const Tensor3& g, ToleranceOverride tol) {
    require_square(a, "verify_group");
    if (g.dims() != a.dims()) {
        throw DimensionError("verify_group: group inverse must have the dimensions of the input");
    }
    const double t = tol(ginverse_tolerance(a));
    ResidualReport report("group");
    report.add("group_aga", max_abs_diff(tprod(tprod(a, g), a), a), t);
    report.add("group_gag", max_abs_diff(tprod(tprod(g, a), g), g), t);
    report.add("group_commute", max_abs_diff(tprod(a, g), tprod(g, a)), t);
    return report;
}

ResidualReport verify_witness(const Tensor3& a, const Tensor3& w, ToleranceOverride tol) {
    require_square(a, "verify_witness");
    if (w.dims() != a.dims()) {
        throw DimensionError("verify_witness: witness must have the dimensions of the input");
    }
    ResidualReport report("witness");
    report.add("inner_inverse", max_abs_diff(tprod(tprod(a, w), a), a), tol(ginverse_tolerance(a)));
    report.add("invertible_W", block_condition(w), 1e12);
    return report;
}

} // namespace tprod
