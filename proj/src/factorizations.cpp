#include "tprod/factorizations.hpp"

#include "tprod/errors.hpp"
#include "tprod/ginverses.hpp"
#include "tprod/matrix_kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace tprod {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Eigen::MatrixXcd complexify(const Eigen::MatrixXd& m) { return m.cast<cplx>(); }

void require_square(const Tensor3& t, const char* what) {
    if (t.rows() != t.cols()) {
        throw DimensionError(std::string(what) + ": frontal slices must be square");
    }
}

void require_dims(const Tensor3& t, Dims expected, const char* name) {
    if (t.dims() != expected) {
        throw DimensionError(std::string(name) + " has dimensions " + std::to_string(t.rows()) + "x" +
                             std::to_string(t.cols()) + "x" + std::to_string(t.tubes()) +
                             ", expected " + std::to_string(expected.m) + "x" +
                             std::to_string(expected.n) + "x" + std::to_string(expected.p));
    }
}

void add_realness(ResidualReport& report, const std::string& name, const RealReconstruction& r) {
    report.add("realness_" + name, r.max_imag, r.tolerance);
}

/// Finest partition induced by the subdiagonal couplings of all slices, and the largest entry
/// outside the band it permits. `bidiagonal` restricts the band above the diagonal blocks to
/// the first block superdiagonal.
struct BandScan {
    std::vector<std::size_t> partition;
    double residual = 0.0;
    std::size_t slice = 0;
    std::size_t row = 0;
};

BandScan scan_band(const Tensor3& t, double tol, bool bidiagonal) {
    const std::size_t n = t.rows();
    std::vector<bool> coupled(n > 0 ? n - 1 : 0, false);
    for (std::size_t k = 0; k < t.tubes(); ++k) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(t(i + 1, i, k)) > tol) {
                coupled[i] = true;
            }
        }
    }
    BandScan scan;
    std::vector<std::size_t> block_of(n);
    for (std::size_t i = 0, b = 0; i < n; ++b) {
        const std::size_t size = (i + 1 < n && coupled[i]) ? 2 : 1;
        for (std::size_t r = i; r < i + size; ++r) {
            block_of[r] = b;
        }
        scan.partition.push_back(size);
        i += size;
    }
    for (std::size_t k = 0; k < t.tubes(); ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t br = block_of[r];
                const std::size_t bc = block_of[c];
                const bool allowed = bidiagonal ? (bc == br || bc == br + 1) : bc >= br;
                const double v = std::abs(t(r, c, k));
                if (!allowed && v > scan.residual) {
                    scan.residual = v;
                    scan.slice = k;
                    scan.row = r;
                }
            }
        }
    }
    return scan;
}

PartitionCheck to_check(const BandScan& scan, double tol) {
    PartitionCheck check;
    check.residual = scan.residual;
    check.ok = scan.residual <= tol;
    if (check.ok) {
        check.partition = scan.partition;
    }
    return check;
}

std::vector<std::size_t> realized_partition(const Tensor3& t, bool bidiagonal, const char* what) {
    const double tol = linalg::kDecompositionTol * (1.0 + t.max_abs());
    const BandScan scan = scan_band(t, tol, bidiagonal);
    if (scan.residual > tol) {
        throw PartitionViolation(std::string(what) + ": slice " + std::to_string(scan.slice + 1) +
                                     " needs a diagonal block larger than 2x2 at row " +
                                     std::to_string(scan.row + 1) + " (entry " +
                                     std::to_string(scan.residual) + " outside the band)",
                                 scan.slice, scan.row);
    }
    return scan.partition;
}

double structure_tolerance(const Tensor3& a) { return linalg::kDecompositionTol * (1.0 + a.max_abs()); }

} // namespace

double reconstruction_tolerance(const Tensor3& a) {
    return 1e-10 * (1.0 + a.max_abs()) * static_cast<double>(a.tubes());
}

double orthogonality_tolerance(std::size_t n, std::size_t p) {
    return 1e-10 * static_cast<double>(n) * static_cast<double>(p);
}

double off_diagonal_max(const Tensor3& t) {
    double r = 0.0;
    for (std::size_t k = 0; k < t.tubes(); ++k) {
        for (std::size_t i = 0; i < t.rows(); ++i) {
            for (std::size_t j = 0; j < t.cols(); ++j) {
                if (i != j) {
                    r = std::max(r, std::abs(t(i, j, k)));
                }
            }
        }
    }
    return r;
}

double orthogonality_residual(const Tensor3& t) {
    require_square(t, "orthogonality_residual");
    return max_abs_diff(tprod(transpose(t), t), Tensor3::identity(t.rows(), t.tubes()));
}

bool is_f_diagonal(const Tensor3& t, double tol) { return off_diagonal_max(t) <= tol; }

PartitionCheck is_f_quasi_triangular(const Tensor3& t, double tol) {
    if (t.rows() != t.cols()) {
        return {};
    }
    return to_check(scan_band(t, tol, false), tol);
}

PartitionCheck is_f_upper_block_bidiagonal(const Tensor3& t, double tol) {
    if (t.rows() != t.cols()) {
        return {};
    }
    return to_check(scan_band(t, tol, true), tol);
}

bool is_t_symmetric(const Tensor3& t, double tol) {
    return t.rows() == t.cols() && max_abs_diff(t, transpose(t)) <= tol;
}

bool is_orthogonal(const Tensor3& t, double tol) {
    if (t.rows() != t.cols()) {
        return false;
    }
    const Tensor3 id = Tensor3::identity(t.rows(), t.tubes());
    return max_abs_diff(tprod(transpose(t), t), id) <= tol &&
           max_abs_diff(tprod(t, transpose(t)), id) <= tol;
}

// ---------------------------------------------------------------------------------------------

TSvdResult t_svd(const Tensor3& a) {
    const auto start = Clock::now();
    const auto factors = lift_n<3>(to_fourier(a), [](const Eigen::MatrixXcd& block, const BlockSite& site) {
        if (site.real_forced) {
            const auto s = linalg::svd<double>(block.real());
            return std::array<Eigen::MatrixXcd, 3>{complexify(s.U), complexify(s.sigma_matrix()),
                                                   complexify(s.V)};
        }
        const auto s = linalg::svd<cplx>(block);
        return std::array<Eigen::MatrixXcd, 3>{s.U, s.sigma_matrix(), s.V};
    });
    const RealReconstruction u = from_fourier_checked(factors[0]);
    const RealReconstruction s = from_fourier_checked(factors[1]);
    const RealReconstruction v = from_fourier_checked(factors[2]);
    TSvdResult result{u.tensor, s.tensor, v.tensor, verify_tsvd(a, u.tensor, s.tensor, v.tensor)};
    add_realness(result.report, "U", u);
    add_realness(result.report, "S", s);
    add_realness(result.report, "V", v);
    result.report.set_seconds(seconds_since(start));
    return result;
}

ResidualReport verify_tsvd(const Tensor3& a, const Tensor3& u, const Tensor3& s, const Tensor3& v,
                           ToleranceOverride tol) {
    const auto [m, n, p] = a.dims();
    require_dims(u, {m, m, p}, "U");
    require_dims(s, {m, n, p}, "S");
    require_dims(v, {n, n, p}, "V");
    const double rec_tol = reconstruction_tolerance(a);
    ResidualReport report("tsvd");
    report.add("reconstruction", max_abs_diff(tprod(tprod(u, s), transpose(v)), a), tol(rec_tol));
    report.add("orthogonality_U", orthogonality_residual(u), tol(orthogonality_tolerance(m, p)));
    report.add("orthogonality_V", orthogonality_residual(v), tol(orthogonality_tolerance(n, p)));
    report.add("f_diagonal_S", off_diagonal_max(s), tol(rec_tol));

    const FourierBlocks sb = to_fourier(s);
    double imag = 0.0;
    double negative = 0.0;
    double increase = 0.0;
    for (const auto& block : sb.blocks) {
        const Eigen::VectorXcd d = block.diagonal();
        for (Eigen::Index j = 0; j < d.size(); ++j) {
            imag = std::max(imag, std::abs(d(j).imag()));
            negative = std::max(negative, -d(j).real());
            if (j > 0) {
                increase = std::max(increase, d(j).real() - d(j - 1).real());
            }
        }
    }
    report.add("sigma_real", imag, tol(rec_tol));
    report.add("sigma_nonnegative", negative, tol(rec_tol));
    report.add("sigma_nonincreasing", increase, tol(rec_tol));
    return report;
}

// ---------------------------------------------------------------------------------------------

TSchurResult t_schur(const Tensor3& a) {
    const auto start = Clock::now();
    require_square(a, "t_schur");
    const auto factors = lift_n<2>(to_fourier(a), [](const Eigen::MatrixXcd& block, const BlockSite& site) {
        if (site.real_forced) {
            const auto s = linalg::schur_real_ordered(block.real());
            return std::array<Eigen::MatrixXcd, 2>{complexify(s.U), complexify(s.T)};
        }
        const auto s = linalg::schur_complex(block);
        return std::array<Eigen::MatrixXcd, 2>{s.U, s.T};
    });
    const RealReconstruction u = from_fourier_checked(factors[0]);
    const RealReconstruction t = from_fourier_checked(factors[1]);
    std::vector<std::size_t> partition = realized_partition(t.tensor, false, "t_schur");
    TSchurResult result{u.tensor, t.tensor, std::move(partition), verify_tschur(a, u.tensor, t.tensor)};
    add_realness(result.report, "U", u);
    add_realness(result.report, "T", t);
    result.report.set_seconds(seconds_since(start));
    return result;
}

ResidualReport verify_tschur(const Tensor3& a, const Tensor3& u, const Tensor3& t, ToleranceOverride tol) {
    require_square(a, "verify_tschur");
    const auto [n, n_, p] = a.dims();
    require_dims(u, {n, n, p}, "U");
    require_dims(t, {n, n, p}, "T");
    ResidualReport report("tschur");
    report.add("reconstruction", max_abs_diff(tprod(tprod(u, t), transpose(u)), a),
               tol(reconstruction_tolerance(a)));
    report.add("orthogonality_U", orthogonality_residual(u), tol(orthogonality_tolerance(n, p)));
    const double band_tol = tol(structure_tolerance(a));
    report.add("quasi_triangular_T", scan_band(t, band_tol, false).residual, band_tol);
    return report;
}

// ---------------------------------------------------------------------------------------------

TJordanResult t_jordan(const Tensor3& a) {
    const auto start = Clock::now();
    require_square(a, "t_jordan");
    double condition = 1.0;
    const auto factors =
        lift_n<2>(to_fourier(a), [&condition](const Eigen::MatrixXcd& block, const BlockSite& site) {
            if (site.real_forced) {
                const auto j = linalg::jordan_real(block.real());
                condition = std::max(condition, j.condition);
                return std::array<Eigen::MatrixXcd, 2>{complexify(j.P), complexify(j.J)};
            }
            const auto j = linalg::jordan_complex(block);
            condition = std::max(condition, j.condition);
            return std::array<Eigen::MatrixXcd, 2>{j.P, j.J};
        });
    const RealReconstruction p = from_fourier_checked(factors[0]);
    const RealReconstruction j = from_fourier_checked(factors[1]);
    std::vector<std::size_t> partition = realized_partition(j.tensor, true, "t_jordan");
    TJordanResult result{p.tensor, j.tensor, std::move(partition), condition,
                         verify_tjordan(a, p.tensor, j.tensor)};
    add_realness(result.report, "P", p);
    add_realness(result.report, "J", j);
    result.report.set_seconds(seconds_since(start));
    return result;
}

ResidualReport verify_tjordan(const Tensor3& a, const Tensor3& p, const Tensor3& j, ToleranceOverride tol) {
    require_square(a, "verify_tjordan");
    const auto [n, n_, tubes] = a.dims();
    require_dims(p, {n, n, tubes}, "P");
    require_dims(j, {n, n, tubes}, "J");
    ResidualReport report("tjordan");
    const double kappa = block_condition(p);
    report.add("invertible_P", kappa, linalg::kMaxEigenbasisCondition);
    if (std::isfinite(kappa)) {
        const Tensor3 p_inv = t_inverse(p);
        report.add("reconstruction", max_abs_diff(tprod(tprod(p, j), p_inv), a),
                   tol(reconstruction_tolerance(a) * kappa));
    } else {
        report.add("reconstruction", std::numeric_limits<double>::infinity(), 0.0);
    }
    const double band_tol = tol(linalg::kDecompositionTol * (1.0 + j.max_abs()));
    report.add("block_bidiagonal_J", scan_band(j, band_tol, true).residual, band_tol);
    return report;
}

// ---------------------------------------------------------------------------------------------

IdempotentFactorization idempotent_factorization(const Tensor3& a, double rtol) {
    const auto start = Clock::now();
    require_square(a, "idempotent_factorization");
    if (rtol <= 0.0) {
        rtol = linalg::default_rtol(a.rows(), a.cols());
    }
    std::vector<std::size_t> ranks(a.tubes(), 0);
    const FourierBlocks fb = to_fourier(a);
    const auto factors = lift_n<3>(fb, [&](const Eigen::MatrixXcd& block, const BlockSite& site) {
        std::array<Eigen::MatrixXcd, 3> out;
        std::size_t rank = 0;
        if (site.real_forced) {
            const auto r = linalg::rank_normal_form<double>(block.real(), rtol);
            out = {complexify(r.U), complexify(r.E), complexify(r.V)};
            rank = r.rank;
        } else {
            const auto r = linalg::rank_normal_form<cplx>(block, rtol);
            out = {r.U, r.E, r.V};
            rank = r.rank;
        }
        ranks[site.index] = rank;
        ranks[fb.partner(site.index)] = rank;
        return out;
    });
    const RealReconstruction u = from_fourier_checked(factors[0]);
    const RealReconstruction e = from_fourier_checked(factors[1]);
    const RealReconstruction v = from_fourier_checked(factors[2]);
    IdempotentFactorization result{u.tensor, e.tensor, v.tensor, std::move(ranks),
                                   verify_idem(a, u.tensor, e.tensor, v.tensor)};
    add_realness(result.report, "U", u);
    add_realness(result.report, "E", e);
    add_realness(result.report, "V", v);
    result.report.set_seconds(seconds_since(start));
    return result;
}

ResidualReport verify_idem(const Tensor3& a, const Tensor3& u, const Tensor3& e, const Tensor3& v,
                           ToleranceOverride tol) {
    require_square(a, "verify_idem");
    const Dims d = a.dims();
    require_dims(u, d, "U");
    require_dims(e, d, "E");
    require_dims(v, d, "V");
    const double rec_tol = reconstruction_tolerance(a);
    ResidualReport report("idem");
    report.add("reconstruction", max_abs_diff(tprod(tprod(u, e), v), a), tol(rec_tol));
    report.add("idempotency_E", max_abs_diff(tprod(e, e), e), tol(rec_tol));
    report.add("invertible_U", block_condition(u), 1e12);
    report.add("invertible_V", block_condition(v), 1e12);
    return report;
}

// ---------------------------------------------------------------------------------------------

NaiveJordan t_jordan_naive(const Tensor3& a, const std::optional<std::vector<std::vector<cplx>>>& eigen_order) {
    require_square(a, "t_jordan_naive");
    const FourierBlocks fb = to_fourier(a);
    const std::size_t p = a.tubes();
    const auto n = static_cast<Eigen::Index>(a.rows());
    if (eigen_order && eigen_order->size() != p) {
        throw DimensionError("t_jordan_naive: eigenvalue order needs one list per Fourier block");
    }
    NaiveJordan out;
    out.P_blocks.dims = fb.dims;
    out.J_blocks.dims = fb.dims;
    for (std::size_t k = 0; k < p; ++k) {
        linalg::MatrixJordan<cplx> jd;
        try {
            jd = linalg::jordan_complex(fb.blocks[k]);
        } catch (...) {
            detail::rethrow_as_block_error(k);
        }
        if (eigen_order) {
            const auto& targets = (*eigen_order)[k];
            if (static_cast<Eigen::Index>(targets.size()) != n) {
                throw DimensionError("t_jordan_naive: eigenvalue order for block " + std::to_string(k + 1) +
                                     " has the wrong length");
            }
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            Eigen::MatrixXcd p_sorted(n, n);
            Eigen::MatrixXcd j_sorted = Eigen::MatrixXcd::Zero(n, n);
            for (Eigen::Index t = 0; t < n; ++t) {
                Eigen::Index best = -1;
                for (Eigen::Index c = 0; c < n; ++c) {
                    if (!used[static_cast<std::size_t>(c)] &&
                        (best < 0 || std::abs(jd.J(c, c) - targets[static_cast<std::size_t>(t)]) <
                                         std::abs(jd.J(best, best) - targets[static_cast<std::size_t>(t)]))) {
                        best = c;
                    }
                }
                used[static_cast<std::size_t>(best)] = true;
                p_sorted.col(t) = jd.P.col(best);
                j_sorted(t, t) = jd.J(best, best);
            }
            jd.P = p_sorted;
            jd.J = j_sorted;
        }
        out.P_blocks.blocks.push_back(jd.P);
        out.J_blocks.blocks.push_back(jd.J);
    }
    out.P = from_fourier_complex(out.P_blocks);
    out.J = from_fourier_complex(out.J_blocks);
    return out;
}

std::vector<NaiveSvdBlock> t_svd_naive_real_blocks(const Tensor3& a, double tol) {
    const FourierBlocks fb = to_fourier(a);
    std::vector<NaiveSvdBlock> out;
    for (std::size_t k = 0; k < fb.blocks.size(); ++k) {
        NaiveSvdBlock b;
        b.index = k;
        b.gram = fb.blocks[k] * fb.blocks[k].transpose();
        const double scale = 1.0 + (b.gram.size() ? b.gram.cwiseAbs().maxCoeff() : 0.0);
        b.gram_max_imag = b.gram.size() ? b.gram.imag().cwiseAbs().maxCoeff() : 0.0;
        const Eigen::MatrixXd sym = 0.5 * (b.gram.real() + b.gram.real().transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
        b.gram_min_eigenvalue = sym.size() ? es.eigenvalues().minCoeff() : 0.0;
        b.real_orthogonal_svd_possible = b.gram_max_imag <= tol * scale && b.gram_min_eigenvalue >= -tol * scale;
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace tprod
