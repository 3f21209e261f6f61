#include "tprod/matrix_kernels.hpp"

#include "tprod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace tprod::linalg {

using cplx = std::complex<double>;

namespace {

inline double conj_scalar(double x) { return x; }
inline cplx conj_scalar(const cplx& z) { return std::conj(z); }

/// Unit scalar c such that c * v(idx) is real positive, idx the first largest-magnitude entry.
template <class Scalar, class Vec>
Scalar normalizing_phase(const Vec& v) {
    Eigen::Index idx = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            idx = i;
        }
    }
    if (best <= 0.0) {
        return Scalar(1);
    }
    return conj_scalar(v(idx)) / std::abs(v(idx));
}

/// Multiplies `v` by its normalizing phase and pins the pivot entry to its (real) magnitude so
/// rounding cannot leave a residual imaginary part there.
template <class Scalar, class Vec>
void normalize_phase_inplace(Vec&& v, const Scalar& c) {
    Eigen::Index idx = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            idx = i;
        }
    }
    const double pivot = std::abs(v(idx));
    v *= c;
    if (best > 0.0) {
        v(idx) = Scalar(pivot);
    }
}

template <class Scalar>
Eigen::VectorXd singular_values(const Mat<Scalar>& a) {
    if (a.size() == 0) {
        return {};
    }
    Eigen::JacobiSVD<Mat<Scalar>> s(a);
    return s.singularValues();
}

double spectral_norm(const Eigen::VectorXd& sigma) { return sigma.size() ? sigma(0) : 0.0; }

template <class Scalar>
double frob(const Mat<Scalar>& a) {
    return a.size() ? a.norm() : 0.0;
}

} // namespace

double default_rtol(std::size_t rows, std::size_t cols) {
    return 1e3 * static_cast<double>(std::max<std::size_t>({rows, cols, 1})) *
           std::numeric_limits<double>::epsilon();
}

template <class Scalar>
Mat<Scalar> MatrixSvd<Scalar>::sigma_matrix() const {
    Mat<Scalar> s = Mat<Scalar>::Zero(U.rows(), V.rows());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        s(i, i) = Scalar(sigma(i));
    }
    return s;
}

template <class Scalar>
MatrixSvd<Scalar> svd(const Mat<Scalar>& a) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    const Eigen::Index k = std::min(m, n);
    MatrixSvd<Scalar> out;
    if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) {
        out.U = Mat<Scalar>::Identity(m, m);
        out.V = Mat<Scalar>::Identity(n, n);
        out.sigma = Eigen::VectorXd::Zero(k);
        return out;
    }
    Eigen::JacobiSVD<Mat<Scalar>> s(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (s.info() != Eigen::Success) {
        throw ConvergenceError("svd: Jacobi iteration did not converge");
    }
    out.U = s.matrixU();
    out.V = s.matrixV();
    out.sigma = s.singularValues();
    for (Eigen::Index j = 0; j < m; ++j) {
        const Scalar c = normalizing_phase<Scalar>(out.U.col(j));
        normalize_phase_inplace<Scalar>(out.U.col(j), c);
        if (j < k && out.sigma(j) > 0.0) {
            out.V.col(j) *= c;
        }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        if (j >= k || out.sigma(j) == 0.0) {
            normalize_phase_inplace<Scalar>(out.V.col(j), normalizing_phase<Scalar>(out.V.col(j)));
        }
    }
    return out;
}

MatrixSchur<cplx> schur_complex(const Mat<cplx>& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("schur_complex: matrix must be square");
    }
    const Eigen::Index n = a.rows();
    MatrixSchur<cplx> out;
    out.partition.assign(static_cast<std::size_t>(n), 1);
    if (n == 0) {
        return out;
    }
    Eigen::ComplexSchur<Mat<cplx>> cs(a, true);
    if (cs.info() != Eigen::Success) {
        throw ConvergenceError("schur_complex: QR iteration did not converge");
    }
    out.U = cs.matrixU();
    out.T = cs.matrixT().triangularView<Eigen::Upper>();
    return out;
}

namespace {

std::vector<std::size_t> quasi_blocks(const Mat<double>& t) {
    std::vector<std::size_t> blocks;
    const Eigen::Index n = t.rows();
    Eigen::Index i = 0;
    while (i < n) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            blocks.push_back(2);
            i += 2;
        } else {
            blocks.push_back(1);
            i += 1;
        }
    }
    return blocks;
}

// Exchanges the adjacent diagonal blocks of sizes p1, p2 starting at row j by an orthogonal
// similarity: solve A11 X - X A22 = -A12, then the columns of [X; I] span the invariant
// subspace of A22 and a QR factorization of that basis gives the rotation.
void swap_blocks(Mat<double>& t, Mat<double>& u, Eigen::Index j, Eigen::Index p1, Eigen::Index p2) {
    const Eigen::Index s = p1 + p2;
    const Mat<double> a11 = t.block(j, j, p1, p1);
    const Mat<double> a22 = t.block(j + p1, j + p1, p2, p2);
    const Mat<double> a12 = t.block(j, j + p1, p1, p2);

    // Column-major vec: vec(A11 X) = (I (x) A11) vec X, vec(X A22) = (A22^T (x) I) vec X.
    Mat<double> kron = Mat<double>::Zero(p1 * p2, p1 * p2);
    for (Eigen::Index c = 0; c < p2; ++c) {
        kron.block(c * p1, c * p1, p1, p1) += a11;
        for (Eigen::Index r = 0; r < p2; ++r) {
            kron.block(r * p1, c * p1, p1, p1) -= a22(c, r) * Mat<double>::Identity(p1, p1);
        }
    }
    Eigen::FullPivLU<Mat<double>> lu(kron);
    const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
    if (lu.rank() < kron.rows() || std::abs(lu.determinant()) < 1e-14 * std::pow(scale, double(kron.rows()))) {
        throw SwapFailure("schur_real_ordered: adjacent blocks share eigenvalues, exchange is ill-conditioned");
    }
    const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(a12.data(), a12.size());
    const Eigen::VectorXd xv = lu.solve(rhs);
    Mat<double> basis(s, p2);
    basis.topRows(p1) = Eigen::Map<const Mat<double>>(xv.data(), p1, p2);
    basis.bottomRows(p2) = Mat<double>::Identity(p2, p2);

    Eigen::HouseholderQR<Mat<double>> qr(basis);
    const Mat<double> q = qr.householderQ() * Mat<double>::Identity(s, s);

    const Eigen::Index n = t.rows();
    t.block(j, 0, s, n) = (q.transpose() * t.block(j, 0, s, n)).eval();
    t.block(0, j, n, s) = (t.block(0, j, n, s) * q).eval();
    u.block(0, j, n, s) = (u.block(0, j, n, s) * q).eval();

    auto lower = t.block(j + p2, j, p1, p2);
    const double residue = lower.cwiseAbs().maxCoeff();
    if (residue > 1e-10 * scale) {
        throw SwapFailure("schur_real_ordered: block exchange left a coupling of " +
                          std::to_string(residue));
    }
    lower.setZero();
    for (Eigen::Index c = j; c < j + s; ++c) {
        for (Eigen::Index r = c + 2; r < n; ++r) {
            t(r, c) = 0.0;
        }
    }
}

} // namespace

MatrixSchur<double> schur_real_ordered(const Mat<double>& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("schur_real_ordered: matrix must be square");
    }
    const Eigen::Index n = a.rows();
    MatrixSchur<double> out;
    if (n == 0) {
        return out;
    }
    Eigen::RealSchur<Mat<double>> rs(a, true);
    if (rs.info() != Eigen::Success) {
        throw ConvergenceError("schur_real_ordered: QR iteration did not converge");
    }
    Mat<double> t = rs.matrixT();
    Mat<double> u = rs.matrixU();
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = c + 2; r < n; ++r) {
            t(r, c) = 0.0;
        }
    }
    std::vector<std::size_t> blocks = quasi_blocks(t);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        Eigen::Index offset = 0;
        for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
            if (blocks[b] == 2 && blocks[b + 1] == 1) {
                swap_blocks(t, u, offset, 2, 1);
                std::swap(blocks[b], blocks[b + 1]);
                swapped = true;
            }
            offset += static_cast<Eigen::Index>(blocks[b]);
        }
    }
    out.U = std::move(u);
    out.T = std::move(t);
    out.partition = std::move(blocks);
    return out;
}

namespace {

struct Cluster {
    cplx center;
    std::size_t size = 0;
};

// Single-linkage clustering of eigenvalues at absolute gap `gap`.
std::vector<Cluster> cluster_eigenvalues(const std::vector<cplx>& eig, double gap) {
    const std::size_t n = eig.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(eig[i] - eig[j]) <= gap) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<Cluster> clusters;
    std::vector<std::size_t> root_of_cluster;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        auto it = std::find(root_of_cluster.begin(), root_of_cluster.end(), r);
        if (it == root_of_cluster.end()) {
            root_of_cluster.push_back(r);
            clusters.push_back({eig[i], 1});
        } else {
            auto& c = clusters[static_cast<std::size_t>(it - root_of_cluster.begin())];
            c.center += eig[i];
            c.size += 1;
        }
    }
    for (auto& c : clusters) {
        c.center /= static_cast<double>(c.size);
    }
    std::sort(clusters.begin(), clusters.end(), [](const Cluster& x, const Cluster& y) {
        if (x.center.real() != y.center.real()) {
            return x.center.real() < y.center.real();
        }
        return x.center.imag() < y.center.imag();
    });
    return clusters;
}

// Orthonormal basis of the numerical null space of (A - lambda I), which must have dimension
// `dim`; columns normalized in phase.
template <class Scalar>
Mat<Scalar> eigenspace(const Mat<Scalar>& a, Scalar lambda, std::size_t dim, double scale) {
    const Eigen::Index n = a.rows();
    const Mat<Scalar> shifted = a - lambda * Mat<Scalar>::Identity(n, n);
    const MatrixSvd<Scalar> s = svd<Scalar>(shifted);
    const double null_tol = 1e-6 * scale;
    const auto d = static_cast<Eigen::Index>(dim);
    if (s.sigma(n - d) > null_tol) {
        throw DefectiveBlock("eigenvalue cluster of multiplicity " + std::to_string(dim) +
                             " has a deficient eigenvector basis; Jordan structure is not "
                             "computable reliably in floating point");
    }
    Mat<Scalar> basis = s.V.rightCols(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        normalize_phase_inplace<Scalar>(basis.col(j), normalizing_phase<Scalar>(basis.col(j)));
    }
    return basis;
}

template <class Scalar>
void finish_jordan(MatrixJordan<Scalar>& out) {
    out.condition = condition_number<Scalar>(out.P);
    if (!(out.condition <= kMaxEigenbasisCondition)) {
        throw DefectiveBlock("eigenvector basis is numerically singular (condition " +
                             std::to_string(out.condition) + ")");
    }
}

} // namespace

MatrixJordan<cplx> jordan_complex(const Mat<cplx>& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("jordan_complex: matrix must be square");
    }
    const Eigen::Index n = a.rows();
    MatrixJordan<cplx> out;
    out.P = Mat<cplx>::Identity(n, n);
    out.J = Mat<cplx>::Zero(n, n);
    out.partition.assign(static_cast<std::size_t>(n), 1);
    if (n == 0) {
        return out;
    }
    const double scale = std::max(1.0, frob<cplx>(a));
    const MatrixSchur<cplx> schur = schur_complex(a);
    std::vector<cplx> eig(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        eig[static_cast<std::size_t>(i)] = schur.T(i, i);
    }
    Eigen::Index col = 0;
    for (const Cluster& c : cluster_eigenvalues(eig, kEigenGap * scale)) {
        const Mat<cplx> basis = eigenspace<cplx>(a, c.center, c.size, scale);
        for (Eigen::Index j = 0; j < basis.cols(); ++j, ++col) {
            out.P.col(col) = basis.col(j);
            out.J(col, col) = basis.col(j).dot(a * basis.col(j));
        }
    }
    finish_jordan(out);
    return out;
}

MatrixJordan<double> jordan_real(const Mat<double>& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("jordan_real: matrix must be square");
    }
    const Eigen::Index n = a.rows();
    MatrixJordan<double> out;
    out.P = Mat<double>::Identity(n, n);
    out.J = Mat<double>::Zero(n, n);
    if (n == 0) {
        return out;
    }
    const double scale = std::max(1.0, frob<double>(a));
    const double gap = kEigenGap * scale;
    Eigen::EigenSolver<Mat<double>> es(a, false);
    if (es.info() != Eigen::Success) {
        throw ConvergenceError("jordan_real: eigenvalue iteration did not converge");
    }
    std::vector<cplx> real_eigs;
    std::vector<cplx> upper_eigs;
    for (Eigen::Index i = 0; i < n; ++i) {
        const cplx z = es.eigenvalues()(i);
        if (std::abs(z.imag()) <= gap) {
            real_eigs.emplace_back(z.real(), 0.0);
        } else if (z.imag() > 0.0) {
            upper_eigs.push_back(z);
        }
    }
    if (real_eigs.size() + 2 * upper_eigs.size() != static_cast<std::size_t>(n)) {
        throw DefectiveBlock("jordan_real: complex eigenvalues are not in conjugate pairs");
    }
    Eigen::Index col = 0;
    for (const Cluster& c : cluster_eigenvalues(real_eigs, gap)) {
        const Mat<double> basis = eigenspace<double>(a, c.center.real(), c.size, scale);
        for (Eigen::Index j = 0; j < basis.cols(); ++j, ++col) {
            out.P.col(col) = basis.col(j);
            out.J(col, col) = basis.col(j).dot(a * basis.col(j));
            out.partition.push_back(1);
        }
    }
    const Mat<cplx> ac = a.cast<cplx>();
    for (const Cluster& c : cluster_eigenvalues(upper_eigs, gap)) {
        const Mat<cplx> basis = eigenspace<cplx>(ac, c.center, c.size, scale);
        for (Eigen::Index j = 0; j < basis.cols(); ++j, col += 2) {
            const Eigen::VectorXcd v = basis.col(j);
            const cplx lambda = v.dot(ac * v);
            out.P.col(col) = v.real();
            out.P.col(col + 1) = v.imag();
            out.J(col, col) = lambda.real();
            out.J(col, col + 1) = lambda.imag();
            out.J(col + 1, col) = -lambda.imag();
            out.J(col + 1, col + 1) = lambda.real();
            out.partition.push_back(2);
        }
    }
    finish_jordan(out);
    return out;
}

template <class Scalar>
RankNormalForm<Scalar> rank_normal_form(const Mat<Scalar>& a, double rtol) {
    const MatrixSvd<Scalar> s = svd<Scalar>(a);
    const double threshold = rtol * spectral_norm(s.sigma);
    RankNormalForm<Scalar> out;
    out.rank = 0;
    for (Eigen::Index i = 0; i < s.sigma.size(); ++i) {
        if (s.sigma(i) > threshold) {
            ++out.rank;
        }
    }
    const auto r = static_cast<Eigen::Index>(out.rank);
    Eigen::VectorXd scaling = Eigen::VectorXd::Ones(a.rows());
    scaling.head(r) = s.sigma.head(r);
    out.U = s.U * scaling.cast<Scalar>().asDiagonal();
    out.V = s.V.adjoint();
    out.E = Mat<Scalar>::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < r; ++i) {
        out.E(i, i) = Scalar(1);
    }
    return out;
}

template <class Scalar>
std::size_t numerical_rank(const Mat<Scalar>& a, double threshold) {
    const Eigen::VectorXd sigma = singular_values<Scalar>(a);
    return static_cast<std::size_t>((sigma.array() > threshold).count());
}

template <class Scalar>
Mat<Scalar> mp_inverse_abs(const Mat<Scalar>& a, double threshold) {
    const MatrixSvd<Scalar> s = svd<Scalar>(a);
    Mat<Scalar> sigma_pinv = Mat<Scalar>::Zero(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < s.sigma.size(); ++i) {
        if (s.sigma(i) > threshold) {
            sigma_pinv(i, i) = Scalar(1.0 / s.sigma(i));
        }
    }
    return s.V * sigma_pinv * s.U.adjoint();
}

template <class Scalar>
Mat<Scalar> mp_inverse(const Mat<Scalar>& a, double rtol) {
    if (a.size() == 0) {
        return Mat<Scalar>::Zero(a.cols(), a.rows());
    }
    return mp_inverse_abs<Scalar>(a, rtol * spectral_norm(singular_values<Scalar>(a)));
}

namespace {

/// rank(A^0), rank(A^1), ... up to and including the first repeat; rank(A^k) is decided against
/// rtol ||A||_2^k. The Drazin index is the length minus two.
template <class Scalar>
std::vector<std::size_t> power_ranks(const Mat<Scalar>& a, double rtol) {
    if (a.rows() != a.cols()) {
        throw DimensionError("drazin_index: matrix must be square");
    }
    const auto n = static_cast<std::size_t>(a.rows());
    const double norm = spectral_norm(singular_values<Scalar>(a));
    std::vector<std::size_t> ranks{n};
    Mat<Scalar> power = Mat<Scalar>::Identity(a.rows(), a.cols());
    double power_norm = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
        power = (a * power).eval();
        power_norm *= norm;
        ranks.push_back(numerical_rank<Scalar>(power, rtol * power_norm));
        if (ranks.back() == ranks[ranks.size() - 2]) {
            break;
        }
    }
    return ranks;
}

/// Truncated SVD factors of `m`: m ~ B C with B = U_r Sigma_r and C = V_r^*.
template <class Scalar>
std::pair<Mat<Scalar>, Mat<Scalar>> full_rank_factors(const Mat<Scalar>& m, std::size_t rank) {
    const MatrixSvd<Scalar> s = svd<Scalar>(m);
    const auto r = static_cast<Eigen::Index>(rank);
    Mat<Scalar> b = s.U.leftCols(r) * s.sigma.head(r).template cast<Scalar>().asDiagonal();
    Mat<Scalar> c = s.V.leftCols(r).adjoint();
    return {std::move(b), std::move(c)};
}

/// Cline's construction: A = B_1 C_1, C_i B_i = B_{i+1} C_{i+1} with rank(A^{i+1}) columns, and
/// A^D = B_1 ... B_k (C_k B_k)^{-(k+1)} C_k ... C_1. Only the small core C_k B_k is inverted, so
/// the accuracy follows its conditioning instead of that of A^{2k+1}.
template <class Scalar>
Mat<Scalar> cline_inverse(const Mat<Scalar>& a, const std::vector<std::size_t>& ranks, std::size_t index) {
    const Eigen::Index n = a.rows();
    if (ranks[index] == 0) {
        return Mat<Scalar>::Zero(n, n);
    }
    Mat<Scalar> left = Mat<Scalar>::Identity(n, n);
    Mat<Scalar> right = Mat<Scalar>::Identity(n, n);
    Mat<Scalar> core = a;
    for (std::size_t i = 1; i <= index; ++i) {
        auto [b, c] = full_rank_factors<Scalar>(core, ranks[i]);
        left = (left * b).eval();
        right = (c * right).eval();
        core = c * b;
    }
    const Mat<Scalar> core_inv = core.fullPivLu().inverse();
    Mat<Scalar> power = core_inv;
    for (std::size_t i = 0; i < index; ++i) {
        power = (power * core_inv).eval();
    }
    return left * power * right;
}

} // namespace

template <class Scalar>
std::size_t drazin_index(const Mat<Scalar>& a, double rtol) {
    return power_ranks<Scalar>(a, rtol).size() - 2;
}

template <class Scalar>
DrazinInverse<Scalar> drazin_inverse(const Mat<Scalar>& a, double rtol) {
    const std::vector<std::size_t> ranks = power_ranks<Scalar>(a, rtol);
    DrazinInverse<Scalar> out;
    out.index = ranks.size() - 2;
    out.inverse = cline_inverse<Scalar>(a, ranks, out.index);
    return out;
}

template <class Scalar>
GroupInvertibility group_invertibility(const Mat<Scalar>& a, double rtol) {
    if (a.rows() != a.cols()) {
        throw DimensionError("group_invertibility: matrix must be square");
    }
    GroupInvertibility g;
    const Eigen::VectorXd sa = singular_values<Scalar>(a);
    const double norm = spectral_norm(sa);
    g.rank_a = static_cast<std::size_t>((sa.array() > rtol * norm).count());
    const Eigen::VectorXd sa2 = singular_values<Scalar>(Mat<Scalar>(a * a));
    const double threshold2 = rtol * norm * norm;
    g.rank_a2 = static_cast<std::size_t>((sa2.array() > threshold2).count());
    if (g.rank_a == 0) {
        g.margin = std::numeric_limits<double>::infinity();
    } else {
        g.margin = sa2(static_cast<Eigen::Index>(g.rank_a) - 1) / threshold2;
    }
    return g;
}

template <class Scalar>
Mat<Scalar> group_inverse(const Mat<Scalar>& a, double rtol) {
    const GroupInvertibility g = group_invertibility<Scalar>(a, rtol);
    if (!g.exists()) {
        throw GroupInverseNotExist("group inverse does not exist: rank(A^2) = " +
                                       std::to_string(g.rank_a2) + " < rank(A) = " +
                                       std::to_string(g.rank_a),
                                   0, g.rank_a, g.rank_a2, g.margin);
    }
    const auto n = static_cast<std::size_t>(a.rows());
    if (g.rank_a == n) {
        return cline_inverse<Scalar>(a, {n, n}, 0);
    }
    return cline_inverse<Scalar>(a, {n, g.rank_a, g.rank_a}, 1);
}

template <class Scalar>
double condition_number(const Mat<Scalar>& a) {
    const Eigen::VectorXd s = singular_values<Scalar>(a);
    if (s.size() == 0) {
        return 1.0;
    }
    const double smin = s(s.size() - 1);
    return smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
}

#define TPROD_INSTANTIATE(S)                                                          \
    template struct MatrixSvd<S>;                                                     \
    template MatrixSvd<S> svd<S>(const Mat<S>&);                                      \
    template RankNormalForm<S> rank_normal_form<S>(const Mat<S>&, double);           \
    template std::size_t numerical_rank<S>(const Mat<S>&, double);                   \
    template Mat<S> mp_inverse<S>(const Mat<S>&, double);                            \
    template Mat<S> mp_inverse_abs<S>(const Mat<S>&, double);                        \
    template std::size_t drazin_index<S>(const Mat<S>&, double);                     \
    template DrazinInverse<S> drazin_inverse<S>(const Mat<S>&, double);              \
    template GroupInvertibility group_invertibility<S>(const Mat<S>&, double);       \
    template Mat<S> group_inverse<S>(const Mat<S>&, double);                         \
    template double condition_number<S>(const Mat<S>&);

TPROD_INSTANTIATE(double)
TPROD_INSTANTIATE(cplx)

#undef TPROD_INSTANTIATE

} // namespace tprod::linalg
