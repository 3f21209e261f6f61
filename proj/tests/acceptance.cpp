// Acceptance run: one PASS/FAIL line per criterion, nonzero exit status if any criterion fails.

#include "support.hpp"

#include "tprod/errors.hpp"
#include "tprod/tensor_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace tprod;
using namespace testing_support;

namespace {

/// Collects the first failure of a criterion and the worst observed residual.
class Outcome {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) {
            failure_ = what;
        }
    }
    void at_most(double value, double bound, const std::string& what) {
        worst_ = std::max(worst_, value);
        if (!(value <= bound)) {
            std::ostringstream os;
            os << what << ": " << value << " > " << bound;
            require(false, os.str());
        }
    }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }
    double worst() const { return worst_; }

private:
    std::string failure_;
    double worst_ = 0.0;
};

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;
    std::function<void(Outcome&)> body;
};

Tensor3 fixture(const char* name) { return read_tensor(std::string(TPROD_FIXTURE_DIR) + "/" + name); }

void require_report(Outcome& out, const ResidualReport& r, const std::string& where) {
    for (const auto& c : r.checks()) {
        if (!c.pass) {
            std::ostringstream os;
            os << where << " " << r.operation() << "." << c.name << ": " << c.residual << " > " << c.tolerance;
            out.require(false, os.str());
        }
    }
}

double max_abs_c(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void svd_obstruction(Outcome& out) {
    const Tensor3 a = fixture("paper_svd_example.tns");
    const FourierBlocks fb = to_fourier(a);
    const Eigen::MatrixXcd i_identity = cplx(0.0, 1.0) * Eigen::MatrixXcd::Identity(2, 2);
    out.at_most(max_abs_c(fb.blocks[1] - i_identity), 1e-12, "second Fourier block vs diag(i, i)");
    const Eigen::MatrixXcd gram = fb.blocks[1] * fb.blocks[1].transpose();
    out.at_most(max_abs_c(gram + Eigen::MatrixXcd::Identity(2, 2)), 1e-12, "A2 A2^T vs diag(-1, -1)");
    const auto naive = t_svd_naive_real_blocks(a);
    out.require(!naive[1].real_orthogonal_svd_possible, "naive check should rule out a real orthogonal block SVD");
    out.require(naive[1].gram_min_eigenvalue < 0.0, "A2 A2^T should be negative definite");

    const TSvdResult r = t_svd(a);
    require_report(out, r.report, "t_svd");
    for (const auto& c : r.report.checks()) {
        if (c.name == "reconstruction" || c.name.rfind("orthogonality_", 0) == 0 || c.name == "f_diagonal_S" ||
            c.name.rfind("realness_", 0) == 0) {
            out.at_most(c.residual, 1e-10, "t_svd " + c.name);
        }
    }
}

void jordan_obstruction(Outcome& out) {
    const Tensor3 a = fixture("paper_jordan_example.tns");
    const FourierBlocks fb = to_fourier(a);
    Eigen::MatrixXcd expected[4] = {Eigen::MatrixXcd(2, 2), Eigen::MatrixXcd(2, 2), Eigen::MatrixXcd(2, 2),
                                    Eigen::MatrixXcd(2, 2)};
    expected[0] << 0, -1, 1, 0;
    expected[1] << cplx(1, 1), cplx(0, 1), cplx(-1, 2), -2;
    expected[2] << 2, -3, 1, 0;
    expected[3] << cplx(1, -1), cplx(0, -1), cplx(-1, -2), -2;
    for (std::size_t k = 0; k < 4; ++k) {
        out.at_most(max_abs_c(fb.blocks[k] - expected[k]), 1e-12, "Fourier block " + std::to_string(k + 1));
    }

    const double r2 = std::sqrt(2.0);
    const std::vector<std::vector<cplx>> order = {
        {cplx(0, -1), cplx(0, 1)}, {cplx(-1, 0), cplx(0, 1)}, {cplx(1, r2), cplx(1, -r2)}, {cplx(-1, 0), cplx(0, -1)}};
    const NaiveJordan naive = t_jordan_naive(a, order);
    const Eigen::MatrixXcd& j1 = naive.J.slices[0];
    out.at_most(std::abs(j1(0, 0) - 0.25 * cplx(-1.0, r2 - 1.0)), 1e-10, "naive J slice 1 entry (1,1)");
    out.at_most(std::abs(j1(1, 1) - 0.25 * cplx(1.0, 1.0 - r2)), 1e-10, "naive J slice 1 entry (2,2)");
    const double imag = j1.imag().cwiseAbs().maxCoeff();
    out.at_most(std::abs(imag - (r2 - 1.0) / 4.0), 1e-10, "naive J slice 1 max|Im|");
    out.require(imag >= 0.1, "naive J slice 1 should be visibly non-real");

    const TJordanResult r = t_jordan(a);
    require_report(out, r.report, "t_jordan");
    out.at_most(r.report.residual("reconstruction"), 1e-9, "t_jordan reconstruction");
}

void homomorphism(Outcome& out) {
    const std::size_t tube_counts[] = {1, 2, 3, 4, 5, 6, 8};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t p = tube_counts[seed % 7];
        const std::size_t m = 1 + seed % 4;
        const std::size_t n = 1 + (seed / 4) % 4;
        const std::size_t q = 1 + (seed / 16) % 4;
        const Tensor3 a = dense(2 * seed, m, n, p);
        const Tensor3 b = dense(2 * seed + 1, n, q, p);
        const double scale = 1.0 + static_cast<double>(n * p) * a.max_abs() * b.max_abs();
        const Tensor3 c = tprod::tprod(a, b);
        const double hom = (circulant_oracle(c) - circulant_oracle(a) * circulant_oracle(b)).cwiseAbs().maxCoeff();
        out.at_most(hom, 1e-11 * scale, "bcirc homomorphism, seed " + std::to_string(seed));
        out.at_most(max_abs_diff(tprod_direct(a, b), tprod_fourier(a, b)), 1e-11 * scale,
                    "dual-path agreement, seed " + std::to_string(seed));
    }
}

void pairing(Outcome& out) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Tensor3 t = dense(seed, 1 + seed % 4, 1 + (seed / 4) % 4, 1 + seed % 8);
        const ResidualReport r = check_pairing(to_fourier(t));
        require_report(out, r, "real tensor seed " + std::to_string(seed));
    }
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_block = [&](std::size_t m, std::size_t n) {
        Eigen::MatrixXcd b(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                b(i, j) = {u(rng), u(rng)};
            }
        }
        return b;
    };
    auto paired = [&](std::size_t m, std::size_t n, std::size_t p) {
        FourierBlocks fb;
        fb.dims = {m, n, p};
        fb.blocks.resize(p);
        for (std::size_t k = 0; k <= p / 2; ++k) {
            Eigen::MatrixXcd b = random_block(m, n);
            if (fb.self_paired(k)) {
                b = b.real().cast<cplx>();
            }
            fb.blocks[k] = b;
            fb.blocks[fb.partner(k)] = b.conjugate();
        }
        return fb;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const FourierBlocks fb = paired(1 + trial % 3, 1 + trial % 4, 1 + trial % 8);
        try {
            const Tensor3 t = from_fourier(fb);
            const FourierBlocks back = to_fourier(t);
            for (std::size_t k = 0; k < fb.blocks.size(); ++k) {
                out.at_most(max_abs_c(back.blocks[k] - fb.blocks[k]), 1e-12, "paired round trip");
            }
        } catch (const Error& e) {
            out.require(false, std::string("paired blocks rejected: ") + e.what());
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = 2 + trial % 7;
        FourierBlocks fb = paired(2, 2, p);
        // break either a conjugate pair or the realness of a self-paired block
        const std::size_t k = trial % 2 ? 1 : 0;
        fb.blocks[k](0, 0) += cplx(0.0, 1e-3);
        bool raised = false;
        try {
            from_fourier(fb);
        } catch (const PairingViolation&) {
            raised = true;
        }
        out.require(raised, "broken pairing " + std::to_string(trial) + " was accepted");
    }
}

void factorizations(Outcome& out) {
    auto check_partition = [&](const std::vector<std::size_t>& partition, std::size_t p, const std::string& what) {
        if (p % 2 == 1) {
            for (auto b : partition) {
                out.require(b <= 2, what + ": realized block larger than 2x2");
            }
        }
    };
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t p = 1 + seed % 6;
        const std::string tag = " seed " + std::to_string(seed);
        const Tensor3 rect = dense(seed, 1 + seed % 4, 1 + (seed / 4) % 4, p);
        require_report(out, t_svd(rect).report, "t_svd" + tag);

        const Tensor3 sq = dense(1000 + seed, 2 + seed % 3, 2 + seed % 3, p);
        const TSchurResult schur = t_schur(sq);
        require_report(out, schur.report, "t_schur" + tag);
        check_partition(schur.realized_partition, p, "t_schur" + tag);

        require_report(out, idempotent_factorization(seed % 2 ? gen(seed, 4, 4, p, GenKind::rank_deficient) : sq).report,
                       "idem" + tag);

        // random dense blocks are diagonalizable with probability one
        const TJordanResult jordan = t_jordan(dense(2000 + seed, 3, 3, p));
        require_report(out, jordan.report, "t_jordan" + tag);
        check_partition(jordan.realized_partition, p, "t_jordan" + tag);
    }
}

Tensor3 mixed_case(std::uint64_t seed) {
    const std::size_t n = 2 + seed % 3;
    const std::size_t p = 1 + seed % 5;
    switch (seed % 4) {
    case 0:
        return dense(seed, n, n, p);
    case 1:
        return gen(seed, n, n, p, GenKind::rank_deficient);
    case 2:
        return similar_singular_diagonal(seed, n, p);
    default:
        return similar_upper_triangular(seed, n, p, 2);
    }
}

void generalized_inverses(Outcome& out) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::string tag = " seed " + std::to_string(seed);
        const Tensor3 a = mixed_case(seed);
        const Eigen::MatrixXd big = circulant_oracle(a);
        auto transported = [&](const Eigen::MatrixXd& m) {
            return first_block_column(m, a.cols(), a.rows(), a.tubes());
        };

        const Tensor3 pinv = t_pinv(a);
        require_report(out, verify_pinv(a, pinv), "pinv" + tag);
        out.at_most(max_abs_diff(pinv, t_pinv_svd(a)), 1e-9, "pinv route agreement" + tag);
        out.at_most(max_abs_diff(pinv, transported(pinv_oracle(big, 1e-10))), 1e-9, "pinv vs bcirc oracle" + tag);

        const DrazinResult drazin = t_drazin(a);
        require_report(out, verify_drazin(a, drazin.AD, drazin.index), "drazin" + tag);
        const std::size_t index = index_oracle(big);
        out.require(drazin.index == index, "Drazin index" + tag + ": " + std::to_string(drazin.index) +
                                               " vs brute force " + std::to_string(index));
        out.at_most(max_abs_diff(drazin.AD, transported(drazin_oracle(big))), 1e-9 * (1.0 + drazin.AD.max_abs()),
                    "Drazin vs bcirc oracle" + tag);

        const bool group_expected = index <= 1;
        try {
            const Tensor3 g = t_group(a);
            out.require(group_expected, "group inverse returned although the oracle says none exists" + tag);
            require_report(out, verify_group(a, g), "group" + tag);
            out.at_most(max_abs_diff(g, transported(drazin_oracle(big))), 1e-9 * (1.0 + g.max_abs()),
                        "group vs bcirc oracle" + tag);
        } catch (const GroupInverseNotExist&) {
            out.require(!group_expected, "group inverse refused although the oracle finds one" + tag);
        }

        const UnitRegularWitness w = unit_regular_witness(a);
        const ResidualReport wr = verify_witness(a, w.W);
        require_report(out, wr, "witness" + tag);
        out.at_most(wr.residual("inner_inverse"), 1e-9 * (1.0 + a.max_abs()), "A W A = A" + tag);
    }
}

void structural_predicates(Outcome& out) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::string tag = " seed " + std::to_string(seed);
        const std::size_t p = 1 + seed % 6;
        const Tensor3 a = dense(3000 + seed, 1 + seed % 4, 1 + (seed / 4) % 4, p);
        const TSvdResult r = t_svd(a);
        out.require(is_f_diagonal(r.S, 0.0), "S is not f-diagonal" + tag);
        const FourierBlocks fs = to_fourier(r.S);
        std::vector<double> sigma;
        for (const auto& block : fs.blocks) {
            const Eigen::Index d = std::min(block.rows(), block.cols());
            for (Eigen::Index j = 0; j < d; ++j) {
                const cplx s = block(j, j);
                out.at_most(std::abs(s.imag()), 1e-12, "sigma imaginary part" + tag);
                out.require(s.real() >= -1e-12, "negative sigma" + tag);
                if (j > 0) {
                    out.require(s.real() <= block(j - 1, j - 1).real() + 1e-12, "sigma increases" + tag);
                }
                sigma.push_back(s.real());
            }
        }
        std::sort(sigma.begin(), sigma.end(), std::greater<>());
        const Eigen::VectorXd direct = Eigen::JacobiSVD<Eigen::MatrixXd>(circulant_oracle(a)).singularValues();
        out.require(static_cast<Eigen::Index>(sigma.size()) == direct.size(), "singular value count" + tag);
        for (std::size_t i = 0; i < sigma.size() && static_cast<Eigen::Index>(i) < direct.size(); ++i) {
            out.at_most(std::abs(sigma[i] - direct(static_cast<Eigen::Index>(i))), 1e-9, "bcirc singular values" + tag);
        }
    }
}

int shell(const std::string& command) {
    const int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void cli_round_trip(Outcome& out) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("tprod_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    const std::string cli = std::string("\"") + TPROD_CLI + "\"";
    const std::string a = (dir / "a.tns").string();
    const std::string x = (dir / "x.tns").string();
    const std::string report = (dir / "report.json").string();

    out.require(shell(cli + " gen --seed 8 --dims 3 4 5 --kind rank_deficient -o " + a) == 0, "gen did not exit 0");
    const Tensor3 generated = read_tensor(a);
    write_tensor(a, generated);
    out.require(read_tensor(a) == generated, "write/read round trip is not exact");
    out.require(shell(cli + " pinv " + a + " -o " + x) == 0, "pinv did not exit 0");
    out.require(shell(cli + " --report " + report + " verify --kind pinv " + x + " --input " + a) == 0,
                "verify did not exit 0");
    try {
        std::ifstream in(report);
        const nlohmann::json j = nlohmann::json::parse(in);
        bool all = j.at("pass").get<bool>() && !j.at("checks").empty();
        for (const auto& c : j.at("checks")) {
            all = all && c.at("pass").get<bool>();
        }
        out.require(all, "JSON report is not all-pass");
    } catch (const std::exception& e) {
        out.require(false, std::string("JSON report unreadable: ") + e.what());
    }
    const int malformed = shell(cli + " pinv " + TPROD_FIXTURE_DIR + "/malformed.tns -o " + x);
    out.require(malformed == 2, "malformed file exited " + std::to_string(malformed) + " instead of 2");
    const int nilpotent = shell(cli + " group " + TPROD_FIXTURE_DIR + "/nilpotent.tns -o " + x);
    out.require(nilpotent == 3, "nilpotent group request exited " + std::to_string(nilpotent) + " instead of 3");
    fs::remove_all(dir);
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "SVD obstruction reproduced; paired t-SVD is real", 0.1, svd_obstruction},
        {2, "Jordan obstruction reproduced; paired t-Jordan is real", 0.1, jordan_obstruction},
        {3, "t-product homomorphism and dual-path agreement", 10.0, homomorphism},
        {4, "conjugate pairing necessary and sufficient", 5.0, pairing},
        {5, "factorization suite", 60.0, factorizations},
        {6, "generalized inverse suite", 60.0, generalized_inverses},
        {7, "structural predicates of the t-SVD", 60.0, structural_predicates},
        {8, "command line round trip and exit codes", 60.0, cli_round_trip},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("unexpected exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            out.require(false, "runtime " + std::to_string(seconds) + " s exceeds budget " +
                                   std::to_string(c.budget_seconds) + " s");
        }
        std::printf("[%s] AC%d %s (%.3f s, worst residual %.2e)%s%s\n", out.ok() ? "PASS" : "FAIL", c.number, c.title,
                    seconds, out.worst(), out.ok() ? "" : " -- ", out.failure().c_str());
        failures += out.ok() ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
