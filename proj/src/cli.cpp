#include "tprod/cli.hpp"

#include "tprod/errors.hpp"
#include "tprod/factorizations.hpp"
#include "tprod/generate.hpp"
#include "tprod/ginverses.hpp"
#include "tprod/tensor_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace tprod {

namespace {

struct GlobalOptions {
    std::optional<double> tol;
    std::string report_path;
    bool quiet = false;

    ToleranceOverride override_tol() const { return {tol}; }
};

/// Checks that describe how a result was constructed (e.g. discarded imaginary parts) and are
/// not recomputable from the output files alone.
void append_construction_checks(ResidualReport& report, const ResidualReport& construction) {
    for (const auto& c : construction.checks()) {
        if (c.name.rfind("realness_", 0) == 0) {
            report.add(c.name, c.residual, c.tolerance);
        }
    }
}

void print_report(const ResidualReport& report) {
    std::printf("%s: %s\n", report.operation().c_str(), report.pass() ? "PASS" : "FAIL");
    for (const auto& c : report.checks()) {
        std::printf("  %-24s %-11.3e <= %-11.3e %s\n", c.name.c_str(), c.residual, c.tolerance,
                    c.pass ? "ok" : "FAIL");
    }
}

int finish(const GlobalOptions& g, ResidualReport report, std::chrono::steady_clock::time_point start) {
    report.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (!g.report_path.empty()) {
        write_report(g.report_path, report);
    }
    if (!g.quiet) {
        print_report(report);
    }
    return report.pass() ? kExitOk : kExitVerificationFailed;
}

std::string factor_path(const std::string& prefix, const char* name) { return prefix + "_" + name + ".tns"; }

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Third-order tensor algebra under the t-product", "tprod"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--tol", g.tol, "Use this tolerance for every residual check");
    app.add_option("--report", g.report_path, "Write the residual report as JSON");
    app.add_flag("--quiet", g.quiet, "Suppress the report on standard output");

    std::function<int()> action;
    const auto start = std::chrono::steady_clock::now();

    // tprod A B -o C
    std::string in_a;
    std::string in_b;
    std::string out_path;
    std::string prefix;
    auto* cmd_tprod = app.add_subcommand("tprod", "t-product C = A * B");
    cmd_tprod->add_option("A", in_a)->required();
    cmd_tprod->add_option("B", in_b)->required();
    cmd_tprod->add_option("-o,--output", out_path)->required();
    cmd_tprod->callback([&] {
        action = [&] {
            const Tensor3 a = read_tensor(in_a);
            const Tensor3 b = read_tensor(in_b);
            if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
                throw DimensionError("tprod: operands have incompatible dimensions");
            }
            const Tensor3 direct = tprod_direct(a, b);
            const Tensor3 fourier = tprod_fourier(a, b);
            write_tensor(out_path, direct);
            ResidualReport report("tprod");
            const double scale = 1.0 + static_cast<double>(a.cols() * a.tubes()) * a.max_abs() * b.max_abs();
            report.add("dual_path_agreement", max_abs_diff(direct, fourier), g.override_tol()(1e-11 * scale));
            return finish(g, report, start);
        };
    });

    auto add_factorization = [&](const char* name, const char* help, auto run) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("A", in_a)->required();
        cmd->add_option("--out-prefix", prefix)->required();
        cmd->callback([&, run] { action = [&, run] { return run(read_tensor(in_a)); }; });
    };

    add_factorization("tsvd", "real t-SVD A = U * S * V^T", [&](const Tensor3& a) {
        const TSvdResult r = t_svd(a);
        write_tensor(factor_path(prefix, "U"), r.U);
        write_tensor(factor_path(prefix, "S"), r.S);
        write_tensor(factor_path(prefix, "V"), r.V);
        ResidualReport report = verify_tsvd(a, r.U, r.S, r.V, g.override_tol());
        append_construction_checks(report, r.report);
        return finish(g, report, start);
    });
    add_factorization("tschur", "real t-Schur A = U * T * U^T", [&](const Tensor3& a) {
        const TSchurResult r = t_schur(a);
        write_tensor(factor_path(prefix, "U"), r.U);
        write_tensor(factor_path(prefix, "T"), r.T);
        ResidualReport report = verify_tschur(a, r.U, r.T, g.override_tol());
        append_construction_checks(report, r.report);
        return finish(g, report, start);
    });
    add_factorization("tjordan", "real t-Jordan A = P * J * P^-1", [&](const Tensor3& a) {
        const TJordanResult r = t_jordan(a);
        write_tensor(factor_path(prefix, "P"), r.P);
        write_tensor(factor_path(prefix, "J"), r.J);
        ResidualReport report = verify_tjordan(a, r.P, r.J, g.override_tol());
        append_construction_checks(report, r.report);
        return finish(g, report, start);
    });
    add_factorization("idem", "idempotent factorization A = U * E * V", [&](const Tensor3& a) {
        const IdempotentFactorization r = idempotent_factorization(a);
        write_tensor(factor_path(prefix, "U"), r.U);
        write_tensor(factor_path(prefix, "E"), r.E);
        write_tensor(factor_path(prefix, "V"), r.V);
        ResidualReport report = verify_idem(a, r.U, r.E, r.V, g.override_tol());
        append_construction_checks(report, r.report);
        return finish(g, report, start);
    });

    auto add_inverse = [&](const char* name, const char* help, auto run) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("A", in_a)->required();
        cmd->add_option("-o,--output", out_path)->required();
        cmd->callback([&, run] { action = [&, run] { return run(read_tensor(in_a)); }; });
        return cmd;
    };

    add_inverse("tinv", "t-inverse", [&](const Tensor3& a) {
        const Tensor3 x = t_inverse(a);
        write_tensor(out_path, x);
        return finish(g, verify_inverse(a, x, g.override_tol()), start);
    });
    std::string route = "blocks";
    auto* cmd_pinv = add_inverse("pinv", "Moore-Penrose inverse", [&](const Tensor3& a) {
        const Tensor3 x = route == "svd" ? t_pinv_svd(a) : t_pinv_blocks(a);
        write_tensor(out_path, x);
        return finish(g, verify_pinv(a, x, g.override_tol()), start);
    });
    cmd_pinv->add_option("--route", route, "svd or blocks (default)")
        ->check(CLI::IsMember({"svd", "blocks"}));
    add_inverse("drazin", "Drazin inverse", [&](const Tensor3& a) {
        const DrazinResult r = t_drazin(a);
        write_tensor(out_path, r.AD);
        if (!g.quiet) {
            std::printf("index %zu\n", r.index);
        }
        return finish(g, verify_drazin(a, r.AD, r.index, g.override_tol()), start);
    });
    add_inverse("group", "group inverse", [&](const Tensor3& a) {
        const Tensor3 x = t_group(a);
        write_tensor(out_path, x);
        return finish(g, verify_group(a, x, g.override_tol()), start);
    });
    add_inverse("witness", "unit-regular witness W with A * W * A = A", [&](const Tensor3& a) {
        const UnitRegularWitness r = unit_regular_witness(a);
        write_tensor(out_path, r.W);
        return finish(g, verify_witness(a, r.W, g.override_tol()), start);
    });

    // verify --kind K <factor files...> --input A
    std::string kind;
    std::vector<std::string> factor_files;
    auto* cmd_verify = app.add_subcommand("verify", "check previously computed factors against an input");
    cmd_verify->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"tsvd", "tschur", "tjordan", "idem", "tinv", "pinv", "drazin", "group", "witness"}));
    cmd_verify->add_option("factors", factor_files, "factor files in the order of the decomposition")->required();
    cmd_verify->add_option("--input", in_a)->required();
    cmd_verify->callback([&] {
        action = [&] {
            const Tensor3 a = read_tensor(in_a);
            std::vector<Tensor3> f;
            for (const auto& path : factor_files) {
                f.push_back(read_tensor(path));
            }
            auto expect = [&](std::size_t count, const char* names) {
                if (f.size() != count) {
                    throw CLI::ValidationError("verify --kind " + kind, "expects " + std::to_string(count) +
                                                                            " factor files (" + names + ")");
                }
            };
            const ToleranceOverride tol = g.override_tol();
            ResidualReport report;
            if (kind == "tsvd") {
                expect(3, "U S V");
                report = verify_tsvd(a, f[0], f[1], f[2], tol);
            } else if (kind == "tschur") {
                expect(2, "U T");
                report = verify_tschur(a, f[0], f[1], tol);
            } else if (kind == "tjordan") {
                expect(2, "P J");
                report = verify_tjordan(a, f[0], f[1], tol);
            } else if (kind == "idem") {
                expect(3, "U E V");
                report = verify_idem(a, f[0], f[1], f[2], tol);
            } else if (kind == "tinv") {
                expect(1, "X");
                report = verify_inverse(a, f[0], tol);
            } else if (kind == "pinv") {
                expect(1, "X");
                report = verify_pinv(a, f[0], tol);
            } else if (kind == "drazin") {
                expect(1, "X");
                report = verify_drazin(a, f[0], t_drazin_index(a), tol);
            } else if (kind == "group") {
                expect(1, "X");
                report = verify_group(a, f[0], tol);
            } else {
                expect(1, "W");
                report = verify_witness(a, f[0], tol);
            }
            return finish(g, report, start);
        };
    });

    // gen --seed S --dims m n p --kind K -o A
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims;
    std::string gen_kind = "dense";
    auto* cmd_gen = app.add_subcommand("gen", "generate a seeded random tensor");
    cmd_gen->add_option("--seed", seed)->required();
    cmd_gen->add_option("--dims", dims)->required()->expected(3);
    cmd_gen->add_option("--kind", gen_kind)
        ->check(CLI::IsMember({"dense", "t_symmetric", "rank_deficient", "f_diagonal"}));
    cmd_gen->add_option("-o,--output", out_path)->required();
    cmd_gen->callback([&] {
        action = [&] {
            write_tensor(out_path, gen(seed, dims[0], dims[1], dims[2], parse_gen_kind(gen_kind)));
            return kExitOk;
        };
    });

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMathError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        // Pairing or realness violations: the computation could not certify its own output.
        std::cerr << "verification error: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace tprod
