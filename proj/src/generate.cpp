#include "tprod/generate.hpp"

#include "tprod/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace tprod {

namespace {

class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [-1, 1). Mapped by hand so the stream is identical on every standard library.
    double next() {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    }

    Tensor3 dense(std::size_t m, std::size_t n, std::size_t p) {
        std::vector<double> data(m * n * p);
        for (double& x : data) {
            x = next();
        }
        return {m, n, p, std::move(data)};
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

GenKind parse_gen_kind(const std::string& name) {
    if (name == "dense") return GenKind::dense;
    if (name == "t_symmetric") return GenKind::t_symmetric;
    if (name == "rank_deficient") return GenKind::rank_deficient;
    if (name == "f_diagonal") return GenKind::f_diagonal;
    throw std::invalid_argument("unknown tensor kind '" + name + "'");
}

std::string to_string(GenKind kind) {
    switch (kind) {
    case GenKind::dense: return "dense";
    case GenKind::t_symmetric: return "t_symmetric";
    case GenKind::rank_deficient: return "rank_deficient";
    case GenKind::f_diagonal: return "f_diagonal";
    }
    return "dense";
}

Tensor3 gen(std::uint64_t seed, std::size_t m, std::size_t n, std::size_t p, GenKind kind) {
    if (m == 0 || n == 0 || p == 0) {
        throw DimensionError("gen: dimensions must be positive");
    }
    UniformSource src(seed);
    switch (kind) {
    case GenKind::dense:
        return src.dense(m, n, p);
    case GenKind::t_symmetric: {
        if (m != n) {
            throw DimensionError("gen: t_symmetric tensors need square slices");
        }
        const Tensor3 g = src.dense(n, n, p);
        return scalar_mul(0.5, add(g, transpose(g)));
    }
    case GenKind::rank_deficient: {
        const std::size_t inner = (n + 1) / 2;
        const Tensor3 b = src.dense(m, inner, p);
        const Tensor3 c = src.dense(inner, n, p);
        return tprod(b, c);
    }
    case GenKind::f_diagonal: {
        std::vector<double> data(m * n * p, 0.0);
        for (std::size_t k = 0; k < p; ++k) {
            for (std::size_t i = 0; i < std::min(m, n); ++i) {
                data[(k * m + i) * n + i] = src.next();
            }
        }
        return {m, n, p, std::move(data)};
    }
    }
    return src.dense(m, n, p);
}

} // namespace tprod
