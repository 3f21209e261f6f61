#pragma once

#include "tprod/tensor3.hpp"

#include <cstdint>
#include <string>

namespace tprod {

enum class GenKind { dense, t_symmetric, rank_deficient, f_diagonal };

/// "dense", "t_symmetric", "rank_deficient", "f_diagonal"; throws std::invalid_argument.
GenKind parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

/// Seeded tensor generator. All randomness comes from std::mt19937_64 seeded with `seed`;
/// each draw x becomes 2 * (x >> 11) * 2^-53 - 1, uniform in [-1, 1). Entries are drawn in
/// slice-major, row-major order.
///
///   dense           i.i.d. uniform entries
///   t_symmetric     (g + g^T) / 2 for a dense n x n x p g (requires m == n)
///   rank_deficient  b * c with b: m x r x p, c: r x n x p dense, r = ceil(n / 2)
///   f_diagonal      uniform diagonal entries, zeros elsewhere
Tensor3 gen(std::uint64_t seed, std::size_t m, std::size_t n, std::size_t p, GenKind kind);

} // namespace tprod
