#ifndef LUI_TENSOR_REP_HPP
#define LUI_TENSOR_REP_HPP

#include <cstdint>

#include "lui/matrix.hpp"
#include "lui/permutation.hpp"

namespace lui {

/// Index action of T_{n,k}(perm) on {0, ..., n^k - 1}: writing the index as
/// base-n digits d_1 ... d_k (d_1 most significant), the output has
/// d'_{perm(mu)} = d_mu, i.e. the factor in slot mu moves to slot perm(mu).
std::uint64_t rep_apply(std::size_t n, std::size_t k, const Permutation& perm, std::uint64_t index);

/// The shuffle between the copy-major space (V^N)^k and the particle-major
/// space (V^k)^N: tau maps point a*k+b+1 to b*N+a+1 (a < N, b < k, 1-based).
struct ShufflePerm {
  std::size_t k = 0;
  std::size_t parts = 0;
  Permutation tau;

  /// Digit action of T_{n,kN}(tau).
  std::uint64_t apply(std::size_t n, std::uint64_t index) const;
  std::uint64_t apply_inverse(std::size_t n, std::uint64_t index) const;
};

ShufflePerm shuffle_tau(std::size_t k, std::size_t parts);

/// Index action of T^{(N)}_{n,k}(tuple) = sigma (T(pi_1) x ... x T(pi_N)) sigma^-1
/// on {0, ..., n^{kN} - 1}, computed purely on digit strings.
std::uint64_t multi_rep_apply(std::size_t n, std::size_t k, const PermTuple& tuple,
                              std::uint64_t index);

/// Dense 0/1 realization: M[multi_rep_apply(i), i] = 1. Oracle use only;
/// dimension n^{kN} capped at 4096.
template <typename S>
Matrix<S> dense_rep(std::size_t n, std::size_t k, const PermTuple& tuple);

/// Rank of {T_{2,k}(pi) : pi in P_k} as vectors of length 4^k, computed by
/// exact Gaussian elimination over GF(2^31 - 1). Full rank modulo p
/// certifies full rank over the rationals. k <= 6.
std::size_t basis_rank(std::size_t k);

} // namespace lui

#endif
