#ifndef LUI_REDUCTION_HPP
#define LUI_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lui/permutation.hpp"

namespace lui {

/// True iff the subgroup generated by the tuple's parts acts transitively
/// on {1..k} (orbit closure of point 1 under all parts and their inverses).
bool is_transitive(const PermTuple& t);

/// Lexicographically minimal tuple over all simultaneous conjugations
/// tau^-1 pi_nu tau, tau in S_k. Two tuples have equal canonical forms iff
/// they are simultaneously conjugate. Brute force over S_k; k <= max_k.
PermTuple canonical_form(const PermTuple& t, std::size_t max_k = 7);

/// A pair (l, m), l != m, with pi_nu(l) = m for every part, if one exists
/// (0-based points, smallest such pair in lexicographic order).
std::optional<std::pair<std::uint8_t, std::uint8_t>> meltable_pair(const PermTuple& t);

/// Degree-reduction for projector arguments: while some pair (l, m) with
/// pi_nu(l) = m for all nu exists, identify l and m (l's image chain skips
/// m) and relabel to {1..k-1}. Returns the fixed point; tuples without such
/// a pair are returned unchanged.
PermTuple melt(const PermTuple& t);

struct OrbitClasses {
  std::size_t count = 0;
  std::vector<PermTuple> representatives; // first seed of each orbit, in seed order
};

/// Partitions the closure of the seed set under simultaneous conjugation
/// into orbits via breadth-first closure over adjacent-transposition
/// conjugators. All seeds must share one degree and part count.
/// max_visited bounds the total number of tuples marked (resource_error
/// beyond it, reporting partial progress).
OrbitClasses orbit_classes(const std::vector<PermTuple>& seeds, std::size_t max_visited = 600000000);

/// Simultaneous-conjugacy class representatives of the tree tuples
/// P_k x ... x P_k (N factors), in first-seen enumeration order.
/// Uses per-tuple canonical forms for k <= 7 and breadth-first orbit
/// closure for k = 8 (which requires allow_long).
std::vector<PermTuple> tree_tuple_class_reps(std::size_t k, std::size_t parts = 2, bool allow_long = false);

struct ReductionCounts {
  std::uint64_t all_tuples = 0;           // (k!)^N
  std::uint64_t tree_tuples = 0;          // C(k)^N
  std::uint64_t tree_classes = 0;         // simultaneous-conjugacy classes of tree tuples
  std::uint64_t transitive_tree_tuples = 0;
  std::uint64_t transitive_classes = 0;
  std::uint64_t unmelted_transitive_classes = 0; // transitive classes with no meltable pair
};

/// The six Table-style reduction counts for degree k and N parts.
/// k <= 7 by default; k = 8 (N = 2) behind allow_long.
ReductionCounts reduction_counts(std::size_t k, std::size_t parts = 2, bool allow_long = false);

/// Number of simultaneous-conjugacy classes of ALL of (S_k)^N, by closure.
/// Exposed for reporting alongside the tree-restricted class count.
std::uint64_t full_tuple_class_count(std::size_t k, std::size_t parts = 2);

} // namespace lui

#endif
