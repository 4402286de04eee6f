#include "lui/reduction.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

#include "lui/binary_tree.hpp"
#include "lui/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lui {

namespace {

constexpr std::size_t kMaxClosureDegree = 8;  // ranks must fit 16 bits
constexpr std::size_t kMaxTupleBytes = 24;    // parts * degree for closure tuples

// Flattened tuple of permutation image tables: part nu occupies
// [nu*k, (nu+1)*k). Fixed-size POD so breadth-first queues stay flat.
struct RawTuple {
  std::array<std::uint8_t, kMaxTupleBytes> data;
};

void to_raw(const PermTuple& t, std::uint8_t* out) {
  const std::size_t k = t.degree();
  for (std::size_t nu = 0; nu < t.parts(); ++nu)
    std::memcpy(out + nu * k, t.part(nu).images().data(), k);
}

PermTuple from_raw(const std::uint8_t* raw, std::size_t parts, std::size_t k) {
  std::vector<Permutation> ps;
  ps.reserve(parts);
  for (std::size_t nu = 0; nu < parts; ++nu)
    ps.push_back(Permutation::from_images(std::vector<std::uint8_t>(raw + nu * k, raw + (nu + 1) * k)));
  return PermTuple(std::move(ps));
}

bool raw_transitive(const std::uint8_t* raw, std::size_t parts, std::size_t k) {
  std::uint32_t seen = 1u;                 // orbit of point 0; k <= 24 < 32 bits
  std::array<std::uint8_t, 32> stack{};
  std::size_t top = 0;
  stack[top++] = 0;
  std::size_t count = 1;
  while (top > 0) {
    const std::uint8_t x = stack[--top];
    for (std::size_t nu = 0; nu < parts; ++nu) {
      const std::uint8_t y = raw[nu * k + x];
      if (!(seen >> y & 1u)) {
        seen |= 1u << y;
        stack[top++] = y;
        ++count;
      }
    }
  }
  // Forward closure suffices: the reachable set is invariant under each
  // bijection, hence under the generated group and the inverses.
  return count == k;
}

// Meltable pair on raw data: l with part0(l) = m != l and all parts agreeing.
bool raw_meltable(const std::uint8_t* raw, std::size_t parts, std::size_t k) {
  for (std::size_t l = 0; l < k; ++l) {
    const std::uint8_t m = raw[l];
    if (m == l) continue;
    bool all = true;
    for (std::size_t nu = 1; nu < parts && all; ++nu) all = raw[nu * k + l] == m;
    if (all) return true;
  }
  return false;
}

// All conjugators of S_k with their inverses, k <= 7 (5040 entries tops).
struct ConjugatorTable {
  std::size_t k = 0;
  std::vector<std::uint8_t> tau;     // fact * k images
  std::vector<std::uint8_t> tau_inv; // fact * k images
  std::size_t count = 0;
};

const ConjugatorTable& conjugators(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, ConjugatorTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  ConjugatorTable table;
  table.k = k;
  table.count = factorial(k);
  table.tau.resize(table.count * k);
  table.tau_inv.resize(table.count * k);
  std::vector<std::uint8_t> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<std::uint8_t>(i);
  std::size_t idx = 0;
  do {
    for (std::size_t i = 0; i < k; ++i) {
      table.tau[idx * k + i] = images[i];
      table.tau_inv[idx * k + images[i]] = static_cast<std::uint8_t>(i);
    }
    ++idx;
  } while (std::next_permutation(images.begin(), images.end()));
  return cache.emplace(k, std::move(table)).first->second;
}

// Lexicographically minimal simultaneous conjugate of `in`, written to `out`
// (both flattened parts * k). Lazy comparison with early exit per conjugator.
void minimize_raw(const std::uint8_t* in, std::size_t parts, std::size_t k, std::uint8_t* out) {
  const ConjugatorTable& table = conjugators(k);
  std::memcpy(out, in, parts * k);
  for (std::size_t c = 0; c < table.count; ++c) {
    const std::uint8_t* tau = table.tau.data() + c * k;
    const std::uint8_t* inv = table.tau_inv.data() + c * k;
    for (std::size_t nu = 0; nu < parts; ++nu) {
      const std::uint8_t* part = in + nu * k;
      std::uint8_t* best = out + nu * k;
      bool decided = false;
      for (std::size_t x = 0; x < k; ++x) {
        const std::uint8_t v = inv[part[tau[x]]];
        if (v == best[x]) continue;
        if (v < best[x]) {
          // Candidate wins: materialize the remainder of this part and all
          // following parts.
          best[x] = v;
          for (std::size_t y = x + 1; y < k; ++y) best[y] = inv[part[tau[y]]];
          for (std::size_t mu = nu + 1; mu < parts; ++mu) {
            const std::uint8_t* p2 = in + mu * k;
            std::uint8_t* b2 = out + mu * k;
            for (std::size_t y = 0; y < k; ++y) b2[y] = inv[p2[tau[y]]];
          }
        }
        decided = true;
        break;
      }
      if (decided) break;
    }
  }
}

// images packed 3 bits per point (k <= 8) -> Lehmer rank, as a flat table.
struct RankTable {
  std::size_t k = 0;
  std::vector<std::uint16_t> rank_of_packed; // size 2^(3k)
  std::vector<std::uint32_t> packed_of_rank; // size k!
};

std::uint32_t pack_images(const std::uint8_t* images, std::size_t k) {
  std::uint32_t p = 0;
  for (std::size_t i = 0; i < k; ++i) p |= static_cast<std::uint32_t>(images[i]) << (3 * i);
  return p;
}

const RankTable& rank_table(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, RankTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  RankTable table;
  table.k = k;
  const std::size_t fact = factorial(k);
  table.rank_of_packed.assign(std::size_t{1} << (3 * k), 0);
  table.packed_of_rank.resize(fact);
  std::vector<std::uint8_t> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<std::uint8_t>(i);
  std::uint16_t r = 0;
  do {
    const std::uint32_t packed = pack_images(images.data(), k);
    table.rank_of_packed[packed] = r;
    table.packed_of_rank[r] = packed;
    ++r;
  } while (std::next_permutation(images.begin(), images.end()));
  return cache.emplace(k, std::move(table)).first->second;
}

// Dense or hashed visited set over tuple keys.
class VisitedSet {
public:
  VisitedSet(std::uint64_t key_count, std::size_t max_visited)
      : max_visited_(max_visited), dense_(key_count <= kDenseLimit) {
    if (dense_) bits_.assign((key_count + 63) / 64, 0);
  }

  // Returns true if newly inserted.
  bool insert(std::uint64_t key) {
    if (dense_) {
      std::uint64_t& word = bits_[key >> 6];
      const std::uint64_t mask = std::uint64_t{1} << (key & 63);
      if (word & mask) return false;
      word |= mask;
    } else {
      if (!set_.insert(key).second) return false;
    }
    ++count_;
    return true;
  }

  bool over_budget() const { return count_ > max_visited_; }
  std::size_t count() const { return count_; }

private:
  static constexpr std::uint64_t kDenseLimit = 2200000000ULL; // bits, ~262 MB
  std::size_t max_visited_;
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> set_;
  std::size_t count_ = 0;
};

// Breadth-first closure of one orbit under conjugation by adjacent
// transpositions. Marks every element visited; throws past the budget.
void close_orbit(const RawTuple& seed, std::size_t parts, std::size_t k, const RankTable& table,
                 std::uint64_t fact, VisitedSet& visited, std::vector<RawTuple>& queue,
                 std::size_t classes_so_far) {
  auto key_of = [&](const RawTuple& t) {
    std::uint64_t key = 0;
    for (std::size_t nu = 0; nu < parts; ++nu)
      key = key * fact + table.rank_of_packed[pack_images(t.data.data() + nu * k, k)];
    return key;
  };
  queue.clear();
  queue.push_back(seed);
  visited.insert(key_of(seed));
  std::size_t head = 0;
  while (head < queue.size()) {
    const RawTuple cur = queue[head++];
    for (std::size_t i = 0; i + 1 < k; ++i) {
      RawTuple next;
      for (std::size_t nu = 0; nu < parts; ++nu) {
        const std::uint8_t* p = cur.data.data() + nu * k;
        std::uint8_t* q = next.data.data() + nu * k;
        // q = s_i * p * s_i with s_i = (i, i+1)
        for (std::size_t x = 0; x < k; ++x) q[x] = p[x];
        std::swap(q[i], q[i + 1]);
        for (std::size_t x = 0; x < k; ++x) {
          if (q[x] == i)
            q[x] = static_cast<std::uint8_t>(i + 1);
          else if (q[x] == i + 1)
            q[x] = static_cast<std::uint8_t>(i);
        }
      }
      if (visited.insert(key_of(next))) {
        if (visited.over_budget())
          throw resource_error("orbit closure exceeded visited budget after " +
                               std::to_string(visited.count()) + " tuples in " +
                               std::to_string(classes_so_far) + " complete orbits");
        queue.push_back(next);
      }
    }
  }
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Odometer over tree-tuple indices; materializes tuple `index` of P_k^N.
void tree_tuple_at(const std::vector<Permutation>& perms, std::uint64_t index, std::size_t parts,
                   std::size_t k, std::uint8_t* out) {
  const std::size_t c = perms.size();
  for (std::size_t nu = parts; nu-- > 0;) {
    const auto& images = perms[index % c].images();
    std::memcpy(out + nu * k, images.data(), k);
    index /= c;
  }
}

// Class representatives by per-tuple canonical minimization (k <= 7).
// Returns first-seen representative indices plus the canonical keys.
std::vector<std::uint64_t> reps_by_minimization(const std::vector<Permutation>& perms,
                                                std::size_t parts, std::size_t k) {
  const std::uint64_t total = checked_pow(perms.size(), parts);
  std::vector<std::uint64_t> canon_keys(total);
  const std::uint64_t fact = factorial(k);
  const RankTable& table = rank_table(k);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(total); ++i) {
    std::uint8_t raw[kMaxTupleBytes];
    std::uint8_t canon[kMaxTupleBytes];
    tree_tuple_at(perms, static_cast<std::uint64_t>(i), parts, k, raw);
    minimize_raw(raw, parts, k, canon);
    std::uint64_t key = 0;
    for (std::size_t nu = 0; nu < parts; ++nu)
      key = key * fact + table.rank_of_packed[pack_images(canon + nu * k, k)];
    canon_keys[static_cast<std::size_t>(i)] = key;
  }
  // First-seen tuple index per distinct canonical key.
  std::vector<std::uint64_t> order(total);
  for (std::uint64_t i = 0; i < total; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (canon_keys[a] != canon_keys[b]) return canon_keys[a] < canon_keys[b];
    return a < b;
  });
  std::vector<std::uint64_t> reps;
  for (std::size_t i = 0; i < total; ++i)
    if (i == 0 || canon_keys[order[i]] != canon_keys[order[i - 1]]) reps.push_back(order[i]);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// Class representatives by breadth-first closure (used at k = 8).
std::vector<std::uint64_t> reps_by_closure(const std::vector<Permutation>& perms, std::size_t parts,
                                           std::size_t k, std::size_t max_visited) {
  const std::uint64_t total = checked_pow(perms.size(), parts);
  const std::uint64_t fact = factorial(k);
  const RankTable& table = rank_table(k);
  VisitedSet visited(checked_pow(fact, parts), max_visited);
  std::vector<RawTuple> queue;
  std::vector<std::uint64_t> reps;
  for (std::uint64_t i = 0; i < total; ++i) {
    RawTuple seed{};
    tree_tuple_at(perms, i, parts, k, seed.data.data());
    std::uint64_t key = 0;
    for (std::size_t nu = 0; nu < parts; ++nu)
      key = key * fact + table.rank_of_packed[pack_images(seed.data.data() + nu * k, k)];
    if (!visited.insert(key)) continue;
    close_orbit(seed, parts, k, table, fact, visited, queue, reps.size());
    reps.push_back(i);
  }
  return reps;
}

struct RepsCacheKey {
  std::size_t k, parts;
  auto operator<=>(const RepsCacheKey&) const = default;
};

} // namespace

bool is_transitive(const PermTuple& t) {
  std::uint8_t raw[kMaxTupleBytes * 2];
  const std::size_t k = t.degree();
  if (t.parts() * k <= sizeof(raw)) {
    to_raw(t, raw);
    return raw_transitive(raw, t.parts(), k);
  }
  // General fallback for large tuples.
  std::vector<bool> seen(k, false);
  std::vector<std::uint8_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint8_t x = stack.back();
    stack.pop_back();
    for (std::size_t nu = 0; nu < t.parts(); ++nu) {
      for (std::uint8_t y : {t.part(nu)(x), t.part(nu).inverse()(x)}) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
          ++count;
        }
      }
    }
  }
  return count == k;
}

PermTuple canonical_form(const PermTuple& t, std::size_t max_k) {
  const std::size_t k = t.degree();
  if (k > max_k)
    throw size_error("canonical_form: degree " + std::to_string(k) + " exceeds maximum " +
                     std::to_string(max_k) + "; use orbit_classes for counting");
  if (t.parts() * k > kMaxTupleBytes) throw size_error("canonical_form: too many parts");
  std::uint8_t raw[kMaxTupleBytes];
  std::uint8_t canon[kMaxTupleBytes];
  to_raw(t, raw);
  minimize_raw(raw, t.parts(), k, canon);
  return from_raw(canon, t.parts(), k);
}

std::optional<std::pair<std::uint8_t, std::uint8_t>> meltable_pair(const PermTuple& t) {
  const std::size_t k = t.degree();
  for (std::uint8_t l = 0; l < k; ++l) {
    const std::uint8_t m = t.part(0)(l);
    if (m == l) continue;
    bool all = true;
    for (std::size_t nu = 1; nu < t.parts() && all; ++nu) all = t.part(nu)(l) == m;
    if (all) return std::make_pair(l, m);
  }
  return std::nullopt;
}

PermTuple melt(const PermTuple& t) {
  PermTuple cur = t;
  for (;;) {
    auto pair = meltable_pair(cur);
    if (!pair || cur.degree() == 1) return cur;
    const std::uint8_t l = pair->first;
    const std::uint8_t m = pair->second;
    const std::size_t k = cur.degree();
    std::vector<Permutation> parts;
    parts.reserve(cur.parts());
    for (std::size_t nu = 0; nu < cur.parts(); ++nu) {
      const Permutation& p = cur.part(nu);
      std::vector<std::uint8_t> images(k - 1);
      for (std::size_t x = 0; x < k; ++x) {
        if (x == m) continue;
        std::uint8_t y = p(static_cast<std::uint8_t>(x));
        if (y == m) y = p(m); // x == l: skip over the removed point
        const std::uint8_t xr = static_cast<std::uint8_t>(x > m ? x - 1 : x);
        const std::uint8_t yr = static_cast<std::uint8_t>(y > m ? y - 1 : y);
        images[xr] = yr;
      }
      parts.push_back(Permutation::from_images(std::move(images)));
    }
    cur = PermTuple(std::move(parts));
  }
}

OrbitClasses orbit_classes(const std::vector<PermTuple>& seeds, std::size_t max_visited) {
  OrbitClasses result;
  if (seeds.empty()) return result;
  const std::size_t k = seeds.front().degree();
  const std::size_t parts = seeds.front().parts();
  if (k > kMaxClosureDegree)
    throw size_error("orbit_classes: degree " + std::to_string(k) + " exceeds maximum " +
                     std::to_string(kMaxClosureDegree));
  if (parts * k > kMaxTupleBytes) throw size_error("orbit_classes: too many parts");
  for (const auto& s : seeds)
    if (s.degree() != k || s.parts() != parts)
      throw dimension_mismatch("orbit_classes: seeds must share degree and part count");
  const std::uint64_t fact = factorial(k);
  const RankTable& table = rank_table(k);
  VisitedSet visited(checked_pow(fact, parts), max_visited);
  std::vector<RawTuple> queue;
  for (const auto& seed : seeds) {
    RawTuple raw{};
    to_raw(seed, raw.data.data());
    std::uint64_t key = 0;
    for (std::size_t nu = 0; nu < parts; ++nu)
      key = key * fact + table.rank_of_packed[pack_images(raw.data.data() + nu * k, k)];
    if (!visited.insert(key)) continue;
    close_orbit(raw, parts, k, table, fact, visited, queue, result.count);
    result.count += 1;
    result.representatives.push_back(seed);
  }
  return result;
}

std::vector<PermTuple> tree_tuple_class_reps(std::size_t k, std::size_t parts, bool allow_long) {
  static std::mutex mu;
  static std::map<RepsCacheKey, std::vector<PermTuple>> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find({k, parts});
    if (it != cache.end()) return it->second;
  }
  if (k > kMaxClosureDegree)
    throw size_error("tree_tuple_class_reps: k exceeds " + std::to_string(kMaxClosureDegree));
  if (k == 8 && !allow_long)
    throw size_error("tree_tuple_class_reps: k = 8 requires the long-running flag");
  if (parts * k > kMaxTupleBytes) throw size_error("tree_tuple_class_reps: too many parts");
  const auto perms = tree_perm_set(k);
  const auto rep_indices =
      (k <= 7) ? reps_by_minimization(perms, parts, k) : reps_by_closure(perms, parts, k, 600000000);
  std::vector<PermTuple> reps;
  reps.reserve(rep_indices.size());
  for (std::uint64_t idx : rep_indices) {
    std::uint8_t raw[kMaxTupleBytes];
    tree_tuple_at(perms, idx, parts, k, raw);
    reps.push_back(from_raw(raw, parts, k));
  }
  std::scoped_lock lock(mu);
  return cache.emplace(RepsCacheKey{k, parts}, std::move(reps)).first->second;
}

ReductionCounts reduction_counts(std::size_t k, std::size_t parts, bool allow_long) {
  if (k < 1) throw size_error("reduction_counts: k must be at least 1");
  if (k > 7 && !allow_long)
    throw size_error("reduction_counts: k = " + std::to_string(k) +
                     " requires the long-running flag (k <= 7 by default)");
  if (k > kMaxClosureDegree) throw size_error("reduction_counts: k exceeds 8");
  ReductionCounts counts;
  counts.all_tuples = checked_pow(factorial(k), parts);
  const auto perms = tree_perm_set(k);
  counts.tree_tuples = checked_pow(perms.size(), parts);
  // Tuple-level transitivity count by odometer sweep.
  std::uint64_t transitive = 0;
#pragma omp parallel for schedule(static) reduction(+ : transitive)
  for (long long i = 0; i < static_cast<long long>(counts.tree_tuples); ++i) {
    std::uint8_t raw[kMaxTupleBytes];
    tree_tuple_at(perms, static_cast<std::uint64_t>(i), parts, k, raw);
    if (raw_transitive(raw, parts, k)) ++transitive;
  }
  counts.transitive_tree_tuples = transitive;
  const auto reps = tree_tuple_class_reps(k, parts, allow_long);
  counts.tree_classes = reps.size();
  for (const auto& rep : reps) {
    if (!is_transitive(rep)) continue;
    ++counts.transitive_classes;
    if (!meltable_pair(rep)) ++counts.unmelted_transitive_classes;
  }
  return counts;
}

std::uint64_t full_tuple_class_count(std::size_t k, std::size_t parts) {
  if (k > kMaxClosureDegree) throw size_error("full_tuple_class_count: k exceeds 8");
  if (parts * k > kMaxTupleBytes) throw size_error("full_tuple_class_count: too many parts");
  const std::uint64_t fact = factorial(k);
  const std::uint64_t total = checked_pow(fact, parts);
  const RankTable& table = rank_table(k);
  VisitedSet visited(total, 2500000000ULL);
  std::vector<RawTuple> queue;
  std::uint64_t classes = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    // Decode tuple i as base-(k!) digits of Lehmer ranks.
    RawTuple seed{};
    std::uint64_t rest = i;
    std::uint64_t key = 0;
    for (std::size_t nu = parts; nu-- > 0;) {
      const std::uint64_t r = rest % fact;
      rest /= fact;
      const std::uint32_t packed = table.packed_of_rank[r];
      for (std::size_t x = 0; x < k; ++x)
        seed.data[nu * k + x] = static_cast<std::uint8_t>((packed >> (3 * x)) & 7);
    }
    for (std::size_t nu = 0; nu < parts; ++nu)
      key = key * fact + table.rank_of_packed[pack_images(seed.data.data() + nu * k, k)];
    if (!visited.insert(key)) continue;
    close_orbit(seed, parts, k, table, fact, visited, queue, classes);
    ++classes;
  }
  return classes;
}

} // namespace lui
