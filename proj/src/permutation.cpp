#include "lui/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "lui/errors.hpp"

namespace lui {

Permutation::Permutation(std::size_t k) : images_(k) {
  for (std::size_t i = 0; i < k; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || seen[v]) throw validation_error("image table is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, std::size_t k) {
  Permutation p(k);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > static_cast<int>(k)) throw validation_error("cycle point out of range");
      if (p.images_[from - 1] != static_cast<std::uint8_t>(from - 1) && cycle.size() > 1)
        throw validation_error("cycles are not disjoint");
      p.images_[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
  }
  std::vector<bool> seen(k, false);
  for (std::uint8_t v : p.images_) {
    if (seen[v]) throw validation_error("cycles are not disjoint");
    seen[v] = true;
  }
  return p;
}

namespace {

std::vector<std::vector<int>> parse_cycle_list(std::string_view text, int& max_point) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && (text.compare(i, 2, "id") == 0)) {
    i += 2;
    skip_ws();
    if (i != text.size()) throw validation_error("trailing characters after 'id'");
    return cycles;
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw validation_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw validation_error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw validation_error("expected point or ')' in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1) throw validation_error("points are 1-based");
      max_point = std::max(max_point, v);
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

} // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  int max_point = 0;
  auto cycles = parse_cycle_list(text, max_point);
  std::size_t k = degree ? degree : std::max<std::size_t>(max_point, 1);
  if (max_point > static_cast<int>(k)) throw validation_error("cycle point exceeds stated degree");
  return from_cycles(cycles, k);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw dimension_mismatch("composing permutations of unequal degree");
  Permutation c;
  c.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

Permutation Permutation::conjugate_by(const Permutation& tau) const {
  if (degree() != tau.degree()) throw dimension_mismatch("conjugating by permutation of unequal degree");
  const Permutation tau_inv = tau.inverse();
  Permutation c;
  c.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) c.images_[i] = tau_inv.images_[images_[tau.images_[i]]];
  return c;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    std::size_t x = start;
    do {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x) + 1);
      x = images_[x];
    } while (x != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::str(bool with_fixed_points) const {
  std::string s;
  for (const auto& cycle : cycles()) {
    if (cycle.size() == 1 && !with_fixed_points) continue;
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cycle[i]);
    }
    s += ')';
  }
  if (s.empty()) s = "id";
  return s;
}

std::uint64_t Permutation::rank() const {
  const std::size_t k = degree();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < k; ++j)
      if (images_[j] < images_[i]) ++smaller;
    r = r * (k - i) + smaller;
  }
  return r;
}

Permutation Permutation::unrank(std::uint64_t r, std::size_t k) {
  std::vector<std::uint64_t> digits(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    digits[i] = r % (k - i);
    r /= (k - i);
  }
  std::vector<std::uint8_t> pool(k);
  for (std::size_t i = 0; i < k; ++i) pool[i] = static_cast<std::uint8_t>(i);
  std::vector<std::uint8_t> images(k);
  for (std::size_t i = 0; i < k; ++i) {
    images[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

PermTuple::PermTuple(std::vector<Permutation> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw validation_error("a permutation tuple needs at least one part");
  degree_ = parts_.front().degree();
  if (degree_ < 1) throw validation_error("tuple degree must be at least 1");
  for (const auto& p : parts_)
    if (p.degree() != degree_) throw dimension_mismatch("tuple parts have unequal degrees");
}

PermTuple PermTuple::parse(std::string_view text, std::size_t degree) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  std::size_t k = degree;
  if (k == 0) {
    int max_point = 0;
    for (auto piece : pieces) parse_cycle_list(piece, max_point);
    k = std::max(max_point, 1);
  }
  std::vector<Permutation> parts;
  parts.reserve(pieces.size());
  for (auto piece : pieces) parts.push_back(Permutation::parse(piece, k));
  return PermTuple(std::move(parts));
}

PermTuple PermTuple::conjugate_by(const Permutation& tau) const {
  std::vector<Permutation> parts;
  parts.reserve(parts_.size());
  for (const auto& p : parts_) parts.push_back(p.conjugate_by(tau));
  return PermTuple(std::move(parts));
}

PermTuple PermTuple::inverse() const {
  std::vector<Permutation> parts;
  parts.reserve(parts_.size());
  for (const auto& p : parts_) parts.push_back(p.inverse());
  return PermTuple(std::move(parts));
}

std::string PermTuple::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ";";
    s += parts_[i].str();
  }
  return s;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

} // namespace lui
