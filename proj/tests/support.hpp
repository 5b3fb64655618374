#pragma once

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// read only the ring tables (through FiniteRing::add/mul/zero) and never call
// the library's ideal, subspace or decomposition code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multiring/chains.hpp"
#include "multiring/decomposition.hpp"
#include "multiring/ideals.hpp"
#include "multiring/io.hpp"
#include "multiring/multispace.hpp"
#include "multiring/ring.hpp"

namespace testing {

using namespace multiring;

inline std::vector<ElementId> ids(std::uint32_t first, std::size_t n) {
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(element(first + static_cast<std::uint32_t>(k)));
  return out;
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// Z_n on a universe labelled "0".."n-1".
inline MultiRingSpace single(std::size_t n) {
  return build_multispace(Universe::from_labels(numbered("", n)), {make_cyclic_ring(n)});
}

inline MultiRingSpace single(const FiniteRing& r) {
  return build_multispace(Universe::numbered("", r.size()), {r});
}

// Cyclic rings on consecutive, disjoint blocks; labels a0.., b0.., c0...
inline MultiRingSpace disjoint_cyclic(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> labels;
  std::vector<FiniteRing> rings;
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    for (auto& l : numbered(std::string(1, static_cast<char>('a' + k)), sizes[k])) labels.push_back(l);
    rings.push_back(make_cyclic_ring(sizes[k], ids(next, sizes[k])));
    next += static_cast<std::uint32_t>(sizes[k]);
  }
  return build_multispace(Universe::from_labels(labels), std::move(rings));
}

inline MultiRingSpace z4z6() { return disjoint_cyclic({4, 6}); }

inline SubsetSelection select(const MultiRingSpace& m, const std::vector<std::string>& labels,
                              std::vector<RingIndex> ops) {
  return make_selection(m, labels, std::move(ops));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MULTIRING_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MultiRingSpace load_fixture(const std::string& name) {
  return io::build(io::parse_spec(read_text(fixture_path(name))));
}

// ---------------------------------------------------------------------------
// Oracles over a single ring, elements given as positions 0..n-1 of the
// carrier.

namespace oracle {

inline std::vector<ElementId> members(const FiniteRing& r, std::uint64_t mask) {
  std::vector<ElementId> out;
  for (std::size_t p = 0; p < r.size(); ++p) {
    if (mask >> p & 1) out.push_back(r.carrier()[p]);
  }
  return out;
}

inline bool in(const FiniteRing& r, std::uint64_t mask, ElementId x) {
  const auto& c = r.carrier();
  const auto it = std::find(c.begin(), c.end(), x);
  return it != c.end() && (mask >> (it - c.begin()) & 1);
}

// Nonempty, contains zero, closed under + and negation.
inline bool additive_subgroup(const FiniteRing& r, std::uint64_t mask) {
  const auto s = members(r, mask);
  if (s.empty() || !in(r, mask, r.zero())) return false;
  for (auto x : s) {
    bool has_neg = false;
    for (auto y : s) {
      if (!in(r, mask, r.add(x, y))) return false;
      if (r.add(x, y) == r.zero()) has_neg = true;
    }
    if (!has_neg) return false;
  }
  return true;
}

inline bool subring(const FiniteRing& r, std::uint64_t mask) {
  if (!additive_subgroup(r, mask)) return false;
  const auto s = members(r, mask);
  for (auto x : s) {
    for (auto y : s) {
      if (!in(r, mask, r.mul(x, y))) return false;
    }
  }
  return true;
}

inline bool ideal(const FiniteRing& r, std::uint64_t mask) {
  if (!additive_subgroup(r, mask)) return false;
  for (auto a : members(r, mask)) {
    for (auto x : r.carrier()) {
      if (!in(r, mask, r.mul(x, a)) || !in(r, mask, r.mul(a, x))) return false;
    }
  }
  return true;
}

inline std::vector<ElementList> ideals(const FiniteRing& r) {
  std::vector<ElementList> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r.size()); ++mask) {
    if (ideal(r, mask)) out.push_back(normalized(members(r, mask)));
  }
  return out;
}

inline bool strict_subset(const ElementList& a, const ElementList& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<ElementList> maximal_ideals(const FiniteRing& r) {
  const auto all = ideals(r);
  const auto full = normalized(r.carrier());
  std::vector<ElementList> out;
  for (const auto& i : all) {
    if (i == full) continue;
    bool maximal = true;
    for (const auto& j : all) {
      if (j != full && strict_subset(i, j)) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

inline ElementList idempotents(const FiniteRing& r) {
  ElementList out;
  for (auto e : r.carrier()) {
    if (r.mul(e, e) == e) out.push_back(e);
  }
  return normalized(out);
}

// An idempotent that is not a sum of two nonzero orthogonal idempotents.
inline bool primitive(const FiniteRing& r, ElementId e) {
  if (e == r.zero() || r.mul(e, e) != e) return false;
  for (auto f : oracle::idempotents(r)) {
    for (auto g : oracle::idempotents(r)) {
      if (f == r.zero() || g == r.zero()) continue;
      if (r.mul(f, g) == r.zero() && r.mul(g, f) == r.zero() && r.add(f, g) == e) return false;
    }
  }
  return true;
}

// Ring axioms straight from raw tables (positions index the carrier).
inline bool is_ring(const RingTables& t) {
  const auto n = t.size();
  auto pos = [&](ElementId e) -> std::size_t {
    const auto it = std::find(t.carrier.begin(), t.carrier.end(), e);
    return it == t.carrier.end() ? n : static_cast<std::size_t>(it - t.carrier.begin());
  };
  std::vector<std::size_t> add(n * n), mul(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    add[k] = pos(t.add[k]);
    mul[k] = pos(t.mul[k]);
    if (add[k] == n || mul[k] == n) return false;
  }
  auto A = [&](std::size_t x, std::size_t y) { return add[x * n + y]; };
  auto M = [&](std::size_t x, std::size_t y) { return mul[x * n + y]; };
  std::size_t zero = n;
  for (std::size_t z = 0; z < n && zero == n; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && A(z, x) == x && A(x, z) == x;
    if (ok) zero = z;
  }
  if (zero == n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    bool inv = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (A(x, y) != A(y, x)) return false;
      inv = inv || A(x, y) == zero;
      for (std::size_t z = 0; z < n; ++z) {
        if (A(A(x, y), z) != A(x, A(y, z))) return false;
        if (M(M(x, y), z) != M(x, M(y, z))) return false;
        if (M(x, A(y, z)) != A(M(x, y), M(x, z))) return false;
        if (M(A(y, z), x) != A(M(y, x), M(z, x))) return false;
      }
    }
    if (!inv) return false;
  }
  return true;
}

// Longest strictly descending chain of ideals from the carrier to {0}, in
// steps.
inline std::size_t longest_ideal_chain(const FiniteRing& r) {
  const auto all = ideals(r);  // includes {0} and the carrier
  std::vector<std::size_t> depth(all.size(), 0);
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return all[a].size() < all[b].size(); });
  std::size_t best = 0;
  for (auto a : order) {
    for (auto b : order) {
      if (strict_subset(all[b], all[a])) depth[a] = std::max(depth[a], depth[b] + 1);
    }
    best = std::max(best, depth[a]);
  }
  return best;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Oracles over a multi-ring space.

namespace space_oracle {

inline std::uint64_t part_mask(const MultiRingSpace& m, const SubsetSelection& s, RingIndex k) {
  const auto& r = m.ring(k);
  std::uint64_t mask = 0;
  for (std::size_t p = 0; p < r.size(); ++p) {
    if (s.elements.contains(r.carrier()[p])) mask |= std::uint64_t{1} << p;
  }
  return mask;
}

inline bool side_conditions(const MultiRingSpace& m, const SubsetSelection& s) {
  bool meets = false;
  for (auto x : s.elements.to_list()) {
    bool owned = false;
    for (auto k : s.ops) owned = owned || m.ring(k).contains(x);
    if (!owned) return false;
    meets = true;
  }
  return meets;
}

inline bool subspace(const MultiRingSpace& m, const SubsetSelection& s) {
  if (!side_conditions(m, s)) return false;
  for (auto k : s.ops) {
    const auto mask = part_mask(m, s, k);
    if (mask && !oracle::subring(m.ring(k), mask)) return false;
  }
  return true;
}

inline bool ideal_subspace(const MultiRingSpace& m, const SubsetSelection& s) {
  if (!side_conditions(m, s)) return false;
  for (auto k : s.ops) {
    const auto mask = part_mask(m, s, k);
    if (mask && !oracle::ideal(m.ring(k), mask)) return false;
  }
  return true;
}

}  // namespace space_oracle

// Every subset of the universe paired with every nonempty op subset.
template <class F>
void for_each_selection(const MultiRingSpace& m, F&& f) {
  const auto n = m.universe().size();
  const auto rings = m.ring_count();
  for (std::uint64_t ops = 1; ops < (std::uint64_t{1} << rings); ++ops) {
    std::vector<RingIndex> op_list;
    for (RingIndex k = 0; k < rings; ++k) {
      if (ops >> k & 1) op_list.push_back(k);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      SubsetSelection s{ElementSet(n), op_list};
      for (std::size_t x = 0; x < n; ++x) {
        if (mask >> x & 1) s.elements.insert(element(static_cast<std::uint32_t>(x)));
      }
      f(s);
    }
  }
}

// Replaces table cell (x, y) of `which` ("add" or "mul") with `value`.
inline RingTables mutate(RingTables t, bool mul, std::size_t x, std::size_t y, ElementId value) {
  auto& table = mul ? t.mul : t.add;
  table[x * t.size() + y] = value;
  return t;
}

// A random ring of size <= 12 built from products of small cyclic rings,
// relabelled onto a random subset of a universe of `universe` elements.
inline FiniteRing random_ring(std::mt19937& rng, std::size_t universe = 12) {
  static const std::vector<std::vector<std::size_t>> shapes = {
      {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12},
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {2, 2, 2}, {2, 2, 3}};
  const auto& shape = shapes[rng() % shapes.size()];
  auto ring = make_cyclic_ring(shape[0]);
  for (std::size_t k = 1; k < shape.size(); ++k) ring = make_product_ring(ring, make_cyclic_ring(shape[k]));
  auto slots = ids(0, std::max(universe, ring.size()));
  std::shuffle(slots.begin(), slots.end(), rng);
  slots.resize(ring.size());
  return ring.relabeled(slots);
}

}  // namespace testing
