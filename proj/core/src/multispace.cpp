#include "multiring/multispace.hpp"

#include <algorithm>
#include <bit>

#include "multiring/ideals.hpp"

namespace multiring {

MixedLawError::MixedLawError(MixedLawViolation v)
    : Error(ErrorCode::kMixedLawViolation,
            v.law + " fails for operations (" + std::to_string(v.i + 1) + ", " +
                std::to_string(v.j + 1) + ") at (#" + std::to_string(v.x.value) + ", #" +
                std::to_string(v.y.value) + ", #" + std::to_string(v.z.value) + ")"),
      violation_(std::move(v)) {}

namespace {

struct Sides {
  ElementId lhs, rhs;
};

// Evaluates both sides of a mixed law, or nullopt when some intermediate
// result is undefined (an operand outside the ring owning the operation).
std::optional<Sides> evaluate(const FiniteRing& ri, const FiniteRing& rj,
                              std::string_view law_name, ElementId x, ElementId y,
                              ElementId z) {
  auto in = [](const FiniteRing& r, std::initializer_list<ElementId> es) {
    return std::all_of(es.begin(), es.end(), [&](ElementId e) { return r.contains(e); });
  };
  if (law_name == law::kAddAssociativity || law_name == law::kMulAssociativity) {
    const bool additive = law_name == law::kAddAssociativity;
    auto op_i = [&](ElementId a, ElementId b) { return additive ? ri.add(a, b) : ri.mul(a, b); };
    auto op_j = [&](ElementId a, ElementId b) { return additive ? rj.add(a, b) : rj.mul(a, b); };
    if (!in(ri, {x, y}) || !in(rj, {y, z})) return std::nullopt;
    const auto xy = op_i(x, y);
    const auto yz = op_j(y, z);
    if (!rj.contains(xy) || !ri.contains(yz)) return std::nullopt;
    return Sides{op_j(xy, z), op_i(x, yz)};
  }
  if (law_name == law::kLeftDistributivity) {
    if (!in(ri, {x, y, z}) || !in(rj, {y, z})) return std::nullopt;
    const auto s = rj.add(y, z);
    const auto xy = ri.mul(x, y);
    const auto xz = ri.mul(x, z);
    if (!ri.contains(s) || !in(rj, {xy, xz})) return std::nullopt;
    return Sides{ri.mul(x, s), rj.add(xy, xz)};
  }
  if (law_name == law::kRightDistributivity) {
    if (!in(ri, {x, y, z}) || !in(rj, {y, z})) return std::nullopt;
    const auto s = rj.add(y, z);
    const auto yx = ri.mul(y, x);
    const auto zx = ri.mul(z, x);
    if (!ri.contains(s) || !in(rj, {yx, zx})) return std::nullopt;
    return Sides{ri.mul(s, x), rj.add(yx, zx)};
  }
  return std::nullopt;
}

ElementList intersect(const ElementList& a, const ElementList& b) {
  ElementList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementList part(const MultiRingSpace& m, const SubsetSelection& s, RingIndex k) {
  return (s.elements & m.ring_carrier(k)).to_list();
}

// Every selected element lies in a selected ring, and some selected ring
// meets the selection.
bool side_conditions(const MultiRingSpace& m, const SubsetSelection& s) {
  ElementSet covered(m.universe().size());
  for (auto k : s.ops) covered |= m.ring_carrier(k);
  return s.elements.is_subset_of(covered) && s.elements.intersects(covered);
}

bool is_additive_subgroup(const FiniteRing& r, const ElementList& t) {
  auto has = [&](ElementId e) { return std::binary_search(t.begin(), t.end(), e); };
  if (!has(r.zero())) return false;
  for (auto x : t) {
    if (!has(r.neg(x))) return false;
    for (auto y : t)
      if (!has(r.add(x, y))) return false;
  }
  return true;
}

bool closed_under_mul(const FiniteRing& r, const ElementList& t) {
  for (auto x : t)
    for (auto y : t)
      if (!std::binary_search(t.begin(), t.end(), r.mul(x, y))) return false;
  return true;
}

}  // namespace

std::optional<MixedLawViolation> find_mixed_law_violation(const std::vector<FiniteRing>& rings,
                                                          std::size_t* instances) {
  std::size_t count = 0;
  static constexpr std::string_view kLaws[] = {law::kAddAssociativity, law::kMulAssociativity,
                                               law::kLeftDistributivity,
                                               law::kRightDistributivity};
  for (RingIndex i = 0; i < rings.size(); ++i) {
    for (RingIndex j = 0; j < rings.size(); ++j) {
      if (i == j) continue;
      const auto& ri = rings[i];
      const auto& rj = rings[j];
      const auto overlap = intersect(ri.carrier(), rj.carrier());
      if (overlap.empty()) continue;
      for (auto law_name : kLaws) {
        const bool assoc =
            law_name == law::kAddAssociativity || law_name == law::kMulAssociativity;
        // Associativity needs y in both rings; distributivity needs y, z in both.
        const auto& ys = overlap;
        const auto& zs = assoc ? rj.carrier() : overlap;
        for (auto x : ri.carrier()) {
          for (auto y : ys) {
            for (auto z : zs) {
              auto sides = evaluate(ri, rj, law_name, x, y, z);
              if (!sides) continue;
              ++count;
              if (sides->lhs != sides->rhs) {
                if (instances) *instances = count;
                return MixedLawViolation{std::string(law_name), i, j, x, y, z};
              }
            }
          }
        }
      }
    }
  }
  if (instances) *instances = count;
  return std::nullopt;
}

bool replays(const std::vector<FiniteRing>& rings, const MixedLawViolation& v) {
  if (v.i >= rings.size() || v.j >= rings.size() || v.i == v.j) return false;
  auto sides = evaluate(rings[v.i], rings[v.j], v.law, v.x, v.y, v.z);
  return sides && sides->lhs != sides->rhs;
}

bool MultiRingSpace::carriers_disjoint() const {
  for (std::size_t i = 0; i < ring_carriers_.size(); ++i)
    for (std::size_t j = i + 1; j < ring_carriers_.size(); ++j)
      if (ring_carriers_[i].intersects(ring_carriers_[j])) return false;
  return true;
}

ElementSet MultiRingSpace::zero_set() const {
  ElementSet zeros(universe_.size());
  for (const auto& r : rings_) zeros.insert(r.zero());
  for (std::size_t k = 0; k < rings_.size(); ++k) {
    for (auto e : (zeros & ring_carriers_[k]).to_list()) {
      if (e != rings_[k].zero()) zeros.erase(e);
    }
  }
  return zeros;
}

std::vector<RingIndex> MultiRingSpace::all_ops() const {
  std::vector<RingIndex> ops(rings_.size());
  for (RingIndex k = 0; k < ops.size(); ++k) ops[k] = k;
  return ops;
}

SubsetSelection MultiRingSpace::full_selection() const { return {carrier_, all_ops()}; }

MultiRingSpace build_multispace(Universe universe, std::vector<FiniteRing> rings) {
  if (rings.empty()) throw Error(ErrorCode::kEmptyFamily, "a multi-ring space needs a ring");
  MultiRingSpace m;
  m.carrier_ = ElementSet(universe.size());
  for (const auto& r : rings) {
    if (r.carrier().back().value >= universe.size()) {
      throw Error(ErrorCode::kForeignElement,
                  "ring '" + r.name() + "' uses an element outside the universe");
    }
    ElementSet s(universe.size(), r.carrier());
    m.carrier_ |= s;
    m.ring_carriers_.push_back(std::move(s));
  }
  std::size_t instances = 0;
  if (auto v = find_mixed_law_violation(rings, &instances)) throw MixedLawError(*v);
  m.mixed_law_instances_ = instances;
  m.universe_ = std::move(universe);
  m.rings_ = std::move(rings);
  return m;
}

MultiRingSpace build_multispace(Universe universe, const std::vector<RingTables>& tables) {
  std::vector<FiniteRing> rings;
  rings.reserve(tables.size());
  for (RingIndex k = 0; k < tables.size(); ++k) {
    auto report = validate_ring(tables[k]);
    if (!report.ok) {
      auto what = "ring " + std::to_string(k + 1) + " ('" + tables[k].name + "') fails " +
                  report.failures.front().axiom;
      throw RingInvalidError(k, std::move(what), std::move(report));
    }
    rings.push_back(FiniteRing::from_tables(tables[k]));
  }
  return build_multispace(std::move(universe), std::move(rings));
}

void check_selection(const MultiRingSpace& m, const SubsetSelection& s) {
  if (s.ops.empty()) throw Error(ErrorCode::kEmptyOps, "selection keeps no operation");
  for (auto k : s.ops) {
    if (k >= m.ring_count()) {
      throw Error(ErrorCode::kForeignElement,
                  "operation index " + std::to_string(k + 1) + " out of range");
    }
  }
  if (s.elements.universe_size() != m.universe().size() ||
      !s.elements.is_subset_of(m.carrier())) {
    throw Error(ErrorCode::kForeignElement, "selection leaves the carrier");
  }
}

std::string format_set(const Universe& u, const ElementList& elements) {
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) out += ", ";
    out += u.label(elements[k]);
  }
  return out + "}";
}

namespace {

Verdict fails(std::string reason) { return {false, std::move(reason)}; }

std::string ring_tag(RingIndex k) { return "ring " + std::to_string(k + 1); }

// Shared side conditions; an empty reason means they hold.
Verdict check_side_conditions(const MultiRingSpace& m, const SubsetSelection& s) {
  ElementSet covered(m.universe().size());
  for (auto k : s.ops) covered |= m.ring_carrier(k);
  if (!s.elements.intersects(covered)) return fails("selection meets no selected ring");
  const auto stray = (s.elements - covered).to_list();
  if (!stray.empty()) {
    return fails("element " + m.universe().label(stray.front()) + " lies in no selected ring");
  }
  return {};
}

Verdict direct_subspace(const MultiRingSpace& m, const SubsetSelection& s) {
  for (auto k : s.ops) {
    const auto t = part(m, s, k);
    if (t.empty()) continue;
    const auto& r = m.ring(k);
    // The restricted operations must be total on t, then t with them must
    // satisfy every ring axiom on its own.
    RingTables sub;
    sub.carrier = t;
    for (auto x : t) {
      for (auto y : t) {
        sub.add.push_back(r.add(x, y));
        sub.mul.push_back(r.mul(x, y));
      }
    }
    auto report = validate_ring(sub);
    if (!report.ok) {
      const auto& f = report.failures.front();
      return fails(ring_tag(k) + ": part " + format_set(m.universe(), t) + " fails " + f.axiom);
    }
  }
  return {};
}

Verdict t21_subspace(const MultiRingSpace& m, const SubsetSelection& s) {
  for (auto k : s.ops) {
    const auto t = part(m, s, k);
    if (!t.empty() && !is_subring(m.ring(k), t)) {
      return fails(ring_tag(k) + ": part " + format_set(m.universe(), t) + " is not a subring");
    }
  }
  return {};
}

Verdict t22_subspace(const MultiRingSpace& m, const SubsetSelection& s) {
  for (auto k : s.ops) {
    const auto t = part(m, s, k);
    if (t.empty()) continue;
    if (!is_additive_subgroup(m.ring(k), t)) {
      return fails(ring_tag(k) + ": part " + format_set(m.universe(), t) +
                   " is not an additive subgroup");
    }
    if (!closed_under_mul(m.ring(k), t)) {
      return fails(ring_tag(k) + ": part " + format_set(m.universe(), t) +
                   " is not closed under multiplication");
    }
  }
  return {};
}

Verdict direct_ideal(const MultiRingSpace& m, const SubsetSelection& s) {
  for (auto k : s.ops) {
    const auto t = part(m, s, k);
    if (!t.empty() && !is_additive_subgroup(m.ring(k), t)) {
      return fails(ring_tag(k) + ": part " + format_set(m.universe(), t) +
                   " is not an additive subgroup");
    }
  }
  // Absorption wherever the product is defined.
  const auto& u = m.universe();
  const auto carrier = m.carrier().to_list();
  const auto members = s.elements.to_list();
  for (auto r : carrier) {
    for (auto a : members) {
      for (auto k : s.ops) {
        const auto& ring = m.ring(k);
        if (!ring.contains(r) || !ring.contains(a)) continue;
        if (auto p = ring.mul(r, a); !s.elements.contains(p)) {
          return fails(ring_tag(k) + ": " + u.label(r) + " * " + u.label(a) + " = " +
                       u.label(p) + " leaves the selection");
        }
        if (auto p = ring.mul(a, r); !s.elements.contains(p)) {
          return fails(ring_tag(k) + ": " + u.label(a) + " * " + u.label(r) + " = " +
                       u.label(p) + " leaves the selection");
        }
      }
    }
  }
  return {};
}

Verdict t23_ideal(const MultiRingSpace& m, const SubsetSelection& s) {
  for (auto k : s.ops) {
    const auto t = part(m, s, k);
    if (!t.empty() && !is_ideal(m.ring(k), t)) {
      return fails(ring_tag(k) + ": part " + format_set(m.universe(), t) + " is not an ideal");
    }
  }
  return {};
}

}  // namespace

Verdict subspace_verdict(const MultiRingSpace& m, const SubsetSelection& s,
                         SubspaceCriterion criterion) {
  check_selection(m, s);
  if (auto v = check_side_conditions(m, s); !v.holds) return v;
  switch (criterion) {
    case SubspaceCriterion::kDirect: return direct_subspace(m, s);
    case SubspaceCriterion::kT21: return t21_subspace(m, s);
    case SubspaceCriterion::kT22: return t22_subspace(m, s);
  }
  return {};
}

Verdict ideal_subspace_verdict(const MultiRingSpace& m, const SubsetSelection& s,
                               IdealCriterion criterion) {
  check_selection(m, s);
  if (auto v = check_side_conditions(m, s); !v.holds) return v;
  switch (criterion) {
    case IdealCriterion::kDirect: return direct_ideal(m, s);
    case IdealCriterion::kT23: return t23_ideal(m, s);
  }
  return {};
}

bool is_subspace_direct(const MultiRingSpace& m, const SubsetSelection& s) {
  return subspace_verdict(m, s, SubspaceCriterion::kDirect).holds;
}

bool is_subspace_t21(const MultiRingSpace& m, const SubsetSelection& s) {
  return subspace_verdict(m, s, SubspaceCriterion::kT21).holds;
}

bool is_subspace_t22(const MultiRingSpace& m, const SubsetSelection& s) {
  return subspace_verdict(m, s, SubspaceCriterion::kT22).holds;
}

bool is_ideal_subspace_direct(const MultiRingSpace& m, const SubsetSelection& s) {
  return ideal_subspace_verdict(m, s, IdealCriterion::kDirect).holds;
}

bool is_ideal_subspace_t23(const MultiRingSpace& m, const SubsetSelection& s) {
  return ideal_subspace_verdict(m, s, IdealCriterion::kT23).holds;
}

bool is_field(const FiniteRing& r) {
  const auto unit = r.unit_pos();
  if (!unit || *unit == r.zero_pos() || !r.is_commutative()) return false;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (x == r.zero_pos()) continue;
    bool invertible = false;
    for (std::size_t y = 0; y < r.size() && !invertible; ++y) {
      invertible = r.mul_pos(x, y) == *unit;
    }
    if (!invertible) return false;
  }
  return true;
}

bool is_multi_field(const MultiRingSpace& m) {
  return std::all_of(m.rings().begin(), m.rings().end(), is_field);
}

std::optional<MultiRingSpace> restrict_space(const MultiRingSpace& m,
                                             const SubsetSelection& s) {
  check_selection(m, s);
  if (!side_conditions(m, s)) return std::nullopt;
  std::vector<FiniteRing> rings;
  for (auto k : s.ops) {
    const auto t = part(m, s, k);
    if (t.empty() || !is_subring(m.ring(k), t)) return std::nullopt;
    rings.push_back(m.ring(k).restricted(t));
  }
  return build_multispace(m.universe(), std::move(rings));
}

namespace {

std::vector<SubsetSelection> collect_ideal_subspaces(const MultiRingSpace& m,
                                                     const ElementSet* lower,
                                                     const ElementSet* upper,
                                                     const Limits& limits) {
  const auto rings = m.ring_count();
  const auto usize = m.universe().size();
  if (rings >= 31) throw Error(ErrorCode::kCapExceeded, "too many rings to enumerate");

  // Per ring: the ideals containing lower's part; the empty set is an
  // option only when lower misses that ring.
  std::vector<std::vector<std::optional<ElementSet>>> options(rings);
  for (RingIndex q = 0; q < rings; ++q) {
    const auto floor = lower ? (*lower & m.ring_carrier(q)) : ElementSet(usize);
    if (floor.empty()) options[q].push_back(std::nullopt);
    for (const auto& ideal : enumerate_ideals(m.ring(q), IdealMethod::kAuto, limits)) {
      ElementSet s(usize, ideal);
      if (floor.is_subset_of(s)) options[q].push_back(std::move(s));
    }
  }

  std::vector<std::uint32_t> subsets;
  for (std::uint32_t o = 1; o < (std::uint32_t{1} << rings); ++o) subsets.push_back(o);
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });

  std::uint64_t visited = 0;
  std::vector<SubsetSelection> found;
  std::vector<ElementList> seen;
  for (auto o : subsets) {
    std::vector<RingIndex> ops;
    for (RingIndex q = 0; q < rings; ++q)
      if (o >> q & 1) ops.push_back(q);
    std::vector<std::size_t> digit(ops.size(), 0);
    for (;;) {
      if (++visited > limits.subset_budget) {
        throw Error(ErrorCode::kCapExceeded, "ideal-subspace enumeration exceeds the subset budget");
      }
      ElementSet j(usize);
      for (std::size_t t = 0; t < ops.size(); ++t) {
        if (const auto& choice = options[ops[t]][digit[t]]) j |= *choice;
      }
      const bool in_range = !j.empty() && (!lower || (lower->is_proper_subset_of(j))) &&
                            (!upper || j.is_proper_subset_of(*upper));
      if (in_range) {
        SubsetSelection cand{j, ops};
        auto list = j.to_list();
        if (std::find(seen.begin(), seen.end(), list) == seen.end() &&
            is_ideal_subspace_t23(m, cand)) {
          seen.push_back(std::move(list));
          found.push_back(std::move(cand));
        }
      }
      std::size_t t = 0;
      while (t < ops.size() && ++digit[t] == options[ops[t]].size()) digit[t++] = 0;
      if (t == ops.size()) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const SubsetSelection& a, const SubsetSelection& b) {
    if (a.elements.count() != b.elements.count()) return a.elements.count() < b.elements.count();
    return lex_less(a.elements, b.elements);
  });
  return found;
}

}  // namespace

std::vector<SubsetSelection> enumerate_ideal_subspaces(const MultiRingSpace& m,
                                                       const Limits& limits) {
  return collect_ideal_subspaces(m, nullptr, nullptr, limits);
}

std::vector<SubsetSelection> ideal_subspaces_between(const MultiRingSpace& m,
                                                     const ElementSet& lower,
                                                     const ElementSet& upper,
                                                     const Limits& limits) {
  return collect_ideal_subspaces(m, &lower, &upper, limits);
}

SubsetSelection make_selection(const MultiRingSpace& m, const std::vector<std::string>& labels,
                               std::vector<RingIndex> ops) {
  ElementList ids;
  for (const auto& l : labels) ids.push_back(m.universe().at(l));
  return make_selection(m, normalized(std::move(ids)), std::move(ops));
}

SubsetSelection make_selection(const MultiRingSpace& m, const ElementList& elements,
                               std::vector<RingIndex> ops) {
  std::sort(ops.begin(), ops.end());
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  return {ElementSet(m.universe().size(), elements), std::move(ops)};
}

}  // namespace multiring
