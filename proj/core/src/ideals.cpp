#include "multiring/ideals.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace multiring {

namespace {

LocalMask bit(std::size_t p) { return LocalMask{1} << p; }

template <typename F>
void for_each_bit(LocalMask m, F f) {
  while (m) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

bool closed_under_difference(const FiniteRing& r, LocalMask m) {
  bool ok = true;
  for_each_bit(m, [&](std::size_t x) {
    for_each_bit(m, [&](std::size_t y) {
      if (!(m & bit(r.add_pos(x, r.neg_pos(y))))) ok = false;
    });
  });
  return ok;
}

bool closed_under_mul(const FiniteRing& r, LocalMask m) {
  bool ok = true;
  for_each_bit(m, [&](std::size_t x) {
    for_each_bit(m, [&](std::size_t y) {
      if (!(m & bit(r.mul_pos(x, y)))) ok = false;
    });
  });
  return ok;
}

bool absorbs(const FiniteRing& r, LocalMask m) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool ok = true;
    for_each_bit(m, [&](std::size_t a) {
      if (!(m & bit(r.mul_pos(x, a))) || !(m & bit(r.mul_pos(a, x)))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

void check_size(const FiniteRing& r, const Limits& limits) {
  const auto cap = std::min(limits.max_ring_size, kMaxRingSizeCeiling);
  if (r.size() > cap) {
    throw Error(ErrorCode::kCapExceeded, "ring '" + r.name() + "' has " +
                                             std::to_string(r.size()) +
                                             " elements, cap is " + std::to_string(cap));
  }
}

bool ideal_order(const ElementList& a, const ElementList& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace

namespace detail {

LocalMask additive_closure(const FiniteRing& r, LocalMask gens) {
  // In a finite group the closure under + alone is a subgroup.
  LocalMask m = gens | bit(r.zero_pos());
  for (;;) {
    LocalMask next = m;
    for_each_bit(m, [&](std::size_t x) {
      for_each_bit(m, [&](std::size_t y) { next |= bit(r.add_pos(x, y)); });
    });
    if (next == m) return m;
    m = next;
  }
}

LocalMask ideal_closure(const FiniteRing& r, LocalMask gens) {
  LocalMask m = additive_closure(r, gens);
  for (;;) {
    LocalMask next = m;
    for_each_bit(m, [&](std::size_t a) {
      for (std::size_t x = 0; x < r.size(); ++x) {
        next |= bit(r.mul_pos(x, a)) | bit(r.mul_pos(a, x));
      }
    });
    if (next == m) return m;
    m = additive_closure(r, next);
  }
}

LocalMask sum_mask(const FiniteRing& r, LocalMask lhs, LocalMask rhs) {
  LocalMask out = 0;
  for_each_bit(lhs, [&](std::size_t a) {
    for_each_bit(rhs, [&](std::size_t b) { out |= bit(r.add_pos(a, b)); });
  });
  return out;
}

bool is_ideal_mask(const FiniteRing& r, LocalMask m) {
  return m != 0 && closed_under_difference(r, m) && absorbs(r, m);
}

}  // namespace detail

bool is_subring(const FiniteRing& ring, std::span<const ElementId> s) {
  const auto m = ring.to_mask(s);
  return m != 0 && closed_under_difference(ring, m) && closed_under_mul(ring, m);
}

bool is_ideal(const FiniteRing& ring, std::span<const ElementId> s) {
  return detail::is_ideal_mask(ring, ring.to_mask(s));
}

std::vector<ElementList> enumerate_ideals(const FiniteRing& ring, IdealMethod method,
                                          const Limits& limits) {
  check_size(ring, limits);
  const auto n = ring.size();
  if (method == IdealMethod::kAuto) {
    method = n <= 16 ? IdealMethod::kExhaustive : IdealMethod::kClosure;
  }

  std::set<LocalMask> found;
  if (method == IdealMethod::kExhaustive) {
    if (n >= 63 || (std::uint64_t{1} << n) > limits.subset_budget) {
      throw Error(ErrorCode::kCapExceeded,
                  "exhaustive ideal search over 2^" + std::to_string(n) +
                      " subsets exceeds the subset budget");
    }
    for (LocalMask m = 1; m <= ring.full_mask(); ++m) {
      if (detail::is_ideal_mask(ring, m)) found.insert(m);
    }
  } else {
    // Every ideal is the sum of the principal ideals of its elements.
    std::vector<LocalMask> frontier;
    for (std::size_t g = 0; g < n; ++g) {
      auto p = detail::ideal_closure(ring, bit(g));
      if (found.insert(p).second) frontier.push_back(p);
    }
    const std::vector<LocalMask> principal(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<LocalMask> next;
      for (auto a : frontier) {
        for (auto p : principal) {
          auto s = detail::sum_mask(ring, a, p);
          if (found.insert(s).second) next.push_back(s);
        }
      }
      if (found.size() > limits.subset_budget) {
        throw Error(ErrorCode::kCapExceeded, "ideal lattice exceeds the subset budget");
      }
      frontier = std::move(next);
    }
  }

  std::vector<ElementList> out;
  out.reserve(found.size());
  for (auto m : found) out.push_back(ring.to_list(m));
  std::sort(out.begin(), out.end(), ideal_order);
  return out;
}

std::vector<ElementList> maximal_ideals(const FiniteRing& ring, const Limits& limits) {
  auto all = enumerate_ideals(ring, IdealMethod::kAuto, limits);
  std::vector<LocalMask> proper;
  for (const auto& i : all) {
    auto m = ring.to_mask(i);
    if (m != ring.full_mask()) proper.push_back(m);
  }
  std::vector<ElementList> out;
  for (auto m : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(), [m](LocalMask o) {
      return o != m && (o & m) == m;
    });
    if (maximal) out.push_back(ring.to_list(m));
  }
  std::sort(out.begin(), out.end(),
            [](const ElementList& a, const ElementList& b) { return lex_less(a, b); });
  return out;
}

ElementList idempotents(const FiniteRing& ring) {
  ElementList out;
  for (std::size_t e = 0; e < ring.size(); ++e) {
    if (ring.mul_pos(e, e) == e) out.push_back(ring.carrier()[e]);
  }
  return out;
}

namespace {

// First split e = f + g into nonzero orthogonal idempotents, by f in
// canonical order.
std::optional<std::pair<std::size_t, std::size_t>> find_split(const FiniteRing& r,
                                                              std::size_t e) {
  const auto z = r.zero_pos();
  for (std::size_t f = 0; f < r.size(); ++f) {
    if (f == z || f == e || r.mul_pos(f, f) != f) continue;
    const auto g = r.add_pos(e, r.neg_pos(f));
    if (g == z || r.mul_pos(g, g) != g) continue;
    if (r.mul_pos(f, g) == z && r.mul_pos(g, f) == z) return std::pair{f, g};
  }
  return std::nullopt;
}

}  // namespace

bool is_primitive_idempotent(const FiniteRing& ring, ElementId e) {
  const auto p = ring.position(e);
  if (p == ring.zero_pos() || ring.mul_pos(p, p) != p) return false;
  return !find_split(ring, p).has_value();
}

ElementList decompose_unit(const FiniteRing& ring) {
  const auto unit = ring.unit_pos();
  if (!unit) throw Error(ErrorCode::kNoUnit, "ring '" + ring.name() + "' has no unit");
  if (*unit == ring.zero_pos()) return {ring.carrier()[*unit]};

  std::vector<std::size_t> pending{*unit};
  std::vector<std::size_t> primitive;
  while (!pending.empty()) {
    const auto e = pending.back();
    pending.pop_back();
    if (auto split = find_split(ring, e)) {
      pending.push_back(split->second);
      pending.push_back(split->first);
    } else {
      primitive.push_back(e);
    }
  }
  ElementList out;
  for (auto p : primitive) out.push_back(ring.carrier()[p]);
  return normalized(std::move(out));
}

ElementList additive_span(const FiniteRing& ring, std::span<const ElementId> gens) {
  return ring.to_list(detail::additive_closure(ring, ring.to_mask(gens)));
}

ElementList ideal_generated(const FiniteRing& ring, std::span<const ElementId> gens) {
  return ring.to_list(detail::ideal_closure(ring, ring.to_mask(gens)));
}

ElementList idempotent_component(const FiniteRing& ring, ElementId e) {
  const auto p = ring.position(e);
  LocalMask gens = 0;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    gens |= bit(ring.mul_pos(x, p)) | bit(ring.mul_pos(p, x));
  }
  return ring.to_list(detail::additive_closure(ring, gens));
}

ElementList sum_set(const FiniteRing& ring, std::span<const ElementId> lhs,
                    std::span<const ElementId> rhs) {
  return ring.to_list(detail::sum_mask(ring, ring.to_mask(lhs), ring.to_mask(rhs)));
}

}  // namespace multiring
