#include "multiring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace multiring {

namespace {

// Table view over RingTables with carrier positions visited in canonical
// (ElementId) order and entries resolved back to positions.
class TableView {
 public:
  explicit TableView(const RingTables& t) : t_(t), n_(t.size()) {
    if (n_ == 0) throw Error(ErrorCode::kMalformedTable, "empty carrier");
    if (t.add.size() != n_ * n_ || t.mul.size() != n_ * n_) {
      throw Error(ErrorCode::kMalformedTable,
                  "tables must be " + std::to_string(n_) + "x" +
                      std::to_string(n_));
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return t.carrier[a] < t.carrier[b];
    });
    for (std::size_t k = 0; k < n_; ++k) {
      if (!pos_.emplace(t.carrier[k].value, k).second) {
        throw Error(ErrorCode::kMalformedTable,
                    "element #" + std::to_string(t.carrier[k].value) +
                        " repeated in carrier");
      }
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<std::size_t>& order() const { return order_; }
  ElementId id(std::size_t p) const { return t_.carrier[p]; }

  // Position of an element, or npos when outside the carrier.
  std::size_t pos(ElementId e) const {
    auto it = pos_.find(e.value);
    return it == pos_.end() ? npos : it->second;
  }
  std::size_t add(std::size_t x, std::size_t y) const { return pos(t_.add_at(x, y)); }
  std::size_t mul(std::size_t x, std::size_t y) const { return pos(t_.mul_at(x, y)); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  const RingTables& t_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::unordered_map<std::uint32_t, std::size_t> pos_;
};

std::optional<std::size_t> find_add_identity(const TableView& v) {
  for (auto z : v.order()) {
    bool identity = true;
    for (std::size_t x = 0; x < v.size() && identity; ++x) {
      identity = v.add(z, x) == x && v.add(x, z) == x;
    }
    if (identity) return z;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_mul_identity(const TableView& v) {
  for (auto u : v.order()) {
    bool identity = true;
    for (std::size_t x = 0; x < v.size() && identity; ++x) {
      identity = v.mul(u, x) == x && v.mul(x, u) == x;
    }
    if (identity) return u;
  }
  return std::nullopt;
}

template <typename Pred>
std::optional<std::vector<ElementId>> first_pair(const TableView& v, Pred bad) {
  for (auto x : v.order())
    for (auto y : v.order())
      if (bad(x, y)) return std::vector<ElementId>{v.id(x), v.id(y)};
  return std::nullopt;
}

template <typename Pred>
std::optional<std::vector<ElementId>> first_triple(const TableView& v, Pred bad) {
  for (auto x : v.order())
    for (auto y : v.order())
      for (auto z : v.order())
        if (bad(x, y, z)) return std::vector<ElementId>{v.id(x), v.id(y), v.id(z)};
  return std::nullopt;
}

bool violates(const TableView& v, std::string_view axiom_name,
              std::span<const std::size_t> w, std::optional<std::size_t> zero) {
  using namespace axiom;
  const auto n = v.size();
  if (axiom_name == kAddClosure) return v.add(w[0], w[1]) == TableView::npos;
  if (axiom_name == kMulClosure) return v.mul(w[0], w[1]) == TableView::npos;
  if (axiom_name == kAddIdentity) return !zero.has_value();
  if (axiom_name == kAddCommutativity) return v.add(w[0], w[1]) != v.add(w[1], w[0]);
  if (axiom_name == kAddAssociativity)
    return v.add(v.add(w[0], w[1]), w[2]) != v.add(w[0], v.add(w[1], w[2]));
  if (axiom_name == kAddInverse) {
    if (!zero) return false;
    for (std::size_t y = 0; y < n; ++y)
      if (v.add(w[0], y) == *zero && v.add(y, w[0]) == *zero) return false;
    return true;
  }
  if (axiom_name == kMulAssociativity)
    return v.mul(v.mul(w[0], w[1]), w[2]) != v.mul(w[0], v.mul(w[1], w[2]));
  if (axiom_name == kLeftDistributivity)
    return v.mul(w[0], v.add(w[1], w[2])) !=
           v.add(v.mul(w[0], w[1]), v.mul(w[0], w[2]));
  if (axiom_name == kRightDistributivity)
    return v.mul(v.add(w[0], w[1]), w[2]) !=
           v.add(v.mul(w[0], w[2]), v.mul(w[1], w[2]));
  return false;
}

}  // namespace

ValidationReport validate_ring(const RingTables& tables) {
  using namespace axiom;
  TableView v(tables);
  ValidationReport report;
  auto record = [&](std::string_view name, std::optional<std::vector<ElementId>> w) {
    if (w) report.failures.push_back({std::string(name), std::move(*w)});
  };

  record(kAddClosure, first_pair(v, [&](auto x, auto y) {
           return v.add(x, y) == TableView::npos;
         }));
  record(kMulClosure, first_pair(v, [&](auto x, auto y) {
           return v.mul(x, y) == TableView::npos;
         }));
  if (!report.failures.empty()) {
    report.ok = false;
    return report;
  }

  auto zero = find_add_identity(v);
  if (!zero) report.failures.push_back({std::string(kAddIdentity), {}});
  record(kAddCommutativity, first_pair(v, [&](auto x, auto y) {
           return v.add(x, y) != v.add(y, x);
         }));
  record(kAddAssociativity, first_triple(v, [&](auto x, auto y, auto z) {
           return v.add(v.add(x, y), z) != v.add(x, v.add(y, z));
         }));
  if (zero) {
    for (auto x : v.order()) {
      std::size_t w[] = {x};
      if (violates(v, kAddInverse, w, zero)) {
        report.failures.push_back({std::string(kAddInverse), {v.id(x)}});
        break;
      }
    }
  }
  record(kMulAssociativity, first_triple(v, [&](auto x, auto y, auto z) {
           return v.mul(v.mul(x, y), z) != v.mul(x, v.mul(y, z));
         }));
  record(kLeftDistributivity, first_triple(v, [&](auto x, auto y, auto z) {
           return v.mul(x, v.add(y, z)) != v.add(v.mul(x, y), v.mul(x, z));
         }));
  record(kRightDistributivity, first_triple(v, [&](auto x, auto y, auto z) {
           return v.mul(v.add(x, y), z) != v.add(v.mul(x, z), v.mul(y, z));
         }));

  report.ok = report.failures.empty();
  return report;
}

bool replays(const RingTables& tables, const AxiomFailure& failure) {
  TableView v(tables);
  std::vector<std::size_t> w;
  for (auto e : failure.witness) {
    auto p = v.pos(e);
    if (p == TableView::npos) return false;
    w.push_back(p);
  }
  static const std::unordered_map<std::string_view, std::size_t> arity = {
      {axiom::kAddClosure, 2},         {axiom::kMulClosure, 2},
      {axiom::kAddIdentity, 0},        {axiom::kAddCommutativity, 2},
      {axiom::kAddAssociativity, 3},   {axiom::kAddInverse, 1},
      {axiom::kMulAssociativity, 3},   {axiom::kLeftDistributivity, 3},
      {axiom::kRightDistributivity, 3}};
  auto it = arity.find(failure.axiom);
  if (it == arity.end() || it->second != w.size()) return false;
  if (failure.axiom != axiom::kAddClosure && failure.axiom != axiom::kMulClosure) {
    // Other axioms are only meaningful on closed tables.
    for (std::size_t x = 0; x < v.size(); ++x)
      for (std::size_t y = 0; y < v.size(); ++y)
        if (v.add(x, y) == TableView::npos || v.mul(x, y) == TableView::npos)
          return false;
  }
  return violates(v, failure.axiom, w, find_add_identity(v));
}

FiniteRing FiniteRing::from_tables(RingTables tables) {
  const auto n = tables.size();
  if (n > kMaxRingSizeCeiling) {
    throw Error(ErrorCode::kCapExceeded,
                "ring of size " + std::to_string(n) + " exceeds the ceiling of " +
                    std::to_string(kMaxRingSizeCeiling));
  }
  auto report = validate_ring(tables);
  if (!report.ok) {
    const auto& f = report.failures.front();
    throw AxiomViolationError("ring '" + tables.name + "' fails " + f.axiom,
                              std::move(report));
  }

  TableView v(tables);
  FiniteRing r;
  r.name_ = std::move(tables.name);
  const auto& order = v.order();
  // Canonical position k holds original position order[k].
  std::vector<std::size_t> canon(n);
  for (std::size_t k = 0; k < n; ++k) canon[order[k]] = k;
  r.carrier_.reserve(n);
  for (auto p : order) r.carrier_.push_back(v.id(p));
  r.add_.resize(n * n);
  r.mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.add_[i * n + j] = static_cast<std::uint8_t>(canon[v.add(order[i], order[j])]);
      r.mul_[i * n + j] = static_cast<std::uint8_t>(canon[v.mul(order[i], order[j])]);
    }
  }
  r.zero_ = canon[*find_add_identity(v)];
  if (auto u = find_mul_identity(v)) r.unit_ = canon[*u];
  r.neg_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r.add_[i * n + j] == r.zero_) {
        r.neg_[i] = static_cast<std::uint8_t>(j);
        break;
      }
    }
  }
  r.position_of_.assign(r.carrier_.back().value + 1, -1);
  for (std::size_t k = 0; k < n; ++k) {
    r.position_of_[r.carrier_[k].value] = static_cast<std::int16_t>(k);
  }
  return r;
}

bool FiniteRing::contains(ElementId x) const noexcept {
  return x.value < position_of_.size() && position_of_[x.value] >= 0;
}

std::optional<ElementId> FiniteRing::unit() const {
  if (!unit_) return std::nullopt;
  return carrier_[*unit_];
}

bool FiniteRing::is_commutative() const noexcept {
  const auto n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mul_[i * n + j] != mul_[j * n + i]) return false;
  return true;
}

std::size_t FiniteRing::position(ElementId x) const {
  if (!contains(x)) {
    throw Error(ErrorCode::kForeignElement, "element #" + std::to_string(x.value) +
                                                " not in ring '" + name_ + "'");
  }
  return static_cast<std::size_t>(position_of_[x.value]);
}

ElementId FiniteRing::add(ElementId x, ElementId y) const {
  return carrier_[add_pos(position(x), position(y))];
}

ElementId FiniteRing::mul(ElementId x, ElementId y) const {
  return carrier_[mul_pos(position(x), position(y))];
}

ElementId FiniteRing::neg(ElementId x) const { return carrier_[neg_[position(x)]]; }

LocalMask FiniteRing::full_mask() const noexcept {
  return size() == 64 ? ~LocalMask{0} : (LocalMask{1} << size()) - 1;
}

LocalMask FiniteRing::to_mask(std::span<const ElementId> elements) const {
  LocalMask m = 0;
  for (auto e : elements) m |= LocalMask{1} << position(e);
  return m;
}

ElementList FiniteRing::to_list(LocalMask mask) const {
  ElementList out;
  for (std::size_t k = 0; k < size(); ++k)
    if (mask >> k & 1) out.push_back(carrier_[k]);
  return out;
}

RingTables FiniteRing::tables() const {
  const auto n = size();
  RingTables t;
  t.name = name_;
  t.carrier = carrier_;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    t.add[i] = carrier_[add_[i]];
    t.mul[i] = carrier_[mul_[i]];
  }
  return t;
}

FiniteRing FiniteRing::relabeled(const std::vector<ElementId>& new_carrier) const {
  if (new_carrier.size() != size()) {
    throw Error(ErrorCode::kMalformedTable, "relabeling must keep the ring size");
  }
  auto t = tables();
  auto map = [&](ElementId e) { return new_carrier[position(e)]; };
  for (auto& e : t.add) e = map(e);
  for (auto& e : t.mul) e = map(e);
  t.carrier = new_carrier;
  return from_tables(std::move(t));
}

FiniteRing FiniteRing::restricted(std::span<const ElementId> subset) const {
  auto list = normalized(ElementList(subset.begin(), subset.end()));
  const auto m = list.size();
  RingTables t;
  t.name = name_;
  t.carrier = list;
  t.add.reserve(m * m);
  t.mul.reserve(m * m);
  for (auto x : list) {
    for (auto y : list) {
      t.add.push_back(add(x, y));
      t.mul.push_back(mul(x, y));
    }
  }
  return from_tables(std::move(t));
}

ValidationReport validate_ring(const FiniteRing& ring) { return validate_ring(ring.tables()); }

namespace {

void check_cap(std::size_t n, const Limits& limits) {
  const auto cap = std::min(limits.max_ring_size, kMaxRingSizeCeiling);
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "ring of size " + std::to_string(n) +
                                             " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

FiniteRing make_cyclic_ring(std::size_t n, const Limits& limits) {
  std::vector<ElementId> carrier(n);
  for (std::size_t k = 0; k < n; ++k) carrier[k] = ElementId{static_cast<std::uint32_t>(k)};
  return make_cyclic_ring(n, carrier, limits);
}

FiniteRing make_cyclic_ring(std::size_t n, const std::vector<ElementId>& carrier,
                            const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::kMalformedTable, "Z_0 is not a finite ring");
  check_cap(n, limits);
  if (carrier.size() != n) {
    throw Error(ErrorCode::kMalformedTable,
                "Z_" + std::to_string(n) + " needs " + std::to_string(n) + " elements");
  }
  RingTables t;
  t.name = "Z" + std::to_string(n);
  t.carrier = carrier;
  t.add.reserve(n * n);
  t.mul.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t.add.push_back(carrier[(x + y) % n]);
      t.mul.push_back(carrier[(x * y) % n]);
    }
  }
  return FiniteRing::from_tables(std::move(t));
}

FiniteRing make_product_ring(const FiniteRing& a, const FiniteRing& b,
                             const Limits& limits) {
  const auto na = a.size();
  const auto nb = b.size();
  check_cap(na * nb, limits);
  const auto n = na * nb;
  RingTables t;
  t.name = a.name() + "x" + b.name();
  t.carrier.resize(n);
  for (std::size_t k = 0; k < n; ++k) t.carrier[k] = ElementId{static_cast<std::uint32_t>(k)};
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t.add[x * n + y] = t.carrier[a.add_pos(xa, ya) * nb + b.add_pos(xb, yb)];
      t.mul[x * n + y] = t.carrier[a.mul_pos(xa, ya) * nb + b.mul_pos(xb, yb)];
    }
  }
  return FiniteRing::from_tables(std::move(t));
}

FiniteRing make_ring_from_tables(
    const Universe& universe, const std::vector<std::string>& carrier_labels,
    const std::vector<std::vector<std::string>>& add_table,
    const std::vector<std::vector<std::string>>& mul_table, std::string name) {
  const auto n = carrier_labels.size();
  auto shape_ok = [n](const std::vector<std::vector<std::string>>& tbl) {
    return tbl.size() == n &&
           std::all_of(tbl.begin(), tbl.end(), [n](const auto& row) { return row.size() == n; });
  };
  if (n == 0 || !shape_ok(add_table) || !shape_ok(mul_table)) {
    throw Error(ErrorCode::kMalformedTable,
                "tables must be square with one row per carrier label");
  }
  RingTables t;
  t.name = std::move(name);
  std::unordered_map<std::string, ElementId> in_carrier;
  for (const auto& l : carrier_labels) {
    auto id = universe.find(l);
    if (!id) throw Error(ErrorCode::kMalformedTable, "unknown label '" + l + "'");
    if (!in_carrier.emplace(l, *id).second) {
      throw Error(ErrorCode::kMalformedTable, "label '" + l + "' repeated in carrier");
    }
    t.carrier.push_back(*id);
  }
  auto resolve = [&](const std::string& l) {
    // Labels outside the ring's own carrier surface as closure failures.
    if (auto it = in_carrier.find(l); it != in_carrier.end()) return it->second;
    if (auto id = universe.find(l)) return *id;
    throw Error(ErrorCode::kMalformedTable, "unknown label '" + l + "' in table");
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.add.push_back(resolve(add_table[i][j]));
      t.mul.push_back(resolve(mul_table[i][j]));
    }
  }
  return FiniteRing::from_tables(std::move(t));
}

FiniteRing make_ring_from_tables(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<std::string>>& add_table,
                                 const std::vector<std::vector<std::string>>& mul_table,
                                 std::string name) {
  auto universe = Universe::from_labels(labels);
  return make_ring_from_tables(universe, labels, add_table, mul_table, std::move(name));
}

}  // namespace multiring
