#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace multiring;
using namespace testing;

namespace {

std::vector<ElementList> element_lists(const IdealChain& c) {
  std::vector<ElementList> out;
  for (const auto& t : c.terms) out.push_back(t.elements.to_list());
  return out;
}

ElementList labels_to_list(const MultiRingSpace& m, std::initializer_list<const char*> ls) {
  ElementList out;
  for (auto l : ls) out.push_back(m.universe().at(l));
  return normalized(out);
}

std::size_t floor_log2(std::size_t n) {
  std::size_t k = 0;
  while (n >>= 1) ++k;
  return k;
}

}  // namespace

TEST_CASE("max ideal chains of single rings") {
  CHECK(max_ideal_chain(make_cyclic_ring(6)) ==
        std::vector<ElementList>{make_list({0, 1, 2, 3, 4, 5}), make_list({0, 2, 4}),
                                 make_list({0})});
  CHECK(max_ideal_chain(make_cyclic_ring(4)) ==
        std::vector<ElementList>{make_list({0, 1, 2, 3}), make_list({0, 2}), make_list({0})});
  CHECK(max_ideal_chain(make_cyclic_ring(5)) ==
        std::vector<ElementList>{make_list({0, 1, 2, 3, 4}), make_list({0})});
  CHECK(max_ideal_chain(make_cyclic_ring(1)) == std::vector<ElementList>{make_list({0})});
}

TEST_CASE("chain on Z_4 + Z_6 in order (1,2)") {
  auto m = z4z6();
  auto chain = ideal_subspace_chain(m, OperationOrder::identity(2));
  CHECK(element_lists(chain) ==
        std::vector<ElementList>{
            m.carrier().to_list(),
            labels_to_list(m, {"a0", "a2", "b0", "b1", "b2", "b3", "b4", "b5"}),
            labels_to_list(m, {"a0", "b0", "b1", "b2", "b3", "b4", "b5"}),
            labels_to_list(m, {"a0", "b0", "b2", "b4"}),
            labels_to_list(m, {"a0", "b0"}),
        });
  CHECK(chain.stage_boundaries == std::vector<std::size_t>{1, 3});
  CHECK(chain.length() == 4);
  CHECK(chain_is_valid(m, chain));

  SUBCASE("deleting any interior term invalidates it") {
    for (std::size_t t = 1; t + 1 < chain.terms.size(); ++t) {
      auto broken = chain;
      broken.terms.erase(broken.terms.begin() + static_cast<std::ptrdiff_t>(t));
      CHECK_FALSE(chain_is_valid(m, broken));
    }
  }
  SUBCASE("a repeated term is not strictly descending") {
    IdealChain flat{chain.order, {m.full_selection(), m.full_selection()}, {}, {}};
    CHECK_FALSE(chain_is_valid(m, flat));
  }
}

TEST_CASE("chain on Z_4 + Z_6 in order (2,1)") {
  auto m = z4z6();
  auto chain = ideal_subspace_chain(m, OperationOrder::from({1, 0}, 2));
  REQUIRE(chain.terms.size() == 5);
  CHECK(chain.stage_boundaries == std::vector<std::size_t>{1, 3});
  CHECK(chain.terms[3].elements.to_list() == labels_to_list(m, {"a0", "a2", "b0"}));
  CHECK(chain_is_valid(m, chain));
}

TEST_CASE("order validation") {
  CHECK_THROWS_AS(OperationOrder::from({0, 0}, 2), Error);
  CHECK_THROWS_AS(OperationOrder::from({0}, 2), Error);
  CHECK_THROWS_AS(OperationOrder::from({0, 2}, 2), Error);
}

TEST_CASE("single Z_5 and the trivial ring") {
  auto m = single(5);
  auto chain = ideal_subspace_chain(m, OperationOrder::identity(1));
  CHECK(element_lists(chain) ==
        std::vector<ElementList>{make_list({0, 1, 2, 3, 4}), make_list({0})});
  auto trivial = single(1);
  auto report = is_artin(trivial);
  CHECK(report.artin);
  CHECK(report.witness.terms.size() == 1);
}

TEST_CASE("artin report for Z_12") {
  auto report = is_artin(single(12));
  CHECK(report.artin);
  CHECK(report.witness.terms.size() == 4);
  CHECK(report.ring_chain_lengths == std::vector<std::size_t>{3});
}

TEST_CASE("recorded alternatives list every maximal choice") {
  auto m = z4z6();
  auto chain = ideal_subspace_chain(m, OperationOrder::identity(2), ChainOptions{{}, true});
  REQUIRE(chain.alternatives.size() == chain.terms.size());
  CHECK(chain.alternatives[0].empty());
  // Term 4 replaced Z_6 by one of its two maximal ideals.
  CHECK(chain.alternatives[3].size() == 2);
}

TEST_CASE("chain properties over disjoint cyclic families") {
  for (std::size_t a = 1; a <= 8; ++a) {
    for (std::size_t b = 1; b <= 8; ++b) {
      auto m = disjoint_cyclic({a, b});
      std::size_t bound = 1 + floor_log2(a) + floor_log2(b);
      std::size_t expected_steps = 0;
      for (const auto& r : m.rings()) expected_steps += max_ideal_chain(r).size() - 1;
      for (auto order : {std::vector<RingIndex>{0, 1}, std::vector<RingIndex>{1, 0}}) {
        CAPTURE(a);
        CAPTURE(b);
        auto o = OperationOrder::from(order, 2);
        auto chain = ideal_subspace_chain(m, o);
        CHECK(chain.terms.size() <= bound);
        CHECK(chain.length() == expected_steps);
        CHECK(chain_is_valid(m, chain));
        // Same input, same chain.
        CHECK(element_lists(ideal_subspace_chain(m, o)) == element_lists(chain));
        // Stage locality: while descending one ring the others stay put.
        for (std::size_t s = 0; s < chain.stage_boundaries.size(); ++s) {
          const auto begin = chain.stage_boundaries[s];
          const auto end =
              s + 1 < chain.stage_boundaries.size() ? chain.stage_boundaries[s + 1] : chain.terms.size();
          for (std::size_t t = begin; t < end; ++t) {
            for (RingIndex k = 0; k < m.ring_count(); ++k) {
              if (k == o.order[s]) continue;
              CHECK((chain.terms[t].elements & m.ring_carrier(k)) ==
                    (chain.terms[t - 1].elements & m.ring_carrier(k)));
            }
          }
        }
        // The per-ring chain length is the longest possible.
        auto report = is_artin(m);
        for (RingIndex k = 0; k < m.ring_count(); ++k) {
          CHECK(report.ring_chain_lengths[k] == oracle::longest_ideal_chain(m.ring(k)));
        }
      }
    }
  }
}

TEST_CASE("chains over shared carriers are either valid or fail loudly") {
  auto u = Universe::from_labels({"0", "1"});
  auto m = build_multispace(u, {make_cyclic_ring(2), make_cyclic_ring(2)});
  for (auto order : {std::vector<RingIndex>{0, 1}, std::vector<RingIndex>{1, 0}}) {
    try {
      auto chain = ideal_subspace_chain(m, OperationOrder::from(order, 2));
      CHECK(chain_is_valid(m, chain));
    } catch (const StepInvalidError& e) {
      CHECK(e.code() == ErrorCode::kStepInvalid);
      CHECK_FALSE(e.term().elements.empty());
    }
  }
}
