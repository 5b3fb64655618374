#pragma once

#include <cstddef>
#include <vector>

#include "multiring/element.hpp"
#include "multiring/multispace.hpp"
#include "multiring/ring.hpp"

namespace multiring {

// Priority order of the operation pairs: order[0] descends first.
struct OperationOrder {
  std::vector<RingIndex> order;

  // Throws kMalformedTable unless `order` is a permutation of 0..m-1.
  static OperationOrder from(std::vector<RingIndex> order, std::size_t ring_count);
  static OperationOrder identity(std::size_t ring_count);

  friend bool operator==(const OperationOrder&, const OperationOrder&) = default;
};

struct IdealChain {
  OperationOrder order;
  // terms[0] is the full carrier with every operation.
  std::vector<SubsetSelection> terms;
  // stage_boundaries[k] is the index of the first term produced while
  // descending ring order.order[k] (equal to the next stage's start when
  // that ring is already the zero ring).
  std::vector<std::size_t> stage_boundaries;
  // Filled only when ChainOptions::record_alternatives is set:
  // alternatives[t] lists every maximal-ideal choice available when term
  // t was produced (empty for t = 0).
  std::vector<std::vector<ElementList>> alternatives;

  std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
};

struct ChainOptions {
  Limits limits;
  bool record_alternatives = false;
};

class StepInvalidError : public Error {
 public:
  StepInvalidError(const std::string& what, SubsetSelection term)
      : Error(ErrorCode::kStepInvalid, what), term_(std::move(term)) {}
  const SubsetSelection& term() const noexcept { return term_; }

 private:
  SubsetSelection term_;
};

// R = I_0 > I_1 > ... > {0}, each I_{k+1} the lexicographically smallest
// maximal ideal of I_k viewed as a ring.
std::vector<ElementList> max_ideal_chain(const FiniteRing& ring, const Limits& limits = {});

// Descends ring order[0] along its maximal ideal chain while the other
// components stay whole, then order[1] from there, and so on. Every new
// term is checked to be a maximal ideal subspace of its predecessor that
// changes only the active ring's part; violations raise StepInvalidError.
IdealChain ideal_subspace_chain(const MultiRingSpace& m, const OperationOrder& order,
                                const ChainOptions& options = {});

// Strictly descending, each term an ideal subspace of its predecessor
// (viewed as a multi-ring space), and nothing strictly in between.
bool chain_is_valid(const MultiRingSpace& m, const IdealChain& chain,
                    const Limits& limits = {});

struct ArtinReport {
  bool artin = false;
  IdealChain witness;
  // Steps in each ring's maximal ideal chain (terms minus one).
  std::vector<std::size_t> ring_chain_lengths;
};

// Finite rings always have finite ideal chains, so every valid finite
// space is Artin; the report carries the identity-order chain as witness.
ArtinReport is_artin(const MultiRingSpace& m, const Limits& limits = {});

}  // namespace multiring
