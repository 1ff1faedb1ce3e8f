#ifndef MOFLOW_ORACLE_HPP
#define MOFLOW_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moflow/network.hpp"
#include "moflow/scalar_mcf.hpp"

namespace moflow {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& message)
      : std::runtime_error(message) {}
};

inline constexpr std::uint64_t kDefaultOracleCap = 200000;

//! Ground-truth enumeration of every feasible integer flow, by recursive
//! arc fixing with per-node range pruning and a max-flow feasibility check.
//! Throws CapExceededError when more than cap flows exist.
std::vector<Flow> enumerate_all_flows(const Network& network,
                                      std::uint64_t cap = kDefaultOracleCap);

enum class OutcomeLabel {
  supported,
  weakly_supported_only,
  unsupported,
  dominated,
};

std::string to_string(OutcomeLabel label);

struct LexicographicLess {
  bool operator()(const OutcomeVector& a, const OutcomeVector& b) const;
};

struct OutcomeClass {
  OutcomeVector y;
  OutcomeLabel label = OutcomeLabel::dominated;
  std::optional<WeightVector> witness;        // supported / weakly cases
  std::optional<OutcomeVector> dominated_by;  // dominated case
  std::vector<int> flow_ids;                  // indices into flows
};

struct Classification {
  std::vector<Flow> flows;
  std::vector<OutcomeClass> outcomes;  // sorted lexicographically by outcome

  const OutcomeClass* find(const OutcomeVector& y) const;
  OutcomeLabel label_of_flow(int flow_id) const;
  std::vector<Flow> flows_with_label(OutcomeLabel label) const;
  std::vector<OutcomeVector> outcomes_with_label(OutcomeLabel label) const;
};

//! Classifies every outcome (and hence every flow) of a small instance as
//! supported, weakly-supported-only, unsupported or dominated. Dominated
//! outcomes are labeled by pairwise comparison; each remaining outcome y is
//! classified by the exact LP  max t  s.t.  sum(lambda) = 1,
//! lambda_i >= t, lambda . (y' - y) >= 0 for every enumerated outcome y'.
//! t > 0 means supported, t = 0 weakly supported only, otherwise
//! unsupported.
Classification classify(const Network& network,
                        std::uint64_t cap = kDefaultOracleCap);

}  // namespace moflow

#endif
