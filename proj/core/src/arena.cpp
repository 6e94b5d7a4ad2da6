#include "qcg/arena.hpp"

#include <stdexcept>

namespace qcg {

ProfileSpace::ProfileSpace(std::vector<std::size_t> alphabet_sizes) : radix_(std::move(alphabet_sizes)) {
  stride_.resize(radix_.size());
  count_ = 1;
  for (std::size_t p = 0; p < radix_.size(); ++p) {
    if (radix_[p] == 0) throw std::invalid_argument("empty action alphabet");
    stride_[p] = count_;
    if (count_ > (std::size_t{1} << 40) / radix_[p]) throw std::length_error("joint action space too large");
    count_ *= radix_[p];
  }
}

std::size_t ProfileSpace::index(std::span<const ActionId> profile) const {
  if (profile.size() != radix_.size()) throw std::invalid_argument("profile has wrong length");
  std::size_t idx = 0;
  for (std::size_t p = 0; p < radix_.size(); ++p) {
    if (profile[p] >= radix_[p]) throw std::out_of_range("action out of range");
    idx += profile[p] * stride_[p];
  }
  return idx;
}

ActionProfile ProfileSpace::decode(std::size_t index) const {
  ActionProfile out(radix_.size());
  for (std::size_t p = 0; p < radix_.size(); ++p) out[p] = action(index, p);
  return out;
}

Arena::Arena(ProfileSpace profiles, std::size_t num_states, StateId initial, std::vector<StateId> successors,
             std::vector<Cost> costs, std::vector<PlayerSet> targets_by_state)
    : profiles_(std::move(profiles)),
      num_states_(num_states),
      initial_(initial),
      successors_(std::move(successors)),
      costs_(std::move(costs)),
      targets_(std::move(targets_by_state)) {
  const std::size_t entries = num_states_ * profiles_.num_profiles();
  if (initial_ >= num_states_) throw std::invalid_argument("initial state out of range");
  if (successors_.size() != entries) throw std::invalid_argument("successor table has wrong size");
  if (costs_.size() != entries * profiles_.num_players()) throw std::invalid_argument("cost table has wrong size");
  if (targets_.size() != num_states_) throw std::invalid_argument("target table has wrong size");
  for (StateId s : successors_)
    if (s >= num_states_) throw std::invalid_argument("successor out of range");
}

Cost Arena::max_cost() const {
  Cost best;
  for (Cost c : costs_)
    if (c > best) best = c;
  return best;
}

}  // namespace qcg
