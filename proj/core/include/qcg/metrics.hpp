#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qcg/cost.hpp"
#include "qcg/equilibrium.hpp"

namespace qcg {

class Game;

/// Minimum social utility over all outcomes: shortest path in the expanded
/// game to a state where every player has reached, weighted by the sum of
/// cost*. Infinite if no outcome lets everyone reach.
Cost social_optimum(const Game& game);

/// Nonnegative rational or infinity, kept in lowest terms.
class Ratio {
 public:
  static Ratio of(std::uint64_t num, std::uint64_t den);
  static Ratio infinity() { return Ratio(); }

  bool is_infinite() const noexcept { return den_ == 0; }
  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  Ratio() = default;
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 0;
};

enum class Unboundedness {
  kNone,
  kLosingEquilibrium,  // an NE in which some player never reaches
  kPump,               // a positive-cost cycle can be repeated inside an NE
};

/// An NE lasso plus a cycle that can be inserted at `position` any number of
/// times without breaking the equilibrium while strictly raising utility.
struct PumpWitness {
  Lasso base;
  std::size_t position = 0;
  std::vector<Step> cycle;
  Lasso pumped;  // base with one copy of the cycle inserted
};

struct MetricsReport {
  Cost social_optimum;
  bool has_ne = false;
  Cost best_ne_util;     // min utility over the frontier
  Cost worst_ne_util;    // max utility over the NE vectors the search found
  Unboundedness unbounded = Unboundedness::kNone;
  std::optional<PumpWitness> pump;
  bool pump_search_capped = false;
  std::optional<Ratio> pos;  // nullopt when undefined (no NE, or SO infinite)
  std::optional<Ratio> poa;
  bool poa_is_lower_bound = false;
};

struct MetricsOptions {
  SolverOptions solver;
  /// Simple cycles tried per candidate position by the pump search.
  std::size_t pump_cycle_cap = 10'000;
};

MetricsReport pos_poa(const Game& game, const MetricsOptions& options = {});

/// Pump search over the given analysis; sets *capped when the cycle cap cut
/// the search short.
std::optional<PumpWitness> detect_pump(const EquilibriumAnalysis& analysis, std::size_t cycle_cap, bool* capped);

/// True if inserting `cycle` at `position` of `base` any number of times
/// yields an NE.
bool pump_is_valid(const ExpandedGame& egame, std::span<const ValueMap> punish, const Lasso& base,
                   std::size_t position, std::span<const Step> cycle);

}  // namespace qcg
