#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qcg {

/// Source-problem instances for the hardness reductions.

struct PartitionInstance {
  std::vector<std::uint64_t> numbers;
};

struct Literal {
  std::size_t variable = 0;  // 0-based
  bool negated = false;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  std::size_t num_variables = 0;
  std::vector<Clause> clauses;
};

struct Digraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct HamPathInstance {
  Digraph graph;
  std::size_t start = 0;
};

}  // namespace qcg
