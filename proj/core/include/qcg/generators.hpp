#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "qcg/game.hpp"
#include "qcg/instances.hpp"

namespace qcg {

/// Two-state XOR game: matching actions cost (0,1), mismatching (1,0). No NE.
Game gen_xor();

/// Chain of n XOR stages with costs 2^i, then (b,b) -> (0,0) and anything
/// else -> (2^n,2^n). NE costs are exactly (x, 2^n-1-x). Requires 1 <= n <= 20.
Game gen_exp_ne(std::size_t n);

/// s loops on (a,a), exits to t on (b,b), anything else falls into a sink;
/// every transition costs (1,1).
Game gen_infinite_ne();

/// Five-state game with social optimum 1, best NE (w,w) and unboundedly bad
/// NE. Requires w >= 1.
Game gen_pos(std::uint64_t w);

/// Two-player reduction from PARTITION. Numbers are doubled when any is odd;
/// `partition_half_sum` returns the resulting S (half the total).
Game gen_partition(std::span<const std::uint64_t> numbers);
std::uint64_t partition_half_sum(std::span<const std::uint64_t> numbers);

/// Reduction from 3SAT: player 0 picks literals, variable players may stop
/// the play. Unary costs (at most 2).
Game gen_3sat(const CnfFormula& formula);

/// Uniform-cost reduction from HAMPATH; players are the graph's vertices.
/// Requires 1 <= n <= 6 and start < n.
Game gen_hampath(const Digraph& graph, std::size_t start);

/// Closed-form state counts of the constructions.
std::size_t partition_state_count(std::size_t n);
std::size_t sat_state_count(std::size_t num_variables, std::size_t num_clauses);
std::size_t hampath_state_count(std::size_t num_vertices, std::size_t num_edges);

}  // namespace qcg
