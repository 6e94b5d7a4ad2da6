#include "qcg/cost.hpp"

#include <stdexcept>

namespace qcg {

std::string Cost::str() const { return is_infinite() ? std::string("inf") : std::to_string(value_); }

bool dominates_weakly(const CostVector& lhs, const CostVector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("cost vectors of different length");
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (rhs[i] < lhs[i]) return false;
  return true;
}

CostVector operator+(const CostVector& lhs, const CostVector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("cost vectors of different length");
  CostVector out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

Cost utility(const CostVector& costs) {
  Cost total;
  for (Cost c : costs) total += c;
  return total;
}

std::string to_string(const CostVector& costs) {
  std::string out = "(";
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (i) out += ',';
    out += costs[i].str();
  }
  return out + ")";
}

}  // namespace qcg
