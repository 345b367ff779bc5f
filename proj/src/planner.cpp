#include "planner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptie {

std::uint64_t TransmissionPlan::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t optimal_count(const ProblemInstance& instance) {
  const std::uint64_t n = instance.clients();
  const std::uint64_t k = instance.privileged();
  return (n - 1) * (n - 2) / 2 + (k - 1) / 2;
}

std::uint64_t uncoded_count(const ProblemInstance& instance) {
  const std::uint64_t k = instance.privileged();
  if (k < 2) {
    throw std::domain_error("uncoded baseline is undefined for a single privileged client");
  }
  const std::uint64_t pairs = instance.pair_count();
  return k == 2 ? pairs - 1 : pairs;
}

TransmissionPlan build_plan(const ProblemInstance& instance) {
  const std::uint32_t n = instance.clients();
  const std::uint32_t k = instance.privileged();
  TransmissionPlan plan;
  plan.counts.resize(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (i < k) {
      plan.counts[i - 1] = (k - 1) / 2;
    } else if (i == k) {
      plan.counts[i - 1] = (k % 2 == 0) ? k / 2 - 1 : 0;
    } else {
      plan.counts[i - 1] = n + k - i - 1;
    }
  }
  return plan;
}

bool is_feasible(const TransmissionPlan& plan, const ProblemInstance& instance) {
  const std::uint32_t n = instance.clients();
  if (plan.counts.size() != n) {
    throw std::invalid_argument("plan has " + std::to_string(plan.counts.size()) +
                                " counts for " + std::to_string(n) + " clients");
  }
  std::vector<std::uint64_t> others(n - 1);
  for (std::uint32_t i = 1; i <= instance.privileged(); ++i) {
    others.clear();
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (j != i) others.push_back(plan.counts[j - 1]);
    }
    std::sort(others.begin(), others.end());
    std::uint64_t prefix = 0;
    for (std::uint64_t l = 1; l < n; ++l) {
      prefix += others[l - 1];
      if (prefix < l * (l - 1) / 2) return false;
    }
  }
  return true;
}

std::string to_csv(const TransmissionPlan& plan) {
  std::string out;
  for (const std::uint64_t count : plan.counts) {
    if (!out.empty()) out += ",";
    out += std::to_string(count);
  }
  return out;
}

}  // namespace ptie
