#include "tvt/config.hpp"

#include <algorithm>

namespace tvt {

void Configuration::validate() const {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (r < 2) throw std::invalid_argument("part count must be at least 2");
  if (classes.empty()) throw std::invalid_argument("configuration has no classes");
  for (const auto& cls : classes) {
    if (static_cast<int>(cls.size()) != r)
      throw std::invalid_argument("class size differs from r");
    for (const auto& p : cls)
      if (static_cast<int>(p.size()) != d)
        throw std::invalid_argument("point dimension differs from d");
  }
}

std::vector<Point> Configuration::all_points() const {
  std::vector<Point> out;
  for (const auto& cls : classes)
    for (const auto& p : cls) out.push_back(p);
  return out;
}

bool is_permutation(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void ColorfulPartition::validate(const Configuration& config) const {
  if (assignment.size() != config.classes.size())
    throw std::invalid_argument("partition class count mismatch");
  for (const auto& sigma : assignment)
    if (!is_permutation(sigma, config.r))
      throw std::invalid_argument("partition row is not a permutation");
}

std::vector<std::vector<Point>> partition_parts(const Configuration& config,
                                                const ColorfulPartition& partition,
                                                std::uint64_t removed_mask) {
  partition.validate(config);
  std::vector<std::vector<Point>> parts(config.r);
  for (int c = 0; c < config.count(); ++c) {
    if ((removed_mask >> c) & 1) continue;
    for (int i = 0; i < config.r; ++i)
      parts[partition.assignment[c][i]].push_back(config.classes[c][i]);
  }
  return parts;
}

}  // namespace tvt
