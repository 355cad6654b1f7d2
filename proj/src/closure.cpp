#include "braidsurg/closure.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace braidsurg {

Components components(const BraidWord& w) {
  const int k = w.strands();
  const Permutation perm = underlying_permutation(w);
  Components out;
  out.strand_to_component.assign(static_cast<std::size_t>(k), 0);
  for (int start = 1; start <= k; ++start) {
    if (out.strand_to_component[static_cast<std::size_t>(start) - 1] != 0) continue;
    const int label = ++out.component_count;
    int size = 0;
    int s = start;
    do {
      out.strand_to_component[static_cast<std::size_t>(s) - 1] = label;
      ++size;
      s = perm.apply(s);
    } while (s != start);
    out.strand_counts.push_back(size);
  }
  return out;
}

ClosureInfo linking_matrix(const BraidWord& w) {
  const int k = w.strands();
  const Components comp = components(w);
  const int m = comp.component_count;

  std::vector<std::vector<long long>> signed_sum(
      static_cast<std::size_t>(m), std::vector<long long>(static_cast<std::size_t>(m), 0));
  std::vector<int> pos_to_strand(static_cast<std::size_t>(k));
  std::iota(pos_to_strand.begin(), pos_to_strand.end(), 1);
  for (int e : w.letters()) {
    const int i = e < 0 ? -e : e;
    const int a = pos_to_strand[static_cast<std::size_t>(i) - 1];
    const int b = pos_to_strand[static_cast<std::size_t>(i)];
    const int ca = comp.strand_to_component[static_cast<std::size_t>(a) - 1];
    const int cb = comp.strand_to_component[static_cast<std::size_t>(b) - 1];
    if (ca != cb) {
      const long long sign = e > 0 ? 1 : -1;
      signed_sum[static_cast<std::size_t>(ca) - 1][static_cast<std::size_t>(cb) - 1] += sign;
      signed_sum[static_cast<std::size_t>(cb) - 1][static_cast<std::size_t>(ca) - 1] += sign;
    }
    std::swap(pos_to_strand[static_cast<std::size_t>(i) - 1], pos_to_strand[static_cast<std::size_t>(i)]);
  }

  ClosureInfo info;
  info.strands = k;
  info.component_count = m;
  info.strand_to_component = comp.strand_to_component;
  info.strand_counts = comp.strand_counts;
  info.linking.assign(static_cast<std::size_t>(m),
                      std::vector<long long>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const long long sum = signed_sum[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (sum % 2 != 0)
        throw std::logic_error("OddCrossingParity: inter-component crossing sum must be even");
      info.linking[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = sum / 2;
      info.linking[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = sum / 2;
    }
  }
  return info;
}

std::vector<int> axis_linking(const ClosureInfo& info) { return info.strand_counts; }

}  // namespace braidsurg
