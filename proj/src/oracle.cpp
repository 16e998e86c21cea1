#include "softclust/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "softclust/core.hpp"

namespace softclust {

std::uint64_t crisp_local_function(const CrispContext& cctx, std::uint64_t a) {
  const int ground = cctx.topology.ground;
  std::uint64_t out = 0;
  for (int point = 0; point < ground; ++point) {
    bool cluster = true;
    for (std::uint64_t open : cctx.topology.opens) {
      if (((open >> point) & 1u) == 0) continue;
      if (cctx.ideal.contains(a & open)) {
        cluster = false;
        break;
      }
    }
    if (cluster) out |= std::uint64_t{1} << point;
  }
  return out;
}

CrispTopology crisp_ideal_topology(const CrispContext& cctx, int max_ground) {
  const int ground = cctx.topology.ground;
  if (ground > max_ground) {
    throw ResourceError("crisp ideal topology requires at most " + std::to_string(max_ground) +
                        " ground points");
  }
  std::uint64_t full = crisp_full(ground);
  std::vector<std::uint64_t> opens;
  for (std::uint64_t f = 0; f <= full; ++f) {
    std::uint64_t local = crisp_local_function(cctx, f);
    if ((local & ~f) == 0) opens.push_back(full & ~f);
  }
  std::sort(opens.begin(), opens.end());
  return CrispTopology{ground, std::move(opens)};
}

CrispTopology crisp_ideal_topology_from_base(const CrispContext& cctx, int max_ground) {
  const int ground = cctx.topology.ground;
  if (ground > max_ground) {
    throw ResourceError("crisp ideal topology requires at most " + std::to_string(max_ground) +
                        " ground points");
  }
  std::uint64_t full = crisp_full(ground);
  std::vector<bool> base(std::size_t{1} << ground, false);
  for (std::uint64_t open : cctx.topology.opens) {
    std::uint64_t scope = open & cctx.ideal.top;
    std::uint64_t sub = scope;
    while (true) {
      base[open & ~sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & scope;
    }
  }
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (base[m]) members.push_back(m);
  }
  // Union closure; base members are already intersection-closed.
  std::vector<bool> in(std::size_t{1} << ground, false);
  for (std::uint64_t m : members) in[m] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> current;
    for (std::uint64_t m = 0; m <= full; ++m) {
      if (in[m]) current.push_back(m);
    }
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::uint64_t u = current[i] | current[j];
        if (!in[u]) {
          in[u] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<std::uint64_t> opens;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (in[m]) opens.push_back(m);
  }
  return CrispTopology{ground, std::move(opens)};
}

}  // namespace softclust
