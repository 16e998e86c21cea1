#include "softclust/crisp.hpp"

#include <algorithm>
#include <sstream>

namespace softclust {

std::uint64_t crisp_full(int ground) {
  return ground == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
}

CrispCheck check_crisp_topology(int ground, std::vector<std::uint64_t> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::uint64_t full = crisp_full(ground);

  CrispCheck out;
  auto member = [&](std::uint64_t m) {
    return std::binary_search(family.begin(), family.end(), m);
  };
  if (!member(0) || !member(full)) {
    out.axiom = 1;
    out.missing = member(0) ? full : 0;
    return out;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      std::uint64_t inter = family[i] & family[j];
      if (!member(inter)) {
        out.axiom = 2;
        out.a = family[i];
        out.b = family[j];
        out.missing = inter;
        return out;
      }
      std::uint64_t uni = family[i] | family[j];
      if (!member(uni)) {
        out.axiom = 3;
        out.a = family[i];
        out.b = family[j];
        out.missing = uni;
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

std::string crisp_set_text(int ground, std::uint64_t mask,
                           const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < ground; ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out << ", ";
      if (i < static_cast<int>(labels.size()))
        out << labels[i];
      else
        out << i;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

}  // namespace softclust
