#include "softclust/laws.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "json.hpp"
#include "softclust/cluster.hpp"
#include "softclust/oracle.hpp"
#include "softclust/space_file.hpp"

namespace softclust {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kPairExhaustiveCells = 9;      // all (r, s) pairs up to 2^18 checks
constexpr int kTripleExhaustiveCells = 4;    // all (r1, r2, r3) up to 4096 families
constexpr int kJTopExhaustiveCells = 8;      // all ideal tops as the second ideal
constexpr std::uint64_t kSampledPairs = 4096;
constexpr std::uint64_t kSampledTriples = 256;
constexpr std::uint64_t kSampledJTops = 16;

/// Everything the checkers need about one space, precomputed once.
struct SpaceCtx {
  const SpaceSample* sample = nullptr;
  std::size_t index = 0;
  std::uint64_t sample_seed = 0;
  int cells = 0;
  CellMask full = 0;
  CellMask top = 0;
  const std::vector<CellMask>* nbhds = nullptr;
  std::vector<CellMask> cluster_of;  // cluster set of every mask, fast mode
  std::vector<CellMask> closure_of;
  SoftTopology tc;            // route (i): complements of c-closed sets
  std::vector<CellMask> route2;  // route (ii): {open - member-of-ideal}
  std::vector<bool> route2_present;
  std::vector<CellMask> c_closed;
  std::vector<CellMask> c_regular;
  ClusterContext ctx;
  mutable std::string json;

  SpaceCtx(const SpaceSample& s, std::size_t idx, std::uint64_t seed)
      : sample(&s),
        index(idx),
        sample_seed(splitmix64(seed ^ (idx * 0x9e3779b97f4a7c15ull))),
        cells(s.carrier->cells()),
        full(s.carrier->full()),
        top(s.ideal.top()),
        nbhds(&s.topology.min_nbhds()),
        tc(SoftTopology::indiscrete(s.carrier)),
        ctx(s.topology, s.ideal) {
    if (cells > Carrier::kMaxExhaustiveCells) {
      throw ResourceError("law suite requires at most " +
                          std::to_string(Carrier::kMaxExhaustiveCells) + " cells");
    }
    std::size_t count = std::size_t{1} << cells;
    cluster_of.resize(count);
    closure_of.resize(count);
    for (CellMask r = 0; r < count; ++r) {
      cluster_of[r] = cluster_mask(*nbhds, top, r);
      CellMask cl = full;
      for (CellMask open : s.topology.opens()) {
        if ((r & open) == 0) cl &= full & ~open;
      }
      closure_of[r] = cl;
    }
    tc = cluster_topology(ctx, ClusterRoute::closed_enumeration);
    route2_present.assign(count, false);
    for (CellMask open : s.topology.opens()) {
      CellMask scope = open & top;
      CellMask sub = scope;
      while (true) {
        route2_present[open & ~sub] = true;
        if (sub == 0) break;
        sub = (sub - 1) & scope;
      }
    }
    for (CellMask m = 0; m < count; ++m) {
      if (route2_present[m]) route2.push_back(m);
      if ((cluster_of[m] & ~m) == 0) c_closed.push_back(m);
      if (cluster_of[m] == m) c_regular.push_back(m);
    }
  }

  CellMask c(CellMask r) const { return cluster_of[r]; }
  const std::string& space_json() const {
    if (json.empty()) json = serialize_sample(*sample);
    return json;
  }
  std::string text(CellMask m) const { return mask_to_text(sample->carrier, m); }
};

class LawSink {
 public:
  LawSink(LawReport* report, bool stop_on_first)
      : report_(report), stop_on_first_(stop_on_first) {}

  bool done() const { return stop_on_first_ && found_; }
  void add_trials(std::uint64_t n = 1) { report_->trials += n; }
  void fail(const SpaceCtx& ctx, std::vector<std::pair<std::string, std::string>> fields) {
    ++report_->failures;
    found_ = true;
    if (report_->witnesses.size() < LawReport::kMaxWitnesses) {
      report_->witnesses.push_back(LawWitness{ctx.space_json(), std::move(fields)});
    }
  }

 private:
  LawReport* report_;
  bool stop_on_first_;
  bool found_ = false;
};

// --- quantifier helpers ------------------------------------------------

template <class Fn>
void for_each_set(const SpaceCtx& ctx, const LawSink& sink, Fn fn) {
  for (CellMask r = 0; r <= ctx.full; ++r) {
    if (sink.done()) return;
    fn(r);
  }
}

template <class Fn>
void for_each_pair(const SpaceCtx& ctx, const LawSink& sink, Fn fn) {
  if (ctx.cells <= kPairExhaustiveCells) {
    for (CellMask r = 0; r <= ctx.full; ++r) {
      if (sink.done()) return;
      for (CellMask s = 0; s <= ctx.full; ++s) fn(r, s);
    }
  } else {
    DetRng rng(ctx.sample_seed ^ 0x70a1u);
    for (std::uint64_t i = 0; i < kSampledPairs; ++i) {
      if (sink.done()) return;
      fn(rng.next() & ctx.full, rng.next() & ctx.full);
    }
  }
}

template <class Fn>
void for_each_triple(const SpaceCtx& ctx, const LawSink& sink, Fn fn) {
  if (ctx.cells <= kTripleExhaustiveCells) {
    for (CellMask a = 0; a <= ctx.full; ++a) {
      if (sink.done()) return;
      for (CellMask b = 0; b <= ctx.full; ++b) {
        for (CellMask c = 0; c <= ctx.full; ++c) fn(a, b, c);
      }
    }
  } else {
    DetRng rng(ctx.sample_seed ^ 0x791e5u);
    for (std::uint64_t i = 0; i < kSampledTriples; ++i) {
      if (sink.done()) return;
      fn(rng.next() & ctx.full, rng.next() & ctx.full, rng.next() & ctx.full);
    }
  }
}

template <class Fn>
void for_each_jtop(const SpaceCtx& ctx, const LawSink& sink, Fn fn) {
  if (ctx.cells <= kJTopExhaustiveCells) {
    for (CellMask j = 0; j <= ctx.full; ++j) {
      if (sink.done()) return;
      fn(j);
    }
  } else {
    fn(0);
    fn(ctx.full);
    fn(ctx.top);
    fn(ctx.full & ~ctx.top);
    DetRng rng(ctx.sample_seed ^ 0x170b5u);
    for (std::uint64_t i = 0; i < kSampledJTops; ++i) {
      if (sink.done()) return;
      fn(rng.next() & ctx.full);
    }
  }
}

// --- laws ---------------------------------------------------------------

void law_prop_3_3_1(const SpaceCtx& x, LawSink& sink) {
  CellMask sub = x.top;
  while (true) {
    sink.add_trials();
    if (x.c(sub) != 0) {
      sink.fail(x, {{"R", x.text(sub)}, {"c(R)", x.text(x.c(sub))}});
    }
    if (sub == 0) break;
    sub = (sub - 1) & x.top;
    if (sink.done()) return;
  }
}

void law_prop_3_3_2(const SpaceCtx& x, LawSink& sink) {
  for (CellMask s = 0; s <= x.full; ++s) {
    if (sink.done()) return;
    CellMask r = s;
    while (true) {
      sink.add_trials();
      if (x.c(r) & ~x.c(s)) {
        sink.fail(x, {{"R", x.text(r)},
                      {"S", x.text(s)},
                      {"c(R)", x.text(x.c(r))},
                      {"c(S)", x.text(x.c(s))}});
      }
      if (r == 0) break;
      r = (r - 1) & s;
    }
  }
}

void law_prop_3_3_3(const SpaceCtx& x, LawSink& sink) {
  for_each_pair(x, sink, [&](CellMask r, CellMask s) {
    sink.add_trials();
    if (x.c(r & s) & ~(x.c(r) & x.c(s))) {
      sink.fail(x, {{"R", x.text(r)},
                    {"S", x.text(s)},
                    {"c(R n S)", x.text(x.c(r & s))},
                    {"c(R) n c(S)", x.text(x.c(r) & x.c(s))}});
    }
  });
}

void law_prop_3_3_4(const SpaceCtx& x, LawSink& sink) {
  for_each_pair(x, sink, [&](CellMask r, CellMask s) {
    sink.add_trials();
    if (x.c(r | s) != (x.c(r) | x.c(s))) {
      sink.fail(x, {{"R", x.text(r)},
                    {"S", x.text(s)},
                    {"c(R u S)", x.text(x.c(r | s))},
                    {"c(R) u c(S)", x.text(x.c(r) | x.c(s))}});
    }
  });
}

void law_prop_3_3_5(const SpaceCtx& x, LawSink& sink) {
  for_each_pair(x, sink, [&](CellMask r, CellMask s) {
    sink.add_trials();
    if ((x.c(r) & ~x.c(s)) & ~x.c(r & ~s)) {
      sink.fail(x, {{"R", x.text(r)},
                    {"S", x.text(s)},
                    {"c(R) - c(S)", x.text(x.c(r) & ~x.c(s))},
                    {"c(R - S)", x.text(x.c(r & ~s))}});
    }
  });
}

void law_prop_3_4_1(const SpaceCtx& x, LawSink& sink) {
  for_each_triple(x, sink, [&](CellMask a, CellMask b, CellMask c) {
    std::array<CellMask, 3> family{a, b, c};
    for (unsigned n = 0; n < 8; ++n) {
      CellMask uni = 0;
      CellMask expected = 0;
      for (int j = 0; j < 3; ++j) {
        if ((n >> j) & 1u) {
          uni |= family[j];
          expected |= x.c(family[j]);
        }
      }
      sink.add_trials();
      if (x.c(uni) != expected) {
        sink.fail(x, {{"family", x.text(a) + ", " + x.text(b) + ", " + x.text(c)},
                      {"N", std::to_string(n)},
                      {"c(union)", x.text(x.c(uni))},
                      {"union of c", x.text(expected)}});
      }
    }
  });
}

void law_prop_3_4_2(const SpaceCtx& x, LawSink& sink) {
  for_each_triple(x, sink, [&](CellMask a, CellMask b, CellMask c) {
    sink.add_trials();
    CellMask lhs = x.c(a) | x.c(b) | x.c(c);
    if (lhs & ~x.c(a | b | c)) {
      sink.fail(x, {{"family", x.text(a) + ", " + x.text(b) + ", " + x.text(c)},
                    {"union of c", x.text(lhs)},
                    {"c(union)", x.text(x.c(a | b | c))}});
    }
  });
}

void law_prop_3_4_3(const SpaceCtx& x, LawSink& sink) {
  for_each_triple(x, sink, [&](CellMask a, CellMask b, CellMask c) {
    sink.add_trials();
    if (x.c(a & b & c) & ~(x.c(a) & x.c(b) & x.c(c))) {
      sink.fail(x, {{"family", x.text(a) + ", " + x.text(b) + ", " + x.text(c)},
                    {"c(intersection)", x.text(x.c(a & b & c))},
                    {"intersection of c", x.text(x.c(a) & x.c(b) & x.c(c))}});
    }
  });
}

// The index-family identity with the subset family taken to be every
// subset of the (finite) index set.
void law_prop_3_4_4(const SpaceCtx& x, LawSink& sink) {
  for_each_triple(x, sink, [&](CellMask a, CellMask b, CellMask c) {
    std::array<CellMask, 3> family{a, b, c};
    CellMask whole = a | b | c;
    CellMask tail_intersection = x.full;
    for (unsigned n = 0; n < 8; ++n) {
      CellMask rest = 0;
      for (int j = 0; j < 3; ++j) {
        if (((n >> j) & 1u) == 0) rest |= family[j];
      }
      tail_intersection &= x.c(rest);
    }
    CellMask rhs = x.c(a) | x.c(b) | x.c(c) | tail_intersection;
    sink.add_trials();
    if (x.c(whole) != rhs) {
      sink.fail(x, {{"family", x.text(a) + ", " + x.text(b) + ", " + x.text(c)},
                    {"c(union)", x.text(x.c(whole))},
                    {"rhs", x.text(rhs)}});
    }
  });
}

// Same identity quantified over every non-empty family of index subsets.
void law_prop_3_4_4_anyfam(const SpaceCtx& x, LawSink& sink) {
  for_each_pair(x, sink, [&](CellMask a, CellMask b) {
    // J = {0, 1}; the four subsets of J contribute c over the union of the
    // complementary indices.
    std::array<CellMask, 4> term{x.c(a | b), x.c(b), x.c(a), x.c(0)};
    CellMask base = x.c(a) | x.c(b);
    CellMask whole = x.c(a | b);
    for (unsigned fam = 1; fam < 16; ++fam) {
      CellMask tail = x.full;
      for (int k = 0; k < 4; ++k) {
        if ((fam >> k) & 1u) tail &= term[k];
      }
      sink.add_trials();
      if (whole != (base | tail)) {
        sink.fail(x, {{"R1", x.text(a)},
                      {"R2", x.text(b)},
                      {"subset family", std::to_string(fam)},
                      {"c(union)", x.text(whole)},
                      {"rhs", x.text(base | tail)}});
      }
    }
  });
}

void law_lemma_3_5_1(const SpaceCtx& x, LawSink& sink) {
  for_each_set(x, sink, [&](CellMask r) {
    sink.add_trials();
    if (x.c(r) & ~x.closure_of[r]) {
      sink.fail(x, {{"R", x.text(r)},
                    {"c(R)", x.text(x.c(r))},
                    {"cl(R)", x.text(x.closure_of[r])}});
    }
  });
}

void law_lemma_3_5_2(const SpaceCtx& x, LawSink& sink) {
  for_each_set(x, sink, [&](CellMask r) {
    sink.add_trials();
    if (!x.sample->topology.is_open(x.full & ~x.c(r))) {
      sink.fail(x, {{"R", x.text(r)}, {"c(R)", x.text(x.c(r))}});
    }
  });
}

void law_lemma_3_5_3(const SpaceCtx& x, LawSink& sink) {
  for_each_set(x, sink, [&](CellMask r) {
    sink.add_trials();
    if (x.c(x.c(r)) & ~x.c(r)) {
      sink.fail(x, {{"R", x.text(r)},
                    {"c(R)", x.text(x.c(r))},
                    {"c(c(R))", x.text(x.c(x.c(r)))}});
    }
  });
}

void law_lemma_4_2_1(const SpaceCtx& x, LawSink& sink) {
  sink.add_trials(2);
  if (x.c(0) != 0) sink.fail(x, {{"c(Phi)", x.text(x.c(0))}});
  if (x.c(x.full) & ~x.full) sink.fail(x, {{"c(X)", x.text(x.c(x.full))}});
}

void law_lemma_4_2_2(const SpaceCtx& x, LawSink& sink) {
  CellMask sub = x.top;
  while (true) {
    sink.add_trials();
    if (x.c(sub) & ~sub) {
      sink.fail(x, {{"member", x.text(sub)}, {"c", x.text(x.c(sub))}});
    }
    if (sub == 0 || sink.done()) break;
    sub = (sub - 1) & x.top;
  }
}

void law_lemma_4_2_3(const SpaceCtx& x, LawSink& sink) {
  for (CellMask open : x.sample->topology.opens()) {
    if (sink.done()) return;
    CellMask closed = x.full & ~open;
    sink.add_trials();
    if (x.c(closed) & ~closed) {
      sink.fail(x, {{"closed", x.text(closed)}, {"c", x.text(x.c(closed))}});
    }
  }
}

void law_lemma_4_2_4(const SpaceCtx& x, LawSink& sink) {
  CellMask grand = x.full;
  for (CellMask m : x.c_closed) grand &= m;
  sink.add_trials();
  if (x.c(grand) & ~grand) {
    sink.fail(x, {{"intersection of all c-closed", x.text(grand)}});
  }
  std::size_t n = x.c_closed.size();
  bool sample = n * n > 1u << 16;
  if (!sample) {
    for (std::size_t i = 0; i < n && !sink.done(); ++i) {
      for (std::size_t j = i; j < n; ++j) {
        CellMask m = x.c_closed[i] & x.c_closed[j];
        sink.add_trials();
        if (x.c(m) & ~m) {
          sink.fail(x, {{"R", x.text(x.c_closed[i])},
                        {"S", x.text(x.c_closed[j])},
                        {"R n S", x.text(m)},
                        {"c(R n S)", x.text(x.c(m))}});
        }
      }
    }
  } else {
    DetRng rng(x.sample_seed ^ 0x42c4u);
    for (std::uint64_t i = 0; i < kSampledPairs && !sink.done(); ++i) {
      CellMask a = x.c_closed[rng.below(n)];
      CellMask b = x.c_closed[rng.below(n)];
      CellMask m = a & b;
      sink.add_trials();
      if (x.c(m) & ~m) {
        sink.fail(x, {{"R", x.text(a)}, {"S", x.text(b)}, {"R n S", x.text(m)}});
      }
    }
  }
}

void law_lemma_4_2_5(const SpaceCtx& x, LawSink& sink) {
  std::size_t n = x.c_closed.size();
  if (n * n <= 1u << 16) {
    for (std::size_t i = 0; i < n && !sink.done(); ++i) {
      for (std::size_t j = i; j < n; ++j) {
        CellMask m = x.c_closed[i] | x.c_closed[j];
        sink.add_trials();
        if (x.c(m) & ~m) {
          sink.fail(x, {{"R", x.text(x.c_closed[i])},
                        {"S", x.text(x.c_closed[j])},
                        {"R u S", x.text(m)},
                        {"c(R u S)", x.text(x.c(m))}});
        }
      }
    }
  } else {
    DetRng rng(x.sample_seed ^ 0x52c5u);
    for (std::uint64_t i = 0; i < kSampledPairs && !sink.done(); ++i) {
      CellMask a = x.c_closed[rng.below(n)];
      CellMask b = x.c_closed[rng.below(n)];
      CellMask m = a | b;
      sink.add_trials();
      if (x.c(m) & ~m) {
        sink.fail(x, {{"R", x.text(a)}, {"S", x.text(b)}, {"R u S", x.text(m)}});
      }
    }
  }
}

void law_remark_4_4_finer(const SpaceCtx& x, LawSink& sink) {
  // Route (i) must be a genuine topology refining the original.
  sink.add_trials();
  TopologyCheck check = check_topology_family(x.sample->carrier, x.tc.opens());
  if (!check.valid) {
    sink.fail(x, {{"cluster topology", "fails the topology axioms"}});
  }
  for (CellMask open : x.sample->topology.opens()) {
    if (sink.done()) return;
    sink.add_trials();
    if (!x.tc.is_open(open)) {
      sink.fail(x, {{"open", x.text(open)}, {"missing from", "cluster topology"}});
    }
  }
}

void law_thm_4_5_base(const SpaceCtx& x, LawSink& sink) {
  for (CellMask w : x.tc.opens()) {
    if (sink.done()) return;
    CellMask covered = 0;
    for (CellMask b : x.route2) {
      if ((b & ~w) == 0) covered |= b;
    }
    sink.add_trials();
    if (covered != w) {
      sink.fail(x, {{"c-open", x.text(w)}, {"covered", x.text(covered)}});
    }
  }
}

void law_thm_5_8_routes(const SpaceCtx& x, LawSink& sink) {
  sink.add_trials();
  if (x.tc.opens() != x.route2) {
    // Report the first mask on which the routes disagree.
    std::size_t count = std::size_t{1} << x.cells;
    for (CellMask m = 0; m < count; ++m) {
      bool in_tc = x.tc.is_open(m);
      if (in_tc != x.route2_present[m]) {
        sink.fail(x, {{"set", x.text(m)},
                      {"closed-set route", in_tc ? "open" : "not open"},
                      {"open-minus-ideal route", x.route2_present[m] ? "open" : "not open"}});
        return;
      }
    }
  }
}

void law_thm_4_10_idempotent(const SpaceCtx& x, LawSink& sink) {
  ClusterContext second(x.tc, x.sample->ideal);
  SoftTopology tcc = cluster_topology(second, ClusterRoute::closed_enumeration);
  sink.add_trials();
  if (!(tcc.opens() == x.tc.opens())) {
    sink.fail(x, {{"tc opens", std::to_string(x.tc.opens().size())},
                  {"tcc opens", std::to_string(tcc.opens().size())}});
  }
}

void law_lemma_4_6_slices(const SpaceCtx& x, LawSink& sink) {
  for (int p = 0; p < x.sample->carrier->parameter_count(); ++p) {
    if (sink.done()) return;
    SliceCommutationReport report = slice_commutation(x.ctx, p);
    sink.add_trials();
    if (!report.equal) {
      auto family_text = [&](const CrispTopology& fam) {
        std::string out;
        for (std::uint64_t m : fam.opens) {
          if (!out.empty()) out += ", ";
          out += crisp_set_text(fam.ground, m, x.sample->carrier->universe());
        }
        return out;
      };
      sink.fail(x, {{"parameter", report.parameter_label},
                    {"slice of cluster topology", family_text(report.cluster_then_slice)},
                    {"crisp ideal topology of slices", family_text(report.slice_then_crisp)}});
    }
  }
}

void law_prop_4_9_stated(const SpaceCtx& x, LawSink& sink) {
  for_each_jtop(x, sink, [&](CellMask j) {
    for (CellMask r = 0; r <= x.full; ++r) {
      if (sink.done()) return;
      CellMask lhs = cluster_mask(*x.nbhds, x.top | j, r);
      CellMask rhs = cluster_mask(*x.nbhds, x.top, r) & cluster_mask(*x.nbhds, j, r);
      sink.add_trials();
      if (lhs != rhs) {
        sink.fail(x, {{"J.top", x.text(j)},
                      {"R", x.text(r)},
                      {"lhs", x.text(lhs)},
                      {"rhs", x.text(rhs)}});
      }
    }
  });
}

void law_prop_4_9_refined(const SpaceCtx& x, LawSink& sink) {
  // Factors live over each other's cluster topology: the first over the
  // cluster topology of the second ideal and vice versa.
  for_each_jtop(x, sink, [&](CellMask j) {
    SoftTopology tc_j = cluster_topology(
        ClusterContext(x.sample->topology, SoftIdeal(x.sample->carrier, j)),
        ClusterRoute::closed_enumeration);
    for (CellMask r = 0; r <= x.full; ++r) {
      if (sink.done()) return;
      CellMask lhs = cluster_mask(*x.nbhds, x.top | j, r);
      CellMask rhs = cluster_mask(tc_j.min_nbhds(), x.top, r) &
                     cluster_mask(x.tc.min_nbhds(), j, r);
      sink.add_trials();
      if (lhs != rhs) {
        sink.fail(x, {{"J.top", x.text(j)},
                      {"R", x.text(r)},
                      {"lhs", x.text(lhs)},
                      {"rhs", x.text(rhs)}});
      }
    }
  });
}

void law_thm_5_1(const SpaceCtx& x, LawSink& sink) {
  FiniteIdealReport report = check_thm_5_1(x.sample->topology);
  sink.add_trials();
  if (!report.closed_biconditional) {
    sink.fail(x, {{"all c-closed are closed", report.all_c_closed_are_closed ? "yes" : "no"},
                  {"all soft sets closed", report.all_soft_sets_closed ? "yes" : "no"}});
  }
}

void law_cor_5_2(const SpaceCtx& x, LawSink& sink) {
  FiniteIdealReport report = check_thm_5_1(x.sample->topology);
  sink.add_trials();
  if (!report.topology_biconditional) {
    sink.fail(x, {{"topology equals its cluster topology", report.t_equals_tc ? "yes" : "no"},
                  {"complements of finite sets open",
                   report.complements_of_finite_open ? "yes" : "no"}});
  }
}

void law_thm_5_5_adherent(const SpaceCtx& x, LawSink& sink) {
  for_each_set(x, sink, [&](CellMask r) {
    sink.add_trials();
    if ((r & ~x.c(r)) & ~x.top) {
      sink.fail(x, {{"R", x.text(r)}, {"R - c(R)", x.text(r & ~x.c(r))}});
    }
  });
}

void law_thm_5_6(const SpaceCtx& x, LawSink& sink) {
  for (CellMask r : x.c_closed) {
    if (sink.done()) return;
    Decomposition d = decompose_closed_plus_ideal(x.ctx, SoftSet(x.sample->carrier, r));
    sink.add_trials();
    bool ok = x.sample->topology.is_closed(d.part1.bits()) && (d.part2.bits() & ~x.top) == 0 &&
              (d.part1.bits() & d.part2.bits()) == 0 && (d.part1.bits() | d.part2.bits()) == r;
    if (!ok) {
      sink.fail(x, {{"R", x.text(r)},
                    {"closed part", x.text(d.part1.bits())},
                    {"ideal part", x.text(d.part2.bits())}});
    }
  }
  // Converse: a disjoint union of a closed set and an ideal member is c-closed.
  for (CellMask open : x.sample->topology.opens()) {
    if (sink.done()) return;
    CellMask q = x.full & ~open;
    CellMask scope = x.top & ~q;
    CellMask a = scope;
    while (true) {
      CellMask r = q | a;
      sink.add_trials();
      if (x.c(r) & ~r) {
        sink.fail(x, {{"closed", x.text(q)}, {"ideal member", x.text(a)}, {"union", x.text(r)}});
      }
      if (a == 0 || sink.done()) break;
      a = (a - 1) & scope;
    }
  }
}

void law_cor_5_7(const SpaceCtx& x, LawSink& sink) {
  std::size_t count = std::size_t{1} << x.cells;
  for (CellMask w = 0; w < count; ++w) {
    if (sink.done()) return;
    bool c_open = (x.c(x.full & ~w) & ~(x.full & ~w)) == 0;
    sink.add_trials();
    if (c_open != x.route2_present[w]) {
      sink.fail(x, {{"set", x.text(w)},
                    {"c-open", c_open ? "yes" : "no"},
                    {"has open-minus-ideal form", x.route2_present[w] ? "yes" : "no"}});
    }
  }
}

void law_thm_5_10(const SpaceCtx& x, LawSink& sink) {
  for_each_set(x, sink, [&](CellMask r) {
    Decomposition d = decompose_crowded(x.ctx, SoftSet(x.sample->carrier, r));
    CellMask p1 = d.part1.bits();
    CellMask p2 = d.part2.bits();
    sink.add_trials();
    bool ok = (p1 & ~x.c(p1)) == 0 && (p2 & ~x.top) == 0 && (p1 & p2) == 0 && (p1 | p2) == r;
    if (!ok) {
      sink.fail(x, {{"R", x.text(r)},
                    {"crowded part", x.text(p1)},
                    {"ideal part", x.text(p2)}});
    }
  });
}

void law_lemma_5_11(const SpaceCtx& x, LawSink& sink) {
  for (CellMask r : x.c_regular) {
    if (sink.done()) return;
    CellMask s = r;
    while (true) {
      if ((x.c(s) & ~s) == 0) {
        CellMask q = r & ~s;
        sink.add_trials();
        if (q & ~x.c(q)) {
          sink.fail(x, {{"R", x.text(r)},
                        {"S", x.text(s)},
                        {"R - S", x.text(q)},
                        {"c(R - S)", x.text(x.c(q))}});
        }
      }
      if (s == 0 || sink.done()) break;
      s = (s - 1) & r;
    }
  }
}

void law_thm_5_12_unique(const SpaceCtx& x, LawSink& sink) {
  for (CellMask r : x.c_closed) {
    if (sink.done()) return;
    Decomposition d = decompose_regular(x.ctx, SoftSet(x.sample->carrier, r));
    CellMask expected_regular = d.part1.bits();
    CellMask expected_ideal = d.part2.bits();
    int count = 0;
    CellMask found_regular = 0;
    CellMask found_ideal = 0;
    CellMask a = r;
    while (true) {
      CellMask l = r & ~a;
      if ((a & ~x.top) == 0 && x.c(l) == l) {
        ++count;
        found_regular = l;
        found_ideal = a;
      }
      if (a == 0) break;
      a = (a - 1) & r;
    }
    sink.add_trials();
    if (count != 1 || found_regular != expected_regular || found_ideal != expected_ideal) {
      sink.fail(x, {{"R", x.text(r)},
                    {"pair count", std::to_string(count)},
                    {"regular part", x.text(expected_regular)},
                    {"ideal part", x.text(expected_ideal)}});
    }
  }
}

void law_thm_5_13(const SpaceCtx& x, LawSink& sink) {
  // Forward direction is thm5.12's existence; here the converse: every
  // disjoint union of a c-regular set and an ideal member is c-closed.
  for (CellMask l : x.c_regular) {
    if (sink.done()) return;
    CellMask scope = x.top & ~l;
    CellMask a = scope;
    while (true) {
      CellMask r = l | a;
      sink.add_trials();
      if (x.c(r) & ~r) {
        sink.fail(x, {{"regular", x.text(l)}, {"ideal member", x.text(a)}, {"union", x.text(r)}});
      }
      if (a == 0 || sink.done()) break;
      a = (a - 1) & scope;
    }
  }
}

void law_oracle_cluster(const SpaceCtx& x, LawSink& sink) {
  CrispContext cctx{graph_topology(x.sample->topology), CrispIdeal{x.cells, x.top}};
  for_each_set(x, sink, [&](CellMask r) {
    sink.add_trials();
    std::uint64_t local = crisp_local_function(cctx, r);
    if (local != x.c(r)) {
      sink.fail(x, {{"R", x.text(r)},
                    {"crisp local function", x.text(local)},
                    {"cluster set", x.text(x.c(r))}});
    }
  });
}

void law_cluster_modes(const SpaceCtx& x, LawSink& sink) {
  const bool all = x.cells <= 8;
  DetRng rng(x.sample_seed ^ 0xc0deu);
  std::uint64_t budget = all ? (std::uint64_t{1} << x.cells) : 64;
  for (std::uint64_t i = 0; i < budget; ++i) {
    if (sink.done()) return;
    CellMask r = all ? static_cast<CellMask>(i) : (rng.next() & x.full);
    SoftSet set(x.sample->carrier, r);
    sink.add_trials(2);
    SoftSet fast = cluster_set(x.ctx, set, EvalMode::fast);
    SoftSet definitional = cluster_set(x.ctx, set, EvalMode::definitional);
    if (!(fast == definitional)) {
      sink.fail(x, {{"R", x.text(r)},
                    {"fast", to_text(fast)},
                    {"definitional", to_text(definitional)}});
    }
    SoftSet derived_fast = derived_set(x.sample->topology, set, EvalMode::fast);
    SoftSet derived_def = derived_set(x.sample->topology, set, EvalMode::definitional);
    if (!(derived_fast == derived_def)) {
      sink.fail(x, {{"R", x.text(r)},
                    {"derived fast", to_text(derived_fast)},
                    {"derived definitional", to_text(derived_def)}});
    }
  }
}

void law_cl_derived(const SpaceCtx& x, LawSink& sink) {
  for_each_set(x, sink, [&](CellMask r) {
    sink.add_trials();
    CellMask derived = derived_set(x.sample->topology, SoftSet(x.sample->carrier, r)).bits();
    if (x.closure_of[r] != (r | derived)) {
      sink.fail(x, {{"R", x.text(r)},
                    {"cl(R)", x.text(x.closure_of[r])},
                    {"R u D(R)", x.text(r | derived)}});
    }
  });
}

struct LawDef {
  const char* name;
  const char* summary;
  void (*fn)(const SpaceCtx&, LawSink&);
};

const LawDef kLaws[] = {
    {"prop3.3-1", "ideal members have a null cluster set", law_prop_3_3_1},
    {"prop3.3-2", "cluster operator is monotone", law_prop_3_3_2},
    {"prop3.3-3", "cluster of an intersection is below the intersection of clusters",
     law_prop_3_3_3},
    {"prop3.3-4", "cluster operator distributes over binary union", law_prop_3_3_4},
    {"prop3.3-5", "difference of clusters is below the cluster of the difference",
     law_prop_3_3_5},
    {"prop3.4-1", "cluster operator distributes over finite unions", law_prop_3_4_1},
    {"prop3.4-2", "union of clusters is below the cluster of the union", law_prop_3_4_2},
    {"prop3.4-3", "cluster of a family intersection is below the intersection of clusters",
     law_prop_3_4_3},
    {"prop3.4-4", "index-family identity with every subset of the index set", law_prop_3_4_4},
    {"prop3.4-4-anyfam", "index-family identity for every non-empty subset family",
     law_prop_3_4_4_anyfam},
    {"lemma3.5-1", "cluster set is contained in the closure", law_lemma_3_5_1},
    {"lemma3.5-2", "cluster set is soft closed", law_lemma_3_5_2},
    {"lemma3.5-3", "cluster operator is contracting on its image", law_lemma_3_5_3},
    {"lemma4.2-1", "null and absolute sets are c-closed", law_lemma_4_2_1},
    {"lemma4.2-2", "ideal members are c-closed", law_lemma_4_2_2},
    {"lemma4.2-3", "soft closed sets are c-closed", law_lemma_4_2_3},
    {"lemma4.2-4", "intersections of c-closed sets are c-closed", law_lemma_4_2_4},
    {"lemma4.2-5", "finite unions of c-closed sets are c-closed", law_lemma_4_2_5},
    {"remark4.4-finer", "cluster topology is a topology refining the original",
     law_remark_4_4_finer},
    {"thm4.5-base", "open-minus-ideal sets form a base for the cluster topology",
     law_thm_4_5_base},
    {"thm5.8-routes", "both construction routes yield the same cluster topology",
     law_thm_5_8_routes},
    {"thm4.10-idempotent", "rebuilding the cluster topology from itself changes nothing",
     law_thm_4_10_idempotent},
    {"lemma4.6-slices", "slicing commutes with the cluster construction (crisp oracle)",
     law_lemma_4_6_slices},
    {"prop4.9-stated", "join-ideal cluster equals the intersection of single-ideal clusters",
     law_prop_4_9_stated},
    {"prop4.9-refined",
     "join-ideal cluster equals the intersection of cross-refined clusters",
     law_prop_4_9_refined},
    {"thm5.1", "under the finite-member ideal both closedness conditions coincide",
     law_thm_5_1},
    {"cor5.2", "topology equals its cluster topology iff finite complements are open",
     law_cor_5_2},
    {"thm5.5-adherent", "every set minus its cluster set lies in the ideal",
     law_thm_5_5_adherent},
    {"thm5.6", "c-closed sets are disjoint unions of a closed set and an ideal member",
     law_thm_5_6},
    {"cor5.7", "c-open sets are exactly the open-minus-ideal sets", law_cor_5_7},
    {"thm5.10", "every set splits into a c-crowded part and an ideal member", law_thm_5_10},
    {"lemma5.11", "removing a c-closed subset from a c-regular set leaves a c-crowded set",
     law_lemma_5_11},
    {"thm5.12-unique", "the regular-plus-ideal decomposition of a c-closed set is unique",
     law_thm_5_12_unique},
    {"thm5.13", "disjoint unions of a c-regular set and an ideal member are c-closed",
     law_thm_5_13},
    {"oracle-cluster", "cluster set agrees with the crisp local function on the cell grid",
     law_oracle_cluster},
    {"cluster-modes", "minimal-neighborhood and all-opens evaluation agree", law_cluster_modes},
    {"cl-derived", "closure is the union of a set with its derived set", law_cl_derived},
};

const LawDef* find_law(const std::string& name) {
  for (const LawDef& law : kLaws) {
    if (name == law.name) return &law;
  }
  return nullptr;
}

std::vector<const LawDef*> resolve_selection(const std::vector<std::string>& names) {
  // Registry order regardless of the order given.
  std::vector<const LawDef*> out;
  for (const LawDef& law : kLaws) {
    if (std::find(names.begin(), names.end(), law.name) != names.end()) out.push_back(&law);
  }
  for (const std::string& name : names) {
    if (!find_law(name)) throw InputError("unknown law name: " + name);
  }
  return out;
}

struct SuiteRun {
  std::vector<LawReport> reports;
  std::size_t spaces = 0;
};

SuiteRun run_selection(const LawScope& scope, const std::vector<const LawDef*>& selection,
                       bool stop_on_first) {
  SuiteRun run;
  run.reports.reserve(selection.size());
  for (const LawDef* law : selection) {
    LawReport report;
    report.law = law->name;
    report.universe = scope.describe();
    run.reports.push_back(std::move(report));
  }

  bool stop_all = false;
  auto visit = [&](const SpaceSample& sample, std::size_t index, std::uint64_t seed) {
    if (stop_all) return;
    SpaceCtx ctx(sample, index, seed);
    for (std::size_t k = 0; k < selection.size(); ++k) {
      if (stop_on_first && run.reports[k].failures > 0) continue;
      LawSink sink(&run.reports[k], stop_on_first);
      selection[k]->fn(ctx, sink);
    }
    ++run.spaces;
    if (stop_on_first) {
      stop_all = std::all_of(run.reports.begin(), run.reports.end(),
                             [](const LawReport& r) { return r.failures > 0; });
    }
  };

  switch (scope.kind) {
    case LawScope::Kind::exhaustive:
      enumerate_spaces(scope.max_cells, [&](const SpaceSample& sample, std::size_t index) {
        visit(sample, index, 0);
      });
      break;
    case LawScope::Kind::random: {
      auto [params, elements] = default_shape(scope.cells);
      CarrierPtr carrier = enumerated_carrier(params, elements);
      for (int trial = 0; trial < scope.trials && !stop_all; ++trial) {
        std::uint64_t trial_seed = splitmix64(scope.seed ^ (0xA5A5u + trial));
        SpaceSample sample = random_space(carrier, trial_seed);
        visit(sample, static_cast<std::size_t>(trial), scope.seed);
      }
      break;
    }
    case LawScope::Kind::single:
      visit(*scope.single, 0, 0x5eedf11eull);
      break;
  }
  return run;
}

}  // namespace

LawScope LawScope::exhaustive(int max_cells) {
  LawScope scope;
  scope.kind = Kind::exhaustive;
  scope.max_cells = max_cells;
  return scope;
}

LawScope LawScope::random(int cells, int trials, std::uint64_t seed) {
  LawScope scope;
  scope.kind = Kind::random;
  scope.cells = cells;
  scope.trials = trials;
  scope.seed = seed;
  return scope;
}

LawScope LawScope::single_space(const SpaceSample& sample) {
  LawScope scope;
  scope.kind = Kind::single;
  scope.single = &sample;
  return scope;
}

std::string LawScope::describe() const {
  switch (kind) {
    case Kind::exhaustive:
      return "exhaustive(max_cells=" + std::to_string(max_cells) + ")";
    case Kind::random:
      return "random(cells=" + std::to_string(cells) + ", trials=" + std::to_string(trials) +
             ", seed=" + std::to_string(seed) + ")";
    default:
      return "space(cells=" + std::to_string(single->carrier->cells()) + ")";
  }
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const LawDef& law : kLaws) out.emplace_back(law.name);
    return out;
  }();
  return names;
}

bool law_exists(const std::string& name) { return find_law(name) != nullptr; }

std::string law_summary(const std::string& name) {
  const LawDef* law = find_law(name);
  if (!law) throw InputError("unknown law name: " + name);
  return law->summary;
}

std::vector<std::string> default_law_selection() {
  std::vector<std::string> out;
  for (const LawDef& law : kLaws) {
    if (std::string_view(law.name) != "prop4.9-stated") out.emplace_back(law.name);
  }
  return out;
}

std::vector<LawReport> run_law_suite(const LawScope& scope, const std::vector<std::string>& laws) {
  return run_selection(scope, resolve_selection(laws), false).reports;
}

FalsifyOutcome falsify(const std::string& law, const LawScope& scope) {
  const LawDef* def = find_law(law);
  if (!def) throw InputError("unknown law name: " + law);
  SuiteRun run = run_selection(scope, {def}, true);
  FalsifyOutcome out;
  out.law = law;
  out.universe = scope.describe();
  out.trials = run.reports[0].trials;
  out.spaces = run.spaces;
  out.found = run.reports[0].failures > 0;
  if (out.found) out.witness = run.reports[0].witnesses.front();
  return out;
}

std::string render_reports_text(const std::vector<LawReport>& reports) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const LawReport& report : reports) {
    if (report.holds()) {
      ++passed;
      out << "law " << report.law << ": PASS trials=" << report.trials << "\n";
    } else {
      out << "law " << report.law << ": FAIL trials=" << report.trials
          << " failures=" << report.failures << "\n";
      for (const LawWitness& witness : report.witnesses) {
        out << "  witness space=" << witness.space_json << "\n";
        for (const auto& [key, value] : witness.fields) {
          out << "    " << key << ": " << value << "\n";
        }
      }
    }
  }
  out << "summary: laws=" << reports.size() << " passed=" << passed
      << " failed=" << reports.size() - passed;
  if (!reports.empty()) out << " universe=" << reports.front().universe;
  out << "\n";
  return out.str();
}

namespace {

Json witness_json(const LawWitness& witness) {
  Json out = Json::object();
  out["space"] = Json::parse(witness.space_json);
  Json fields = Json::object();
  for (const auto& [key, value] : witness.fields) fields[key] = value;
  out["fields"] = std::move(fields);
  return out;
}

}  // namespace

std::string render_reports_json(const std::vector<LawReport>& reports) {
  Json laws = Json::array();
  std::size_t passed = 0;
  for (const LawReport& report : reports) {
    Json entry = Json::object();
    entry["name"] = report.law;
    entry["universe"] = report.universe;
    entry["holds"] = report.holds();
    entry["trials"] = report.trials;
    entry["failures"] = report.failures;
    Json witnesses = Json::array();
    for (const LawWitness& witness : report.witnesses) witnesses.push_back(witness_json(witness));
    entry["witnesses"] = std::move(witnesses);
    laws.push_back(std::move(entry));
    if (report.holds()) ++passed;
  }
  Json doc = Json::object();
  doc["laws"] = std::move(laws);
  doc["summary"] = Json{{"laws", reports.size()},
                        {"passed", passed},
                        {"failed", reports.size() - passed}};
  return doc.dump(2) + "\n";
}

std::string render_falsify_text(const FalsifyOutcome& outcome) {
  std::ostringstream out;
  if (outcome.found) {
    out << "law " << outcome.law << ": COUNTEREXAMPLE\n";
    out << "space: " << outcome.witness.space_json << "\n";
    for (const auto& [key, value] : outcome.witness.fields) {
      out << key << ": " << value << "\n";
    }
  } else {
    out << "law " << outcome.law << ": no counterexample (" << outcome.universe
        << ": spaces=" << outcome.spaces << " trials=" << outcome.trials << ")\n";
  }
  return out.str();
}

std::string render_falsify_json(const FalsifyOutcome& outcome) {
  Json doc = Json::object();
  doc["law"] = outcome.law;
  doc["universe"] = outcome.universe;
  doc["found"] = outcome.found;
  doc["spaces"] = outcome.spaces;
  doc["trials"] = outcome.trials;
  if (outcome.found) doc["witness"] = witness_json(outcome.witness);
  return doc.dump(2) + "\n";
}

std::string render_enumeration_text(const EnumerationStats& stats,
                                    const std::vector<std::string>* listing) {
  std::ostringstream out;
  for (const CarrierEnumeration& entry : stats.carriers) {
    out << "carrier parameters=" << entry.parameters << " universe=" << entry.elements
        << " cells=" << entry.cells << ": topologies=" << entry.topologies
        << " ideals=" << entry.ideals << " spaces=" << entry.spaces << "\n";
  }
  out << "total spaces: " << stats.total_spaces << "\n";
  if (listing) {
    for (const std::string& line : *listing) out << line << "\n";
  }
  return out.str();
}

std::string render_enumeration_json(const EnumerationStats& stats,
                                    const std::vector<std::string>* listing) {
  Json carriers = Json::array();
  for (const CarrierEnumeration& entry : stats.carriers) {
    carriers.push_back(Json{{"parameters", entry.parameters},
                            {"universe", entry.elements},
                            {"cells", entry.cells},
                            {"topologies", entry.topologies},
                            {"ideals", entry.ideals},
                            {"spaces", entry.spaces}});
  }
  Json doc = Json::object();
  doc["carriers"] = std::move(carriers);
  doc["total_spaces"] = stats.total_spaces;
  if (listing) {
    Json spaces = Json::array();
    for (const std::string& line : *listing) spaces.push_back(Json::parse(line));
    doc["spaces"] = std::move(spaces);
  }
  return doc.dump(2) + "\n";
}

}  // namespace softclust
