// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tecol/error.hpp"
#include "tecol/line_engine.hpp"
#include "tecol/multigraph.hpp"
#include "tecol/pipeline.hpp"
#include "tecol/vizing.hpp"

using namespace tecol;
using namespace tecol::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

GammaElement el(GroupElement delta, std::int64_t n, int eps = 0) { return {delta, {n, eps}}; }

struct NamedSpec {
  std::string name;
  MarkedGroupSpec spec;
};

MarkedGroupSpec make_spec(const FiniteGroup& delta, QuotientKind kind, const std::vector<GroupElement>& alpha,
                          const std::vector<GroupElement>& rho, std::vector<GammaElement> gens) {
  auto perm_or_id = [&](const std::vector<GroupElement>& p) {
    return p.empty() ? Automorphism::identity(delta.order()) : validate_automorphism(delta, p);
  };
  std::optional<Automorphism> r;
  if (kind == QuotientKind::Dinf) r = perm_or_id(rho);
  return MarkedGroupSpec(delta, kind, perm_or_id(alpha), r, std::move(gens));
}

GroupElement find_element(const FiniteGroup& g, std::size_t order, std::size_t skip = 0) {
  for (GroupElement a = 1; a < g.order(); ++a) {
    GroupElement p = a;
    std::size_t o = 1;
    while (p != 0) {
      p = g.mul(p, a);
      ++o;
    }
    if (o == order && skip-- == 0) return a;
  }
  throw std::logic_error("no element of that order");
}

std::vector<NamedSpec> config_matrix() {
  const auto trivial = cyclic_group(1);
  const auto z2 = cyclic_group(2);
  const auto z3 = cyclic_group(3);
  const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  const auto s3 = symmetric3_group();
  const std::vector<GroupElement> id{};
  const std::vector<GroupElement> inv3{0, 2, 1};
  const std::vector<GroupElement> swap4{0, 2, 1, 3};  // (a, b) -> (b, a)
  const GroupElement t1 = find_element(s3, 2, 0), t2 = find_element(s3, 2, 1), t3 = find_element(s3, 2, 2);
  const GroupElement c = find_element(s3, 3), ci = s3.inv(c);
  const auto Z = QuotientKind::Z;
  const auto D = QuotientKind::Dinf;

  std::vector<NamedSpec> out;
  out.push_back({"Z trivial +-1", make_spec(trivial, Z, id, id, {el(0, 1), el(0, -1)})});
  out.push_back({"Z trivial +-1 +-2 +-3",
                 make_spec(trivial, Z, id, id, {el(0, 1), el(0, -1), el(0, 2), el(0, -2), el(0, 3), el(0, -3)})});
  out.push_back({"Z Z/2 d=5", make_spec(z2, Z, id, id, {el(1, 0), el(0, 1), el(0, -1), el(1, 1), el(1, -1)})});
  out.push_back({"Z Z/3 inversion d=6",
                 make_spec(z3, Z, inv3, id, {el(1, 0), el(2, 0), el(0, 1), el(0, -1), el(1, 1), el(1, -1)})});
  out.push_back({"Z Klein swap d=7", make_spec(klein, Z, swap4, id,
                                               {el(1, 0), el(2, 0), el(3, 0), el(0, 1), el(0, -1), el(1, 1), el(2, -1)})});
  out.push_back({"Z S3 d=6", make_spec(s3, Z, id, id, {el(t1, 0), el(t2, 0), el(0, 1), el(0, -1), el(c, 2), el(ci, -2)})});
  out.push_back({"Z S3 d=7", make_spec(s3, Z, id, id,
                                       {el(t1, 0), el(t2, 0), el(t3, 0), el(0, 1), el(0, -1), el(t1, 1), el(t1, -1)})});
  out.push_back({"Dinf trivial s +-1", make_spec(trivial, D, id, id, {el(0, 0, 1), el(0, 1), el(0, -1)})});
  out.push_back({"Dinf Z/2 d=5",
                 make_spec(z2, D, id, id, {el(1, 0), el(0, 0, 1), el(1, 1, 1), el(0, 1), el(0, -1)})});
  out.push_back({"Dinf Z/3 inversion d=6", make_spec(z3, D, inv3, id,
                                                     {el(0, 1), el(0, -1), el(1, 0, 1), el(2, 0, 1), el(1, 0), el(2, 0)})});
  out.push_back({"Dinf Z/3 rho inversion d=7",
                 make_spec(z3, D, id, inv3,
                           {el(0, 1), el(0, -1), el(1, 0, 1), el(1, 1), el(2, -1), el(1, 0), el(2, 0)})});
  out.push_back({"Dinf Klein swap d=5",
                 make_spec(klein, D, swap4, id, {el(3, 0), el(0, 0, 1), el(1, 0, 1), el(0, 1), el(0, -1)})});
  out.push_back({"Dinf Klein rho swap d=6",
                 make_spec(klein, D, id, swap4, {el(0, 0, 1), el(1, 0, 1), el(2, 0, 1), el(0, 2), el(0, -2), el(3, 0)})});
  out.push_back({"Dinf S3 d=7", make_spec(s3, D, id, id,
                                          {el(t1, 0), el(t2, 0), el(0, 0, 1), el(c, 0, 1), el(ci, 0, 1), el(0, 1), el(0, -1)})});
  return out;
}

// Linear-time properness check written independently of the library checker.
bool independent_proper(const Multigraph& g, const EdgeColoring& c, Color max_color) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()) * (max_color + 1), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Color col = c[e];
    if (col == kUncolored || col > max_color) return false;
    const auto [u, v] = g.endpoints(e);
    auto& a = seen[static_cast<std::size_t>(u) * (max_color + 1) + col];
    auto& b = seen[static_cast<std::size_t>(v) * (max_color + 1) + col];
    if (a || b) return false;
    a = b = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome coloring_bound_and_audit(Outcome& audit) {
  Outcome out;
  const auto start = Clock::now();
  std::size_t configs = 0, audited_runs = 0, recolored = 0;
  for (const auto& [name, spec] : config_matrix()) {
    for (std::size_t N : {48u, 120u, 1000u, 100000u}) {
      ++configs;
      const std::string tag = name + " N=" + std::to_string(N);
      try {
        const auto model = finite_model(spec, N);
        const auto res = run(model);
        const auto d = spec.d();
        const auto colors = distinct_colors(res.coloring);
        if (!res.coloring.is_total() || !is_proper(model.graph(), res.coloring).proper ||
            !independent_proper(model.graph(), res.coloring, static_cast<Color>(d + 1)))
          out.fail(tag + ": not a proper coloring with colors <= d+1");
        if (colors > d + 1 || colors < d)
          out.fail(tag + ": " + std::to_string(colors) + " colors for d=" + std::to_string(d));

        if (model.partition().d0 == 0) continue;
        ++audited_runs;
        // Which orbits used slot d+2 before recoloring, read off the interior pattern.
        const auto interior = color_orbit_interiors(model);
        const auto top = static_cast<Color>(d + 2);
        const auto& g = model.graph();
        for (std::size_t orbit = 0; orbit < model.orbit_count(); ++orbit) {
          bool used_top = false;
          for (GroupElement delta = 0; delta < model.fiber_size(); ++delta)
            for (auto e : g.incident(model.vertex(delta, orbit))) used_top = used_top || interior[e] == top;
          if (!used_top) continue;
          ++recolored;
          const Color r = res.layout.replacement[orbit];
          if (r == kUncolored) {
            audit.fail(tag + ": orbit " + std::to_string(orbit) + " kept slot d+2");
            continue;
          }
          for (GroupElement delta = 0; delta < model.fiber_size(); ++delta)
            for (auto e : g.incident(model.vertex(delta, orbit)))
              if (!model.is_interior(e) && res.coloring[e] == r)
                audit.fail(tag + ": replacement color appears on a crossing edge of orbit " + std::to_string(orbit));
        }
        if (std::find(res.coloring.colors.begin(), res.coloring.colors.end(), top) != res.coloring.colors.end())
          audit.fail(tag + ": slot d+2 survived recoloring");
        if (!res.summary.recolor_audit) audit.fail(tag + ": library audit flag is false");
      } catch (const Error& e) {
        out.fail(tag + ": " + e.what());
      }
    }
  }
  const double secs = seconds_since(start);
  if (configs < 40) out.fail("matrix has only " + std::to_string(configs) + " configurations");
  if (secs >= 60.0) out.fail("matrix took " + std::to_string(secs) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu configurations in %.2f s", configs, secs);
  out.detail = buf;
  std::snprintf(buf, sizeof buf, "%zu runs with d0 >= 1, %zu orbits recolored and scanned", audited_runs, recolored);
  audit.detail = buf;
  if (audited_runs == 0) audit.fail("no run exercised the interior recoloring");
  return out;
}

Outcome cyclic_engine_suite() {
  Outcome out;
  std::mt19937 rng(0x5eed01);
  std::size_t total_sparse = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<std::uint32_t> gens(k);
    for (auto& n : gens) n = std::uniform_int_distribution<std::uint32_t>(1, 7)(rng);
    const std::size_t nk = *std::max_element(gens.begin(), gens.end());
    const std::size_t N = 4 * k * nk + std::uniform_int_distribution<std::size_t>(0, 6 * k * nk)(rng);
    const std::string tag = "trial " + std::to_string(trial) + " N=" + std::to_string(N);
    try {
      const auto model = CycleModel::make(N, gens);
      const auto res = color_cyclic_H(model);
      const auto g = cycle_multigraph(model);
      if (!naive_is_proper(g, res.coloring)) out.fail(tag + ": improper");
      if (distinct_colors(res.coloring) > 2 * k + 1) out.fail(tag + ": more than 2k+1 colors");
      const Color sparse = static_cast<Color>(2 * k + 1);
      std::set<std::size_t> touched;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t y = 0; y < N; ++y) {
          if (res.coloring[i * N + y] != sparse) continue;
          ++total_sparse;
          const std::size_t z = (y + model.generators[i]) % N;
          if (res.partition.owner[y] != i || res.partition.owner[z] != i)
            out.fail(tag + ": sparse edge leaves its class");
          if (!touched.insert(y).second || !touched.insert(z).second) out.fail(tag + ": sparse edges share a vertex");
        }
    } catch (const Error& e) {
      out.fail(tag + ": " + e.what());
    }
  }
  out.detail = "200 models, " + std::to_string(total_sparse) + " sparse edges checked";
  return out;
}

// Random 0/1 pattern on a cycle of length L whose runs of ones have length >= 2.
std::vector<std::uint8_t> random_runs(std::mt19937& rng, std::size_t L) {
  std::vector<std::uint8_t> a(L, 0);
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return std::vector<std::uint8_t>(L, 1);
  std::size_t pos = 0;
  bool placed = false;
  while (pos + 2 <= L - 1) {
    const std::size_t run = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, (L - 1 - pos)))(rng);
    if (pos + run > L - 1) break;
    for (std::size_t j = 0; j < run; ++j) a[pos + j] = 1;
    placed = true;
    pos += run + std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  }
  if (!placed) a[0] = a[1] = 1;
  std::rotate(a.begin(), a.begin() + std::uniform_int_distribution<std::size_t>(0, L - 1)(rng), a.end());
  return a;
}

Outcome sub_claim_suite() {
  Outcome out;
  std::mt19937 rng(0x5eed02);
  const Palette pal{1, 2, 3};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t L = std::uniform_int_distribution<std::size_t>(3, 64)(rng);
    const auto a = random_runs(rng, L);
    const std::string tag = "trial " + std::to_string(trial) + " L=" + std::to_string(L);
    try {
      const auto c = three_color_with_sparse(a, pal);
      std::vector<Endpoints> edges;
      for (VertexId j = 0; j < L; ++j) edges.push_back({j, static_cast<VertexId>((j + 1) % L)});
      if (!naive_is_proper(Multigraph(L, edges), EdgeColoring(c))) out.fail(tag + ": improper");
      for (std::size_t j = 0; j < L; ++j) {
        if (c[j] < 1 || c[j] > 3) out.fail(tag + ": color outside the palette");
        if (c[j] == 3 && !(a[j] && a[(j + 1) % L])) out.fail(tag + ": third color outside A");
      }
    } catch (const Error& e) {
      out.fail(tag + ": " + e.what());
    }
  }
  out.detail = "200 cycles";
  return out;
}

Outcome vizing_oracle_suite() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937 rng(0x5eed03);
  std::vector<Multigraph> corpus;
  for (std::size_t L = 3; L <= 16; ++L) {
    std::vector<Endpoints> e;
    for (VertexId j = 0; j < L; ++j) e.push_back({j, static_cast<VertexId>((j + 1) % L)});
    corpus.emplace_back(L, e);
  }
  for (VertexId n = 2; n <= 6; ++n) {  // complete graphs up to 15 edges
    std::vector<Endpoints> e;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) e.push_back({u, v});
    corpus.emplace_back(n, e);
  }
  {
    std::vector<Endpoints> e;  // Petersen
    for (VertexId i = 0; i < 5; ++i) {
      e.push_back({i, static_cast<VertexId>((i + 1) % 5)});
      e.push_back({i, static_cast<VertexId>(i + 5)});
      e.push_back({static_cast<VertexId>(i + 5), static_cast<VertexId>((i + 2) % 5 + 5)});
    }
    corpus.emplace_back(10, e);
  }
  while (corpus.size() < 600) corpus.push_back(random_simple_graph(rng, 10, 16));

  std::size_t class_two = 0;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& g = corpus[idx];
    const std::string tag = "graph " + std::to_string(idx);
    try {
      const auto delta = max_degree(g);
      const auto c = vizing_color(g);
      if (!c.is_total() || !naive_is_proper(g, c)) out.fail(tag + ": vizing coloring improper");
      for (auto x : c.colors)
        if (x > delta + 1) out.fail(tag + ": vizing color above max_degree+1");
      const auto chi = brute_force_chromatic_index(g, 16);
      if (chi != delta && chi != delta + 1) out.fail(tag + ": chromatic index outside {D, D+1}");
      if (distinct_colors(c) < chi) out.fail(tag + ": fewer colors than the chromatic index");
      class_two += chi == delta + 1 && g.edge_count() > 0;
    } catch (const Error& e) {
      out.fail(tag + ": " + e.what());
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 120.0) out.fail("corpus took " + std::to_string(secs) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu graphs (%zu class two) in %.2f s", corpus.size(), class_two, secs);
  out.detail = buf;
  return out;
}

Outcome determinism_suite() {
  Outcome out;
  auto specs = config_matrix();
  const std::vector<std::size_t> picks{0, 3, 4, 9, 13};
  for (std::size_t p : picks) {
    std::set<std::size_t> hashes;
    for (int rep = 0; rep < 3; ++rep) {
      const auto model = finite_model(specs[p].spec, 120);
      const auto res = run(model);
      hashes.insert(std::hash<std::string>{}(serialize(model.graph(), res.coloring, Format::Json)));
    }
    if (hashes.size() != 1) out.fail(specs[p].name + ": serialized output differs between runs");
  }
  out.detail = "5 configurations x 3 runs, byte-identical JSON";
  return out;
}

Outcome performance_suite() {
  Outcome out;
  const auto s3 = symmetric3_group();
  const GroupElement t1 = find_element(s3, 2, 0), t2 = find_element(s3, 2, 1);
  const GroupElement c = find_element(s3, 3);
  const auto spec = make_spec(s3, QuotientKind::Z, {}, {},
                              {el(t1, 0), el(t2, 0), el(0, 1), el(0, -1), el(c, 2), el(s3.inv(c), -2)});
  const std::size_t N = 1000000;
  const auto start = Clock::now();
  try {
    const auto model = finite_model(spec, N);
    const auto res = run(model);
    const bool ok = res.summary.proper && res.summary.within_bound() &&
                    independent_proper(model.graph(), res.coloring, static_cast<Color>(spec.d() + 1));
    if (!ok) out.fail("coloring failed verification");
    const double secs = seconds_since(start);
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    const double gib = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
    if (secs >= 30.0) out.fail("took " + std::to_string(secs) + " s");
    if (gib >= 2.0) out.fail("peak memory " + std::to_string(gib) + " GiB");
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu vertices, %zu edges, %zu colors, %.2f s, peak RSS %.2f GiB",
                  model.graph().vertex_count(), model.graph().edge_count(), res.summary.colors_used, secs, gib);
    out.detail = buf;
  } catch (const Error& e) {
    out.fail(e.what());
  }
  return out;
}

}  // namespace

int main() {
  // The large run goes first so the peak RSS reading belongs to it.
  const Outcome perf = performance_suite();
  Outcome audit;
  const Outcome bound = coloring_bound_and_audit(audit);
  const Outcome cyclic = cyclic_engine_suite();
  const Outcome sub = sub_claim_suite();
  const Outcome viz = vizing_oracle_suite();
  const Outcome det = determinism_suite();

  const std::vector<std::pair<const char*, const Outcome*>> rows{
      {"1 coloring bound (proper, d <= colors <= d+1)", &bound},
      {"2 cyclic multigraph in 2k+1 colors", &cyclic},
      {"3 three-coloring with a sparse color", &sub},
      {"4 vizing vs exact chromatic index", &viz},
      {"5 recolor audit by direct scan", &audit},
      {"6 determinism", &det},
      {"7 performance at N = 10^6", &perf},
  };
  bool all = true;
  for (const auto& [label, o] : rows) {
    std::printf("%s criterion %s: %s", o->pass ? "PASS" : "FAIL", label, o->detail.c_str());
    if (!o->pass) std::printf(" [first failure: %s]", o->first_failure.c_str());
    std::printf("\n");
    all = all && o->pass;
  }
  return all ? 0 : 1;
}
