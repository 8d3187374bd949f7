#include "sqfpow/identities.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"
#include "sqfpow/errors.hpp"
#include "sqfpow/homalg.hpp"
#include "sqfpow/ideals.hpp"

namespace sqfpow {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return splitmix64(state_); }
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(int percent) { return between(1, 100) <= percent; }

 private:
  std::uint64_t state_;
};

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](Vertex v) {
    if (!first) s += ",";
    s += std::to_string(v + 1);
    first = false;
  });
  return s + "}";
}

std::string graph_str(const Graph& g) {
  std::string s = "n=" + std::to_string(g.size()) + " edges=";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) s += ",";
    s += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
    first = false;
  }
  return s;
}

std::string ideal_str(const SqfIdeal& i) {
  std::string s = "n=" + std::to_string(i.ambient()) + " gens=";
  for (std::size_t a = 0; a < i.gens().size(); ++a) s += (a ? "," : "") + mask_str(i.gens()[a]);
  return s;
}

Graph draw_graph(Rng& rng, int max_vertices, int min_nu = 1) {
  for (;;) {
    const int n = rng.between(2, max_vertices);
    const int percent = rng.between(20, 70);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (rng.coin(percent)) edges.emplace_back(a, b);
      }
    }
    Graph g(n, edges);
    if (matching_number(g) >= min_nu) return g;
  }
}

/// Random square-free ideal with 1..6 generators of degree 1..4.
SqfIdeal draw_ideal(Rng& rng, int n) {
  std::vector<Mask> gens;
  const int count = rng.between(1, 6);
  for (int c = 0; c < count; ++c) {
    const int degree = rng.between(1, std::min(4, n));
    Mask m = 0;
    while (popcount(m) < degree) m |= bit(rng.between(0, n - 1));
    gens.push_back(m);
  }
  return SqfIdeal(n, gens);
}

/// Either a matching power of a random graph or a random square-free ideal.
SqfIdeal draw_any_ideal(Rng& rng, int max_vertices, std::string& repro) {
  if (rng.coin(50)) {
    const Graph g = draw_graph(rng, max_vertices);
    const int k = rng.between(1, matching_number(g));
    repro = graph_str(g) + " k=" + std::to_string(k);
    return sqf_power(g, k);
  }
  const SqfIdeal i = draw_ideal(rng, rng.between(2, max_vertices));
  repro = ideal_str(i);
  return i;
}

SqfIdeal shift(const SqfIdeal& i, int offset, int ambient) {
  std::vector<Mask> gens;
  for (Mask g : i.gens()) gens.push_back(g << offset);
  return SqfIdeal(ambient, gens);
}

IdentityCase compare(const IdealPair& p) {
  IdentityCase c;
  c.ok = equals(p.left, p.right);
  if (!c.ok) c.detail = "left " + p.left.to_string() + " right " + p.right.to_string();
  return c;
}

IdentityCase verdict(bool ok, const std::string& detail) {
  IdentityCase c;
  c.ok = ok;
  if (!ok) c.detail = detail;
  return c;
}

struct Context {
  int max_vertices;
  FieldSpec field;
};

using Trial = std::function<IdentityCase(Rng&, const Context&, std::string&)>;

struct SuiteDef {
  const char* name;
  Trial trial;
};

std::vector<SuiteDef> suite_definitions() {
  std::vector<SuiteDef> defs;

  defs.push_back({"delete vertex modulo x", [](Rng& rng, const Context& ctx, std::string& repro) {
    const Graph g = draw_graph(rng, ctx.max_vertices);
    const int k = rng.between(1, matching_number(g));
    const Vertex x = rng.between(0, g.size() - 1);
    repro = graph_str(g) + " k=" + std::to_string(k) + " x=" + std::to_string(x + 1);
    return compare(colon_identity_delete(g, k, x));
  }});

  defs.push_back({"colon by a vertex", [](Rng& rng, const Context& ctx, std::string& repro) {
    const Graph g = draw_graph(rng, ctx.max_vertices, 2);
    const int k = rng.between(2, matching_number(g));
    const Vertex x = rng.between(0, g.size() - 1);
    repro = graph_str(g) + " k=" + std::to_string(k) + " x=" + std::to_string(x + 1);
    return compare(colon_identity_vertex(g, k, x));
  }});

  auto edge_trial = [](bool alt) {
    return [alt](Rng& rng, const Context& ctx, std::string& repro) {
      const Graph g = draw_graph(rng, ctx.max_vertices, 2);
      const int k = rng.between(2, matching_number(g));
      const std::vector<Edge> edges = g.edges();
      const Edge e = edges[static_cast<std::size_t>(rng.between(0, static_cast<int>(edges.size()) - 1))];
      const bool flip = rng.coin(50);
      const Vertex x = flip ? e.v : e.u;
      const Vertex y = flip ? e.u : e.v;
      repro = graph_str(g) + " k=" + std::to_string(k) + " x=" + std::to_string(x + 1) + " y=" + std::to_string(y + 1);
      return compare(alt ? colon_identity_edge_alt(g, k, x, y) : colon_identity_edge(g, k, x, y));
    };
  };
  defs.push_back({"colon by an edge", edge_trial(false)});
  defs.push_back({"colon by an edge, rewired at y", edge_trial(true)});

  defs.push_back({"second power colon by an edge", [](Rng& rng, const Context& ctx, std::string& repro) {
    const Graph g = draw_graph(rng, ctx.max_vertices, 2);
    const std::vector<Edge> edges = g.edges();
    const Edge e = edges[static_cast<std::size_t>(rng.between(0, static_cast<int>(edges.size()) - 1))];
    repro = graph_str(g) + " x=" + std::to_string(e.u + 1) + " y=" + std::to_string(e.v + 1);
    return compare(colon_identity_second_power(g, e.u, e.v));
  }});

  defs.push_back({"colon by a vertex after adding its star", [](Rng& rng, const Context& ctx, std::string& repro) {
    const Graph g = draw_graph(rng, ctx.max_vertices);
    const int k = rng.between(1, matching_number(g));
    const Vertex x = rng.between(0, g.size() - 1);
    repro = graph_str(g) + " k=" + std::to_string(k) + " x=" + std::to_string(x + 1);
    return compare(colon_identity_star(g, k, x));
  }});

  defs.push_back({"colon exchanges with added variables", [](Rng& rng, const Context& ctx, std::string& repro) {
    const int n = rng.between(2, ctx.max_vertices);
    const SqfIdeal i = draw_ideal(rng, n);
    const Vertex xr = rng.between(0, n - 1);
    Mask vars = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v != xr && rng.coin(30)) vars |= bit(v);
    }
    repro = ideal_str(i) + " vars=" + mask_str(vars) + " xr=" + std::to_string(xr + 1);
    return compare(colon_identity_exchange(i, vars, xr));
  }});

  defs.push_back({"matching power equals square-free part of the power", [](Rng& rng, const Context& ctx, std::string& repro) {
    Graph g;
    do {
      g = draw_graph(rng, std::min(ctx.max_vertices, 8));
    } while (g.edge_count() > 6);
    const int k = rng.between(1, matching_number(g) + 1);
    repro = graph_str(g) + " k=" + std::to_string(k);
    const SqfIdeal a = sqf_power(g, k);
    const SqfIdeal b = sqf_power_bruteforce(edge_ideal(g), k);
    return verdict(equals(a, b), "matchings " + a.to_string() + " products " + b.to_string());
  }});

  defs.push_back({"matching power vanishes exactly past nu", [](Rng& rng, const Context& ctx, std::string& repro) {
    const Graph g = draw_graph(rng, ctx.max_vertices);
    const int nu = matching_number(g);
    const int k = rng.between(1, nu + 1);
    repro = graph_str(g) + " k=" + std::to_string(k);
    const SqfIdeal p = sqf_power(g, k);
    bool ok = p.is_zero() == (k > nu);
    for (Mask m : p.gens()) ok = ok && popcount(m) == 2 * k;
    return verdict(ok, "nu=" + std::to_string(nu) + " power " + p.to_string());
  }});

  defs.push_back({"beta_0 counts matching supports", [](Rng& rng, const Context& ctx, std::string& repro) {
    const Graph g = draw_graph(rng, ctx.max_vertices);
    const int k = rng.between(1, matching_number(g));
    repro = graph_str(g) + " k=" + std::to_string(k);
    const SqfIdeal p = sqf_power(g, k);
    const BettiTable t = betti_table(p, ctx.field);
    const auto gens = static_cast<long long>(p.size());
    return verdict(t.at(0, 2 * k) == gens && t.total(0) == gens,
                   "beta_0 " + std::to_string(t.total(0)) + " vs " + std::to_string(gens) + " generators");
  }});

  defs.push_back({"Betti routes agree", [](Rng& rng, const Context& ctx, std::string& repro) {
    const SqfIdeal i = draw_any_ideal(rng, ctx.max_vertices, repro);
    const BettiTable engine = betti_table(i, ctx.field);
    std::string bad;
    if (betti_hochster(i, ctx.field) != engine) bad += " hochster";
    if (betti_facet_formula(i, ctx.field) != engine) bad += " facet";
    if (i.size() <= static_cast<std::size_t>(kMaxTaylorGenerators) && betti_taylor_oracle(i, ctx.field) != engine) {
      bad += " taylor";
    }
    if (betti_table(i, FieldSpec{0}) != engine) bad += " char0";
    return verdict(bad.empty(), "disagreeing:" + bad);
  }});

  defs.push_back({"regularity of a sum over disjoint variables", [](Rng& rng, const Context& ctx, std::string& repro) {
    const int n1 = rng.between(1, ctx.max_vertices - 1);
    const int n2 = rng.between(1, ctx.max_vertices - n1);
    const SqfIdeal a = draw_ideal(rng, n1);
    const SqfIdeal b = draw_ideal(rng, n2);
    repro = "A " + ideal_str(a) + " B " + ideal_str(b);
    const int n = n1 + n2;
    const SqfIdeal sum = add(shift(a, 0, n), shift(b, n1, n));
    const int lhs = regularity(sum, ctx.field);
    const int rhs = regularity(a, ctx.field) + regularity(b, ctx.field) - 1;
    return verdict(lhs == rhs, "reg(I+J)=" + std::to_string(lhs) + " expected " + std::to_string(rhs));
  }});

  defs.push_back({"depth of a sum over disjoint variables", [](Rng& rng, const Context& ctx, std::string& repro) {
    const int n1 = rng.between(1, ctx.max_vertices - 1);
    const int n2 = rng.between(1, ctx.max_vertices - n1);
    const SqfIdeal a = draw_ideal(rng, n1);
    const SqfIdeal b = draw_ideal(rng, n2);
    repro = "A " + ideal_str(a) + " B " + ideal_str(b);
    const int n = n1 + n2;
    const SqfIdeal sum = add(shift(a, 0, n), shift(b, n1, n));
    const int lhs = depth_quotient(sum, ctx.field);
    const int rhs = depth_quotient(a, ctx.field) + depth_quotient(b, ctx.field);
    return verdict(lhs == rhs, "depth=" + std::to_string(lhs) + " expected " + std::to_string(rhs));
  }});

  defs.push_back({"unused variables add to depth", [](Rng& rng, const Context& ctx, std::string& repro) {
    const SqfIdeal i = draw_any_ideal(rng, ctx.max_vertices - 1, repro);
    const int extra = rng.between(1, std::min(3, ctx.max_vertices + 2 - i.ambient()));
    repro += " extra=" + std::to_string(extra);
    const SqfIdeal wide = extend_ambient(i, i.ambient() + extra);
    const int d0 = depth_quotient(i, ctx.field);
    const int d1 = depth_quotient(wide, ctx.field);
    const int r0 = regularity(i, ctx.field);
    const int r1 = regularity(wide, ctx.field);
    return verdict(d1 == d0 + extra && r0 == r1, "depth " + std::to_string(d0) + " -> " + std::to_string(d1) +
                                                     ", reg " + std::to_string(r0) + " -> " + std::to_string(r1));
  }});

  defs.push_back({"adding or dividing by a variable does not raise regularity", [](Rng& rng, const Context& ctx, std::string& repro) {
    SqfIdeal i;
    Vertex x = 0;
    do {
      i = draw_any_ideal(rng, ctx.max_vertices, repro);
      x = rng.between(0, i.ambient() - 1);
    } while (i.contains(bit(x)));
    repro += " x=" + std::to_string(x + 1);
    const int r = regularity(i, ctx.field);
    const int r_sum = regularity(add_variables(i, bit(x)), ctx.field);
    const int r_colon = regularity(colon(i, bit(x)), ctx.field);
    return verdict(r_sum <= r && r_colon <= r, "reg " + std::to_string(r) + ", with x " + std::to_string(r_sum) +
                                                   ", colon " + std::to_string(r_colon));
  }});

  defs.push_back({"regularity bounded by colon and sum with a monomial", [](Rng& rng, const Context& ctx, std::string& repro) {
    SqfIdeal i;
    Mask m = 0;
    do {
      i = draw_any_ideal(rng, ctx.max_vertices, repro);
      m = 0;
      const int degree = rng.between(1, std::min(3, i.ambient()));
      while (popcount(m) < degree) m |= bit(rng.between(0, i.ambient() - 1));
    } while (i.contains(m));
    repro += " m=" + mask_str(m);
    const int r = regularity(i, ctx.field);
    const int bound = std::max(regularity(colon(i, m), ctx.field) + popcount(m),
                               regularity(add(i, SqfIdeal(i.ambient(), {m})), ctx.field));
    return verdict(r <= bound, "reg " + std::to_string(r) + " above bound " + std::to_string(bound));
  }});

  defs.push_back({"depth sits between colon and sum with a monomial", [](Rng& rng, const Context& ctx, std::string& repro) {
    SqfIdeal i;
    Mask f = 0;
    do {
      i = draw_any_ideal(rng, ctx.max_vertices, repro);
      f = 0;
      const int degree = rng.between(1, std::min(3, i.ambient()));
      while (popcount(f) < degree) f |= bit(rng.between(0, i.ambient() - 1));
    } while (i.contains(f));
    repro += " f=" + mask_str(f);
    const int d = depth_quotient(i, ctx.field);
    const int d_sum = depth_quotient(add(i, SqfIdeal(i.ambient(), {f})), ctx.field);
    const int d_colon = depth_quotient(colon(i, f), ctx.field);
    const bool ok = (d == d_sum || d == d_colon) && d >= std::min(d_sum, d_colon) && d <= d_colon;
    return verdict(ok, "depth " + std::to_string(d) + ", sum " + std::to_string(d_sum) + ", colon " +
                           std::to_string(d_colon));
  }});

  defs.push_back({"top matching power has depth 2nu-1", [](Rng& rng, const Context& ctx, std::string& repro) {
    Graph g = draw_graph(rng, ctx.max_vertices);
    Mask isolated = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (g.degree(v) == 0) isolated |= bit(v);
    }
    g = delete_vertices(g, isolated);
    const int nu = matching_number(g);
    repro = graph_str(g);
    const int d = depth_quotient(sqf_power(g, nu), ctx.field);
    return verdict(d == 2 * nu - 1, "nu=" + std::to_string(nu) + " depth " + std::to_string(d));
  }});

  return defs;
}

}  // namespace

int IdentitySuite::failures() const {
  int f = 0;
  for (const IdentityCase& c : cases) f += c.ok ? 0 : 1;
  return f;
}

bool IdentityReport::ok() const {
  for (const IdentitySuite& s : suites) {
    if (s.failures() > 0) return false;
  }
  return true;
}

std::string IdentityReport::to_text() const {
  std::ostringstream out;
  for (const IdentitySuite& s : suites) {
    out << (s.failures() == 0 ? "ok    " : "FAIL  ") << s.name << ": " << s.cases.size() - s.failures() << "/"
        << s.cases.size() << '\n';
    for (const IdentityCase& c : s.cases) {
      if (!c.ok) out << "      seed " << c.seed << ": " << c.reproducer << " (" << c.detail << ")\n";
    }
  }
  return out.str();
}

std::string IdentityReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["seed"] = seed;
  j["suites"] = nlohmann::json::array();
  for (const IdentitySuite& s : suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["trials"] = s.cases.size();
    js["failures"] = s.failures();
    js["cases"] = nlohmann::json::array();
    for (const IdentityCase& c : s.cases) {
      nlohmann::json jc{{"seed", c.seed}, {"case", c.reproducer}, {"ok", c.ok}};
      if (!c.ok) jc["detail"] = c.detail;
      js["cases"].push_back(jc);
    }
    j["suites"].push_back(js);
  }
  return j.dump(2) + "\n";
}

Graph random_graph(std::uint64_t seed, int max_vertices) {
  Rng rng(seed);
  return draw_graph(rng, max_vertices, 0);
}

IdentityReport run_identities(const IdentityConfig& config) {
  if (config.trials < 1) throw InvalidParameter("trials must be positive");
  if (config.max_vertices < 4 || config.max_vertices > kMaxHomologyVertices) {
    throw InvalidParameter("max_vertices must lie in 4.." + std::to_string(kMaxHomologyVertices));
  }
  const Context ctx{config.max_vertices, config.field};
  IdentityReport report;
  report.seed = config.seed;

  IdentitySuite pinned{"pinned: P_4, k=2, colon by x2x3", {}};
  {
    const IdealPair p = colon_identity_edge(path(4), 2, 1, 2);
    const SqfIdeal expected(4, {bit(0) | bit(3)});
    IdentityCase c = compare(p);
    c.reproducer = "n=4 edges=1-2,2-3,3-4 k=2 x=2 y=3";
    if (c.ok && !equals(p.left, expected)) {
      c.ok = false;
      c.detail = "both sides " + p.left.to_string() + ", expected <x1*x4>";
    }
    pinned.cases.push_back(c);
  }
  report.suites.push_back(std::move(pinned));

  std::uint64_t stream = config.seed;
  for (const SuiteDef& def : suite_definitions()) {
    IdentitySuite suite{def.name, {}};
    const std::uint64_t suite_seed = splitmix64(stream);
    for (int t = 0; t < config.trials; ++t) {
      std::uint64_t s = suite_seed + static_cast<std::uint64_t>(t);
      const std::uint64_t case_seed = splitmix64(s);
      Rng rng(case_seed);
      std::string repro;
      IdentityCase c;
      try {
        c = def.trial(rng, ctx, repro);
      } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
      }
      c.seed = case_seed;
      c.reproducer = repro;
      suite.cases.push_back(std::move(c));
    }
    report.suites.push_back(std::move(suite));
  }
  return report;
}

}  // namespace sqfpow
