#include "sqfpow/families.hpp"

#include <algorithm>
#include <charconv>

#include "sqfpow/errors.hpp"

namespace sqfpow {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(1, "bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<Edge> parse_forest_edges(std::string_view text, int& max_vertex) {
  std::vector<Edge> edges;
  max_vertex = 0;
  if (text.empty()) return edges;
  for (std::string_view item : split(text, ',')) {
    const auto ends = split(item, '-');
    if (ends.size() != 2) throw ParseError(1, "forest edge must look like u-v, got '" + std::string(item) + "'");
    const int u = parse_int(ends[0], "forest vertex");
    const int v = parse_int(ends[1], "forest vertex");
    if (u < 1 || v < 1) throw InvalidParameter("forest vertices are numbered from 1");
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(u - 1, v - 1);
  }
  return edges;
}

}  // namespace

Family path_family(int n) {
  if (n < 1) throw InvalidParameter("path needs n >= 1");
  Family f;
  f.kind = FamilyKind::Path;
  f.size = n;
  return f;
}

Family cycle_family(int n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  Family f;
  f.kind = FamilyKind::Cycle;
  f.size = n;
  return f;
}

Family whiskered_path_family(int m) {
  if (m < 1) throw InvalidParameter("whiskered path needs m >= 1");
  Family f;
  f.kind = FamilyKind::WhiskeredPath;
  f.size = m;
  return f;
}

Family whiskered_cycle_family(int m) {
  if (m < 3) throw InvalidParameter("whiskered cycle needs m >= 3");
  Family f;
  f.kind = FamilyKind::WhiskeredCycle;
  f.size = m;
  return f;
}

Family multi_whiskered_path_family(std::vector<int> multiplicities) {
  if (multiplicities.empty()) throw InvalidParameter("whiskered path needs m >= 1");
  for (int r : multiplicities) {
    if (r < 1) throw InvalidParameter("whisker multiplicities must be >= 1");
  }
  Family f;
  f.kind = FamilyKind::MultiWhiskeredPath;
  f.size = static_cast<int>(multiplicities.size());
  f.multiplicities = std::move(multiplicities);
  return f;
}

Family multi_whiskered_cycle_family(int m, int r) {
  if (m < 3 || r < 1) throw InvalidParameter("mwcycle needs m >= 3 and r >= 1");
  Family f;
  f.kind = FamilyKind::MultiWhiskeredCycle;
  f.size = m;
  f.pendants = r;
  return f;
}

Family cm_forest_family(int m, std::vector<Edge> forest_edges) {
  if (m < 1) throw InvalidParameter("cmforest needs m >= 1");
  const Graph t(m, forest_edges);
  if (!is_forest(t)) throw InvalidParameter("cmforest edges contain a cycle");
  Family f;
  f.kind = FamilyKind::CMForest;
  f.size = m;
  f.forest_edges = t.edges();
  return f;
}

Family custom_family(Graph g, std::string name) {
  Family f;
  f.kind = FamilyKind::Custom;
  f.size = g.size();
  f.custom = std::move(g);
  f.custom_name = std::move(name);
  return f;
}

Graph Family::graph() const {
  switch (kind) {
    case FamilyKind::Path: return path(size);
    case FamilyKind::Cycle: return cycle(size);
    case FamilyKind::WhiskeredPath: return whisker(path(size));
    case FamilyKind::WhiskeredCycle: return whisker(cycle(size));
    case FamilyKind::MultiWhiskeredPath: return multi_whiskered_path(size, multiplicities);
    case FamilyKind::MultiWhiskeredCycle: return multi_whiskered_cycle(size, pendants);
    case FamilyKind::CMForest: return whisker(Graph(size, forest_edges));
    case FamilyKind::Custom: return custom;
  }
  throw std::logic_error("unknown family kind");
}

std::string Family::descriptor() const {
  const std::string m = std::to_string(size);
  switch (kind) {
    case FamilyKind::Path: return "path:" + m;
    case FamilyKind::Cycle: return "cycle:" + m;
    case FamilyKind::WhiskeredPath: return "wpath:" + m;
    case FamilyKind::WhiskeredCycle: return "wcycle:" + m;
    case FamilyKind::MultiWhiskeredCycle: return "mwcycle:" + m + ":" + std::to_string(pendants);
    case FamilyKind::MultiWhiskeredPath: {
      std::string out = "mwpath:" + m + ":";
      for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(multiplicities[i]);
      }
      return out;
    }
    case FamilyKind::CMForest: {
      std::string out = "cmforest:" + m + ":";
      for (std::size_t i = 0; i < forest_edges.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(forest_edges[i].u + 1) + "-" +
               std::to_string(forest_edges[i].v + 1);
      }
      return out;
    }
    case FamilyKind::Custom: return custom_name.empty() ? "graph" : custom_name;
  }
  throw std::logic_error("unknown family kind");
}

bool Family::is_forest() const {
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::WhiskeredPath:
    case FamilyKind::MultiWhiskeredPath:
    case FamilyKind::CMForest: return true;
    case FamilyKind::Custom: return sqfpow::is_forest(custom);
    default: return false;
  }
}

Family parse_family(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view name = parts[0];
  auto arity = [&](std::size_t want) {
    if (parts.size() != want) {
      throw ParseError(1, "descriptor '" + std::string(text) + "' has the wrong number of fields");
    }
  };
  if (name == "path") {
    arity(2);
    return path_family(parse_int(parts[1], "n"));
  }
  if (name == "cycle") {
    arity(2);
    return cycle_family(parse_int(parts[1], "n"));
  }
  if (name == "wpath") {
    arity(2);
    return whiskered_path_family(parse_int(parts[1], "m"));
  }
  if (name == "wcycle") {
    arity(2);
    return whiskered_cycle_family(parse_int(parts[1], "m"));
  }
  if (name == "mwcycle") {
    arity(3);
    return multi_whiskered_cycle_family(parse_int(parts[1], "m"), parse_int(parts[2], "r"));
  }
  if (name == "mwpath") {
    arity(3);
    const int m = parse_int(parts[1], "m");
    std::vector<int> r;
    for (std::string_view item : split(parts[2], ',')) r.push_back(parse_int(item, "multiplicity"));
    if (static_cast<int>(r.size()) != m) throw InvalidParameter("mwpath needs exactly m multiplicities");
    return multi_whiskered_path_family(std::move(r));
  }
  if (name == "cmforest") {
    int max_vertex = 0;
    if (parts.size() == 3) {
      const int m = parse_int(parts[1], "m");
      auto edges = parse_forest_edges(parts[2], max_vertex);
      if (max_vertex > m) throw InvalidParameter("forest edge mentions a vertex above m");
      return cm_forest_family(m, std::move(edges));
    }
    arity(2);
    if (parts[1].find('-') == std::string_view::npos) return cm_forest_family(parse_int(parts[1], "m"), {});
    auto edges = parse_forest_edges(parts[1], max_vertex);
    return cm_forest_family(max_vertex, std::move(edges));
  }
  throw ParseError(1, "unknown family '" + std::string(name) + "'");
}

std::vector<Family> family_instances(std::string_view kind, int lo, int hi, const std::vector<int>& choices) {
  if (lo > hi) throw InvalidParameter("empty size range");
  std::vector<Family> out;
  for (int size = lo; size <= hi; ++size) {
    if (kind == "path") {
      out.push_back(path_family(size));
    } else if (kind == "cycle") {
      out.push_back(cycle_family(size));
    } else if (kind == "wpath") {
      out.push_back(whiskered_path_family(size));
    } else if (kind == "wcycle") {
      out.push_back(whiskered_cycle_family(size));
    } else if (kind == "mwcycle") {
      for (int r : choices) out.push_back(multi_whiskered_cycle_family(size, r));
    } else if (kind == "mwpath") {
      if (choices.empty()) throw InvalidParameter("mwpath needs at least one multiplicity");
      std::vector<std::size_t> digit(static_cast<std::size_t>(size), 0);
      for (;;) {
        std::vector<int> mult;
        for (std::size_t d : digit) mult.push_back(choices[d]);
        out.push_back(multi_whiskered_path_family(mult));
        std::size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == choices.size()) digit[pos++] = 0;
        if (pos == digit.size()) break;
      }
    } else if (kind == "cmforest") {
      for (std::vector<Edge>& edges : enumerate_forests(size)) out.push_back(cm_forest_family(size, std::move(edges)));
    } else {
      throw InvalidParameter("unknown family kind '" + std::string(kind) + "'");
    }
  }
  return out;
}

}  // namespace sqfpow
