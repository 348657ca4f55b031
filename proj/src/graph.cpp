#include "modkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace modkit {

namespace {

std::string at_line(const std::string& msg, std::size_t line) {
  return line == 0 ? msg : "line " + std::to_string(line) + ": " + msg;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ValidationError("expected a vertex index, got '" + std::string(tok) + "'", line);
  return v;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ValidationError("expected an edge weight, got '" + std::string(tok) + "'", line);
  return v;
}

bool symmetric(Variant v) { return v != Variant::directed; }

// Shared by create() and the parser so both report the same messages; the
// parser passes the source line of each edge.
void validate(std::size_t n, const std::vector<Edge>& edges, Variant variant,
              const std::vector<Side>& sides, const std::vector<std::size_t>* lines) {
  auto line_of = [&](std::size_t e) { return lines ? (*lines)[e] : std::size_t{0}; };
  if (n == 0) throw ValidationError("graph must have at least one vertex");
  if (edges.empty()) throw ValidationError("graph has no edges (modularity needs m > 0)");
  if (variant == Variant::bipartite && sides.size() != n)
    throw ValidationError("bipartite graph needs a side label for every vertex");
  if (variant != Variant::bipartite && !sides.empty())
    throw ValidationError("side labels are only meaningful for bipartite graphs");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.from >= n || ed.to >= n)
      throw ValidationError("vertex index out of range (n = " + std::to_string(n) + ")",
                            line_of(e));
    if (ed.from == ed.to)
      throw ValidationError("self-loop on vertex " + std::to_string(ed.from), line_of(e));
    if (!(ed.weight > 0.0) || !std::isfinite(ed.weight))
      throw ValidationError("edge weight must be positive and finite", line_of(e));
    if (variant != Variant::weighted && ed.weight != 1.0)
      throw ValidationError("unweighted variant requires weight 1", line_of(e));
    if (variant == Variant::bipartite && sides[ed.from] == sides[ed.to])
      throw ValidationError("bipartite edge " + std::to_string(ed.from) + "-" +
                                std::to_string(ed.to) + " stays within one side",
                            line_of(e));
    std::pair<std::size_t, std::size_t> key{ed.from, ed.to};
    if (symmetric(variant) && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second)
      throw ValidationError("duplicate edge " + std::to_string(ed.from) + "-" +
                                std::to_string(ed.to),
                            line_of(e));
  }
}

}  // namespace

ValidationError::ValidationError(const std::string& what, std::size_t line)
    : std::runtime_error(at_line(what, line)), line_(line) {}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::undirected: return "undirected";
    case Variant::weighted: return "weighted";
    case Variant::directed: return "directed";
    case Variant::bipartite: return "bipartite";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::undirected, Variant::weighted, Variant::directed, Variant::bipartite})
    if (name == to_string(v)) return v;
  throw ValidationError("unknown variant '" + std::string(name) + "'");
}

Graph Graph::create(std::size_t n, std::vector<Edge> edges, Variant variant,
                    std::vector<Side> sides) {
  validate(n, edges, variant, sides, nullptr);
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.variant_ = variant;
  g.sides_ = std::move(sides);
  return g;
}

double Graph::total_weight() const noexcept {
  double w = 0.0;
  for (const Edge& e : edges_) w += e.weight;
  return w;
}

Degrees degrees(const Graph& g) {
  Degrees d{std::vector<double>(g.num_vertices(), 0.0),
            std::vector<double>(g.num_vertices(), 0.0)};
  for (const Edge& e : g.edges()) {
    d.out[e.from] += e.weight;
    d.in[e.to] += e.weight;
  }
  if (g.variant() != Variant::directed) {
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      d.out[i] += d.in[i];
      d.in[i] = d.out[i];
    }
  }
  return d;
}

Graph parse_edge_list(std::string_view text, Variant variant) {
  std::optional<std::size_t> declared_n;
  std::vector<std::size_t> left;
  bool have_left = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::size_t max_index = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.front().front() == '#') {
      // Header tokens may be glued to '#' ("#n:") or separated ("# n:").
      std::string_view body = line.substr(line.find('#') + 1);
      auto h = split_ws(body);
      if (h.empty()) continue;
      if (h.front() == "n:") {
        if (h.size() != 2) throw ValidationError("malformed '# n:' header", line_no);
        declared_n = parse_index(h[1], line_no);
      } else if (h.front() == "bipartite-left:") {
        have_left = true;
        for (std::size_t t = 1; t < h.size(); ++t) left.push_back(parse_index(h[t], line_no));
      }
      continue;
    }
    if (toks.size() < 2 || toks.size() > 3)
      throw ValidationError("expected 'i j [w]'", line_no);
    Edge e;
    e.from = parse_index(toks[0], line_no);
    e.to = parse_index(toks[1], line_no);
    if (toks.size() == 3) e.weight = parse_weight(toks[2], line_no);
    max_index = std::max({max_index, e.from, e.to});
    edges.push_back(e);
    lines.push_back(line_no);
  }

  if (edges.empty()) throw ValidationError("graph has no edges (modularity needs m > 0)");
  std::size_t n = declared_n.value_or(max_index + 1);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (std::max(edges[i].from, edges[i].to) >= n)
      throw ValidationError("edge references vertex " +
                                std::to_string(std::max(edges[i].from, edges[i].to)) +
                                " but '# n:' declares " + std::to_string(n),
                            lines[i]);

  std::vector<Side> sides;
  if (variant == Variant::bipartite) {
    if (!have_left) throw ValidationError("bipartite input needs a '# bipartite-left:' header");
    sides.assign(n, Side::right);
    for (std::size_t v : left) {
      if (v >= n) throw ValidationError("bipartite-left lists vertex outside the graph");
      sides[v] = Side::left;
    }
  }

  validate(n, edges, variant, sides, &lines);
  return Graph::create(n, std::move(edges), variant, std::move(sides));
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# n: " << g.num_vertices() << '\n';
  if (g.variant() == Variant::bipartite) {
    os << "# bipartite-left:";
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
      if (g.sides()[i] == Side::left) os << ' ' << i;
    os << '\n';
  }
  char buf[32];
  for (const Edge& e : g.edges()) {
    os << e.from << ' ' << e.to;
    if (g.variant() == Variant::weighted) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, e.weight);
      (void)ec;
      os << ' ' << std::string_view(buf, static_cast<std::size_t>(p - buf));
    }
    os << '\n';
  }
  return os.str();
}

Graph read_edge_list_file(const std::string& path, Variant variant) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str(), variant);
}

}  // namespace modkit
