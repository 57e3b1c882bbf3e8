#include "incol/graph.hpp"

#include <algorithm>
#include <string>

namespace incol {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    if (e.u == e.v) throw std::invalid_argument("self-loop at " + std::to_string(e.u));
    e = canonical(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("parallel edges");
  edges_ = std::move(edges);

  adj_.assign(n, {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    offset_[v + 1] = offset_[v] + static_cast<int>(adj_[v].size());
    max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
  }
  incidences_.reserve(offset_[n]);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : adj_[v]) incidences_.push_back({v, u});
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
  if (v < 0 || v >= n_) throw StructuralError("unknown vertex " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

const Incidence& Graph::incidence(IncidenceId id) const {
  if (id < 0 || id >= incidence_count())
    throw StructuralError("unknown incidence id " + std::to_string(id));
  return incidences_[id];
}

std::optional<IncidenceId> Graph::find_incidence(Vertex v, Vertex other) const {
  if (v < 0 || v >= n_) return std::nullopt;
  const auto& a = adj_[v];
  auto it = std::lower_bound(a.begin(), a.end(), other);
  if (it == a.end() || *it != other) return std::nullopt;
  return offset_[v] + static_cast<int>(it - a.begin());
}

IncidenceId Graph::incidence_id(Vertex v, Vertex other) const {
  auto id = find_incidence(v, other);
  if (!id)
    throw StructuralError("no incidence (" + std::to_string(v) + "," + std::to_string(v) + "-" +
                          std::to_string(other) + ")");
  return *id;
}

bool incidence_adjacent(const Incidence& a, const Incidence& b) {
  if (a == b) return false;
  if (a.vertex == b.vertex) return true;
  const Edge e = a.edge();
  const Edge f = b.edge();
  if (e == f) return true;
  const Edge vw = canonical(a.vertex, b.vertex);
  return vw == e || vw == f;
}

std::vector<IncidenceId> internal_incidences(const Graph& g, Vertex v) {
  std::vector<IncidenceId> out;
  for (Vertex u : g.neighbours(v)) out.push_back(g.incidence_id(v, u));
  return out;
}

std::vector<IncidenceId> external_incidences(const Graph& g, Vertex v) {
  std::vector<IncidenceId> out;
  for (Vertex u : g.neighbours(v)) out.push_back(g.incidence_id(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IncidenceId> incidence_neighbourhood(const Graph& g, IncidenceId id) {
  const Incidence inc = g.incidence(id);
  std::vector<IncidenceId> out;
  for (Vertex w : g.neighbours(inc.vertex)) {
    out.push_back(g.incidence_id(inc.vertex, w));
    out.push_back(g.incidence_id(w, inc.vertex));
  }
  for (Vertex w : g.neighbours(inc.other)) out.push_back(g.incidence_id(inc.other, w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::find(out.begin(), out.end(), id));
  return out;
}

Graph incidence_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (IncidenceId i = 0; i < g.incidence_count(); ++i)
    for (IncidenceId j : incidence_neighbourhood(g, i))
      if (i < j) edges.push_back({i, j});
  return Graph(g.incidence_count(), std::move(edges));
}

Graph remove_edge(const Graph& g, Edge e) {
  e = canonical(e.u, e.v);
  std::vector<Edge> edges;
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.order(), std::move(edges));
}

Graph remove_vertex(const Graph& g, Vertex v) {
  std::vector<Edge> edges;
  for (const auto& f : g.edges())
    if (f.u != v && f.v != v) edges.push_back(f);
  return Graph(g.order(), std::move(edges));
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbours(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.order();
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

ListAssignment::ListAssignment(std::vector<std::vector<Colour>> lists) : lists_(std::move(lists)) {
  for (std::size_t i = 0; i < lists_.size(); ++i) {
    auto& l = lists_[i];
    if (l.empty()) throw std::invalid_argument("empty list for incidence " + std::to_string(i));
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.front() < 0) throw std::invalid_argument("negative colour in list " + std::to_string(i));
  }
}

ListAssignment ListAssignment::uniform(int incidence_count, int p) {
  std::vector<Colour> base(p);
  for (int c = 0; c < p; ++c) base[c] = c + 1;
  return ListAssignment(std::vector<std::vector<Colour>>(incidence_count, base));
}

bool ListAssignment::contains(IncidenceId id, Colour c) const {
  const auto& l = lists_.at(id);
  return std::binary_search(l.begin(), l.end(), c);
}

int ListAssignment::min_list_size() const {
  int best = 0;
  for (std::size_t i = 0; i < lists_.size(); ++i)
    if (i == 0 || static_cast<int>(lists_[i].size()) < best) best = static_cast<int>(lists_[i].size());
  return best;
}

Colour ListAssignment::max_colour() const {
  Colour best = kNoColour;
  for (const auto& l : lists_) best = std::max(best, l.back());
  return best;
}

bool IncidenceColouring::is_total() const {
  return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == kNoColour; });
}

namespace {

ColouringVerdict validate(const Graph& g, const ListAssignment* lists, const IncidenceColouring& c) {
  if (c.size() != g.incidence_count())
    throw StructuralError("colouring has " + std::to_string(c.size()) + " entries, graph has " +
                          std::to_string(g.incidence_count()) + " incidences");
  if (lists && lists->size() != g.incidence_count())
    throw StructuralError("list assignment does not cover the incidences of the graph");
  ColouringVerdict verdict;
  for (IncidenceId i = 0; i < g.incidence_count(); ++i) {
    if (!c.is_coloured(i)) {
      if (verdict.total) verdict.first_uncoloured = i;
      verdict.total = false;
      continue;
    }
    if (lists && !lists->contains(i, c[i])) {
      if (verdict.list_respecting) verdict.first_off_list = i;
      verdict.list_respecting = false;
    }
    if (!verdict.proper) continue;
    for (IncidenceId j : incidence_neighbourhood(g, i)) {
      if (j > i && c[j] == c[i]) {
        verdict.proper = false;
        verdict.first_conflict = std::pair{i, j};
        break;
      }
    }
  }
  return verdict;
}

}  // namespace

ColouringVerdict validate_colouring(const Graph& g, const IncidenceColouring& c) {
  return validate(g, nullptr, c);
}

ColouringVerdict validate_colouring(const Graph& g, const ListAssignment& lists,
                                    const IncidenceColouring& c) {
  return validate(g, &lists, c);
}

}  // namespace incol
