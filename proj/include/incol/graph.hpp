#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace incol {

using Vertex = int;
using IncidenceId = int;
using Colour = std::int32_t;

inline constexpr Colour kNoColour = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// The pair (vertex, edge) stored as the vertex and the other endpoint.
struct Incidence {
  Vertex vertex = 0;
  Vertex other = 0;

  Edge edge() const { return canonical(vertex, other); }
  auto operator<=>(const Incidence&) const = default;
};

// Raised when an input refers to incidences or vertices the graph does not have.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
  int max_degree() const noexcept { return max_degree_; }
  bool has_edge(Vertex a, Vertex b) const;

  // Incidences sorted by (vertex, other endpoint); the index is the incidence id.
  std::span<const Incidence> incidences() const noexcept { return incidences_; }
  int incidence_count() const noexcept { return static_cast<int>(incidences_.size()); }
  const Incidence& incidence(IncidenceId id) const;
  IncidenceId incidence_id(Vertex v, Vertex other) const;
  std::optional<IncidenceId> find_incidence(Vertex v, Vertex other) const;

  bool operator==(const Graph& rhs) const { return n_ == rhs.n_ && edges_ == rhs.edges_; }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> offset_;
  std::vector<Incidence> incidences_;
};

bool incidence_adjacent(const Incidence& a, const Incidence& b);

// A^-(v) = {(v,vu)}, A^+(v) = {(u,uv)}.
std::vector<IncidenceId> internal_incidences(const Graph& g, Vertex v);
std::vector<IncidenceId> external_incidences(const Graph& g, Vertex v);

// A^-(v) u A^+(v) u A^-(u) without the incidence itself, sorted by id.
std::vector<IncidenceId> incidence_neighbourhood(const Graph& g, IncidenceId id);

Graph incidence_graph(const Graph& g);

Graph remove_edge(const Graph& g, Edge e);
Graph remove_vertex(const Graph& g, Vertex v);  // keeps ids, isolates v

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Colour>> lists);

  static ListAssignment uniform(int incidence_count, int p);

  int size() const noexcept { return static_cast<int>(lists_.size()); }
  std::span<const Colour> operator[](IncidenceId id) const { return lists_.at(id); }
  bool contains(IncidenceId id, Colour c) const;
  int min_list_size() const;
  Colour max_colour() const;
  const std::vector<std::vector<Colour>>& lists() const noexcept { return lists_; }

  bool operator==(const ListAssignment&) const = default;

 private:
  std::vector<std::vector<Colour>> lists_;
};

class IncidenceColouring {
 public:
  IncidenceColouring() = default;
  explicit IncidenceColouring(int incidence_count) : colours_(incidence_count, kNoColour) {}
  explicit IncidenceColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  int size() const noexcept { return static_cast<int>(colours_.size()); }
  Colour operator[](IncidenceId id) const { return colours_.at(id); }
  bool is_coloured(IncidenceId id) const { return colours_.at(id) != kNoColour; }
  void set(IncidenceId id, Colour c) { colours_.at(id) = c; }
  void clear(IncidenceId id) { colours_.at(id) = kNoColour; }
  bool is_total() const;
  const std::vector<Colour>& values() const noexcept { return colours_; }

  bool operator==(const IncidenceColouring&) const = default;

 private:
  std::vector<Colour> colours_;
};

struct ColouringVerdict {
  bool total = true;
  bool proper = true;
  bool list_respecting = true;
  std::optional<IncidenceId> first_uncoloured;
  std::optional<std::pair<IncidenceId, IncidenceId>> first_conflict;
  std::optional<IncidenceId> first_off_list;

  bool ok() const { return total && proper && list_respecting; }
};

// Throws StructuralError if c (or lists) is not keyed by the incidences of g.
ColouringVerdict validate_colouring(const Graph& g, const IncidenceColouring& c);
ColouringVerdict validate_colouring(const Graph& g, const ListAssignment& lists,
                                    const IncidenceColouring& c);

}  // namespace incol
