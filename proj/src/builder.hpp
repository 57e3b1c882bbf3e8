#pragma once

#include <vector>

#include "incol/constructive.hpp"

namespace incol::detail {

// Partial colouring under construction, with the trace of every assignment.
// Once a step fails every later call is a no-op, so procedures can run straight
// through and the first stuck incidence is what gets reported.
class Builder {
 public:
  Builder(const Graph& g, const ListAssignment& original, std::vector<std::vector<Colour>> working);

  const Graph& graph() const { return g_; }
  bool ok() const { return !report_.stuck.has_value(); }
  bool coloured(IncidenceId id) const { return report_.colouring.is_coloured(id); }
  Colour at(IncidenceId id) const { return report_.colouring[id]; }
  const std::vector<Colour>& list(IncidenceId id) const { return working_[id]; }
  bool in_list(IncidenceId id, Colour c) const;
  IncidenceId id(Vertex v, Vertex u) const { return g_.incidence_id(v, u); }

  std::vector<Colour> forbidden(IncidenceId id) const;
  std::vector<Colour> available(IncidenceId id) const;

  bool fix(IncidenceId id, Colour c, Rule rule);
  bool greedy(IncidenceId id, Rule rule);
  void unfix(IncidenceId id);
  void drop(IncidenceId id, Colour c);
  void fail(IncidenceId id, Rule rule);
  void note_fallback() { report_.used_fallback = true; }

  ConstructiveReport finish() &&;

 private:
  const Graph& g_;
  const ListAssignment& original_;
  std::vector<std::vector<Colour>> working_;
  std::vector<std::vector<IncidenceId>> neighbourhood_;
  ConstructiveReport report_;
};

// Each list cut down to its k smallest colours (lists shorter than k are kept whole).
std::vector<std::vector<Colour>> trim_lists(const ListAssignment& lists, int k);

void require_list_size(const ListAssignment& lists, const Graph& g, int k);

bool contains(const std::vector<Colour>& sorted, Colour c);
std::vector<Colour> minus(const std::vector<Colour>& sorted, std::initializer_list<Colour> drop);
std::vector<Colour> minus(const std::vector<Colour>& sorted, const std::vector<Colour>& drop);
std::vector<Colour> intersect(const std::vector<Colour>& a, const std::vector<Colour>& b);

}  // namespace incol::detail
