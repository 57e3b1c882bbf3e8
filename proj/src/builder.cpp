#include "builder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace incol::detail {

Builder::Builder(const Graph& g, const ListAssignment& original, std::vector<std::vector<Colour>> working)
    : g_(g), original_(original), working_(std::move(working)) {
  if (static_cast<int>(working_.size()) != g.incidence_count() || original.size() != g.incidence_count())
    throw StructuralError("lists do not cover the incidences");
  neighbourhood_.resize(g.incidence_count());
  for (IncidenceId i = 0; i < g.incidence_count(); ++i) neighbourhood_[i] = incidence_neighbourhood(g, i);
  report_.colouring = IncidenceColouring(g.incidence_count());
}

bool Builder::in_list(IncidenceId id, Colour c) const { return contains(working_[id], c); }

std::vector<Colour> Builder::forbidden(IncidenceId id) const {
  std::vector<Colour> out;
  for (IncidenceId j : neighbourhood_[id])
    if (coloured(j)) out.push_back(at(j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Colour> Builder::available(IncidenceId id) const { return minus(working_[id], forbidden(id)); }

bool Builder::fix(IncidenceId id, Colour c, Rule rule) {
  if (!ok()) return false;
  if (!contains(working_[id], c) || contains(forbidden(id), c)) {
    fail(id, rule);
    return false;
  }
  report_.colouring.set(id, c);
  report_.trace.push_back({id, c, rule});
  return true;
}

bool Builder::greedy(IncidenceId id, Rule rule) {
  if (!ok()) return false;
  if (coloured(id)) return true;
  auto avail = available(id);
  if (avail.empty()) {
    fail(id, rule);
    return false;
  }
  report_.colouring.set(id, avail.front());
  report_.trace.push_back({id, avail.front(), rule});
  return true;
}

void Builder::unfix(IncidenceId id) {
  report_.colouring.clear(id);
  std::erase_if(report_.trace, [id](const TraceStep& s) { return s.incidence == id; });
}

void Builder::drop(IncidenceId id, Colour c) {
  auto& l = working_[id];
  l.erase(std::remove(l.begin(), l.end(), c), l.end());
}

void Builder::fail(IncidenceId id, Rule rule) {
  if (!ok()) return;
  report_.stuck = id;
  report_.stuck_rule = rule;
}

ConstructiveReport Builder::finish() && {
  if (ok()) {
    ColouringVerdict v = validate_colouring(g_, original_, report_.colouring);
    if (!v.total) report_.stuck = v.first_uncoloured;
    else if (!v.proper) report_.stuck = v.first_conflict->second;
    else if (!v.list_respecting) report_.stuck = v.first_off_list;
  }
  report_.success = ok();
  return std::move(report_);
}

std::vector<std::vector<Colour>> trim_lists(const ListAssignment& lists, int k) {
  std::vector<std::vector<Colour>> out;
  out.reserve(lists.size());
  for (const auto& l : lists.lists()) out.emplace_back(l.begin(), l.begin() + std::min<std::size_t>(l.size(), k));
  return out;
}

void require_list_size(const ListAssignment& lists, const Graph& g, int k) {
  if (lists.size() != g.incidence_count()) throw StructuralError("lists do not cover the incidences");
  if (g.incidence_count() > 0 && lists.min_list_size() < k)
    throw std::invalid_argument("list size " + std::to_string(lists.min_list_size()) + " below the bound " +
                                std::to_string(k));
}

bool contains(const std::vector<Colour>& sorted, Colour c) { return std::binary_search(sorted.begin(), sorted.end(), c); }

std::vector<Colour> minus(const std::vector<Colour>& sorted, std::initializer_list<Colour> drop) {
  std::vector<Colour> out;
  for (Colour c : sorted)
    if (std::find(drop.begin(), drop.end(), c) == drop.end()) out.push_back(c);
  return out;
}

std::vector<Colour> minus(const std::vector<Colour>& sorted, const std::vector<Colour>& drop) {
  std::vector<Colour> out;
  for (Colour c : sorted)
    if (std::find(drop.begin(), drop.end(), c) == drop.end()) out.push_back(c);
  return out;
}

std::vector<Colour> intersect(const std::vector<Colour>& a, const std::vector<Colour>& b) {
  std::vector<Colour> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace incol::detail
