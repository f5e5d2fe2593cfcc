#include "tfg/point.hpp"

#include <algorithm>

#include "tfg/error.hpp"

namespace tfg {

namespace {

// Smallest d dividing n with the word equal to its rotation by d.
std::size_t primitive_period(const std::vector<EdgeId>& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

}  // namespace

Point Point::make(const DirectedGraph& g, Path prefix, Path cycle) {
  if (cycle.empty()) throw Error(ErrorCode::EmptyCycle, "point cycle must be non-empty");
  // Re-check composability; callers may build paths by hand.
  cycle = make_path(g, std::move(cycle.edges));
  const bool bare = prefix.empty();
  prefix = make_path(g, std::move(prefix.edges), bare ? std::optional<VertexId>(prefix.origin) : std::nullopt);
  if (terminal(g, prefix) != cycle.origin)
    throw Error(ErrorCode::NonComposable, "cycle does not start where the prefix ends");
  if (terminal(g, cycle) != cycle.origin) throw Error(ErrorCode::NonComposable, "cycle is not a closed loop");

  cycle.edges.resize(primitive_period(cycle.edges));
  while (!prefix.empty() && prefix.edges.back() == cycle.edges.back()) {
    prefix.edges.pop_back();
    std::rotate(cycle.edges.rbegin(), cycle.edges.rbegin() + 1, cycle.edges.rend());
  }
  cycle.origin = g.edge(cycle.edges.front()).from;
  if (prefix.empty()) prefix.origin = cycle.origin;
  return Point(std::move(prefix), std::move(cycle));
}

bool Point::starts_with(const Path& p) const {
  if (p.origin != origin()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (at(i) != p.edges[i]) return false;
  return true;
}

Point Point::drop(const DirectedGraph& g, std::size_t n) const {
  if (n <= prefix_.size()) return make(g, drop_front(g, prefix_, n), cycle_);
  std::size_t shift = (n - prefix_.size()) % cycle_.size();
  Path cycle = cycle_;
  std::rotate(cycle.edges.begin(), cycle.edges.begin() + static_cast<std::ptrdiff_t>(shift), cycle.edges.end());
  cycle.origin = g.edge(cycle.edges.front()).from;
  return make(g, empty_path(cycle.origin), std::move(cycle));
}

Point Point::prepend(const DirectedGraph& g, const Path& v) const {
  return make(g, concat(g, v, prefix_), cycle_);
}

std::strong_ordering Point::operator<=>(const Point& other) const {
  if (auto c = prefix_ <=> other.prefix_; c != 0) return c;
  return cycle_ <=> other.cycle_;
}

std::string to_string(const DirectedGraph& g, const Point& x) {
  std::string pre = x.prefix().empty() ? std::string() : to_string(g, x.prefix());
  return pre + "(" + to_string(g, x.cycle()) + ")^inf";
}

}  // namespace tfg
