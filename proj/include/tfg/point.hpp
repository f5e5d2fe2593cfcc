#pragma once

#include <compare>
#include <cstddef>

#include "tfg/graph.hpp"

namespace tfg {

/// An eventually periodic one-sided path prefix . cycle . cycle . ...
/// Always held in minimal normal form: the cycle is primitive and the prefix
/// does not end with a letter that could be absorbed into the cycle. Two
/// points are equal as sequences iff their normal forms are equal.
class Point {
 public:
  /// Throws NonComposable or EmptyCycle.
  static Point make(const DirectedGraph& g, Path prefix, Path cycle);

  const Path& prefix() const noexcept { return prefix_; }
  const Path& cycle() const noexcept { return cycle_; }
  VertexId origin() const noexcept { return prefix_.origin; }

  /// The i-th edge of the unrolled sequence.
  EdgeId at(std::size_t i) const {
    return i < prefix_.size() ? prefix_.edges[i] : cycle_.edges[(i - prefix_.size()) % cycle_.size()];
  }
  /// True iff p is a prefix of the unrolled sequence.
  bool starts_with(const Path& p) const;

  /// The point with its first `n` edges removed.
  Point drop(const DirectedGraph& g, std::size_t n) const;
  /// The point v . (this).
  Point prepend(const DirectedGraph& g, const Path& v) const;

  bool operator==(const Point&) const = default;
  std::strong_ordering operator<=>(const Point& other) const;

 private:
  Point(Path prefix, Path cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}
  Path prefix_;
  Path cycle_;
};

std::string to_string(const DirectedGraph& g, const Point& x);

}  // namespace tfg
