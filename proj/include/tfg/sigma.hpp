#pragma once

#include <cstddef>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/table.hpp"

namespace tfg {

/// A family {T_e} of tables over the target graph, one per edge of the
/// source graph, with pairwise disjoint clopen sources and
/// r(T_e) = union of s(T_f) over edges f leaving t(e).
/// Z, the union of all sources, is the domain.
class SigmaSystem {
 public:
  /// `tables[e]` is T_e for the source edge with index e.
  /// Throws ZeroTable, SourcesOverlap, RangeMismatch or InvalidSystem.
  static SigmaSystem validate(GraphRef source_graph, GraphRef target_graph, std::vector<Table> tables);

  /// The defining system T_e = S_e = {(empty at t(e), e)}.
  static SigmaSystem defining(GraphRef graph);

  const GraphRef& source_graph() const noexcept { return source_; }
  const GraphRef& target_graph() const noexcept { return target_; }
  const Table& table(EdgeId e) const { return tables_.at(e); }
  const std::vector<Table>& tables() const noexcept { return tables_; }
  const ClopenSet& domain() const noexcept { return domain_; }
  /// s(T_e) for every source edge, normalized.
  const std::vector<ClopenSet>& sources() const noexcept { return sources_; }

 private:
  SigmaSystem(GraphRef s, GraphRef t, std::vector<Table> tables, std::vector<ClopenSet> sources, ClopenSet domain)
      : source_(std::move(s)), target_(std::move(t)), tables_(std::move(tables)),
        sources_(std::move(sources)), domain_(std::move(domain)) {}

  GraphRef source_;
  GraphRef target_;
  std::vector<Table> tables_;
  std::vector<ClopenSet> sources_;
  ClopenSet domain_;
};

/// T_w = T_{e_k} o ... o T_{e_1} for w = e_1 ... e_k; for the empty path at a
/// vertex x, the identity on the union of s(T_f) over f leaving x.
Table path_transport(const SigmaSystem& sys, const Path& w);

/// rho(g) = disjoint union of T_{v_i}^{-1} T_{w_i} over the pairs of g. With
/// extend_by_identity, the identity on the complement of Z is added so the
/// result is a full-group element of the target. Throws NotFullGroupElement.
Table induced_hom(const SigmaSystem& sys, const Table& g, bool extend_by_identity);

/// s(T_w), which is the preimage of C_w under the coding map.
ClopenSet coding_preimage(const SigmaSystem& sys, const Path& w);

/// First n edges of the itinerary q(y) = e_y e_{T(y)} e_{T^2(y)} ...
/// Throws NotInDomain when y leaves Z.
std::vector<EdgeId> coding_map(const SigmaSystem& sys, const Point& y, std::size_t n);

/// T(y) = T_{e_y}(y).
Point system_step(const SigmaSystem& sys, const Point& y);

}  // namespace tfg
