#include "tfg/homology.hpp"

#include "tfg/error.hpp"
#include "tfg/smith.hpp"

namespace tfg {

AbelianGroup AbelianGroup::cokernel(const IntegerMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithDecomposition snf = smith_normal_form(relations);
  std::vector<std::size_t> torsion_rows, free_rows;
  AbelianGroup g;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = i < snf.invariants.size() ? snf.invariants[i] : BigInt(0);
    if (d == 1) continue;
    if (d == 0) {
      free_rows.push_back(i);
    } else {
      torsion_rows.push_back(i);
      g.torsion_.push_back(d);
    }
  }
  g.rank_ = free_rows.size();
  g.coordinates_ = IntegerMatrix(torsion_rows.size() + free_rows.size(), n);
  std::size_t r = 0;
  for (const auto* rows : {&torsion_rows, &free_rows})
    for (std::size_t i : *rows) {
      for (std::size_t c = 0; c < n; ++c) g.coordinates_(r, c) = snf.U(i, c);
      ++r;
    }
  return g;
}

AbelianGroup AbelianGroup::from_invariants(const std::vector<BigInt>& orders) {
  return cokernel(IntegerMatrix::diagonal(orders));
}

std::vector<BigInt> AbelianGroup::factor_orders() const {
  std::vector<BigInt> out = torsion_;
  out.resize(torsion_.size() + rank_, BigInt(0));
  return out;
}

std::vector<BigInt> AbelianGroup::reduce(const std::vector<BigInt>& generator_coefficients) const {
  return reduce_normal(coordinates_ * generator_coefficients);
}

std::vector<BigInt> AbelianGroup::reduce_normal(std::vector<BigInt> coords) const {
  if (coords.size() != factor_count()) throw Error(ErrorCode::InvalidSystem, "coordinate vector has the wrong length");
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), torsion_[i].get_mpz_t());
  return coords;
}

AbelianGroup h0_group(const GraphRef& graph) {
  IntegerMatrix m = graph->adjacency();
  return AbelianGroup::cokernel(IntegerMatrix::identity(m.rows()) - m.transpose());
}

H0Class h0_class(const AbelianGroup& h0, const ClopenSet& c) {
  const DirectedGraph& g = *c.graph();
  std::vector<BigInt> counts(g.vertex_count());
  for (const auto& p : c.paths()) counts[terminal(g, p)] += 1;
  return H0Class{h0.reduce(counts)};
}

H0Class h0_class(const ClopenSet& c) { return h0_class(h0_group(c.graph()), c); }

std::optional<HomWitness> hom_exists(const AbelianGroup& a, const H0Class& a_elem, const AbelianGroup& b,
                                     const H0Class& b_elem) {
  const std::vector<BigInt> alpha = a.factor_orders();
  const std::vector<BigInt> beta = b.factor_orders();
  const std::size_t p = alpha.size(), q = beta.size();
  if (a_elem.coords.size() != p || b_elem.coords.size() != q)
    throw Error(ErrorCode::InvalidSystem, "element coordinates do not match their groups");

  // Unknowns: y_ij (image of generator i, coordinate j), one slack per
  // order relation, one slack per target coordinate.
  std::size_t relations = 0;
  for (std::size_t i = 0; i < p; ++i)
    if (alpha[i] != 0) relations += q;
  const std::size_t nvars = p * q + relations + q;
  IntegerMatrix m(relations + q, nvars);
  std::vector<BigInt> rhs(relations + q);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t j = 0; j < q; ++j, ++row) {
      // alpha_i * y_ij == 0 in Z/beta_j
      m(row, i * q + j) = alpha[i];
      m(row, p * q + row) = -beta[j];
    }
  }
  for (std::size_t j = 0; j < q; ++j, ++row) {
    // sum_i a_i y_ij == b_j in Z/beta_j
    for (std::size_t i = 0; i < p; ++i) m(row, i * q + j) = a_elem.coords[i];
    m(row, p * q + relations + j) = -beta[j];
    rhs[row] = b_elem.coords[j];
  }
  auto z = solve_integer_system(m, rhs);
  if (!z) return std::nullopt;
  HomWitness w;
  w.images.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<BigInt> img(q);
    for (std::size_t j = 0; j < q; ++j) img[j] = (*z)[i * q + j];
    w.images[i] = b.reduce_normal(std::move(img));
  }
  return w;
}

std::optional<HomWitness> embedding_support_obstruction(const GraphRef& source, const GraphRef& target,
                                                        const ClopenSet& support) {
  require_same_graph(support.graph(), target);
  AbelianGroup h_src = h0_group(source);
  AbelianGroup h_dst = h0_group(target);
  return hom_exists(h_src, h0_class(h_src, ClopenSet::whole(source)), h_dst, h0_class(h_dst, support));
}

bool thompson_divisibility(long n, long m) {
  if (n < 2 || m < 2) throw Error(ErrorCode::InvalidArity, "arities must be at least 2");
  return (n - 1) % (m - 1) == 0;
}

namespace {

bool grid_cell(long n, long m) {
  GraphRef target = full_shift_graph(static_cast<unsigned>(m));
  return embedding_support_obstruction(full_shift_graph(static_cast<unsigned>(n)), target, ClopenSet::whole(target))
      .has_value();
}

std::vector<std::vector<bool>> unpack(const std::vector<char>& cells, long side) {
  std::vector<std::vector<bool>> grid(static_cast<std::size_t>(side), std::vector<bool>(static_cast<std::size_t>(side)));
  for (long i = 0; i < side * side; ++i) grid[i / side][i % side] = cells[i] != 0;
  return grid;
}

}  // namespace

std::vector<std::vector<bool>> obstruction_grid(long max_arity) {
  if (max_arity < 2) throw Error(ErrorCode::InvalidArity, "arities must be at least 2");
  const long side = max_arity - 1;
  std::vector<char> cells(static_cast<std::size_t>(side * side));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < side * side; ++i) cells[i] = grid_cell(i / side + 2, i % side + 2);
  return unpack(cells, side);
}

std::vector<std::vector<bool>> obstruction_grid_serial(long max_arity) {
  if (max_arity < 2) throw Error(ErrorCode::InvalidArity, "arities must be at least 2");
  const long side = max_arity - 1;
  std::vector<char> cells(static_cast<std::size_t>(side * side));
  for (long i = 0; i < side * side; ++i) cells[i] = grid_cell(i / side + 2, i % side + 2);
  return unpack(cells, side);
}

}  // namespace tfg
