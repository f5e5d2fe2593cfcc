#include "tfg/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfg {

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariants.begin(), invariants.end(), [](const BigInt& d) { return d != 0; }));
}

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Work {
  IntegerMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
};

// Moves the smallest nonzero |entry| of the trailing block to (t, t).
bool place_pivot(Work& w, std::size_t t) {
  std::size_t bi = 0, bj = 0;
  bool found = false;
  for (std::size_t i = t; i < w.a.rows(); ++i)
    for (std::size_t j = t; j < w.a.cols(); ++j) {
      const BigInt& x = w.a(i, j);
      if (x == 0) continue;
      if (!found || cmpabs(x, w.a(bi, bj)) < 0) {
        bi = i;
        bj = j;
        found = true;
      }
    }
  if (!found) return false;
  w.swap_rows(t, bi);
  w.swap_cols(t, bj);
  return true;
}

// Smallest nonzero entry of row t / column t other than the pivot, moved to (t, t).
void repivot_cross(Work& w, std::size_t t) {
  std::size_t bi = t, bj = t;
  for (std::size_t i = t + 1; i < w.a.rows(); ++i)
    if (w.a(i, t) != 0 && (w.a(bi, bj) == 0 || cmpabs(w.a(i, t), w.a(bi, bj)) < 0)) {
      bi = i;
      bj = t;
    }
  for (std::size_t j = t + 1; j < w.a.cols(); ++j)
    if (w.a(t, j) != 0 && (w.a(bi, bj) == 0 || cmpabs(w.a(t, j), w.a(bi, bj)) < 0)) {
      bi = t;
      bj = j;
    }
  w.swap_rows(t, bi);
  w.swap_cols(t, bj);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  Work w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  BigInt q;
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(w, t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
        if (w.a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.a(i, t).get_mpz_t(), w.a(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        clean = clean && w.a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
        if (w.a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.a(t, j).get_mpz_t(), w.a(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        clean = clean && w.a(t, j) == 0;
      }
      if (!clean) {
        repivot_cross(w, t);
        continue;
      }
      // Row and column t are clear; the pivot must divide the whole trailing block.
      std::size_t bad = w.a.rows();
      for (std::size_t i = t + 1; i < w.a.rows() && bad == w.a.rows(); ++i)
        for (std::size_t j = t + 1; j < w.a.cols(); ++j)
          if (!mpz_divisible_p(w.a(i, j).get_mpz_t(), w.a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == w.a.rows()) break;
      w.add_row(t, bad, 1);
    }
    if (w.a(t, t) < 0) {
      w.a.negate_row(t);
      w.u.negate_row(t);
    }
  }
  SmithDecomposition out;
  out.invariants.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.invariants.push_back(w.a(i, i));
  out.U = std::move(w.u);
  out.S = std::move(w.a);
  out.V = std::move(w.v);
  return out;
}

std::optional<std::vector<BigInt>> solve_integer_system(const IntegerMatrix& a, const std::vector<BigInt>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer_system: dimension mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  std::vector<BigInt> c = snf.U * b;
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const BigInt d = i < snf.invariants.size() ? snf.invariants[i] : BigInt(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
  }
  return snf.V * y;
}

}  // namespace tfg
