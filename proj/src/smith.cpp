#include "ihc/smith.hpp"

#include <utility>

namespace ihc {

namespace {

// Records row and column operations on M together with the transforms that were requested.
class Reducer {
 public:
  Reducer(const Matrix& m, const Ring& ring, unsigned flags) : m_(m), ring_(ring), flags_(flags) {
    m_.reduce(ring_);
    if (flags_ & kSmithU) u_ = Matrix::identity(m.rows());
    if (flags_ & kSmithUInv) u_inv_ = Matrix::identity(m.rows());
    if (flags_ & kSmithV) v_ = Matrix::identity(m.cols());
  }

  Matrix& m() { return m_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    m_.swap_rows(a, b);
    if (flags_ & kSmithU) u_.swap_rows(a, b);
    if (flags_ & kSmithUInv) u_inv_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    m_.swap_cols(a, b);
    if (flags_ & kSmithV) v_.swap_cols(a, b);
  }
  // row[dst] += c row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    m_.add_row(dst, src, c);
    reduce_row(m_, dst);
    if (flags_ & kSmithU) {
      u_.add_row(dst, src, c);
      reduce_row(u_, dst);
    }
    if (flags_ & kSmithUInv) {
      u_inv_.add_col(src, dst, -c);
      reduce_col(u_inv_, src);
    }
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    m_.add_col(dst, src, c);
    reduce_col(m_, dst);
    if (flags_ & kSmithV) {
      v_.add_col(dst, src, c);
      reduce_col(v_, dst);
    }
  }
  // row[r] *= unit
  void scale_row(std::size_t r, const Integer& unit) {
    Integer inv = ring_.mod_p() ? ring_.inverse(unit) : unit;
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(r, j) = ring_.reduced(m_(r, j) * unit);
    if (flags_ & kSmithU)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = ring_.reduced(u_(r, j) * unit);
    if (flags_ & kSmithUInv)
      for (std::size_t i = 0; i < u_inv_.rows(); ++i) u_inv_(i, r) = ring_.reduced(u_inv_(i, r) * inv);
  }

  Integer quotient(const Integer& a, const Integer& pivot) const {
    if (ring_.mod_p()) return ring_.reduced(a * ring_.inverse(pivot));
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), pivot.get_mpz_t());
    return q;
  }

  SmithForm finish(std::size_t rank) {
    SmithForm out;
    out.rank = rank;
    for (std::size_t t = 0; t < rank; ++t) out.diagonal.push_back(m_(t, t));
    out.s = std::move(m_);
    out.u = std::move(u_);
    out.u_inv = std::move(u_inv_);
    out.v = std::move(v_);
    return out;
  }

 private:
  void reduce_row(Matrix& a, std::size_t r) {
    if (!ring_.mod_p()) return;
    for (std::size_t j = 0; j < a.cols(); ++j) ring_.reduce(a(r, j));
  }
  void reduce_col(Matrix& a, std::size_t c) {
    if (!ring_.mod_p()) return;
    for (std::size_t i = 0; i < a.rows(); ++i) ring_.reduce(a(i, c));
  }

  Matrix m_;
  Ring ring_;
  unsigned flags_;
  Matrix u_, u_inv_, v_;
};

bool abs_less(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

}  // namespace

SmithForm smith_normal_form(const Matrix& input, const Ring& given, unsigned flags) {
  const Ring ring = given.compute_ring();
  Reducer red(input, ring, flags);
  Matrix& m = red.m();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Minimal absolute value pivot in the trailing block, first in row-major order on ties.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows && !(ring.mod_p() && pi != rows); ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(m(i, j)) == 0) continue;
        if (pi == rows || abs_less(m(i, j), m(pi, pj))) {
          pi = i;
          pj = j;
          if (ring.mod_p()) break;
        }
      }
    if (pi == rows) break;
    red.swap_rows(t, pi);
    red.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        red.add_row(i, t, -red.quotient(m(i, t), m(t, t)));
        if (sgn(m(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        red.add_col(j, t, -red.quotient(m(t, j), m(t, t)));
        if (sgn(m(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move the smallest one to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(m(i, t)) != 0 && abs_less(m(i, t), m(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(m(t, j)) != 0 && abs_less(m(t, j), m(bi, bj))) {
            bi = t;
            bj = j;
          }
        red.swap_rows(t, bi);
        red.swap_cols(t, bj);
        continue;
      }
      if (ring.mod_p()) break;
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(m(i, j)) != 0 && !mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            red.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (ring.mod_p()) {
      if (m(t, t) != 1) red.scale_row(t, ring.inverse(m(t, t)));
    } else if (sgn(m(t, t)) < 0) {
      red.scale_row(t, -1);
    }
  }
  return red.finish(t);
}

KernelBasis kernel_basis(const Matrix& input, const Ring& given) {
  const Ring ring = given.compute_ring();
  const std::size_t rows = input.rows(), cols = input.cols();
  Matrix m = input;
  m.reduce(ring);
  Matrix v = Matrix::identity(cols);
  Matrix v_inv = Matrix::identity(cols);
  auto reduce_col = [&](Matrix& a, std::size_t c) {
    if (ring.mod_p())
      for (std::size_t i = 0; i < a.rows(); ++i) ring.reduce(a(i, c));
  };
  auto reduce_row = [&](Matrix& a, std::size_t r) {
    if (ring.mod_p())
      for (std::size_t j = 0; j < a.cols(); ++j) ring.reduce(a(r, j));
  };
  // col[j] += c col[src], tracked so that v_inv * v = I.
  auto col_op = [&](std::size_t j, std::size_t src, const Integer& c) {
    if (sgn(c) == 0) return;
    m.add_col(j, src, c);
    reduce_col(m, j);
    v.add_col(j, src, c);
    reduce_col(v, j);
    v_inv.add_row(src, j, -c);
    reduce_row(v_inv, src);
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    m.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  };

  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = pc; j < cols; ++j)
        if (sgn(m(i, j)) != 0 && (best == cols || abs_less(m(i, j), m(i, best)))) {
          best = j;
          if (ring.mod_p()) break;
        }
      if (best == cols) break;
      swap(pc, best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (sgn(m(i, j)) == 0) continue;
        Integer q;
        if (ring.mod_p())
          q = ring.reduced(m(i, j) * ring.inverse(m(i, pc)));
        else
          mpz_tdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(i, pc).get_mpz_t());
        col_op(j, pc, -q);
        if (sgn(m(i, j)) != 0) clean = false;
      }
      if (clean) {
        ++pc;
        break;
      }
    }
  }
  KernelBasis out;
  out.rank = pc;
  std::vector<std::size_t> kcols;
  for (std::size_t j = pc; j < cols; ++j) kcols.push_back(j);
  out.basis = v.select_cols(kcols);
  out.left_inverse = v_inv.select_rows(kcols);
  return out;
}

std::size_t rank(const Matrix& input, const Ring& given) {
  const Ring ring = given.compute_ring();
  Matrix m = input;
  m.reduce(ring);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(m(i, j)) != 0 && (best == rows || abs_less(m(i, j), m(best, j)))) {
          best = i;
          if (ring.mod_p()) break;
        }
      if (best == rows) break;
      m.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(m(i, j)) == 0) continue;
        Integer q;
        if (ring.mod_p())
          q = ring.reduced(m(i, j) * ring.inverse(m(r, j)));
        else
          mpz_tdiv_q(q.get_mpz_t(), m(i, j).get_mpz_t(), m(r, j).get_mpz_t());
        m.add_row(i, r, -q);
        if (ring.mod_p())
          for (std::size_t c = 0; c < cols; ++c) ring.reduce(m(i, c));
        if (sgn(m(i, j)) != 0) clean = false;
      }
      if (clean) {
        ++r;
        break;
      }
    }
  }
  return r;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, const Ring& given) {
  const Ring ring = given.compute_ring();
  if (b.size() != a.rows()) throw std::invalid_argument("solve: length mismatch");
  SmithForm f = smith_normal_form(a, ring, kSmithU | kSmithV);
  Vector y = f.u * b;
  for (auto& x : y) ring.reduce(x);
  Vector z(a.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < f.rank) {
      if (ring.mod_p()) {
        z[i] = ring.reduced(y[i] * ring.inverse(f.diagonal[i]));
      } else {
        if (!mpz_divisible_p(y[i].get_mpz_t(), f.diagonal[i].get_mpz_t())) return std::nullopt;
        mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), f.diagonal[i].get_mpz_t());
      }
    } else if (sgn(y[i]) != 0) {
      return std::nullopt;
    }
  }
  Vector x = f.v * z;
  for (auto& e : x) ring.reduce(e);
  return x;
}

std::optional<ScaledSolution> solve_rational(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: length mismatch");
  SmithForm f = smith_normal_form(a, Ring::integers(), kSmithU | kSmithV);
  Vector y = f.u * b;
  Integer scale = 1;
  for (std::size_t i = 0; i < f.rank; ++i) {
    Integer g = gcd(y[i], f.diagonal[i]);
    Integer need = f.diagonal[i] / g;
    scale = lcm(scale, need);
  }
  for (std::size_t i = f.rank; i < y.size(); ++i)
    if (sgn(y[i]) != 0) return std::nullopt;
  Vector z(a.cols());
  for (std::size_t i = 0; i < f.rank; ++i) z[i] = y[i] * scale / f.diagonal[i];
  return ScaledSolution{f.v * z, scale};
}

}  // namespace ihc
