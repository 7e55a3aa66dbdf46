#include "stochrat/lp.hpp"

#include "stochrat/errors.hpp"

namespace stochrat::lp {

namespace {

// Tableau layout: rows 0..m-1 are constraints, row m is the phase-one
// objective (reduced costs); columns 0..n-1 structural, n..n+m-1 artificial,
// last column the right-hand side.
class Tableau {
 public:
  Tableau(const Matrix& a, std::span<const Rational> b)
      : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1), cells_((m_ + 1) * width_), basis_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      const bool flip = b[r] < 0;
      for (std::size_t c = 0; c < n_; ++c) at(r, c) = flip ? Rational(-a(r, c)) : a(r, c);
      at(r, n_ + r) = 1;
      at(r, rhs()) = flip ? Rational(-b[r]) : b[r];
      basis_[r] = n_ + r;
    }
    // Objective: minimize the sum of artificials. Price out the basis so the
    // objective row holds reduced costs.
    for (std::size_t c = 0; c < n_; ++c) {
      Rational sum = 0;
      for (std::size_t r = 0; r < m_; ++r) sum += at(r, c);
      at(m_, c) = -sum;
    }
    Rational total = 0;
    for (std::size_t r = 0; r < m_; ++r) total += at(r, rhs());
    at(m_, rhs()) = -total;
  }

  void solve() {
    for (;;) {
      std::size_t entering = width_;
      for (std::size_t c = 0; c + 1 < width_; ++c) {
        if (at(m_, c) < 0) {
          entering = c;
          break;
        }
      }
      if (entering == width_) return;

      std::size_t leaving = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (at(r, entering) <= 0) continue;
        Rational ratio = at(r, rhs()) / at(r, entering);
        if (leaving == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      // Phase one is bounded below by zero, so some row always limits the step.
      if (leaving == m_) throw Error("phase-one simplex became unbounded");
      pivot(leaving, entering);
    }
  }

  bool feasible() const { return at(m_, rhs()) == 0; }

  std::vector<Rational> structural_solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = at(r, rhs());
    }
    return x;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  std::size_t rhs() const { return width_ - 1; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = at(row, col);
    for (std::size_t c = 0; c < width_; ++c) at(row, c) /= p;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const Rational factor = at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) at(r, c) -= factor * at(row, c);
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length does not match the matrix");
  Tableau tableau(a, b);
  tableau.solve();
  if (!tableau.feasible()) return std::nullopt;
  return tableau.structural_solution();
}

}  // namespace stochrat::lp
