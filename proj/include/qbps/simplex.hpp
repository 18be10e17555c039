#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

// Dense two-phase tableau simplex for standard-form programs
//     minimize c.x  subject to  A x = b,  x >= 0
// over an exact field (mpq_rational in this library). Pivoting follows
// Bland's rule everywhere: the entering column is the lowest-index column with
// negative reduced cost, and ratio-test ties leave on the lowest-index basic
// variable. With exact arithmetic this guarantees termination.

namespace qbps::lp {

enum class Status { optimal, infeasible, unbounded };

template <class T>
struct Result {
  Status status = Status::infeasible;
  std::vector<T> x;  // primal solution, valid when status == optimal
  T objective{};
  std::size_t pivots = 0;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
class Tableau {
 public:
  // Rows of [A | I_artificial | b] with b >= 0. A row owning a unit column
  // (1 in that row, 0 elsewhere) starts with it basic; its artificial is
  // frozen out. Every other row starts on its artificial.
  Tableau(const Matrix<T>& a, const std::vector<T>& b, std::size_t n)
      : n_(n), m_(a.size()), frozen_(n + a.size(), false) {
    rows_.resize(m_, std::vector<T>(n_ + m_ + 1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) throw std::invalid_argument("simplex: ragged constraint matrix");
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? T(-a[i][j]) : a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][n_ + m_] = flip ? T(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
    std::vector<bool> used(n_, false);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (used[j] || rows_[i][j] != 1) continue;
        bool unit = true;
        for (std::size_t r = 0; r < m_ && unit; ++r)
          if (r != i && rows_[r][j] != 0) unit = false;
        if (!unit) continue;
        used[j] = true;
        frozen_[basis_[i]] = true;
        basis_[i] = j;
        break;
      }
    cost_.assign(n_ + m_ + 1, T(0));
  }

  std::size_t rhs() const { return n_ + m_; }

  // Reduced-cost row for objective weights w over all columns.
  void set_objective(const std::vector<T>& w) {
    for (std::size_t j = 0; j <= rhs(); ++j) cost_[j] = j < rhs() ? w[j] : T(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T cb = w[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= rhs(); ++j) cost_[j] -= cb * rows_[i][j];
    }
  }

  // Runs Bland pivots over columns [0, limit). Returns false on unboundedness.
  bool optimize(std::size_t limit, std::size_t& pivots) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (!frozen_[j] && cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = rows_.size();
      T best{};
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        T ratio = rows_[i][rhs()] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T piv = rows_[r][c];
    for (auto& v : rows_[r]) v /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const T f = rows_[i][c];
      for (std::size_t j = 0; j <= rhs(); ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    if (cost_[c] != 0) {
      const T f = cost_[c];
      for (std::size_t j = 0; j <= rhs(); ++j)
        if (rows_[r][j] != 0) cost_[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  // Pivots basic artificials onto structural columns; drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col == n_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  T objective_value() const { return -cost_[rhs()]; }

  std::vector<T> solution() const {
    std::vector<T> x(n_, T(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][rhs()];
    return x;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  Matrix<T> rows_;
  std::vector<std::size_t> basis_;
  std::vector<T> cost_;
  std::vector<bool> frozen_;
};

}  // namespace detail

template <class T>
Result<T> minimize(const Matrix<T>& a, const std::vector<T>& b, const std::vector<T>& c) {
  if (a.size() != b.size()) throw std::invalid_argument("simplex: row count of A and b differ");
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  detail::Tableau<T> tab(a, b, n);
  Result<T> res;

  std::vector<T> phase1(n + m, T(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.set_objective(phase1);
  tab.optimize(n + m, res.pivots);
  if (tab.objective_value() != 0) {
    res.status = Status::infeasible;
    return res;
  }
  tab.expel_artificials();

  std::vector<T> phase2(n + m, T(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tab.set_objective(phase2);
  if (!tab.optimize(n, res.pivots)) {
    res.status = Status::unbounded;
    return res;
  }
  res.status = Status::optimal;
  res.x = tab.solution();
  res.objective = tab.objective_value();
  return res;
}

/// Phase 1 only: some x >= 0 with A x = b, or nullopt.
template <class T>
std::optional<std::vector<T>> find_feasible(const Matrix<T>& a, const std::vector<T>& b, std::size_t n) {
  if (a.size() != b.size()) throw std::invalid_argument("simplex: row count of A and b differ");
  const std::size_t m = a.size();
  detail::Tableau<T> tab(a, b, n);
  std::vector<T> phase1(n + m, T(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.set_objective(phase1);
  std::size_t pivots = 0;
  tab.optimize(n + m, pivots);
  if (tab.objective_value() != 0) return std::nullopt;
  return tab.solution();
}

}  // namespace qbps::lp
