#include "rrb/smith.hpp"

#include <utility>

namespace rrb {

namespace {

struct Xgcd {
  BigInt g, s, t;
};

Xgcd xgcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

class Reducer {
 public:
  Reducer(BigMatrix m, std::size_t cols)
      : m_(std::move(m)), rows_(m_.size()), cols_(cols), V_(identity_matrix(cols)),
        V_inv_(identity_matrix(cols)) {}

  SmithForm run() {
    const std::size_t steps = std::min(rows_, cols_);
    std::vector<BigInt> diag(steps);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (column_clear(t) && !fix_divisibility(t)) break;
      }
      if (m_[t][t] < 0) negate_column(t);
      diag[t] = m_[t][t];
    }
    return SmithForm{std::move(diag), std::move(V_), std::move(V_inv_)};
  }

 private:
  bool place_pivot(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    BigInt best;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (m_[i][j] == 0) continue;
        BigInt a = abs(m_[i][j]);
        if (bi == rows_ || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (bi == rows_) return false;
    std::swap(m_[t], m_[bi]);
    swap_columns(t, bj);
    return true;
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (m_[i][t] != 0) return false;
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (m_[t][j] != 0) return false;
    return true;
  }

  void clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (m_[i][t] == 0) continue;
      const BigInt a = m_[t][t], b = m_[i][t];
      if (b % a == 0) {
        const BigInt q = b / a;
        for (std::size_t j = t; j < cols_; ++j)
          if (m_[t][j] != 0) m_[i][j] -= q * m_[t][j];
        continue;
      }
      const Xgcd x = xgcd(a, b);
      const BigInt ag = a / x.g, bg = b / x.g;
      for (std::size_t j = t; j < cols_; ++j) {
        const BigInt u = m_[t][j], v = m_[i][j];
        m_[t][j] = x.s * u + x.t * v;
        m_[i][j] = -bg * u + ag * v;
      }
    }
  }

  void clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (m_[t][j] == 0) continue;
      const BigInt a = m_[t][t], b = m_[t][j];
      if (b % a == 0) {
        add_column_multiple(j, t, -(b / a));
        continue;
      }
      const Xgcd x = xgcd(a, b);
      combine_columns(t, j, x.s, x.t, a / x.g, b / x.g);
    }
  }

  bool fix_divisibility(std::size_t t) {
    const BigInt& p = m_[t][t];
    for (std::size_t i = t + 1; i < rows_; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (m_[i][j] % p != 0) {
          for (std::size_t k = t; k < cols_; ++k) m_[t][k] += m_[i][k];
          return true;
        }
    return false;
  }

  // col_j += k * col_i
  void add_column_multiple(std::size_t j, std::size_t i, const BigInt& k) {
    for (std::size_t r = 0; r < rows_; ++r)
      if (m_[r][i] != 0) m_[r][j] += k * m_[r][i];
    for (std::size_t r = 0; r < cols_; ++r)
      if (V_[r][i] != 0) V_[r][j] += k * V_[r][i];
    for (std::size_t c = 0; c < cols_; ++c)
      if (V_inv_[j][c] != 0) V_inv_[i][c] -= k * V_inv_[j][c];
  }

  // [c_i, c_j] <- [s c_i + t c_j, -bg c_i + ag c_j], where s*ag + t*bg = 1.
  void combine_columns(std::size_t i, std::size_t j, const BigInt& s, const BigInt& t,
                       const BigInt& ag, const BigInt& bg) {
    auto mix = [&](BigMatrix& m, std::size_t nrows) {
      for (std::size_t r = 0; r < nrows; ++r) {
        const BigInt u = m[r][i], v = m[r][j];
        if (u == 0 && v == 0) continue;
        m[r][i] = s * u + t * v;
        m[r][j] = -bg * u + ag * v;
      }
    };
    mix(m_, rows_);
    mix(V_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      const BigInt u = V_inv_[i][c], v = V_inv_[j][c];
      if (u == 0 && v == 0) continue;
      V_inv_[i][c] = ag * u + bg * v;
      V_inv_[j][c] = -t * u + s * v;
    }
  }

  void swap_columns(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : m_) std::swap(row[i], row[j]);
    for (auto& row : V_) std::swap(row[i], row[j]);
    std::swap(V_inv_[i], V_inv_[j]);
  }

  void negate_column(std::size_t i) {
    for (auto& row : m_) row[i] = -row[i];
    for (auto& row : V_) row[i] = -row[i];
    for (auto& x : V_inv_[i]) x = -x;
  }

  BigMatrix m_;
  std::size_t rows_, cols_;
  BigMatrix V_, V_inv_;
};

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m, std::size_t cols) {
  BigMatrix copy = m;
  for (auto& row : copy) row.resize(cols);
  return Reducer(std::move(copy), cols).run();
}

BigMatrix identity_matrix(std::size_t n) {
  BigMatrix out(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

std::vector<BigInt> row_times(const std::vector<BigInt>& row, const BigMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::vector<BigInt> out(cols);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) out[j] += row[i] * m[i][j];
  }
  return out;
}

}  // namespace rrb
