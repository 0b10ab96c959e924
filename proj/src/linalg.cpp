#include <bfly/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace bfly::linalg {

Int mod(Int x, Int m) {
  if (m == 0) return x;
  x %= m;
  return x < 0 ? x + m : x;
}

Int gcd(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

namespace {

struct Egcd {
  Int g, x, y;
};

Egcd egcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

Int mulmod(Int a, Int b, Int m) {
  if (m == 0) return a * b;
  return static_cast<Int>((static_cast<__int128>(a) * b) % m);
}

// Size of the ideal generated by x: smaller is a better pivot.
Int weight(Int x, Int m) {
  if (m == 0) return x < 0 ? -x : x;
  return gcd(x, m);
}

class Diagonalizer {
 public:
  Diagonalizer(Matrix a, Int m, int cols, bool track) : a_(std::move(a)), m_(m), cols_(cols), track_(track) {
    rows_ = static_cast<int>(a_.size());
    for (auto& row : a_) {
      row.resize(cols_, 0);
      for (auto& x : row) x = mod(x, m_);
    }
    if (track_) {
      v_.assign(cols_, std::vector<Int>(cols_, 0));
      vinv_.assign(cols_, std::vector<Int>(cols_, 0));
      for (int i = 0; i < cols_; ++i) v_[i][i] = vinv_[i][i] = 1;
    }
  }

  Diagonalization run() {
    int lim = std::min(rows_, cols_);
    Diagonalization out;
    out.diag.assign(lim, 0);
    for (int t = 0; t < lim; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        bool clean = true;
        for (int i = t + 1; i < rows_; ++i)
          if (a_[i][t] != 0) {
            clean = false;
            break;
          }
        if (clean) break;
      }
      out.diag[t] = a_[t][t];
    }
    if (m_ == 0)
      for (auto& d : out.diag) d = d < 0 ? -d : d;
    out.v = std::move(v_);
    out.vinv = std::move(vinv_);
    return out;
  }

 private:
  bool place_pivot(int t) {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < rows_; ++i)
      for (int j = t; j < cols_; ++j) {
        Int x = a_[i][j];
        if (x == 0) continue;
        Int w = weight(x, m_);
        if (bi < 0 || w < best) {
          bi = i;
          bj = j;
          best = w;
          if (w == 1) goto found;
        }
      }
    if (bi < 0) return false;
  found:
    if (bi != t) std::swap(a_[bi], a_[t]);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void swap_cols(int j, int k) {
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (track_) {
      for (auto& row : v_) std::swap(row[j], row[k]);
      std::swap(vinv_[j], vinv_[k]);
    }
  }

  // rows (t, i) <- [[x, y], [c, d]] * rows (t, i)
  void row_combo(int t, int i, Int x, Int y, Int c, Int d) {
    auto& rt = a_[t];
    auto& ri = a_[i];
    for (int j = 0; j < cols_; ++j) {
      Int p = rt[j], q = ri[j];
      if (p == 0 && q == 0) continue;
      rt[j] = mod(mulmod(x, p, m_) + mulmod(y, q, m_), m_);
      ri[j] = mod(mulmod(c, p, m_) + mulmod(d, q, m_), m_);
    }
  }

  // cols (t, j) <- cols (t, j) * [[x, c], [y, d]], i.e. new_t = x*col_t + y*col_j,
  // new_j = c*col_t + d*col_j.
  void col_combo(int t, int j, Int x, Int y, Int c, Int d) {
    for (auto& row : a_) {
      Int p = row[t], q = row[j];
      if (p == 0 && q == 0) continue;
      row[t] = mod(mulmod(x, p, m_) + mulmod(y, q, m_), m_);
      row[j] = mod(mulmod(c, p, m_) + mulmod(d, q, m_), m_);
    }
    if (!track_) return;
    for (auto& row : v_) {
      Int p = row[t], q = row[j];
      row[t] = mod(mulmod(x, p, m_) + mulmod(y, q, m_), m_);
      row[j] = mod(mulmod(c, p, m_) + mulmod(d, q, m_), m_);
    }
    // inverse of [[x, c], [y, d]] (det 1) is [[d, -c], [-y, x]]; rows of vinv transform.
    auto& rt = vinv_[t];
    auto& rj = vinv_[j];
    for (int k = 0; k < cols_; ++k) {
      Int p = rt[k], q = rj[k];
      rt[k] = mod(mulmod(d, p, m_) - mulmod(c, q, m_), m_);
      rj[k] = mod(mulmod(x, q, m_) - mulmod(y, p, m_), m_);
    }
  }

  void clear_column(int t) {
    for (int i = t + 1; i < rows_; ++i) {
      Int b = a_[i][t];
      if (b == 0) continue;
      Int a = a_[t][t];
      if (b % a == 0) {
        Int q = b / a;
        auto& rt = a_[t];
        auto& ri = a_[i];
        for (int j = t; j < cols_; ++j)
          if (rt[j] != 0) ri[j] = mod(ri[j] - mulmod(q, rt[j], m_), m_);
        continue;
      }
      Egcd e = egcd(a, b);
      row_combo(t, i, mod(e.x, m_), mod(e.y, m_), mod(-b / e.g, m_), mod(a / e.g, m_));
    }
  }

  void clear_row(int t) {
    for (int j = t + 1; j < cols_; ++j) {
      Int b = a_[t][j];
      if (b == 0) continue;
      Int a = a_[t][t];
      if (b % a == 0) {
        Int q = b / a;
        col_combo(t, j, 1, 0, mod(-q, m_), 1);
        continue;
      }
      Egcd e = egcd(a, b);
      col_combo(t, j, mod(e.x, m_), mod(e.y, m_), mod(-b / e.g, m_), mod(a / e.g, m_));
    }
  }

  Matrix a_;
  Int m_;
  int rows_ = 0, cols_;
  bool track_;
  Matrix v_, vinv_;
};

}  // namespace

Diagonalization diagonalize(Matrix a, Int modulus, int cols, bool track) {
  return Diagonalizer(std::move(a), modulus, cols, track).run();
}

std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders) {
  std::map<Int, std::vector<Int>> primary;  // prime -> prime powers
  for (Int c : cyclic_orders) {
    Int n = c < 0 ? -c : c;
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      Int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      primary[p].push_back(q);
    }
    if (n > 1) primary[n].push_back(n);
  }
  size_t len = 0;
  for (auto& [p, v] : primary) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<Int> out(len, 1);
  for (auto& [p, v] : primary)
    for (size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace bfly::linalg
