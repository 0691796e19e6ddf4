#include "msym/snf.hpp"

#include <algorithm>
#include <map>

#include "msym/error.hpp"

namespace msym {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t m = a.size();
  const std::size_t k = b.size();
  const std::size_t n = k ? b[0].size() : 0;
  IntMatrix c(m, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(IntMatrix d, std::size_t cols, bool transforms)
      : d_(std::move(d)), m_(d_.size()), n_(m_ ? d_[0].size() : cols), track_(transforms) {
    if (track_) {
      u_ = identity_matrix(m_);
      v_ = identity_matrix(n_);
    }
  }

  void run() {
    for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
      if (!bring_smallest(t, t, t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (d_[i][t] == 0) continue;
          row_add(i, t, -(d_[i][t] / d_[t][t]));
          if (d_[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (d_[t][j] == 0) continue;
          col_add(j, t, -(d_[t][j] / d_[t][t]));
          if (d_[t][j] != 0) clean = false;
        }
        if (!clean) {
          bring_smallest_cross(t);
          continue;
        }
        // Keep d_t dividing everything below and to the right.
        bool divides = true;
        for (std::size_t i = t + 1; i < m_ && divides; ++i)
          for (std::size_t j = t + 1; j < n_; ++j)
            if (d_[i][j] % d_[t][t] != 0) {
              row_add(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (d_[t][t] < 0) negate_row(t);
    }
  }

  SNFResult result() && {
    SNFResult r;
    for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
      if (d_[t][t] == 0) break;
      r.invariant_factors.push_back(d_[t][t]);
      if (d_[t][t] != 1) r.torsion.push_back(d_[t][t]);
    }
    r.rank = r.invariant_factors.size();
    r.D = std::move(d_);
    r.U = std::move(u_);
    r.V = std::move(v_);
    return r;
  }

 private:
  static BigInt mag(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

  // Moves the smallest nonzero entry of the block [r0.., c0..] to (t, t).
  bool bring_smallest(std::size_t t, std::size_t r0, std::size_t c0) {
    std::size_t bi = m_, bj = n_;
    BigInt best = 0;
    for (std::size_t i = r0; i < m_; ++i)
      for (std::size_t j = c0; j < n_; ++j)
        if (d_[i][j] != 0 && (bi == m_ || mag(d_[i][j]) < best)) {
          best = mag(d_[i][j]);
          bi = i;
          bj = j;
        }
    if (bi == m_) return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  // Smallest nonzero entry in row t / column t (from t on) moved to (t, t).
  void bring_smallest_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    BigInt best = d_[t][t] == 0 ? BigInt(-1) : mag(d_[t][t]);
    for (std::size_t i = t + 1; i < m_; ++i)
      if (d_[i][t] != 0 && (best < 0 || mag(d_[i][t]) < best)) {
        best = mag(d_[i][t]);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n_; ++j)
      if (d_[t][j] != 0 && (best < 0 || mag(d_[t][j]) < best)) {
        best = mag(d_[t][j]);
        bi = t;
        bj = j;
      }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d_[a], d_[b]);
    if (track_) std::swap(u_[a], u_[b]);
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d_) std::swap(row[a], row[b]);
    if (track_)
      for (auto& row : v_) std::swap(row[a], row[b]);
  }
  void row_add(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < n_; ++j)
      if (d_[src][j] != 0) d_[dst][j] += k * d_[src][j];
    if (track_)
      for (std::size_t j = 0; j < m_; ++j)
        if (u_[src][j] != 0) u_[dst][j] += k * u_[src][j];
  }
  void col_add(std::size_t dst, std::size_t src, const BigInt& k) {
    for (auto& row : d_)
      if (row[src] != 0) row[dst] += k * row[src];
    if (track_)
      for (auto& row : v_)
        if (row[src] != 0) row[dst] += k * row[src];
  }
  void negate_row(std::size_t t) {
    for (auto& x : d_[t]) x = -x;
    if (track_)
      for (auto& x : u_[t]) x = -x;
  }

  IntMatrix d_, u_, v_;
  std::size_t m_, n_;
  bool track_;
};

using BigRow = std::vector<std::pair<std::uint32_t, BigInt>>;

// a*x + b*y
BigRow combine(const BigInt& a, const BigRow& x, const BigInt& b, const BigRow& y) {
  BigRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      if (a != 0) out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      if (b != 0) out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      BigInt v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// g = s*a + t*b with g = gcd(a, b) > 0.
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

void make_leading_positive(BigRow& r) {
  if (!r.empty() && r.front().second < 0)
    for (auto& [c, v] : r) v = -v;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != a[0].size()) throw InternalError("ragged matrix");
  SmithReducer r(a, cols, true);
  r.run();
  return std::move(r).result();
}

Cokernel cokernel(std::size_t cols, const std::vector<SparseRow>& rows) {
  std::vector<BigRow> pivots(cols);
  for (const SparseRow& input : rows) {
    BigRow r;
    r.reserve(input.size());
    for (const auto& [c, v] : input) {
      if (c >= cols) throw InternalError("row entry outside the column range");
      if (v != 0) r.emplace_back(c, BigInt(v));
    }
    while (!r.empty()) {
      const std::uint32_t c = r.front().first;
      BigRow& p = pivots[c];
      if (p.empty()) {
        make_leading_positive(r);
        p = std::move(r);
        break;
      }
      const BigInt& a = p.front().second;
      const BigInt& b = r.front().second;
      if (b % a == 0) {
        r = combine(1, r, -(b / a), p);
        continue;
      }
      BigInt g, s, t;
      ext_gcd(a, b, g, s, t);
      const BigInt ag = a / g, bg = b / g;
      BigRow np = combine(s, p, t, r);
      r = combine(ag, r, -bg, p);
      p = std::move(np);
      make_leading_positive(p);
    }
  }

  // A pivot equal to 1 lets its column be eliminated together with its row.
  std::vector<bool> unit(cols, false);
  std::size_t units = 0;
  std::vector<BigRow> rest;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivots[c].empty()) continue;
    if (pivots[c].front().second == 1) {
      unit[c] = true;
      ++units;
    } else {
      rest.push_back(pivots[c]);
    }
  }
  for (BigRow& r : rest) {
    for (;;) {
      auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return unit[e.first]; });
      if (it == r.end()) break;
      const BigInt k = it->second;
      r = combine(1, r, -k, pivots[it->first]);
    }
  }

  std::map<std::uint32_t, std::size_t> remap;
  for (const BigRow& r : rest)
    for (const auto& [c, v] : r) remap.emplace(c, 0);
  std::size_t k = 0;
  for (auto& [c, idx] : remap) idx = k++;
  IntMatrix dense(rest.size(), std::vector<BigInt>(remap.size(), 0));
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (const auto& [c, v] : rest[i]) dense[i][remap[c]] = v;

  SmithReducer red(std::move(dense), remap.size(), false);
  red.run();
  const SNFResult tail = std::move(red).result();

  Cokernel out;
  out.cols = cols;
  out.invariant_factors.assign(units, BigInt(1));
  for (const BigInt& d : tail.invariant_factors) out.invariant_factors.push_back(d);
  out.rank = out.invariant_factors.size();
  out.free_rank = cols - out.rank;
  out.torsion = tail.torsion;
  return out;
}

}  // namespace msym
