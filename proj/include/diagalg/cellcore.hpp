#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"
#include "symcomb.hpp"

namespace diagalg {

bool is_prime_u64(uint64_t n);
// Primes just under 2^30, largest first.
const std::vector<uint64_t>& fp_primes();

// x mod p for x < 2^60 + p, binv = floor(2^64 / p).
inline uint64_t barrett_mod(uint64_t x, uint64_t p, uint64_t binv) {
  uint64_t q = (uint64_t)(((unsigned __int128)x * binv) >> 64);
  uint64_t r = x - q * p;
  if (r >= p) r -= p;
  return r;
}

// Maps exact coefficients into F_p; nullopt when a denominator vanishes.
std::optional<uint64_t> fp_of(const Rat& x, uint64_t q0, uint64_t p);
std::optional<uint64_t> fp_of(const RatFunc& x, uint64_t q0, uint64_t p);

// In-place rank of a dense matrix over F_p (row-major, rows x cols).
int fp_dense_rank(std::vector<uint64_t>& a, int rows, int cols, uint64_t p);

// Fully reduced echelon span over F_p: every stored row has a unit pivot and
// zeros at all other pivot columns, so reducing a candidate needs exactly one
// axpy per nonzero pivot coordinate.  Rows are kept as u32 (p < 2^30).
class FpSpan {
 public:
  FpSpan(size_t dim, uint64_t p);
  size_t dim() const { return dim_; }
  uint64_t prime() const { return p_; }
  size_t rank() const { return rows_.size(); }
  // Entries of v reduced mod p on entry; v is consumed.
  bool insert(std::vector<uint64_t> v);
  bool insert_sparse(const std::vector<std::pair<size_t, uint64_t>>& v);
  bool contains_sparse(const std::vector<std::pair<size_t, uint64_t>>& v) const;

 private:
  size_t dim_;
  uint64_t p_, binv_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<size_t> pivots_;
  std::vector<int32_t> row_of_col_;

  void gather_axpy(std::vector<uint64_t>& v) const;
  bool finish(std::vector<uint64_t>& v);
};

// Fully reduced span over an exact field K, same contract as FpSpan.
template <class K>
class ReducedSpan {
 public:
  explicit ReducedSpan(size_t dim) : dim_(dim), row_of_col_(dim, -1) {}
  size_t rank() const { return rows_.size(); }

  bool insert_sparse(const std::vector<std::pair<size_t, K>>& sv) {
    std::vector<K> v(dim_, K(0));
    for (auto& [i, c] : sv) v[i] = v[i] + c;
    for (auto& [i, c] : sv) {
      (void)c;
      int32_t r = row_of_col_[i];
      if (r < 0) continue;
      K m = v[i];
      if (m == K(0)) continue;
      const auto& row = rows_[r];
      for (size_t j = 0; j < dim_; ++j)
        if (!(row[j] == K(0))) v[j] = v[j] - m * row[j];
    }
    return finish(std::move(v));
  }

  bool insert(std::vector<K> v) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      K m = v[pivots_[i]];
      if (m == K(0)) continue;
      const auto& row = rows_[i];
      for (size_t j = 0; j < dim_; ++j)
        if (!(row[j] == K(0))) v[j] = v[j] - m * row[j];
    }
    return finish(std::move(v));
  }

 private:
  size_t dim_;
  std::vector<std::vector<K>> rows_;
  std::vector<size_t> pivots_;
  std::vector<int32_t> row_of_col_;

  bool finish(std::vector<K>&& v) {
    size_t piv = dim_;
    for (size_t j = 0; j < dim_; ++j)
      if (!(v[j] == K(0))) {
        piv = j;
        break;
      }
    if (piv == dim_) return false;
    K inv = K(1) / v[piv];
    for (auto& x : v) x = x * inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      K c = rows_[i][piv];
      if (c == K(0)) continue;
      auto& row = rows_[i];
      for (size_t j = 0; j < dim_; ++j)
        if (!(v[j] == K(0))) row[j] = row[j] - c * v[j];
    }
    row_of_col_[piv] = (int32_t)rows_.size();
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
  }
};

// --- rank strategies -------------------------------------------------------

struct RankOptions {
  bool exact = false;  // force exact elimination over the coefficient field
  uint64_t seed = 0;
  int trials = 2;  // independent (prime, point) certifications
};

// Rank of a matrix with exact coefficients, default: modular evaluation at
// `trials` independent (prime, point) pairs; any disagreement escalates to
// exact elimination.  A point where some entry has a pole is skipped.
template <class K>
long modular_rank(const Matrix<K>& m, const RankOptions& opt = {}) {
  if (opt.exact || (size_t)m.rows * m.cols == 0) return matrix_rank(m);
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  const auto& primes = fp_primes();
  long rank = -1;
  int done = 0, attempts = 0;
  size_t pi = rng() % primes.size();
  while (done < opt.trials) {
    if (++attempts > 64) return matrix_rank(m);
    uint64_t p = primes[pi % primes.size()];
    ++pi;
    uint64_t q0 = 2 + rng() % (p - 3);
    std::vector<uint64_t> a((size_t)m.rows * m.cols);
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) {
      auto v = fp_of(m.a[i], q0, p);
      if (!v) ok = false;
      else a[i] = *v;
    }
    if (!ok) continue;  // pole at this (prime, point); pick another
    long r = fp_dense_rank(a, m.rows, m.cols, p);
    if (rank < 0) rank = r;
    else if (rank != r) return matrix_rank(m);  // escalate
    ++done;
  }
  return rank;
}

// --- cell-module rank bookkeeping ------------------------------------------

struct RankRow {
  Partition lambda;
  long w = 0;  // dim W(lambda)
  long l = 0;  // rank of the Gram form = dim L(lambda)
  long rad() const { return w - l; }
};

struct RankReport {
  std::vector<RankRow> rows;
  // dim rad = sum over lambda of r_lambda (w_lambda + l_lambda)
  long radical_dim() const;
  long sum_w2() const;
  long sum_l2() const;
  const RankRow& row(const Partition& lambda) const;
  std::string str() const;
};

template <class K>
struct CellDatum {
  std::vector<Partition> poset;
  std::function<long(const Partition&)> weight;
  std::function<Matrix<K>(const Partition&)> gram;
};

template <class K>
RankReport simple_dims(const CellDatum<K>& datum, const RankOptions& opt = {}) {
  RankReport rep;
  for (const auto& lam : datum.poset) {
    RankRow row;
    row.lambda = lam;
    row.w = datum.weight(lam);
    Matrix<K> g = datum.gram(lam);
    RankOptions o = opt;
    o.seed = opt.seed ^ std::hash<std::string>{}(part_str(lam));
    row.l = modular_rank(g, o);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// --- two-sided ideal closure ------------------------------------------------

// Sparse algebra element in a fixed basis of size dim.
template <class K>
using SparseVec = std::vector<std::pair<size_t, K>>;

// One-sided multiplication oracles; the closure runs a BFS over images of the
// seed vectors, enqueueing every action of every rank-increasing vector.
template <class K>
using SparseAction = std::function<SparseVec<K>(const SparseVec<K>&)>;

template <class K>
long ideal_closure_dim_exact(size_t dim, const std::vector<SparseVec<K>>& seeds,
                             const std::vector<SparseAction<K>>& actions) {
  ReducedSpan<K> span(dim);
  std::vector<SparseVec<K>> kept;
  size_t next = 0;
  for (const auto& s : seeds)
    if (!s.empty() && span.insert_sparse(s)) kept.push_back(s);
  while (next < kept.size()) {
    SparseVec<K> v = kept[next++];
    for (const auto& act : actions) {
      SparseVec<K> w = act(v);
      if (!w.empty() && span.insert_sparse(w)) kept.push_back(w);
    }
  }
  return (long)span.rank();
}

// Modular run of the same BFS at one prime; exact sparse vectors, F_p span.
template <class K>
long ideal_closure_dim_at(size_t dim, const std::vector<SparseVec<K>>& seeds,
                          const std::vector<SparseAction<K>>& actions, uint64_t q0,
                          uint64_t p) {
  FpSpan span(dim, p);
  auto to_fp = [&](const SparseVec<K>& v,
                   std::vector<std::pair<size_t, uint64_t>>& out) -> bool {
    out.clear();
    for (auto& [i, c] : v) {
      auto m = fp_of(c, q0, p);
      if (!m) return false;
      if (*m) out.push_back({i, *m});
    }
    return true;
  };
  std::vector<std::pair<size_t, uint64_t>> fv;
  std::vector<SparseVec<K>> kept;
  size_t next = 0;
  for (const auto& s : seeds) {
    if (!to_fp(s, fv)) return -1;
    if (!fv.empty() && span.insert_sparse(fv)) kept.push_back(s);
  }
  while (next < kept.size()) {
    SparseVec<K> v = kept[next++];
    for (const auto& act : actions) {
      SparseVec<K> w = act(v);
      if (!to_fp(w, fv)) return -1;
      if (!fv.empty() && span.insert_sparse(fv)) kept.push_back(std::move(w));
    }
  }
  return (long)span.rank();
}

// Two-trial modular closure with escalation to the exact closure.
template <class K>
long ideal_closure_dim(size_t dim, const std::vector<SparseVec<K>>& seeds,
                       const std::vector<SparseAction<K>>& actions,
                       const RankOptions& opt = {}) {
  if (opt.exact) return ideal_closure_dim_exact(dim, seeds, actions);
  std::mt19937_64 rng(opt.seed ^ 0xd1b54a32d192ed03ull);
  const auto& primes = fp_primes();
  size_t pi = rng() % primes.size();
  long rank = -1;
  int done = 0, attempts = 0;
  while (done < opt.trials) {
    if (++attempts > 16) return ideal_closure_dim_exact(dim, seeds, actions);
    uint64_t p = primes[pi % primes.size()];
    ++pi;
    uint64_t q0 = 2 + rng() % (p - 3);
    long r = ideal_closure_dim_at(dim, seeds, actions, q0, p);
    if (r < 0) continue;
    if (rank < 0) rank = r;
    else if (rank != r) return ideal_closure_dim_exact(dim, seeds, actions);
    ++done;
  }
  return rank;
}

// --- radical containment ----------------------------------------------------

// Checks rad(gram) is inside the submodule generated by seed_vectors under the
// given action matrices.  Everything is exact and small (cell-module sized).
template <class K>
bool radical_contained(const Matrix<K>& gram, const std::vector<Matrix<K>>& gens,
                       const std::vector<std::vector<K>>& seed_vectors) {
  int d = gram.rows;
  EchelonSpan<K> span(d);
  std::vector<std::vector<K>> kept;
  size_t next = 0;
  for (const auto& s : seed_vectors)
    if (span.insert(s)) kept.push_back(s);
  while (next < kept.size()) {
    std::vector<K> v = kept[next++];
    for (const auto& g : gens) {
      std::vector<K> w = g.apply(v);
      if (span.insert(w)) kept.push_back(std::move(w));
    }
  }
  for (const auto& nv : null_space(gram))
    if (!span.contains(nv)) return false;
  return true;
}

}  // namespace diagalg
