#include "diagalg/cellcore.hpp"

#include <sstream>
#include <stdexcept>

namespace diagalg {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
    if (n % s == 0) return n == s;
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  auto mulmod = [&](uint64_t a, uint64_t b) {
    return (uint64_t)((unsigned __int128)a * b % n);
  };
  auto powmod = [&](uint64_t a, uint64_t e) {
    uint64_t x = 1;
    while (e) {
      if (e & 1) x = mulmod(x, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return x;
  };
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                     31ull, 37ull}) {
    uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

const std::vector<uint64_t>& fp_primes() {
  static const std::vector<uint64_t> primes = [] {
    std::vector<uint64_t> v;
    for (uint64_t n = (1ull << 30) - 1; v.size() < 32; n -= 2)
      if (is_prime_u64(n)) v.push_back(n);
    return v;
  }();
  return primes;
}

std::optional<uint64_t> fp_of(const Rat& x, uint64_t q0, uint64_t p) {
  (void)q0;
  Int num = x.get_num(), den = x.get_den();
  uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) return std::nullopt;
  uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  return fp_mul(n, fp_inv(d, p), p);
}

std::optional<uint64_t> fp_of(const RatFunc& x, uint64_t q0, uint64_t p) {
  return x.eval_mod(q0, p);
}

int fp_dense_rank(std::vector<uint64_t>& a, int rows, int cols, uint64_t p) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[(size_t)i * cols + col] % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j)
        std::swap(a[(size_t)piv * cols + j], a[(size_t)rank * cols + j]);
    uint64_t inv = fp_inv(a[(size_t)rank * cols + col] % p, p);
    for (int j = col; j < cols; ++j)
      a[(size_t)rank * cols + j] = fp_mul(a[(size_t)rank * cols + j] % p, inv, p);
    for (int i = rank + 1; i < rows; ++i) {
      uint64_t f = a[(size_t)i * cols + col] % p;
      if (!f) continue;
      uint64_t m = p - f;
      for (int j = col; j < cols; ++j)
        a[(size_t)i * cols + j] =
            fp_add(a[(size_t)i * cols + j] % p, fp_mul(m, a[(size_t)rank * cols + j], p), p);
    }
    ++rank;
  }
  return rank;
}

FpSpan::FpSpan(size_t dim, uint64_t p) : dim_(dim), p_(p) {
  if (p >= (1ull << 30)) throw std::invalid_argument("FpSpan prime must be < 2^30");
  binv_ = (uint64_t)((((unsigned __int128)1) << 64) / p);
  row_of_col_.assign(dim_, -1);
}

// Subtracts v[pivot] * row for every stored row; in fully reduced form the
// needed coefficients are just v at the pivot columns, independent of order.
void FpSpan::gather_axpy(std::vector<uint64_t>& v) const {
  int pending = 0;
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint64_t m = barrett_mod(v[pivots_[i]], p_, binv_);
    if (!m) continue;
    if (pending == 15) {
      for (size_t j = 0; j < dim_; ++j) v[j] = barrett_mod(v[j], p_, binv_);
      pending = 0;
    }
    uint64_t mm = p_ - m;
    const uint32_t* r = rows_[i].data();
    uint64_t* vv = v.data();
    for (size_t j = 0; j < dim_; ++j) vv[j] += mm * (uint64_t)r[j];
    // the pivot entry needs an exact cancellation, not just congruence
    v[pivots_[i]] = barrett_mod(v[pivots_[i]], p_, binv_);
    ++pending;
  }
}

bool FpSpan::finish(std::vector<uint64_t>& v) {
  size_t piv = dim_;
  for (size_t j = 0; j < dim_; ++j) {
    v[j] = barrett_mod(v[j], p_, binv_);
    if (v[j] && piv == dim_) piv = j;
  }
  if (piv == dim_) return false;
  uint64_t inv = fp_inv(v[piv], p_);
  std::vector<uint32_t> nr(dim_);
  for (size_t j = 0; j < dim_; ++j) nr[j] = (uint32_t)fp_mul(v[j], inv, p_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint64_t c = rows_[i][piv];
    if (!c) continue;
    uint64_t mm = p_ - c;
    uint32_t* r = rows_[i].data();
    const uint32_t* nrd = nr.data();
    for (size_t j = 0; j < dim_; ++j)
      r[j] = (uint32_t)barrett_mod((uint64_t)r[j] + mm * (uint64_t)nrd[j], p_, binv_);
  }
  row_of_col_[piv] = (int32_t)rows_.size();
  pivots_.push_back(piv);
  rows_.push_back(std::move(nr));
  return true;
}

bool FpSpan::insert(std::vector<uint64_t> v) {
  for (auto& x : v) x = barrett_mod(x, p_, binv_);
  gather_axpy(v);
  return finish(v);
}

bool FpSpan::insert_sparse(const std::vector<std::pair<size_t, uint64_t>>& sv) {
  std::vector<uint64_t> v(dim_, 0);
  for (auto& [i, c] : sv) v[i] = fp_add(v[i], c % p_, p_);
  for (auto& [i, c] : sv) {
    (void)c;
    int32_t ri = row_of_col_[i];
    if (ri < 0) continue;
    uint64_t m = barrett_mod(v[i], p_, binv_);
    if (!m) continue;
    uint64_t mm = p_ - m;
    const uint32_t* r = rows_[ri].data();
    uint64_t* vv = v.data();
    for (size_t j = 0; j < dim_; ++j)
      vv[j] = barrett_mod(vv[j] + mm * (uint64_t)r[j], p_, binv_);
  }
  return finish(v);
}

bool FpSpan::contains_sparse(const std::vector<std::pair<size_t, uint64_t>>& sv) const {
  std::vector<uint64_t> v(dim_, 0);
  for (auto& [i, c] : sv) v[i] = fp_add(v[i], c % p_, p_);
  for (auto& [i, c] : sv) {
    (void)c;
    int32_t ri = row_of_col_[i];
    if (ri < 0) continue;
    uint64_t m = barrett_mod(v[i], p_, binv_);
    if (!m) continue;
    uint64_t mm = p_ - m;
    const uint32_t* r = rows_[ri].data();
    for (size_t j = 0; j < dim_; ++j)
      v[j] = barrett_mod(v[j] + mm * (uint64_t)r[j], p_, binv_);
  }
  for (size_t j = 0; j < dim_; ++j)
    if (barrett_mod(v[j], p_, binv_)) return false;
  return true;
}

long RankReport::radical_dim() const {
  long s = 0;
  for (const auto& r : rows) s += r.rad() * (r.w + r.l);
  return s;
}

long RankReport::sum_w2() const {
  long s = 0;
  for (const auto& r : rows) s += r.w * r.w;
  return s;
}

long RankReport::sum_l2() const {
  long s = 0;
  for (const auto& r : rows) s += r.l * r.l;
  return s;
}

const RankRow& RankReport::row(const Partition& lambda) const {
  for (const auto& r : rows)
    if (r.lambda == lambda) return r;
  throw std::out_of_range("RankReport: no such lambda");
}

std::string RankReport::str() const {
  std::ostringstream os;
  for (const auto& r : rows)
    os << part_str(r.lambda) << ": w=" << r.w << " l=" << r.l << " rad=" << r.rad()
       << "\n";
  return os.str();
}

}  // namespace diagalg
