#include "diagalg/symcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagalg {

// ---- partitions ----

int part_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition r;
  for (int i = 1; p.size() && i <= p[0]; ++i) {
    int c = 0;
    for (int part : p) c += part >= i;
    r.push_back(c);
  }
  return r;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return part_size(a) == part_size(b);
}

std::string part_str(const Partition& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

Partition part_parse(const std::string& s) {
  Partition p;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 0 || (v == 0 && !(p.empty() && is.eof()))) throw std::invalid_argument("bad partition: " + s);
    if (v > 0) p.push_back(v);
  }
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) throw std::invalid_argument("parts not decreasing: " + s);
  return p;
}

static void gen_parts(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_parts(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_parts(n, n, cur, out);
  if (n == 0) out = {Partition{}};
  return out;  // descending lexicographic, refines dominance
}

Int hook_dim(const Partition& p) {
  int n = part_size(p);
  if (n == 0) return 1;
  Partition conj = conjugate(p);
  Int hooks = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= p[i] - j + conj[j] - (int)i - 1;
  return factorial(n) / hooks;
}

std::vector<Partition> lambda_poset(int r) {
  std::vector<Partition> out;
  for (int t = r; t >= 0; t -= 2)
    for (auto& p : partitions_of(t)) out.push_back(p);
  return out;
}

Int m_lambda_size(int r, const Partition& lambda) {
  int t = part_size(lambda);
  if ((r - t) % 2 || t > r) throw std::invalid_argument("lambda not in Lambda(r)");
  int k = (r - t) / 2;
  return binomial(r, t) * odd_double_factorial(k) * hook_dim(lambda);
}

std::vector<Partition> lambda_zero(int r) {
  std::vector<Partition> out;
  for (auto& p : lambda_poset(r)) {
    Partition c = conjugate(p);
    int two_cols = (c.size() > 0 ? c[0] : 0) + (c.size() > 1 ? c[1] : 0);
    if (two_cols <= 3) out.push_back(p);
  }
  return out;
}

// ---- tableaux ----

static void gen_standard(const Partition& p, Tableau& t, std::vector<int>& heights, int next,
                         int n, std::vector<Tableau>& out) {
  if (next > n) {
    out.push_back(t);
    return;
  }
  for (size_t row = 0; row < p.size(); ++row) {
    int col = heights[row];
    if (col >= p[row]) continue;
    if (row > 0 && heights[row - 1] <= col) continue;
    t[row].push_back(next);
    ++heights[row];
    gen_standard(p, t, heights, next + 1, n, out);
    --heights[row];
    t[row].pop_back();
  }
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  Tableau t(p.size());
  std::vector<int> heights(p.size(), 0);
  gen_standard(p, t, heights, 1, part_size(p), out);
  return out;
}

Partition tableau_shape(const Tableau& t) {
  Partition p;
  for (auto& row : t) p.push_back((int)row.size());
  return p;
}

Tableau row_reading_tableau(const Partition& p) {
  Tableau t;
  int v = 1;
  for (int len : p) {
    std::vector<int> row(len);
    for (int j = 0; j < len; ++j) row[j] = v++;
    t.push_back(row);
  }
  return t;
}

// ---- permutations, RSK ----

int perm_length(const Perm& w) {
  int l = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) l += w[i] > w[j];
  return l;
}

Perm perm_inverse(const Perm& w) {
  Perm r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[w[i]] = (int)i;
  return r;
}

Perm perm_mul(const Perm& u, const Perm& v) {
  Perm r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[v[i]];
  return r;
}

std::vector<int> perm_reduced_word(Perm w) {
  // peel descents off the right: w = w' o s_j shortens w', collect in reverse
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        word.push_back((int)j);
        moved = true;
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::pair<Tableau, Tableau> rsk(const Perm& w) {
  Tableau P, Q;
  for (size_t step = 0; step < w.size(); ++step) {
    int x = w[step] + 1;
    size_t row = 0;
    while (true) {
      if (row == P.size()) {
        P.push_back({x});
        Q.push_back({(int)step + 1});
        break;
      }
      auto it = std::upper_bound(P[row].begin(), P[row].end(), x);
      if (it == P[row].end()) {
        P[row].push_back(x);
        Q[row].push_back((int)step + 1);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {P, Q};
}

Perm rsk_inverse(const Tableau& P0, const Tableau& Q) {
  Tableau P = P0;
  int n = 0;
  for (auto& row : Q) n += (int)row.size();
  Perm w(n);
  for (int step = n; step >= 1; --step) {
    // locate step in Q (always at the end of its row)
    int row = -1;
    for (size_t i = 0; i < Q.size(); ++i)
      if ((int)P[i].size() > 0 && Q[i][P[i].size() - 1] == step) row = (int)i;
    if (row < 0) throw std::invalid_argument("Q is not a standard tableau matching P");
    int x = P[row].back();
    P[row].pop_back();
    for (int r = row - 1; r >= 0; --r) {
      auto it = std::lower_bound(P[r].begin(), P[r].end(), x);
      --it;
      std::swap(x, *it);
    }
    w[step - 1] = x - 1;
  }
  return w;
}

// ---- SymGroup ----

static uint64_t perm_key(const Perm& w) {
  uint64_t k = 0;
  for (size_t i = 0; i < w.size(); ++i) k |= (uint64_t)w[i] << (4 * i);
  return k;
}

SymGroup::SymGroup(int t_) : t(t_) {
  if (t < 1 || t > 8) throw std::invalid_argument("SymGroup supports 1 <= t <= 8");
  Perm w(t);
  std::iota(w.begin(), w.end(), 0);
  do {
    rank_[perm_key(w)] = (int)elems_.size();
    elems_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  N = (int)elems_.size();
  len_.resize(N);
  inv_.resize(N);
  for (int i = 0; i < N; ++i) {
    len_[i] = perm_length(elems_[i]);
    inv_[i] = index(perm_inverse(elems_[i]));
  }
  smul_.assign(t - 1, std::vector<int>(N));
  muls_.assign(t - 1, std::vector<int>(N));
  for (int s = 0; s < t - 1; ++s)
    for (int i = 0; i < N; ++i) {
      Perm a = elems_[i];
      for (auto& v : a)
        if (v == s)
          v = s + 1;
        else if (v == s + 1)
          v = s;
      smul_[s][i] = index(a);
      Perm b = elems_[i];
      std::swap(b[s], b[s + 1]);
      muls_[s][i] = index(b);
    }
  // Bruhat order by induction on length: with sw < w,
  //   v <= w  iff  (sv < v ? sv <= sw : v <= sw).
  int words = (N + 63) / 64;
  leq_.assign(N, std::vector<uint64_t>(words, 0));
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return len_[a] < len_[b]; });
  for (int w : order) {
    if (len_[w] == 0) {
      leq_[w][w / 64] |= 1ull << (w % 64);
      continue;
    }
    int s = 0;
    while (len_[smul_[s][w]] > len_[w]) ++s;
    int sw = smul_[s][w];
    for (int v = 0; v < N; ++v) {
      int sv = smul_[s][v];
      int src = len_[sv] < len_[v] ? sv : v;
      if (leq_[sw][src / 64] >> (src % 64) & 1) leq_[w][v / 64] |= 1ull << (v % 64);
    }
    leq_[w][w / 64] |= 1ull << (w % 64);
  }
}

int SymGroup::index(const Perm& w) const {
  auto it = rank_.find(perm_key(w));
  if (it == rank_.end()) throw std::invalid_argument("permutation not in group");
  return it->second;
}

bool SymGroup::bruhat_leq(int v, int w) const { return leq_[w][v / 64] >> (v % 64) & 1; }

static KLPoly poly_add(KLPoly a, const KLPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

static KLPoly poly_shift(const KLPoly& a, int k, long long scale) {
  if (a.empty() || scale == 0) return {};
  KLPoly r(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i] * scale;
  return r;
}

const KLPoly& SymGroup::kl(int v, int w) const {
  static const KLPoly zero;
  if (!bruhat_leq(v, w)) return zero;
  uint64_t key = (uint64_t)v << 32 | (uint64_t)w;
  auto it = klcache_.find(key);
  if (it != klcache_.end()) return it->second;
  KLPoly result;
  if (v == w) {
    result = {1};
  } else {
    int s = 0;
    while (len_[smul_[s][w]] > len_[w]) ++s;
    int sv = smul_[s][v];
    if (len_[sv] > len_[v]) {
      result = kl(sv, w);
    } else {
      int sw = smul_[s][w];
      result = poly_add(kl(sv, sw), poly_shift(kl(v, sw), 1, 1));
      for (int z = 0; z < N; ++z) {
        if (!bruhat_leq(v, z) || !bruhat_leq(z, sw) || z == sw) continue;
        if (len_[smul_[s][z]] > len_[z]) continue;
        long long m = mu(z, sw);
        if (m == 0) continue;
        result = poly_add(result, poly_shift(kl(v, z), (len_[w] - len_[z]) / 2, -m));
      }
    }
  }
  return klcache_.emplace(key, std::move(result)).first->second;
}

long long SymGroup::mu(int v, int w) const {
  if (!bruhat_leq(v, w) || v == w) return 0;
  int d = len_[w] - len_[v];
  if (d % 2 == 0) return 0;
  const KLPoly& p = kl(v, w);
  size_t deg = (size_t)((d - 1) / 2);
  return deg < p.size() ? p[deg] : 0;
}

std::vector<int> SymGroup::mu_list(int w) const {
  std::vector<int> out;
  for (int z = 0; z < N; ++z)
    if (mu(z, w) != 0) out.push_back(z);
  return out;
}

std::shared_ptr<SymGroup> sym_group(int t) {
  static std::map<int, std::shared_ptr<SymGroup>> cache;
  auto& ref = cache[t];
  if (!ref) ref = std::make_shared<SymGroup>(t);
  return ref;
}

// ---- Hecke algebra ----

static Perm iota_perm(int t) {
  Perm w(t);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

HeckeElt HeckeElt::unit(std::shared_ptr<SymGroup> G) { return t_basis(G, G->index(iota_perm(G->t))); }

HeckeElt HeckeElt::t_basis(std::shared_ptr<SymGroup> G, int w) {
  HeckeElt e;
  e.G = G;
  e.c[w] = RatFunc(1);
  return e;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (auto& [w, f] : o.c) {
    auto [it, fresh] = r.c.try_emplace(w, f);
    if (!fresh) {
      it->second += f;
      if (it->second.is_zero()) r.c.erase(it);
    }
  }
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const { return *this + o.scaled(RatFunc(-1)); }

HeckeElt HeckeElt::scaled(const RatFunc& f) const {
  HeckeElt r;
  r.G = G;
  if (f.is_zero()) return r;
  for (auto& [w, g] : c) r.c[w] = g * f;
  return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const { return c == o.c; }
bool HeckeElt::is_zero() const { return c.empty(); }

HeckeElt HeckeElt::left_mult_gen(int s) const {
  HeckeElt r;
  r.G = G;
  RatFunc z = RatFunc::q_power(2) - RatFunc::q_power(-2);
  for (auto& [w, f] : c) {
    int sw = G->smul(s, w);
    if (G->length(sw) > G->length(w)) {
      r = r + t_basis(G, sw).scaled(f);
    } else {
      r = r + t_basis(G, w).scaled(f * z) + t_basis(G, sw).scaled(f);
    }
  }
  return r;
}

HeckeElt HeckeElt::operator*(const HeckeElt& o) const {
  HeckeElt r;
  r.G = G;
  for (auto& [w, f] : c) {
    // reduced word for w, leftmost factor first
    std::vector<int> word;
    int x = w;
    while (G->length(x) > 0) {
      int s = 0;
      while (G->length(G->smul(s, x)) > G->length(x)) ++s;
      word.push_back(s);
      x = G->smul(s, x);
    }
    HeckeElt acc = o;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc.left_mult_gen(*it);
    r = r + acc.scaled(f);
  }
  return r;
}

HeckeElt kl_basis(std::shared_ptr<SymGroup> G, int w) {
  HeckeElt e;
  e.G = G;
  for (int y = 0; y < G->N; ++y) {
    const KLPoly& p = G->kl(y, w);
    if (p.empty()) continue;
    IntLaurent val;
    for (size_t i = 0; i < p.size(); ++i)
      val = val + IntLaurent::mono(Int((long)p[i]), (int)(4 * i));  // P_{y,w}(q^4)
    int sign = G->length(y) % 2 ? -1 : 1;
    RatFunc coef = RatFunc(val) * RatFunc::q_power(2 * (G->length(w) - G->length(y))) * RatFunc(sign);
    if (!coef.is_zero()) e.c[y] = coef;
  }
  return e;
}

std::map<int, long long> q1_signed_basis(std::shared_ptr<SymGroup> G, int w) {
  std::map<int, long long> out;
  for (int y = 0; y < G->N; ++y) {
    const KLPoly& p = G->kl(y, w);
    if (p.empty()) continue;
    long long v = 0;
    for (long long c : p) v += c;
    if (G->length(y) % 2) v = -v;
    if (v) out[y] = v;
  }
  return out;
}

// ---- cell representations ----

Matrix<RatFunc> CellRep::word_action(const std::vector<std::pair<int, int>>& word) const {
  int d = (int)tabs.size();
  Matrix<RatFunc> m = Matrix<RatFunc>::identity(d);
  // inverse generator: T_s^{-1} = T_s - (q^2 - q^-2)
  RatFunc z = RatFunc::q_power(2) - RatFunc::q_power(-2);
  for (auto& [s, e] : word) {
    Matrix<RatFunc> g = gen[s];
    if (e < 0) {
      for (int i = 0; i < d; ++i) g.at(i, i) = g.at(i, i) - z;
    }
    m = m * g;
  }
  return m;
}

Matrix<Rat> CellRep::word_action_q1(const std::vector<int>& word) const {
  int d = (int)tabs.size();
  Matrix<Rat> m = Matrix<Rat>::identity(d);
  for (int s : word) m = m * gen1[s];
  return m;
}

static Rat specialize_or_throw(const RatFunc& f) {
  auto v = f.specialize_one();
  if (!v) throw std::logic_error("unexpected pole at q=1");
  return *v;
}

const CellRep& cell_rep(const Partition& lambda) {
  static std::map<Partition, std::unique_ptr<CellRep>> cache;
  auto& ref = cache[lambda];
  if (ref) return *ref;

  auto rep = std::make_unique<CellRep>();
  rep->lambda = lambda;
  rep->t = part_size(lambda);
  int t = rep->t;
  auto G = sym_group(std::max(t, 1));
  rep->G = G;
  rep->tabs = standard_tableaux(lambda);
  int d = (int)rep->tabs.size();

  if (t <= 1) {  // trivial: no generators
    ref = std::move(rep);
    return *ref;
  }

  Tableau Q0 = row_reading_tableau(lambda);
  std::vector<int> w_of(d);
  std::vector<int> cellpos(G->N, -1);
  for (int j = 0; j < d; ++j) {
    w_of[j] = G->index(rsk_inverse(rep->tabs[j], Q0));
    cellpos[w_of[j]] = j;
  }

  RatFunc q2 = RatFunc::q_power(2), qm2 = RatFunc::q_power(-2);
  for (int s = 0; s < t - 1; ++s) {
    Matrix<RatFunc> m(d, d);
    for (int j = 0; j < d; ++j) {
      int w = w_of[j];
      int sw = G->smul(s, w);
      if (G->length(sw) < G->length(w)) {
        m.at(j, j) = RatFunc(0) - qm2;
      } else {
        m.at(j, j) = q2;
        if (cellpos[sw] >= 0) m.at(cellpos[sw], j) = m.at(cellpos[sw], j) - RatFunc(1);
        for (int z = 0; z < G->N; ++z) {
          if (cellpos[z] < 0 || !G->bruhat_leq(z, w) || z == w) continue;
          if (G->length(G->smul(s, z)) > G->length(z)) continue;
          long long mu = G->mu(z, w);
          if (mu) m.at(cellpos[z], j) = m.at(cellpos[z], j) - RatFunc((long)mu);
        }
      }
    }
    rep->gen.push_back(m);
    Matrix<Rat> m1(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m1.at(i, j) = specialize_or_throw(m.at(i, j));
    rep->gen1.push_back(m1);
  }
  ref = std::move(rep);
  return *ref;
}

// Solve rho(T_s)^T G = G rho(T_s) for all s together with G = G^T; the
// solution space is one-dimensional (cell modules are absolutely irreducible
// over Q(q)); normalise the leading nonzero diagonal entry to 1.
template <class K>
static Matrix<K> solve_invariant_form(const std::vector<Matrix<K>>& gens, int d) {
  int n = d * d;
  std::vector<std::vector<K>> eqs;
  for (auto& g : gens)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<K> row(n, K(0));
        // sum_k g[k][i] G[k][j] - sum_k G[i][k] g[k][j] = 0
        for (int k = 0; k < d; ++k) {
          row[k * d + j] = row[k * d + j] + g.at(k, i);
          row[i * d + k] = row[i * d + k] - g.at(k, j);
        }
        eqs.push_back(std::move(row));
      }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<K> row(n, K(0));
      row[i * d + j] = K(1);
      row[j * d + i] = K(-1);
      eqs.push_back(std::move(row));
    }
  Matrix<K> sys((int)eqs.size(), n);
  for (size_t i = 0; i < eqs.size(); ++i)
    for (int j = 0; j < n; ++j) sys.at((int)i, j) = eqs[i][j];
  auto ns = null_space(sys);
  if (ns.size() != 1) throw std::logic_error("invariant form space is not one-dimensional");
  Matrix<K> g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = ns[0][i * d + j];
  K scale(0);
  for (int i = 0; i < d; ++i)
    if (!(g.at(i, i) == K(0))) {
      scale = g.at(i, i);
      break;
    }
  if (scale == K(0)) throw std::logic_error("degenerate diagonal in invariant form");
  for (auto& x : g.a) x = x / scale;
  return g;
}

const Matrix<RatFunc>& cell_gram_q(const Partition& lambda) {
  static std::map<Partition, Matrix<RatFunc>> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  const CellRep& rep = cell_rep(lambda);
  int d = (int)rep.tabs.size();
  Matrix<RatFunc> g;
  if (d == 1 || rep.t <= 1) {
    g = Matrix<RatFunc>::identity(d);
  } else {
    g = solve_invariant_form(rep.gen, d);
  }
  return cache.emplace(lambda, std::move(g)).first->second;
}

Matrix<Rat> cell_gram_q1(const Partition& lambda) {
  const CellRep& rep = cell_rep(lambda);
  int d = (int)rep.tabs.size();
  if (d == 1 || rep.t <= 1) return Matrix<Rat>::identity(d);
  return solve_invariant_form(rep.gen1, d);
}

// ---- misc ----

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int odd_double_factorial(int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r *= 2 * i - 1;
  return r;
}

Int factorial(int n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace diagalg
