#include "diagalg/bmw.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace diagalg {

namespace {

// ---- diagram of a slice word -------------------------------------------------

struct Pass {
  int cross;
  bool over;
  int dir;  // +1 when the passage is read in the direction it was built
};

struct Chain {
  std::vector<Pass> ps;  // ordered END0 -> END1
  int b0 = -1, b1 = -1;  // boundary anchors, -1 while the end is open
  bool dead = false;     // merged away or closed
};

struct CurEnd {
  int chain;
  int end;  // 0 or 1
};

struct TangleDiagram {
  struct Strand {
    std::vector<Pass> ps;
    int a0, a1;
  };
  std::vector<Strand> open;
  std::vector<std::vector<Pass>> loops;
  std::vector<int> cross_sign;   // +-1 per crossing
  std::vector<int> cross_slice;  // originating slice index
};

void append_pass(Chain& c, int end, Pass p) {
  if (end == 1) {
    p.dir = +1;
    c.ps.push_back(p);
  } else {
    p.dir = -1;
    c.ps.insert(c.ps.begin(), p);
  }
}

void reverse_chain(Chain& c) {
  std::reverse(c.ps.begin(), c.ps.end());
  for (auto& p : c.ps) p.dir = -p.dir;
  std::swap(c.b0, c.b1);
}

TangleDiagram build_diagram(int r, const std::vector<Slice>& word) {
  std::vector<Chain> chains(r);
  std::vector<CurEnd> cur(r);
  TangleDiagram out;
  for (int p = 0; p < r; ++p) {
    chains[p].b0 = p;
    cur[p] = {p, 1};
  }
  // cur index (other than `skip`) whose chain field is c, or -1
  auto other_end_at = [&](int c, int skip) {
    for (int j = 0; j < r; ++j)
      if (j != skip && cur[j].chain == c) return j;
    return -1;
  };
  for (size_t si = 0; si < word.size(); ++si) {
    const Slice& s = word[si];
    int i = s.i - 1;  // 0-based left position
    if (s.k == SliceKind::Cap) {
      CurEnd a = cur[i], b = cur[i + 1];
      if (a.chain == b.chain) {
        out.loops.push_back(std::move(chains[a.chain].ps));
        chains[a.chain].dead = true;
      } else {
        int ia = other_end_at(a.chain, i);
        int jb = other_end_at(b.chain, i + 1);
        Chain& ca = chains[a.chain];
        Chain& cb = chains[b.chain];
        if (a.end == 0) reverse_chain(ca);  // joining end of ca becomes END1
        if (b.end == 1) reverse_chain(cb);  // joining end of cb becomes END0
        ca.ps.insert(ca.ps.end(), cb.ps.begin(), cb.ps.end());
        ca.b1 = cb.b1;
        cb.dead = true;
        if (ia >= 0) cur[ia] = {a.chain, 0};
        if (jb >= 0) cur[jb] = {a.chain, 1};
      }
      int nc = (int)chains.size();
      chains.emplace_back();
      cur[i] = {nc, 0};
      cur[i + 1] = {nc, 1};
    } else {
      int cid = (int)out.cross_sign.size();
      int sign = s.k == SliceKind::Pos ? +1 : -1;
      out.cross_sign.push_back(sign);
      out.cross_slice.push_back((int)si);
      bool left_over = s.k == SliceKind::Pos;
      CurEnd a = cur[i], b = cur[i + 1];
      append_pass(chains[a.chain], a.end, {cid, left_over, +1});
      append_pass(chains[b.chain], b.end, {cid, !left_over, +1});
      std::swap(cur[i], cur[i + 1]);
    }
  }
  for (int p = 0; p < r; ++p) {
    Chain& c = chains[cur[p].chain];
    (cur[p].end == 0 ? c.b0 : c.b1) = r + p;
  }
  for (auto& c : chains) {
    if (c.dead) continue;
    if (c.b0 < 0 || c.b1 < 0) continue;  // the cap slice marks merged chains
    out.open.push_back({std::move(c.ps), c.b0, c.b1});
  }
  return out;
}

// Walks strands in boundary order.  Returns the slice index of the first bad
// crossing, or -1 with the descending data filled in.
struct WalkResult {
  int bad_slice = -1;
  BrauerDiagram shadow;
  int ypow = 0;
  int loops = 0;
};

WalkResult walk(int r, const TangleDiagram& T) {
  WalkResult res;
  size_t nc = T.cross_sign.size();
  std::vector<int> seen_comp(nc, -1), seen_dir(nc, 0);
  std::vector<char> visited(nc, 0);
  std::vector<int> order(T.open.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::min(T.open[a].a0, T.open[a].a1) <
           std::min(T.open[b].a0, T.open[b].a1);
  });
  int comp = 0;
  auto visit = [&](const Pass& p, int dir) -> bool {
    if (!visited[p.cross]) {
      visited[p.cross] = 1;
      if (!p.over) return false;
      seen_comp[p.cross] = comp;
      seen_dir[p.cross] = dir;
    } else if (seen_comp[p.cross] == comp) {
      res.ypow += -T.cross_sign[p.cross] * seen_dir[p.cross] * dir;
      seen_comp[p.cross] = -2;
    } else {
      seen_comp[p.cross] = -2;
    }
    return true;
  };
  for (int oi : order) {
    const auto& st = T.open[oi];
    bool fwd = st.a0 < st.a1;
    size_t n = st.ps.size();
    for (size_t j = 0; j < n; ++j) {
      const Pass& p = st.ps[fwd ? j : n - 1 - j];
      if (!visit(p, fwd ? p.dir : -p.dir)) {
        res.bad_slice = T.cross_slice[p.cross];
        return res;
      }
    }
    ++comp;
  }
  for (const auto& lp : T.loops) {
    for (const Pass& p : lp)
      if (!visit(p, p.dir)) {
        res.bad_slice = T.cross_slice[p.cross];
        return res;
      }
    ++comp;
  }
  res.loops = (int)T.loops.size();
  res.shadow.partner.assign(2 * r, -1);
  for (const auto& st : T.open) {
    res.shadow.partner[st.a0] = st.a1;
    res.shadow.partner[st.a1] = st.a0;
  }
  return res;
}

// Bubble-sorts wires towards `target` positions, emitting crossing slices.
// The strand with the smaller key passes over.
void emit_sort(std::vector<int>& target, std::vector<int>& key,
               std::vector<Slice>& out) {
  int n = (int)target.size();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i)
      if (target[i] > target[i + 1]) {
        assert(key[i] != key[i + 1]);
        out.push_back({key[i] < key[i + 1] ? SliceKind::Pos : SliceKind::Neg,
                       i + 1});
        std::swap(target[i], target[i + 1]);
        std::swap(key[i], key[i + 1]);
        moved = true;
      }
  }
}

}  // namespace

std::vector<Slice> bmw_word(const BrauerDiagram& d) {
  int r = d.r();
  std::vector<std::pair<int, int>> top, bot, thr;
  for (int p = 0; p < r; ++p) {
    int q = d.partner[p];
    if (q >= r) thr.push_back({p, q - r});
    else if (q > p) top.push_back({p, q});
  }
  for (int p = 0; p < r; ++p) {
    int q = d.partner[r + p];
    if (q >= r && q - r > p) bot.push_back({p, q - r});
  }
  int k = (int)top.size();
  assert((int)bot.size() == k);
  std::vector<Slice> word;
  // alpha: arcs to slots (0,1),(2,3),... and throughs to 2k..r-1
  std::vector<int> target(r), key(r);
  for (int j = 0; j < k; ++j) {
    target[top[j].first] = 2 * j;
    target[top[j].second] = 2 * j + 1;
    key[top[j].first] = key[top[j].second] = top[j].first;
  }
  for (size_t m = 0; m < thr.size(); ++m) {
    target[thr[m].first] = 2 * k + (int)m;
    key[thr[m].first] = thr[m].first;
  }
  emit_sort(target, key, word);
  for (int j = 0; j < k; ++j) word.push_back({SliceKind::Cap, 2 * j + 1});
  // beta: cup j to bottom arc j, through m to its bottom point
  std::vector<int> t3(r), k3(r);
  for (int j = 0; j < k; ++j) {
    t3[2 * j] = bot[j].first;
    t3[2 * j + 1] = bot[j].second;
    k3[2 * j] = k3[2 * j + 1] = r + bot[j].first;
  }
  for (size_t m = 0; m < thr.size(); ++m) {
    t3[2 * k + (int)m] = thr[m].second;
    k3[2 * k + (int)m] = thr[m].first;
  }
  emit_sort(t3, k3, word);
  return word;
}

std::vector<SkeinTerm> skein_eval(int r, const std::vector<Slice>& word) {
  struct Node {
    std::vector<Slice> w;
    int sign;
    int zdeg;
  };
  std::vector<SkeinTerm> out;
  std::vector<Node> stack{{word, +1, 0}};
  while (!stack.empty()) {
    Node nd = std::move(stack.back());
    stack.pop_back();
    TangleDiagram T = build_diagram(r, nd.w);
    WalkResult wr = walk(r, T);
    if (wr.bad_slice < 0) {
      out.push_back({std::move(wr.shadow), nd.sign, nd.zdeg, wr.ypow, wr.loops});
      continue;
    }
    int b = wr.bad_slice;
    bool pos = nd.w[b].k == SliceKind::Pos;
    Node sw = nd;
    sw.w[b].k = pos ? SliceKind::Neg : SliceKind::Pos;
    Node rm = nd;
    rm.w.erase(rm.w.begin() + b);
    rm.zdeg++;
    rm.sign = pos ? nd.sign : -nd.sign;
    Node cap = nd;
    cap.w[b].k = SliceKind::Cap;
    cap.zdeg++;
    cap.sign = pos ? -nd.sign : nd.sign;
    stack.push_back(std::move(sw));
    stack.push_back(std::move(rm));
    stack.push_back(std::move(cap));
  }
  return out;
}

// ---- fields -------------------------------------------------------------------

uint64_t Fp::p = (1ull << 30) - 35;  // replaced before use

Fp operator/(Fp a, Fp b) {
  if (b.v == 0) throw std::domain_error("Fp division by zero");
  uint64_t e = Fp::p - 2, base = b.v, acc = 1;
  while (e) {
    if (e & 1) acc = (uint64_t)((unsigned __int128)acc * base % Fp::p);
    base = (uint64_t)((unsigned __int128)base * base % Fp::p);
    e >>= 1;
  }
  return Fp::raw((uint64_t)((unsigned __int128)a.v * acc % Fp::p)) ;
}

struct BmwPole : std::runtime_error {
  BmwPole() : std::runtime_error("pole at the chosen (prime, point)") {}
};

BmwField<RatFunc> bmw_field_q() {
  return {[](const RatFunc& f) { return f; }};
}

BmwField<Rat> bmw_field_q1() {
  return {[](const RatFunc& f) {
    auto v = f.specialize_one();
    if (!v) throw BmwPole();
    return *v;
  }};
}

BmwField<Fp> bmw_field_fp(uint64_t q0) {
  return {[q0](const RatFunc& f) {
    auto v = f.eval_mod(q0, Fp::p);
    if (!v) throw BmwPole();
    return Fp::raw(*v);
  }};
}

const std::map<std::string, RatFunc>& bmw_constants() {
  static const std::map<std::string, RatFunc> m = [] {
    auto qp = [](int k) { return RatFunc::q_power(k); };
    RatFunc one = qp(0);
    RatFunc u = one - qp(-2);   // 1 - q^{-2}
    RatFunc v = one - qp(2);    // 1 - q^2
    RatFunc delta = qp(2) + one + qp(-2);
    std::map<std::string, RatFunc> m;
    m["y"] = qp(-4);
    m["z"] = qp(2) - qp(-2);
    m["delta"] = delta;
    m["a"] = one + u * u;
    m["at"] = one + v * v;
    m["b"] = one + v * v + u * u;
    m["d"] = (qp(1) - qp(-1)) * (qp(1) - qp(-1));
    RatFunc num = one + (RatFunc(IntLaurent::mono(2, 0)) + qp(-2)) * u * u +
                  (one + qp(2)) * u * u * u * u;
    m["c"] = num / ((delta - one) * (delta - one));
    return m;
  }();
  return m;
}

// ---- the algebra ---------------------------------------------------------------

namespace {

const std::vector<std::vector<Slice>>& basis_words(int r) {
  static std::map<int, std::vector<std::vector<Slice>>> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  const BrauerBasis& B = brauer_basis(r);
  std::vector<std::vector<Slice>> ws(B.dim());
  for (size_t i = 0; i < B.dim(); ++i) {
    ws[i] = bmw_word(B.diags[i]);
    // the canonical word must itself be descending with zero writhe
    auto terms = skein_eval(r, ws[i]);
    assert(terms.size() == 1 && terms[0].d == B.diags[i] &&
           terms[0].sign == 1 && terms[0].zdeg == 0 && terms[0].ypow == 0 &&
           terms[0].loops == 0);
    (void)terms;
  }
  return cache.emplace(r, std::move(ws)).first->second;
}

int slice_token(int r, Slice s) {
  (void)r;
  return 3 * (s.i - 1) + (int)s.k;
}

template <class K>
void add_term(std::map<size_t, K>& v, size_t i, const K& c) {
  auto it = v.find(i);
  if (it == v.end()) {
    if (!(c == K(0))) v.emplace(i, c);
    return;
  }
  it->second = it->second + c;
  if (it->second == K(0)) v.erase(it);
}

}  // namespace

template <class K>
Bmw<K>::Bmw(int r_, BmwField<K> f)
    : r(r_), field(std::move(f)), basis_(&brauer_basis(r_)) {
  words_ = basis_words(r);
  int tokens = r >= 2 ? 3 * (r - 1) : 0;
  rtab_.assign(tokens, std::vector<std::optional<Vec>>(basis_->dim()));
  ltab_.assign(tokens, std::vector<std::optional<Vec>>(basis_->dim()));
  startab_.assign(basis_->dim(), std::nullopt);
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::instantiate(
    const std::vector<SkeinTerm>& terms) const {
  K y = field.qpow(-4), yinv = field.qpow(4);
  K z = field.qpow(2) - field.qpow(-2);
  K delta = field.qpow(2) + field.qpow(0) + field.qpow(-2);
  Vec out;
  for (const auto& t : terms) {
    K c(t.sign);
    for (int i = 0; i < t.zdeg; ++i) c = c * z;
    for (int i = 0; i < t.ypow; ++i) c = c * y;
    for (int i = 0; i > t.ypow; --i) c = c * yinv;
    for (int i = 0; i < t.loops; ++i) c = c * delta;
    add_term(out, basis_->index(t.d), c);
  }
  return out;
}

template <class K>
const typename Bmw<K>::Vec& Bmw<K>::rtab(size_t idx, Slice s) {
  auto& slot = rtab_[slice_token(r, s)][idx];
  if (!slot) {
    std::vector<Slice> w = words_[idx];
    w.push_back(s);
    slot = instantiate(skein_eval(r, w));
  }
  return *slot;
}

template <class K>
const typename Bmw<K>::Vec& Bmw<K>::ltab(size_t idx, Slice s) {
  auto& slot = ltab_[slice_token(r, s)][idx];
  if (!slot) {
    std::vector<Slice> w;
    w.push_back(s);
    w.insert(w.end(), words_[idx].begin(), words_[idx].end());
    slot = instantiate(skein_eval(r, w));
  }
  return *slot;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::unit() const {
  return {{basis_->index(brauer_identity(r)), K(1)}};
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::gen_e(int i) const {
  return {{basis_->index(brauer_e_diag(r, i)), K(1)}};
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::gen_g(int i, int sgn) {
  Vec u = unit();
  return sgn >= 0 ? rmul(u, {SliceKind::Pos, i}) : rmul(u, {SliceKind::Neg, i});
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::add(const Vec& x, const Vec& y) const {
  Vec out = x;
  for (auto& [i, c] : y) add_term(out, i, c);
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::sub(const Vec& x, const Vec& y) const {
  return add(x, scale(y, K(-1)));
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::scale(const Vec& x, const K& c) const {
  Vec out;
  if (c == K(0)) return out;
  for (auto& [i, v] : x) out.emplace(i, v * c);
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::rmul(const Vec& x, Slice s) {
  Vec out;
  for (auto& [i, c] : x)
    for (auto& [j, w] : rtab(i, s)) add_term(out, j, K(c * w));
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::lmul(Slice s, const Vec& x) {
  Vec out;
  for (auto& [i, c] : x)
    for (auto& [j, w] : ltab(i, s)) add_term(out, j, K(c * w));
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::mul(const Vec& x, const Vec& y) {
  Vec out;
  for (auto& [i, c] : y) {
    Vec acc = x;
    for (const Slice& s : words_[i]) acc = rmul(acc, s);
    for (auto& [j, v] : acc) add_term(out, j, K(v * c));
  }
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::star(const Vec& x) {
  Vec out;
  for (auto& [i, c] : x) {
    auto& slot = startab_[i];
    if (!slot) {
      Vec acc = unit();
      const auto& w = words_[i];
      for (auto it = w.rbegin(); it != w.rend(); ++it) acc = rmul(acc, *it);
      slot = std::move(acc);
    }
    for (auto& [j, v] : *slot) add_term(out, j, K(v * c));
  }
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::word(const std::string& w) {
  Vec out = unit();
  std::istringstream in(w);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    char kind = tok[0];
    bool inv = false;
    size_t caret = tok.find('^');
    std::string num = caret == std::string::npos ? tok.substr(1)
                                                 : tok.substr(1, caret - 1);
    if (caret != std::string::npos) {
      if (tok.substr(caret) != "^-1")
        throw std::invalid_argument("bad generator token: " + tok);
      inv = true;
    }
    int i = std::stoi(num);
    if (i < 1 || i > r - 1)
      throw std::invalid_argument("generator index out of range: " + tok);
    if (kind == 'e' && !inv) out = rmul(out, {SliceKind::Cap, i});
    else if (kind == 'g') out = rmul(out, {inv ? SliceKind::Neg : SliceKind::Pos, i});
    else throw std::invalid_argument("bad generator token: " + tok);
  }
  return out;
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::from_diagrams(const BrauerElt<K>& x) const {
  Vec out;
  for (auto& [d, c] : x) add_term(out, basis_->index(d), c);
  return out;
}

template <class K>
BrauerElt<K> Bmw<K>::to_diagrams(const Vec& x) const {
  BrauerElt<K> out;
  for (auto& [i, c] : x) out.emplace(basis_->diags[i], c);
  return out;
}

template <class K>
K Bmw<K>::constant(const std::string& name) const {
  return field.inject(bmw_constants().at(name));
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::f_elt(int i) {
  Vec out = scale(gen_g(i), K(-1));
  out = sub(out, scale(gen_e(i), K(field.qpow(0) - field.qpow(-2))));
  return add(out, scale(unit(), field.qpow(2)));
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::bigF() {
  return mul(f_elt(1), f_elt(3));
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::e14() {
  return word("g3^-1 g1 e2 g1^-1 g3");
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::e1234() {
  return word("e2 g1 g3^-1 g2 g1^-1 g3");
}

template <class K>
typename Bmw<K>::Vec Bmw<K>::phi() {
  Vec F = bigF(), e2 = gen_e(2);
  Vec Fe2F = mul(F, mul(e2, F));
  Vec Fe2e14F = mul(F, mul(e2, mul(e14(), F)));
  Vec Fe1234F = mul(F, mul(e1234(), F));
  Vec out = scale(Fe2F, constant("a"));
  out = sub(out, scale(F, constant("b")));
  out = sub(out, scale(Fe2e14F, constant("c")));
  return add(out, scale(Fe1234F, constant("d")));
}

template class Bmw<RatFunc>;
template class Bmw<Rat>;
template class Bmw<Fp>;

// ---- cell modules ---------------------------------------------------------------

BrauerDiagram dangle_pair_diagram(const Dangle& S, const Dangle& T,
                                  const Perm& w) {
  int r = S.r();
  BrauerDiagram d;
  d.partner.assign(2 * r, -1);
  std::vector<int> fS, fT;
  for (int p = 0; p < r; ++p) {
    if (S.arc[p] < 0) fS.push_back(p);
    else d.partner[p] = S.arc[p];
    if (T.arc[p] < 0) fT.push_back(p);
    else d.partner[r + p] = r + T.arc[p];
  }
  assert(fS.size() == fT.size() && fS.size() == w.size());
  for (size_t l = 0; l < fS.size(); ++l) {
    d.partner[fS[l]] = r + fT[w[l]];
    d.partner[r + fT[w[l]]] = fS[l];
  }
  return d;
}

template <class K>
typename Bmw<K>::Vec bmw_cellular(Bmw<K>& A, const Partition& lambda,
                                  const Dangle& S, int tau, const Dangle& T,
                                  int ups) {
  int t = part_size(lambda);
  if (t == 0) {
    typename Bmw<K>::Vec out;
    out.emplace(A.basis().index(dangle_pair_diagram(S, T, Perm{})), K(1));
    return out;
  }
  auto G = sym_group(t);
  auto tabs = standard_tableaux(lambda);
  Perm v = rsk_inverse(tabs[ups], tabs[tau]);
  HeckeElt kl = kl_basis(G, G->index(v));
  typename Bmw<K>::Vec out;
  for (auto& [y, coef] : kl.c) {
    BrauerDiagram d = dangle_pair_diagram(S, T, G->elem(y));
    add_term(out, A.basis().index(d), A.field.inject(coef));
  }
  return out;
}

namespace {

// Coefficient of C^lambda_{(S,tau),(T,ups)} in x: gather the (S,T) block of
// through-permutation diagrams and invert the (unitriangular up to sign)
// Kazhdan-Lusztig change of basis by length-descending back-substitution.
template <class K>
K cell_coord(Bmw<K>& A, const Partition& lambda, const Dangle& S, int tau,
             const Dangle& T, int ups, const typename Bmw<K>::Vec& x) {
  int t = part_size(lambda);
  if (t == 0) {
    auto it = x.find(A.basis().index(dangle_pair_diagram(S, T, Perm{})));
    return it == x.end() ? K(0) : it->second;
  }
  auto G = sym_group(t);
  auto tabs = standard_tableaux(lambda);
  int target = G->index(rsk_inverse(tabs[ups], tabs[tau]));
  std::vector<K> a(G->N, K(0));
  for (int w = 0; w < G->N; ++w) {
    BrauerDiagram d = dangle_pair_diagram(S, T, G->elem(w));
    auto it = x.find(A.basis().index(d));
    if (it != x.end()) a[w] = it->second;
  }
  std::vector<int> order(G->N);
  for (int i = 0; i < G->N; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return G->length(u) > G->length(v); });
  for (int v : order) {
    if (a[v] == K(0)) {
      if (v == target) return K(0);
      continue;
    }
    HeckeElt kl = kl_basis(G, v);
    K lead = A.field.inject(kl.c.at(v));
    K b = a[v] / lead;
    if (v == target) return b;
    for (auto& [y, coef] : kl.c) a[y] = a[y] - b * A.field.inject(coef);
  }
  return K(0);
}

// The structure-constant Gram of the Kazhdan-Lusztig cellular basis differs
// from the classically normalised invariant form (cell_gram_q) by a scalar
// per cell: the pure H_t value <C_v00, C_v00> over the normalised (0,0)
// entry.  At q = 1 the scalar is the column stabiliser order of lambda.
const RatFunc& hecke_cell_scalar(const Partition& lambda) {
  static std::map<Partition, RatFunc> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  int t = part_size(lambda);
  RatFunc rho(1);
  if (t > 1) {
    auto G = sym_group(t);
    auto tabs = standard_tableaux(lambda);
    int v00 = G->index(rsk_inverse(tabs[0], tabs[0]));
    HeckeElt h = kl_basis(G, v00) * kl_basis(G, v00);
    std::vector<RatFunc> a(G->N);
    for (auto& [y, c] : h.c) a[y] = c;
    std::vector<int> order(G->N);
    for (int i = 0; i < G->N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int u, int v) { return G->length(u) > G->length(v); });
    RatFunc got(0);
    for (int v : order) {
      if (a[v].is_zero()) continue;
      HeckeElt kl = kl_basis(G, v);
      RatFunc b = a[v] / kl.c.at(v);
      if (v == v00) {
        got = b;
        break;
      }
      for (auto& [y, c] : kl.c) a[y] -= b * c;
    }
    rho = got / cell_gram_q(lambda).at(0, 0);
  }
  return cache.emplace(lambda, std::move(rho)).first->second;
}

}  // namespace

template <class K>
Matrix<K> bmw_gram(Bmw<K>& A, const Partition& lambda) {
  int r = A.r, t = part_size(lambda);
  const auto& ds = dangles(r, t);
  int f = (int)standard_tableaux(lambda).size();
  int m = (int)ds.size() * f;
  const Dangle& S0 = ds[0];
  std::vector<typename Bmw<K>::Vec> left(m), right(m);
  for (int i = 0; i < m; ++i) {
    const Dangle& S = ds[i / f];
    left[i] = bmw_cellular(A, lambda, S0, 0, S, i % f);
    right[i] = bmw_cellular(A, lambda, S, i % f, S0, 0);
  }
  K rho = A.field.inject(hecke_cell_scalar(lambda));
  if (rho == K(0)) throw BmwPole();
  Matrix<K> G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto prod = A.mul(left[i], right[j]);
      G.at(i, j) = cell_coord(A, lambda, S0, 0, S0, 0, prod) / rho;
    }
  return G;
}

template <class K>
Matrix<K> bmw_cell_action(Bmw<K>& A, const Partition& lambda,
                          const typename Bmw<K>::Vec& x) {
  int r = A.r, t = part_size(lambda);
  const auto& ds = dangles(r, t);
  int f = (int)standard_tableaux(lambda).size();
  int m = (int)ds.size() * f;
  const Dangle& S0 = ds[0];
  Matrix<K> M(m, m);
  for (int j = 0; j < m; ++j) {
    auto col = A.mul(x, bmw_cellular(A, lambda, ds[j / f], j % f, S0, 0));
    for (int i = 0; i < m; ++i)
      M.at(i, j) = cell_coord(A, lambda, ds[i / f], i % f, S0, 0, col);
  }
  return M;
}

template typename Bmw<RatFunc>::Vec bmw_cellular(Bmw<RatFunc>&, const Partition&, const Dangle&, int, const Dangle&, int);
template typename Bmw<Rat>::Vec bmw_cellular(Bmw<Rat>&, const Partition&, const Dangle&, int, const Dangle&, int);
template typename Bmw<Fp>::Vec bmw_cellular(Bmw<Fp>&, const Partition&, const Dangle&, int, const Dangle&, int);
template Matrix<RatFunc> bmw_gram(Bmw<RatFunc>&, const Partition&);
template Matrix<Rat> bmw_gram(Bmw<Rat>&, const Partition&);
template Matrix<Fp> bmw_gram(Bmw<Fp>&, const Partition&);
template Matrix<RatFunc> bmw_cell_action(Bmw<RatFunc>&, const Partition&, const Bmw<RatFunc>::Vec&);
template Matrix<Rat> bmw_cell_action(Bmw<Rat>&, const Partition&, const Bmw<Rat>::Vec&);
template Matrix<Fp> bmw_cell_action(Bmw<Fp>&, const Partition&, const Bmw<Fp>::Vec&);

// ---- ranks, ideals, P_r ----------------------------------------------------------

Matrix<RatFunc> bmw_gram_q(int r, const Partition& lambda) {
  Bmw<RatFunc> A(r, bmw_field_q());
  return bmw_gram(A, lambda);
}

RankReport bmw_simple_dims(int r, const RankOptions& opt) {
  auto poset = lambda_poset(r);
  RankReport rep;
  for (const auto& lam : poset) {
    RankRow row;
    row.lambda = lam;
    row.w = Int(m_lambda_size(r, lam)).get_si();
    rep.rows.push_back(row);
  }
  if (opt.exact) {
    Bmw<RatFunc> A(r, bmw_field_q());
    for (auto& row : rep.rows) row.l = matrix_rank(bmw_gram(A, row.lambda));
    return rep;
  }
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  const auto& primes = fp_primes();
  size_t pi = rng() % primes.size();
  std::vector<long> ranks;
  int done = 0, attempts = 0;
  while (done < opt.trials) {
    if (++attempts > 16) {
      RankOptions ex = opt;
      ex.exact = true;
      return bmw_simple_dims(r, ex);
    }
    uint64_t p = primes[pi % primes.size()];
    ++pi;
    uint64_t q0 = 2 + rng() % (p - 3);
    std::vector<long> cur;
    try {
      Fp::set_modulus(p);
      Bmw<Fp> A(r, bmw_field_fp(q0));
      for (auto& row : rep.rows) {
        Matrix<Fp> g = bmw_gram(A, row.lambda);
        std::vector<uint64_t> a(g.a.size());
        for (size_t i = 0; i < a.size(); ++i) a[i] = g.a[i].v;
        cur.push_back(fp_dense_rank(a, g.rows, g.cols, p));
      }
    } catch (const BmwPole&) {
      continue;
    }
    if (ranks.empty()) ranks = cur;
    else if (ranks != cur) {
      RankOptions ex = opt;
      ex.exact = true;
      return bmw_simple_dims(r, ex);
    }
    ++done;
  }
  for (size_t i = 0; i < rep.rows.size(); ++i) rep.rows[i].l = ranks[i];
  return rep;
}

namespace {

long bmw_ideal_dim_at(int r, const std::map<size_t, RatFunc>& x, uint64_t q0,
                      uint64_t p) {
  Fp::set_modulus(p);
  Bmw<Fp> A(r, bmw_field_fp(q0));
  using Vec = Bmw<Fp>::Vec;
  Vec seed;
  for (auto& [i, c] : x) {
    auto v = c.eval_mod(q0, p);
    if (!v) return -1;
    if (*v) seed.emplace(i, Fp::raw(*v));
  }
  FpSpan span(A.basis().dim(), p);
  auto to_pairs = [](const Vec& v) {
    std::vector<std::pair<size_t, uint64_t>> out;
    for (auto& [i, c] : v)
      if (c.v) out.push_back({i, c.v});
    return out;
  };
  std::vector<Vec> kept;
  if (!seed.empty() && span.insert_sparse(to_pairs(seed)))
    kept.push_back(std::move(seed));
  std::vector<Slice> gens;
  for (int i = 1; i < r; ++i) {
    gens.push_back({SliceKind::Pos, i});
    gens.push_back({SliceKind::Cap, i});
  }
  size_t next = 0;
  while (next < kept.size()) {
    Vec v = kept[next++];
    for (const Slice& s : gens) {
      Vec w = A.rmul(v, s);
      if (!w.empty() && span.insert_sparse(to_pairs(w)))
        kept.push_back(std::move(w));
      w = A.lmul(s, v);
      if (!w.empty() && span.insert_sparse(to_pairs(w)))
        kept.push_back(std::move(w));
    }
  }
  return (long)span.rank();
}

long bmw_ideal_dim_exact(int r, const std::map<size_t, RatFunc>& x) {
  Bmw<RatFunc> A(r, bmw_field_q());
  ReducedSpan<RatFunc> span(A.basis().dim());
  using Vec = Bmw<RatFunc>::Vec;
  auto to_pairs = [](const Vec& v) {
    return std::vector<std::pair<size_t, RatFunc>>(v.begin(), v.end());
  };
  std::vector<Vec> kept;
  if (!x.empty() && span.insert_sparse(to_pairs(x))) kept.push_back(x);
  std::vector<Slice> gens;
  for (int i = 1; i < r; ++i) {
    gens.push_back({SliceKind::Pos, i});
    gens.push_back({SliceKind::Cap, i});
  }
  size_t next = 0;
  while (next < kept.size()) {
    Vec v = kept[next++];
    for (const Slice& s : gens) {
      Vec w = A.rmul(v, s);
      if (!w.empty() && span.insert_sparse(to_pairs(w)))
        kept.push_back(std::move(w));
      w = A.lmul(s, v);
      if (!w.empty() && span.insert_sparse(to_pairs(w)))
        kept.push_back(std::move(w));
    }
  }
  return (long)span.rank();
}

}  // namespace

long bmw_ideal_dim(int r, const std::map<size_t, RatFunc>& x,
                   const RankOptions& opt) {
  if (opt.exact) return bmw_ideal_dim_exact(r, x);
  std::mt19937_64 rng(opt.seed ^ 0xd1b54a32d192ed03ull);
  const auto& primes = fp_primes();
  size_t pi = rng() % primes.size();
  long rank = -1;
  int done = 0, attempts = 0;
  while (done < opt.trials) {
    if (++attempts > 16) return bmw_ideal_dim_exact(r, x);
    uint64_t p = primes[pi % primes.size()];
    ++pi;
    uint64_t q0 = 2 + rng() % (p - 3);
    long c;
    try {
      c = bmw_ideal_dim_at(r, x, q0, p);
    } catch (const BmwPole&) {
      continue;
    }
    if (c < 0) continue;
    if (rank < 0) rank = c;
    else if (rank != c) return bmw_ideal_dim_exact(r, x);
    ++done;
  }
  return rank;
}

std::map<size_t, RatFunc> bmw_phi_embedded(int r) {
  if (r < 4) throw std::invalid_argument("Phi_q needs r >= 4");
  Bmw<RatFunc> A4(4, bmw_field_q());
  BrauerElt<RatFunc> phi = A4.to_diagrams(A4.phi());
  BrauerElt<RatFunc> emb = brauer_embed(phi, r);
  const BrauerBasis& B = brauer_basis(r);
  std::map<size_t, RatFunc> out;
  for (auto& [d, c] : emb) out.emplace(B.index(d), c);
  return out;
}

long bmw_p_r_dim(int r, const RankOptions& opt) {
  long full = Int(odd_double_factorial(r)).get_si();
  return full - bmw_ideal_dim(r, bmw_phi_embedded(r), opt);
}

// ---- identity suite ----------------------------------------------------------------

bool BmwIdentityReport::all() const {
  for (auto& [n, ok] : checks)
    if (!ok) return false;
  return true;
}

std::string BmwIdentityReport::str() const {
  std::string s;
  for (auto& [n, ok] : checks) s += n + (ok ? ": ok\n" : ": FAIL\n");
  return s;
}

BmwIdentityReport bmw_identity_suite() {
  Bmw<RatFunc> A(4, bmw_field_q());
  using Vec = Bmw<RatFunc>::Vec;
  BmwIdentityReport rep;
  auto check = [&](const std::string& name, const Vec& lhs, const Vec& rhs) {
    rep.checks.push_back({name, lhs == rhs});
  };
  auto qp = [&](int k) { return A.field.qpow(k); };
  RatFunc a = A.constant("a"), at = A.constant("at"), b = A.constant("b"),
          c = A.constant("c"), d = A.constant("d");
  RatFunc s2 = qp(2) + qp(-2);
  Vec F = A.bigF(), e2 = A.gen_e(2), E14 = A.e14(), E1234 = A.e1234();
  Vec phi = A.phi();
  Vec zero;

  for (int i = 1; i <= 3; ++i) {
    Vec f = A.f_elt(i);
    Vec g = A.gen_g(i);
    Vec quad = A.mul(A.sub(g, A.scale(A.unit(), qp(2))),
                     A.sub(g, A.scale(A.unit(), qp(-4))));
    check("f" + std::to_string(i) + " = (g-q^2)(g-q^-4)/(q^-2+q^-4)",
          A.scale(f, qp(-2) + qp(-4)), quad);
    check("e" + std::to_string(i) + " f" + std::to_string(i) + " = 0",
          A.mul(A.gen_e(i), f), zero);
    check("f" + std::to_string(i) + "^2 = (q^2+q^-2) f", A.mul(f, f),
          A.scale(f, s2));
  }
  check("F^2 = (q^2+q^-2)^2 F", A.mul(F, F), A.scale(F, s2 * s2));
  Vec e2Fe2 = A.mul(e2, A.mul(F, e2));
  check("e2 F e2 = at e2 - d e1234 + a e2 e14", e2Fe2,
        A.add(A.sub(A.scale(e2, at), A.scale(E1234, d)),
              A.scale(A.mul(e2, E14), a)));
  check("e2 F e2 e14 = (q^2+q^-2)^2 e2 e14", A.mul(e2Fe2, E14),
        A.scale(A.mul(e2, E14), s2 * s2));
  check("e14 e2 F e2 = (q^2+q^-2)^2 e2 e14", A.mul(E14, e2Fe2),
        A.scale(A.mul(e2, E14), s2 * s2));
  Vec rhs74 = A.add(A.sub(A.scale(E1234, a), A.scale(e2, d)),
                    A.scale(A.mul(e2, E14), RatFunc(qp(-4) * at)));
  check("e2 F e1234 = -d e2 + a e1234 + q^-4 at e2 e14",
        A.mul(e2, A.mul(F, E1234)), rhs74);
  check("e1234 F e2 = -d e2 + a e1234 + q^-4 at e2 e14",
        A.mul(E1234, A.mul(F, e2)), rhs74);
  for (int i = 1; i <= 3; ++i) {
    check("e" + std::to_string(i) + " Phi_q = 0", A.mul(A.gen_e(i), phi), zero);
    check("Phi_q e" + std::to_string(i) + " = 0", A.mul(phi, A.gen_e(i)), zero);
  }
  check("Phi_q F e2 = 0", A.mul(phi, A.mul(F, e2)), zero);
  check("Phi_q^2 = -(q^2+q^-2)^2 b Phi_q", A.mul(phi, phi),
        A.scale(phi, RatFunc(-s2 * s2 * b)));
  check("Phi_q* = Phi_q", A.star(phi), phi);
  bool in_aq = true;
  for (auto& [i, coef] : phi) {
    (void)i;
    in_aq = in_aq && coef.in_Aq();
  }
  rep.checks.push_back({"Phi_q coefficients lie in A_q", in_aq});
  bool consts_aq = a.in_Aq() && at.in_Aq() && b.in_Aq() && c.in_Aq() && d.in_Aq();
  rep.checks.push_back({"a, at, b, c, d lie in A_q", consts_aq});
  return rep;
}

}  // namespace diagalg
