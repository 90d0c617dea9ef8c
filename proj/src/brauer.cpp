#include "diagalg/brauer.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace diagalg {

BrauerDiagram BrauerDiagram::flipped() const {
  int n = r();
  BrauerDiagram out;
  out.partner.assign(2 * n, -1);
  auto flip = [n](int p) { return p < n ? p + n : p - n; };
  for (int p = 0; p < 2 * n; ++p) out.partner[flip(p)] = flip(partner[p]);
  return out;
}

std::string BrauerDiagram::str() const {
  int n = r();
  auto pt = [n](int x) {
    return x < n ? std::to_string(x + 1) : std::to_string(x - n + 1) + "'";
  };
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p < 2 * n; ++p) {
    if (partner[p] < p) continue;
    if (!first) os << ",";
    first = false;
    os << pt(p) << "-" << pt(partner[p]);
  }
  return os.str();
}

BrauerDiagram brauer_parse(const std::string& s, int r) {
  BrauerDiagram d;
  d.partner.assign(2 * r, -1);
  std::istringstream is(s);
  std::string pair;
  auto point = [&](const std::string& tok) {
    bool primed = !tok.empty() && tok.back() == '\'';
    int v = std::stoi(primed ? tok.substr(0, tok.size() - 1) : tok);
    if (v < 1 || v > r) throw std::invalid_argument("point out of range: " + tok);
    return primed ? v - 1 + r : v - 1;
  };
  while (std::getline(is, pair, ',')) {
    size_t dash = pair.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad pair: " + pair);
    int a = point(pair.substr(0, dash)), b = point(pair.substr(dash + 1));
    if (a == b || d.partner[a] >= 0 || d.partner[b] >= 0)
      throw std::invalid_argument("repeated point in: " + s);
    d.partner[a] = b;
    d.partner[b] = a;
  }
  for (int p = 0; p < 2 * r; ++p)
    if (d.partner[p] < 0) throw std::invalid_argument("unmatched point in: " + s);
  return d;
}

BrauerDiagram brauer_identity(int r) {
  BrauerDiagram d;
  d.partner.resize(2 * r);
  for (int i = 0; i < r; ++i) {
    d.partner[i] = r + i;
    d.partner[r + i] = i;
  }
  return d;
}

BrauerDiagram brauer_s_diag(int r, int i) {
  if (i < 1 || i >= r) throw std::invalid_argument("s_i index out of range");
  BrauerDiagram d = brauer_identity(r);
  d.partner[i - 1] = r + i;
  d.partner[i] = r + i - 1;
  d.partner[r + i - 1] = i;
  d.partner[r + i] = i - 1;
  return d;
}

BrauerDiagram brauer_e_diag(int r, int i) {
  if (i < 1 || i >= r) throw std::invalid_argument("e_i index out of range");
  BrauerDiagram d = brauer_identity(r);
  d.partner[i - 1] = i;
  d.partner[i] = i - 1;
  d.partner[r + i - 1] = r + i;
  d.partner[r + i] = r + i - 1;
  return d;
}

BrauerDiagram brauer_perm_diag(int r, const Perm& w) {
  BrauerDiagram d;
  d.partner.assign(2 * r, -1);
  for (int j = 0; j < r; ++j) {
    d.partner[r + j] = w[j];
    d.partner[w[j]] = r + j;
  }
  return d;
}

std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& top,
                                               const BrauerDiagram& bot) {
  int n = top.r();
  assert(bot.r() == n);
  BrauerDiagram out;
  out.partner.assign(2 * n, -1);
  std::vector<char> vis(n, 0);  // interface points passed by a strand

  // layer 1 = inside top (pt is a top-diagram point), layer 2 = inside bot
  auto walk = [&](int layer, int pt) {
    while (true) {
      if (layer == 1) {
        int q = top.partner[pt];
        if (q < n) return std::pair<int, int>{1, q};
        vis[q - n] = 1;
        layer = 2;
        pt = q - n;
      } else {
        int q = bot.partner[pt];
        if (q >= n) return std::pair<int, int>{2, q};
        vis[q] = 1;
        layer = 1;
        pt = n + q;
      }
    }
  };

  auto result_pt = [&](std::pair<int, int> end) {
    return end.first == 1 ? end.second : end.second;  // indices already align
  };
  for (int p = 0; p < n; ++p) {
    if (out.partner[p] >= 0) continue;
    auto end = walk(1, p);
    int q = result_pt(end);
    out.partner[p] = q;
    out.partner[q] = p;
  }
  for (int p = n; p < 2 * n; ++p) {
    if (out.partner[p] >= 0) continue;
    auto end = walk(2, p);
    int q = result_pt(end);
    out.partner[p] = q;
    out.partner[q] = p;
  }
  int loops = 0;
  for (int i = 0; i < n; ++i) {
    if (vis[i]) continue;
    ++loops;
    int cur = i;
    while (!vis[cur]) {
      vis[cur] = 1;
      int j = bot.partner[cur];  // closed component: stays on the interface
      vis[j] = 1;
      cur = top.partner[n + j] - n;
    }
  }
  return {std::move(out), loops};
}

static void enumerate_matchings(std::vector<int>& pts, BrauerDiagram& cur,
                                std::vector<BrauerDiagram>& out) {
  if (pts.empty()) {
    out.push_back(cur);
    return;
  }
  int a = pts[0];
  for (size_t k = 1; k < pts.size(); ++k) {
    int b = pts[k];
    std::vector<int> rest;
    for (size_t j = 1; j < pts.size(); ++j)
      if (j != k) rest.push_back(pts[j]);
    cur.partner[a] = b;
    cur.partner[b] = a;
    enumerate_matchings(rest, cur, out);
  }
}

const BrauerBasis& brauer_basis(int r) {
  static std::map<int, BrauerBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  BrauerBasis b;
  b.r = r;
  std::vector<int> pts(2 * r);
  for (int i = 0; i < 2 * r; ++i) pts[i] = i;
  BrauerDiagram cur;
  cur.partner.assign(2 * r, -1);
  enumerate_matchings(pts, cur, b.diags);
  std::sort(b.diags.begin(), b.diags.end());
  return cache.emplace(r, std::move(b)).first->second;
}

size_t BrauerBasis::index(const BrauerDiagram& d) const {
  auto it = std::lower_bound(diags.begin(), diags.end(), d);
  if (it == diags.end() || !(*it == d)) throw std::logic_error("diagram not in basis");
  return (size_t)(it - diags.begin());
}

// ---- dangles ----------------------------------------------------------------

int Dangle::t() const {
  int n = 0;
  for (int x : arc)
    if (x < 0) ++n;
  return n;
}

std::string Dangle::str() const {
  std::ostringstream os;
  for (size_t p = 0; p < arc.size(); ++p) {
    if (arc[p] < (int)p) continue;
    os << "(" << p + 1 << "," << arc[p] + 1 << ")";
  }
  return os.str();
}

static std::vector<std::pair<int, int>> arc_list(const Dangle& d) {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < d.r(); ++p)
    if (d.arc[p] > p) out.push_back({p, d.arc[p]});
  return out;
}

namespace {
struct DangleTable {
  std::vector<Dangle> list;
  std::map<Dangle, size_t> index;
};
}  // namespace

static const DangleTable& dangle_table(int r, int t) {
  static std::map<std::pair<int, int>, DangleTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(r, t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if ((r - t) % 2 != 0 || t < 0 || t > r)
    throw std::invalid_argument("no (r,t)-dangles");
  DangleTable tab;
  Dangle cur;
  cur.arc.assign(r, -1);
  std::vector<Dangle> raw;
  // arcs enumerated by strictly increasing smallest endpoint, so each
  // partial matching shows up exactly once
  std::function<void(int, int, Dangle&)> rec = [&](int k, int first, Dangle& d) {
    if (k == 0) {
      raw.push_back(d);
      return;
    }
    for (int a = first; a < r; ++a) {
      if (d.arc[a] >= 0) continue;
      for (int b = a + 1; b < r; ++b) {
        if (d.arc[b] >= 0) continue;
        d.arc[a] = b;
        d.arc[b] = a;
        rec(k - 1, a + 1, d);
        d.arc[a] = -1;
        d.arc[b] = -1;
      }
    }
  };
  rec((r - t) / 2, 0, cur);
  std::sort(raw.begin(), raw.end(), [](const Dangle& x, const Dangle& y) {
    return arc_list(x) < arc_list(y);
  });
  tab.list = std::move(raw);
  for (size_t i = 0; i < tab.list.size(); ++i) tab.index.emplace(tab.list[i], i);
  return cache.emplace(key, std::move(tab)).first->second;
}

const std::vector<Dangle>& dangles(int r, int t) { return dangle_table(r, t).list; }

size_t dangle_index(int r, int t, const Dangle& d) {
  const auto& tab = dangle_table(r, t);
  auto it = tab.index.find(d);
  if (it == tab.index.end()) throw std::logic_error("dangle not in basis");
  return it->second;
}

DangleResult diagram_on_dangle(const BrauerDiagram& d, const Dangle& S) {
  int n = d.r();
  assert(S.r() == n);
  DangleResult res;
  res.loops = 0;
  res.out.arc.assign(n, -1);
  std::vector<int> label(n, -1);
  int t = 0;
  for (int p = 0; p < n; ++p)
    if (S.arc[p] < 0) label[p] = t++;
  std::vector<char> vis(n, 0);
  std::vector<int> carried(n, -1);  // top point -> old label, for free ends

  for (int p = 0; p < n; ++p) {
    if (res.out.arc[p] >= 0 || carried[p] >= 0) continue;
    int q = d.partner[p];
    if (q < n) {  // arc across the top of d
      res.out.arc[p] = q;
      res.out.arc[q] = p;
      continue;
    }
    int i = q - n;
    while (true) {
      vis[i] = 1;
      if (S.arc[i] < 0) {  // strand ends at a dangle label
        carried[p] = label[i];
        break;
      }
      int j = S.arc[i];
      vis[j] = 1;
      int q2 = d.partner[n + j];
      if (q2 < n) {  // back out through the top
        res.out.arc[p] = q2;
        res.out.arc[q2] = p;
        break;
      }
      i = q2 - n;
    }
  }
  // a label never reached from the top means two labels met: through drop
  for (int i = 0; i < n; ++i)
    if (S.arc[i] < 0 && !vis[i]) return res;
  res.zero = false;
  res.sigma.clear();
  for (int p = 0; p < n; ++p)
    if (carried[p] >= 0) res.sigma.push_back(carried[p]);
  for (int i = 0; i < n; ++i) {
    if (vis[i] || S.arc[i] < 0) continue;
    ++res.loops;
    int cur = i;
    while (!vis[cur]) {
      vis[cur] = 1;
      int j = S.arc[cur];
      vis[j] = 1;
      cur = d.partner[n + j] - n;
    }
  }
  return res;
}

DanglePairResult dangle_pair(const Dangle& S, const Dangle& T) {
  int n = S.r();
  assert(T.r() == n);
  DanglePairResult res;
  std::vector<int> labS(n, -1), labT(n, -1);
  int tS = 0, tT = 0;
  for (int p = 0; p < n; ++p) {
    if (S.arc[p] < 0) labS[p] = tS++;
    if (T.arc[p] < 0) labT[p] = tT++;
  }
  if (tS != tT) return res;
  std::vector<char> vis(n, 0);
  res.beta.assign(tS, -1);
  for (int p = 0; p < n; ++p) {
    if (S.arc[p] >= 0 || vis[p]) continue;
    vis[p] = 1;
    int cur = p;
    bool sideT = true;  // next edge to follow
    while (true) {
      int nxt = sideT ? T.arc[cur] : S.arc[cur];
      if (nxt < 0) {
        if (!sideT) return res;  // path joins two S-labels: through drop
        res.beta[labS[p]] = labT[cur];
        break;
      }
      vis[nxt] = 1;
      cur = nxt;
      sideT = !sideT;
    }
  }
  for (int p = 0; p < n; ++p)
    if (T.arc[p] < 0 && !vis[p]) return res;  // T-label to T-label path
  res.zero = false;
  res.loops = 0;
  for (int p = 0; p < n; ++p) {
    if (vis[p]) continue;
    ++res.loops;
    int cur = p;
    bool sideS = true;
    while (!vis[cur]) {
      vis[cur] = 1;
      cur = sideS ? S.arc[cur] : T.arc[cur];
      sideS = !sideS;
    }
  }
  return res;
}

// ---- cell modules over B_r(3) -----------------------------------------------

static Rat pow3(int k) {
  Rat f(1);
  for (int i = 0; i < k; ++i) f *= 3;
  return f;
}

Matrix<Rat> brauer_cell_action(int r, const Partition& lambda,
                               const BrauerElt<Rat>& x) {
  int t = part_size(lambda);
  const auto& dl = dangles(r, t);
  const CellRep& rep = cell_rep(lambda);
  int dt = (int)rep.tabs.size();
  int w = (int)dl.size() * dt;
  Matrix<Rat> M(w, w);
  for (size_t j = 0; j < dl.size(); ++j) {
    for (const auto& [d, c] : x) {
      DangleResult res = diagram_on_dangle(d, dl[j]);
      if (res.zero) continue;
      size_t i = dangle_index(r, t, res.out);
      Rat f = c * pow3(res.loops);
      Matrix<Rat> rho = rep.word_action_q1(perm_reduced_word(perm_inverse(res.sigma)));
      for (int a = 0; a < dt; ++a)
        for (int b = 0; b < dt; ++b)
          if (rho.at(a, b) != 0)
            M.at((int)i * dt + a, (int)j * dt + b) += f * rho.at(a, b);
    }
  }
  return M;
}

Matrix<Rat> brauer_gram(int r, const Partition& lambda) {
  int t = part_size(lambda);
  const auto& dl = dangles(r, t);
  const CellRep& rep = cell_rep(lambda);
  int dt = (int)rep.tabs.size();
  Matrix<Rat> G0 = cell_gram_q1(lambda);
  int w = (int)dl.size() * dt;
  Matrix<Rat> M(w, w);
  for (size_t i = 0; i < dl.size(); ++i)
    for (size_t j = 0; j < dl.size(); ++j) {
      DanglePairResult pr = dangle_pair(dl[i], dl[j]);
      if (pr.zero) continue;
      Rat f = pow3(pr.loops);
      Matrix<Rat> rho = rep.word_action_q1(perm_reduced_word(perm_inverse(pr.beta)));
      Matrix<Rat> block = G0 * rho;
      for (int a = 0; a < dt; ++a)
        for (int b = 0; b < dt; ++b)
          M.at((int)i * dt + a, (int)j * dt + b) = f * block.at(a, b);
    }
  return M;
}

RankReport brauer_simple_dims(int r, const RankOptions& opt) {
  CellDatum<Rat> datum;
  datum.poset = lambda_poset(r);
  datum.weight = [r](const Partition& lam) {
    return (long)m_lambda_size(r, lam).get_si();
  };
  datum.gram = [r](const Partition& lam) { return brauer_gram(r, lam); };
  return simple_dims(datum, opt);
}

// ---- ideal machinery ----------------------------------------------------------

SparseVec<Rat> brauer_to_sparse(const BrauerElt<Rat>& x) {
  if (x.empty()) return {};
  const BrauerBasis& basis = brauer_basis(x.begin()->first.r());
  SparseVec<Rat> out;
  out.reserve(x.size());
  for (const auto& [d, c] : x) out.push_back({basis.index(d), c});
  return out;
}

std::vector<SparseAction<Rat>> brauer_closure_actions(int r) {
  const BrauerBasis& basis = brauer_basis(r);
  std::vector<SparseAction<Rat>> acts;
  std::vector<BrauerDiagram> gens;
  for (int i = 1; i < r; ++i) {
    gens.push_back(brauer_s_diag(r, i));
    gens.push_back(brauer_e_diag(r, i));
  }
  for (const auto& g : gens) {
    acts.push_back([&basis, g](const SparseVec<Rat>& v) {
      SparseVec<Rat> out;
      out.reserve(v.size());
      for (const auto& [idx, c] : v) {
        auto [d, loops] = compose_diagrams(g, basis.diags[idx]);
        out.push_back({basis.index(d), c * pow3(loops)});
      }
      return out;
    });
    acts.push_back([&basis, g](const SparseVec<Rat>& v) {
      SparseVec<Rat> out;
      out.reserve(v.size());
      for (const auto& [idx, c] : v) {
        auto [d, loops] = compose_diagrams(basis.diags[idx], g);
        out.push_back({basis.index(d), c * pow3(loops)});
      }
      return out;
    });
  }
  return acts;
}

long brauer_ideal_dim(int r, const BrauerElt<Rat>& x, const RankOptions& opt) {
  return ideal_closure_dim<Rat>(brauer_basis(r).dim(), {brauer_to_sparse(x)},
                                brauer_closure_actions(r), opt);
}

bool brauer_radical_contained(int r, const Partition& lambda,
                              const BrauerElt<Rat>& x) {
  Matrix<Rat> gram = brauer_gram(r, lambda);
  std::vector<Matrix<Rat>> gens;
  for (int i = 1; i < r; ++i) {
    gens.push_back(brauer_cell_action(r, lambda, brauer_s<Rat>(r, i)));
    gens.push_back(brauer_cell_action(r, lambda, brauer_e<Rat>(r, i)));
  }
  Matrix<Rat> xact = brauer_cell_action(r, lambda, x);
  std::vector<std::vector<Rat>> seeds;
  for (int j = 0; j < xact.cols; ++j) {
    std::vector<Rat> col(xact.rows);
    for (int i = 0; i < xact.rows; ++i) col[i] = xact.at(i, j);
    seeds.push_back(std::move(col));
  }
  return radical_contained(gram, gens, seeds);
}

}  // namespace diagalg
