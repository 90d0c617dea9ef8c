#pragma once

#include <map>
#include <string>
#include <vector>

#include "cellcore.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "symcomb.hpp"

namespace diagalg {

// Perfect matching on 2r points; 0..r-1 are the top boundary, r..2r-1 the
// bottom.  partner[p] is the point matched with p.
struct BrauerDiagram {
  std::vector<int> partner;
  int r() const { return (int)partner.size() / 2; }
  auto operator<=>(const BrauerDiagram&) const = default;
  BrauerDiagram flipped() const;  // the anti-involution * (top-bottom mirror)
  std::string str() const;        // "1-2,3-1',2'-3'" with bottom points primed
};

BrauerDiagram brauer_identity(int r);
BrauerDiagram brauer_s_diag(int r, int i);  // 1 <= i <= r-1
BrauerDiagram brauer_e_diag(int r, int i);
// Diagram of a permutation: bottom j joined to top w(j) (0-based one-line w).
BrauerDiagram brauer_perm_diag(int r, const Perm& w);
BrauerDiagram brauer_parse(const std::string& s, int r);

// top stacked over bot: the result keeps top's upper boundary and bot's lower
// boundary; interior loops are counted.
std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& top,
                                               const BrauerDiagram& bot);

struct BrauerBasis {
  int r = 0;
  std::vector<BrauerDiagram> diags;  // sorted, (2r-1)!! entries
  size_t dim() const { return diags.size(); }
  size_t index(const BrauerDiagram& d) const;
};
const BrauerBasis& brauer_basis(int r);  // cached

// ---- elements --------------------------------------------------------------

template <class K>
using BrauerElt = std::map<BrauerDiagram, K>;

template <class K>
void brauer_add_term(BrauerElt<K>& x, const BrauerDiagram& d, const K& c) {
  auto it = x.find(d);
  if (it == x.end()) {
    if (!(c == K(0))) x.emplace(d, c);
    return;
  }
  it->second = it->second + c;
  if (it->second == K(0)) x.erase(it);
}

template <class K>
BrauerElt<K> brauer_unit(int r) {
  return {{brauer_identity(r), K(1)}};
}

template <class K>
BrauerElt<K> brauer_add(const BrauerElt<K>& x, const BrauerElt<K>& y) {
  BrauerElt<K> out = x;
  for (auto& [d, c] : y) brauer_add_term(out, d, c);
  return out;
}

template <class K>
BrauerElt<K> brauer_scale(const BrauerElt<K>& x, const K& f) {
  BrauerElt<K> out;
  if (f == K(0)) return out;
  for (auto& [d, c] : x) out.emplace(d, c * f);
  return out;
}

template <class K>
BrauerElt<K> brauer_sub(const BrauerElt<K>& x, const BrauerElt<K>& y) {
  return brauer_add(x, brauer_scale(y, K(-1)));
}

template <class K>
BrauerElt<K> brauer_mult(const BrauerElt<K>& x, const BrauerElt<K>& y,
                         const K& delta) {
  BrauerElt<K> out;
  for (auto& [dx, cx] : x)
    for (auto& [dy, cy] : y) {
      auto [d, loops] = compose_diagrams(dx, dy);
      K c = cx * cy;
      for (int l = 0; l < loops; ++l) c = c * delta;
      brauer_add_term(out, d, c);
    }
  return out;
}

template <class K>
BrauerElt<K> brauer_star(const BrauerElt<K>& x) {
  BrauerElt<K> out;
  for (auto& [d, c] : x) out.emplace(d.flipped(), c);
  return out;
}

// B_s -> B_r, identity strands on s+1..r.
template <class K>
BrauerElt<K> brauer_embed(const BrauerElt<K>& x, int r) {
  BrauerElt<K> out;
  for (auto& [d, c] : x) {
    int s = d.r();
    BrauerDiagram e = brauer_identity(r);
    for (int p = 0; p < 2 * s; ++p) {
      int q = d.partner[p];
      e.partner[p < s ? p : p - s + r] = q < s ? q : q - s + r;
    }
    out.emplace(std::move(e), c);
  }
  return out;
}

template <class K>
BrauerElt<K> brauer_s(int r, int i) {
  return {{brauer_s_diag(r, i), K(1)}};
}

template <class K>
BrauerElt<K> brauer_e(int r, int i) {
  return {{brauer_e_diag(r, i), K(1)}};
}

// e_{i,j}: arcs {i,j} on both boundaries, vertical strands elsewhere.
template <class K>
BrauerElt<K> brauer_eij(int r, int i, int j) {
  BrauerDiagram d = brauer_identity(r);
  d.partner[i - 1] = j - 1;
  d.partner[j - 1] = i - 1;
  d.partner[r + i - 1] = r + j - 1;
  d.partner[r + j - 1] = r + i - 1;
  return {{std::move(d), K(1)}};
}

// Same element as a conjugate pi e_1 pi^{-1} for any pi with {pi(1),pi(2)}={i,j}.
template <class K>
BrauerElt<K> brauer_eij_conj(int r, int i, int j, const K& delta) {
  Perm w(r);
  std::vector<int> rest;
  for (int p = 0; p < r; ++p)
    if (p != i - 1 && p != j - 1) rest.push_back(p);
  w[0] = i - 1;
  w[1] = j - 1;
  for (size_t p = 0; p < rest.size(); ++p) w[p + 2] = rest[p];
  BrauerElt<K> pi = {{brauer_perm_diag(r, w), K(1)}};
  BrauerElt<K> piinv = {{brauer_perm_diag(r, perm_inverse(w)), K(1)}};
  return brauer_mult(pi, brauer_mult(brauer_e<K>(r, 1), piinv, delta), delta);
}

// F = (1 - s_1)(1 - s_3), needs r >= 4.
template <class K>
BrauerElt<K> brauer_F(int r) {
  BrauerElt<K> a = brauer_sub(brauer_unit<K>(r), brauer_s<K>(r, 1));
  BrauerElt<K> b = brauer_sub(brauer_unit<K>(r), brauer_s<K>(r, 3));
  return brauer_mult(a, b, K(1));  // permutation products never close loops
}

// Phi = F e_2 F - F - (1/4) F e_2 e_{1,4} F, embedded into B_r.
template <class K>
BrauerElt<K> brauer_Phi(int r, const K& delta) {
  BrauerElt<K> F = brauer_F<K>(r);
  BrauerElt<K> e2 = brauer_e<K>(r, 2);
  BrauerElt<K> Fe2F = brauer_mult(F, brauer_mult(e2, F, delta), delta);
  BrauerElt<K> mid = brauer_mult(e2, brauer_eij<K>(r, 1, 4), delta);
  BrauerElt<K> Fe2e14F = brauer_mult(F, brauer_mult(mid, F, delta), delta);
  BrauerElt<K> out = brauer_sub(Fe2F, F);
  return brauer_sub(out, brauer_scale(Fe2e14F, K(K(1) / K(4))));
}

// Evaluates a word like "s1 e2 s3" (also "1" for the unit).
template <class K>
BrauerElt<K> brauer_word(int r, const std::string& word, const K& delta) {
  BrauerElt<K> out = brauer_unit<K>(r);
  size_t p = 0;
  while (p < word.size()) {
    while (p < word.size() && word[p] == ' ') ++p;
    if (p >= word.size()) break;
    size_t q = word.find(' ', p);
    std::string tok = word.substr(p, q == std::string::npos ? q : q - p);
    p = q == std::string::npos ? word.size() : q + 1;
    if (tok == "1") continue;
    char kind = tok[0];
    int i = std::stoi(tok.substr(1));
    if (kind == 's') out = brauer_mult(out, brauer_s<K>(r, i), delta);
    else if (kind == 'e') out = brauer_mult(out, brauer_e<K>(r, i), delta);
    else throw std::invalid_argument("bad generator token: " + tok);
  }
  return out;
}

// ---- cell modules -----------------------------------------------------------

// (r,t)-dangle: arc[p] is the matched point or -1; the t free points carry
// labels 1..t in increasing position order.
struct Dangle {
  std::vector<int> arc;
  int r() const { return (int)arc.size(); }
  int t() const;
  auto operator<=>(const Dangle&) const = default;
  std::string str() const;  // "(13)(45)" style arc list
};

// All (r,t)-dangles ordered by their sorted arc-pair lists.  Cached.
const std::vector<Dangle>& dangles(int r, int t);
size_t dangle_index(int r, int t, const Dangle& d);

struct DangleResult {
  bool zero = true;
  Dangle out;
  Perm sigma;  // new label slot -> old label (0-based)
  int loops = 0;
};
// Stacks the diagram above the dangle; zero when through strands drop.
DangleResult diagram_on_dangle(const BrauerDiagram& d, const Dangle& S);

struct DanglePairResult {
  bool zero = true;
  Perm beta;  // label of S -> label of T (0-based)
  int loops = 0;
};
// Mirrors S on top of T; zero when two same-side labels meet.
DanglePairResult dangle_pair(const Dangle& S, const Dangle& T);

// Matrix of x on the cell module W(lambda) of B_r(3), basis (dangle, tableau)
// with the tableau index fastest.
Matrix<Rat> brauer_cell_action(int r, const Partition& lambda,
                               const BrauerElt<Rat>& x);

// Gram matrix of the cell form on W(lambda), delta = 3.
Matrix<Rat> brauer_gram(int r, const Partition& lambda);

// Gram ranks and radical data for all of Lambda(r).
RankReport brauer_simple_dims(int r, const RankOptions& opt = {});

// ---- ideal machinery ---------------------------------------------------------

SparseVec<Rat> brauer_to_sparse(const BrauerElt<Rat>& x);
// Left and right multiplication by every s_i and e_i, delta = 3.
std::vector<SparseAction<Rat>> brauer_closure_actions(int r);
// dim of the two-sided ideal generated by x in B_r(3).
long brauer_ideal_dim(int r, const BrauerElt<Rat>& x, const RankOptions& opt = {});

// Does the submodule of W(lambda) generated by x W(lambda) contain the radical
// of the cell form?  Exact.
bool brauer_radical_contained(int r, const Partition& lambda,
                              const BrauerElt<Rat>& x);

}  // namespace diagalg
