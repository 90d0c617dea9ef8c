#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagalg/matrix.hpp"
#include "diagalg/ring.hpp"

namespace diagalg {

// ---- partitions ----

using Partition = std::vector<int>;  // weakly decreasing positive parts

int part_size(const Partition& p);
Partition conjugate(const Partition& p);
bool dominates(const Partition& a, const Partition& b);  // a >= b, same size
std::string part_str(const Partition& p);                // "2,1,1"; "0" for empty
Partition part_parse(const std::string& s);
std::vector<Partition> partitions_of(int n);

// Hook length formula: number of standard tableaux of shape p.
Int hook_dim(const Partition& p);

// Cell-poset Lambda(r): partitions of t in {r, r-2, ..., 1 or 0}, larger t
// first, within fixed t in (dominance-refining) descending lexicographic order.
std::vector<Partition> lambda_poset(int r);

// dim W(lambda) = C(r,t) (2k-1)!! d_lambda  with t = |lambda|, k = (r-t)/2.
Int m_lambda_size(int r, const Partition& lambda);

// Lambda^0: lambda in Lambda(r) whose first two columns have <= 3 boxes,
// i.e. {(t), (t-1,1), (1^3)} intersected with Lambda(r).
std::vector<Partition> lambda_zero(int r);

// ---- tableaux ----

// Standard tableau stored as rows of 1-based entries.
using Tableau = std::vector<std::vector<int>>;

std::vector<Tableau> standard_tableaux(const Partition& p);
Partition tableau_shape(const Tableau& t);
Tableau row_reading_tableau(const Partition& p);  // 1..l1 in row 1, etc.

// ---- permutations and RSK ----

using Perm = std::vector<int>;  // one-line, 0-based images

int perm_length(const Perm& w);
Perm perm_inverse(const Perm& w);
Perm perm_mul(const Perm& u, const Perm& v);  // (u*v)(i) = u(v(i))
// 0-based indices i1..ik with w = s_{i1} o ... o s_{ik}, k = l(w).
std::vector<int> perm_reduced_word(Perm w);

// Row-insertion RSK on the word (w(1), ..., w(n)); returns (P, Q).
std::pair<Tableau, Tableau> rsk(const Perm& w);
Perm rsk_inverse(const Tableau& P, const Tableau& Q);

// ---- symmetric group with KL machinery ----

using KLPoly = std::vector<long long>;  // coefficients of u^i

class SymGroup {
 public:
  explicit SymGroup(int t);
  int t;
  int N;  // t!
  const Perm& elem(int i) const { return elems_[i]; }
  int index(const Perm& w) const;
  int length(int w) const { return len_[w]; }
  int smul(int s, int w) const { return smul_[s][w]; }  // index of s_i o w
  int muls(int w, int s) const { return muls_[s][w]; }  // index of w o s_i
  int inverse(int w) const { return inv_[w]; }
  bool bruhat_leq(int v, int w) const;

  const KLPoly& kl(int v, int w) const;  // P_{v,w}; empty poly = 0
  long long mu(int v, int w) const;

  // Descending list of {z : z < w, s z < z, mu(z, w) != 0} for the recursion.
  std::vector<int> mu_list(int w) const;

 private:
  std::vector<Perm> elems_;
  std::unordered_map<uint64_t, int> rank_;
  std::vector<int> len_, inv_;
  std::vector<std::vector<int>> smul_, muls_;
  std::vector<std::vector<uint64_t>> leq_;  // bitset rows
  mutable std::unordered_map<uint64_t, KLPoly> klcache_;
};

std::shared_ptr<SymGroup> sym_group(int t);  // cached per t

// ---- Hecke algebra H_t(q^2), normalisation (T_i - q^2)(T_i + q^-2) = 0 ----

struct HeckeElt {
  std::shared_ptr<SymGroup> G;
  std::map<int, RatFunc> c;  // perm index -> coefficient

  static HeckeElt unit(std::shared_ptr<SymGroup> G);
  static HeckeElt t_basis(std::shared_ptr<SymGroup> G, int w);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt operator*(const HeckeElt& o) const;
  HeckeElt scaled(const RatFunc& f) const;
  bool operator==(const HeckeElt& o) const;
  bool is_zero() const;
  HeckeElt left_mult_gen(int s) const;  // T_{s_i} * this
};

// KL basis element c_w = sum_y (-1)^{l(y)} q^{2(l(w)-l(y))} P_{y,w}(q^4) T_y.
// Its q=1 image is sum_y (-1)^{l(y)} P_{y,w}(1) y.
HeckeElt kl_basis(std::shared_ptr<SymGroup> G, int w);
std::map<int, long long> q1_signed_basis(std::shared_ptr<SymGroup> G, int w);

// ---- cell representations ----

struct CellRep {
  Partition lambda;
  int t;
  std::shared_ptr<SymGroup> G;
  std::vector<Tableau> tabs;            // basis order
  std::vector<Matrix<RatFunc>> gen;     // action of T_1..T_{t-1}
  std::vector<Matrix<Rat>> gen1;        // the same at q = 1 (action of s_i)

  // Matrix of T_w^{eps} along a signed generator word (pairs (i, +-1)).
  Matrix<RatFunc> word_action(const std::vector<std::pair<int, int>>& word) const;
  Matrix<Rat> word_action_q1(const std::vector<int>& word) const;
};

const CellRep& cell_rep(const Partition& lambda);  // cached

// Invariant (contravariant symmetric) form of the cell module, unique up to
// scalar, normalised so the first basis tableau pairs to 1 with itself.
const Matrix<RatFunc>& cell_gram_q(const Partition& lambda);
Matrix<Rat> cell_gram_q1(const Partition& lambda);  // independent q=1 solve

// ---- misc ----

Int binomial(int n, int k);
Int odd_double_factorial(int k);  // 1*3*...*(2k-1), k=0 -> 1
Int factorial(int n);

}  // namespace diagalg
