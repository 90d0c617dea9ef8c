#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"

namespace diagalg {

// Basis words of V(2)^{tensor r}: letters -1, 0, 1, weight 2 * (sum of letters).
using Word = std::vector<int>;
template <class K>
using TVec = std::map<Word, K>;

size_t word_index(const Word& w);
Word index_word(size_t idx, int r);

template <class K>
void tvec_add(TVec<K>& v, const Word& w, const K& c) {
  if (c == K(0)) return;
  auto it = v.find(w);
  if (it == v.end()) {
    v.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second == K(0)) v.erase(it);
}

// Two-site operator tables, 9x9 over the pair index 3(a+1) + (b+1).
// Quantum kinds: 'e', 'd', 'c', 'g', 'G' (g inverse).  Classical: 'e', 's'.
// d, c are the projections onto L(2), L(4); e is [3]_q times the L(0) one.
const Matrix<RatFunc>& op2_q(char kind);
const Matrix<Rat>& op2_c(char kind);

// Applies a two-site table to factors (i, i+1) of a sparse tensor, 1-based i.
template <class K>
TVec<K> act_site2(const Matrix<K>& t, int i, const TVec<K>& v) {
  TVec<K> out;
  for (const auto& [w, c] : v) {
    int col = 3 * (w[i - 1] + 1) + (w[i] + 1);
    for (int row = 0; row < 9; ++row) {
      const K& m = t.at(row, col);
      if (m == K(0)) continue;
      Word nw = w;
      nw[i - 1] = row / 3 - 1;
      nw[i] = row % 3 - 1;
      tvec_add(out, nw, K(c * m));
    }
  }
  return out;
}

// Full 3^r x 3^r generator matrices (column = input word index).
Matrix<RatFunc> gen_matrix_q(char kind, int i, int r);
Matrix<Rat> gen_matrix_c(char kind, int i, int r);

// Quantum sl2 generators through the iterated coproduct; gen is one of
// 'e', 'f', 'k', 'K' (k inverse).
TVec<RatFunc> act_uq(char gen, const TVec<RatFunc>& v);

// f_i = -g_i - (1 - q^-2) e_i + q^2, F = f_1 f_3, and the degree-4 kernel
// element Phi, all as endomorphism matrices of V^{tensor r}, r >= 4.
Matrix<RatFunc> f_matrix_q(int i, int r);
Matrix<RatFunc> bigF_matrix_q(int r);
Matrix<RatFunc> phi_matrix_q(int r);
Matrix<Rat> bigF_matrix_c(int r);
Matrix<Rat> phi_matrix_c(int r);

// which in {"Phi", "Phi_q", "F", "F_q"}: true iff it kills V^{tensor 4}.
bool annihilation_check(const std::string& which);

// Determinant of e_2 restricted to L(2) x L(2) -> V x L(0) x V inside
// V^{tensor 4}, in the fixed weight bases of the summands.
RatFunc e2_restriction_det();

// Quantum trace of an endomorphism of V_q(2)^{tensor 2}: ordinary trace
// weighted by q^{-mu} on weight-mu basis words.
RatFunc quantum_trace2(const Matrix<RatFunc>& f);

// Multiplicities of V(k) in V(n)^{tensor r} and endomorphism dimensions.
struct MultTable {
  int n = 0, r = 0;
  std::map<int, Int> a;  // coefficient of x^k in [n+1]_x^r, k of parity nr
  std::map<int, Int> m;  // multiplicity of V(k), k >= 0
  Int d;                 // dim End(V(n)^{tensor r}) = m_n^{2r}(0)
};
MultTable multiplicity_table(int n, int r);
Int d2_closed_form(int r);           // closed form for d(2, r)
Int d_cg_bruteforce(int n, int r);   // Clebsch-Gordan convolution oracle
std::string mult_table_tsv(int n, int rmax);
std::string mult_table_json(int n, int rmax);

// Dimension of the image of the diagram algebra in End(V^{tensor r}) over
// F_p, certified at `trials` independent primes (and points in the quantum
// case).  Classical supports r <= 5 (Brauer diagram sweep), quantum r <= 4
// (generated-subalgebra closure).  Kernel dim is (2r-1)!! minus the image.
long rep_image_dim(int r, bool quantum, uint64_t seed = 0, int trials = 2);
long rep_kernel_dim(int r, bool quantum, uint64_t seed = 0);

}  // namespace diagalg
