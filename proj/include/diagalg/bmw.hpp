#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer.hpp"
#include "cellcore.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "symcomb.hpp"

namespace diagalg {

// ---- lifted tangle words ----------------------------------------------------
//
// BMW_r(q) on the lifted tangle basis: one basis element T(D) per Brauer
// diagram D, namely the totally descending lift with zero self-writhe.  The
// strand order is by smallest boundary point (top 0..r-1, then bottom
// r..2r-1), each strand traversed away from that point; in T(D) an earlier
// strand passes over every later one.  Multiplication appends elementary
// slices and resolves the result by the Kauffman skein relations.

enum class SliceKind : uint8_t { Pos, Neg, Cap };

struct Slice {
  SliceKind k;
  int i;  // 1-based position, 1 <= i <= r-1
};

// Positive crossing at i: the strand entering at position i passes over.
// Pos realises g_i, Neg realises g_i^{-1} and Cap realises e_i.

// Word whose evaluation is exactly T(d): (top perm) (e_1 e_3 ...) (bottom
// perm) with every crossing lifted so the strand with the smaller boundary
// key is on top.
std::vector<Slice> bmw_word(const BrauerDiagram& d);

// One monomial sign * z^zdeg * y^ypow * delta^loops on a basis diagram.
struct SkeinTerm {
  BrauerDiagram d;
  int sign;  // +-1
  int zdeg;
  int ypow;
  int loops;
};

// Full skein expansion of a slice word in the descending basis.  Terms are
// not collected; equal diagrams may repeat.
std::vector<SkeinTerm> skein_eval(int r, const std::vector<Slice>& word);

// ---- coefficient fields ------------------------------------------------------

// F_p with a process-wide modulus; set_modulus before building any engine and
// keep it fixed while that engine lives.
struct Fp {
  uint64_t v = 0;
  static uint64_t p;
  static void set_modulus(uint64_t m) { p = m; }
  Fp() = default;
  explicit Fp(long long n) {
    long long m = n % (long long)p;
    v = (uint64_t)(m < 0 ? m + (long long)p : m);
  }
  friend Fp operator+(Fp a, Fp b) { return raw((a.v + b.v) % p); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v + p - b.v) % p); }
  friend Fp operator*(Fp a, Fp b) {
    return raw((uint64_t)((unsigned __int128)a.v * b.v % p));
  }
  friend Fp operator/(Fp a, Fp b);
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  static Fp raw(uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }
};

// K plus the injection A_q -> K pinning q.
template <class K>
struct BmwField {
  std::function<K(const RatFunc&)> inject;
  K qpow(int k) const { return inject(RatFunc::q_power(k)); }
};

BmwField<RatFunc> bmw_field_q();
BmwField<Rat> bmw_field_q1();
BmwField<Fp> bmw_field_fp(uint64_t q0);  // uses the current Fp modulus

// The constants of the Phi_q story, as exact rational functions:
// y, z, delta, a, at (= a tilde), b, c, d.
const std::map<std::string, RatFunc>& bmw_constants();

// ---- the algebra --------------------------------------------------------------

template <class K>
class Bmw {
 public:
  using Vec = std::map<size_t, K>;  // index into brauer_basis(r) -> coeff

  Bmw(int r, BmwField<K> f);
  int r;
  BmwField<K> field;
  const BrauerBasis& basis() const { return *basis_; }

  Vec unit() const;
  Vec gen_e(int i) const;
  Vec gen_g(int i, int sgn = +1);  // sgn = -1 for g_i^{-1}

  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(const Vec& x, const K& c) const;
  Vec mul(const Vec& x, const Vec& y);
  Vec rmul(const Vec& x, Slice s);         // x * slice
  Vec lmul(Slice s, const Vec& x);         // slice * x
  Vec star(const Vec& x);                  // word-reversing anti-involution
  Vec word(const std::string& w);          // "g1 g2^-1 e3", "1" for the unit
  Vec from_diagrams(const BrauerElt<K>& x) const;
  BrauerElt<K> to_diagrams(const Vec& x) const;

  K constant(const std::string& name) const;  // via bmw_constants()
  Vec f_elt(int i);   // -g_i - (1-q^{-2})e_i + q^2
  Vec bigF();         // f_1 f_3, r >= 4
  Vec e14();          // g_3^{-1} g_1 e_2 g_1^{-1} g_3
  Vec e1234();        // e_2 g_1 g_3^{-1} g_2 g_1^{-1} g_3
  Vec phi();          // a F e_2 F - b F - c F e_2 e_14 F + d F e_1234 F

  const std::vector<Slice>& word_of(size_t idx) const { return words_[idx]; }

 private:
  const BrauerBasis* basis_;
  std::vector<std::vector<Slice>> words_;
  // memo tables, token = 3*(i-1) + kind
  std::vector<std::vector<std::optional<Vec>>> rtab_, ltab_;
  std::vector<std::optional<Vec>> startab_;

  Vec instantiate(const std::vector<SkeinTerm>& terms) const;
  const Vec& rtab(size_t idx, Slice s);
  const Vec& ltab(size_t idx, Slice s);
};

extern template class Bmw<RatFunc>;
extern template class Bmw<Rat>;
extern template class Bmw<Fp>;

// ---- cell modules -------------------------------------------------------------

// Quantum dangle: arcs plus a vector over the standard tableaux of the cell,
// the H_t(q^2) Kazhdan-Lusztig cell module coordinates.
struct QDangle {
  Dangle S;
  std::vector<RatFunc> tab;
};

// Diagram with top arcs from S, bottom arcs from T, and the l-th free point
// of S joined to the w(l)-th free point of T.
BrauerDiagram dangle_pair_diagram(const Dangle& S, const Dangle& T, const Perm& w);

// Cellular basis element C^lambda_{(S,tau),(T,ups)} in tangle coordinates.
template <class K>
typename Bmw<K>::Vec bmw_cellular(Bmw<K>& A, const Partition& lambda,
                                  const Dangle& S, int tau, const Dangle& T,
                                  int ups);

// Gram matrix of the cell form on W_q(lambda), basis (dangle, tableau) with
// the tableau index fastest (same order as brauer_cell_action).
template <class K>
Matrix<K> bmw_gram(Bmw<K>& A, const Partition& lambda);

// Matrix of x acting on W_q(lambda) in the same basis.
template <class K>
Matrix<K> bmw_cell_action(Bmw<K>& A, const Partition& lambda,
                          const typename Bmw<K>::Vec& x);

extern template typename Bmw<RatFunc>::Vec bmw_cellular(Bmw<RatFunc>&, const Partition&, const Dangle&, int, const Dangle&, int);
extern template typename Bmw<Rat>::Vec bmw_cellular(Bmw<Rat>&, const Partition&, const Dangle&, int, const Dangle&, int);
extern template typename Bmw<Fp>::Vec bmw_cellular(Bmw<Fp>&, const Partition&, const Dangle&, int, const Dangle&, int);
extern template Matrix<RatFunc> bmw_gram(Bmw<RatFunc>&, const Partition&);
extern template Matrix<Rat> bmw_gram(Bmw<Rat>&, const Partition&);
extern template Matrix<Fp> bmw_gram(Bmw<Fp>&, const Partition&);
extern template Matrix<RatFunc> bmw_cell_action(Bmw<RatFunc>&, const Partition&, const Bmw<RatFunc>::Vec&);
extern template Matrix<Rat> bmw_cell_action(Bmw<Rat>&, const Partition&, const Bmw<Rat>::Vec&);
extern template Matrix<Fp> bmw_cell_action(Bmw<Fp>&, const Partition&, const Bmw<Fp>::Vec&);

// Gram ranks over Q(q) for all of Lambda(r), by agreeing (prime, point)
// trials; escalates to exact elimination on disagreement.
RankReport bmw_simple_dims(int r, const RankOptions& opt = {});

// Exact Gram over Q(q) (small r only).
Matrix<RatFunc> bmw_gram_q(int r, const Partition& lambda);

// ---- ideals and the quotient P_r(q) -------------------------------------------

// dim of the two-sided ideal generated by x in BMW_r over Q(q), by agreeing
// modular (prime, point) closures.
long bmw_ideal_dim(int r, const std::map<size_t, RatFunc>& x,
                   const RankOptions& opt = {});

// Phi_q of BMW_4 embedded into BMW_r, tangle coordinates.
std::map<size_t, RatFunc> bmw_phi_embedded(int r);

// dim P_r(K) = (2r-1)!! - dim <Phi_q>.
long bmw_p_r_dim(int r, const RankOptions& opt = {});

// ---- identity suite ------------------------------------------------------------

struct BmwIdentityReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all() const;
  std::string str() const;
};

// The exact BMW_4(q) identity suite: f_i/F_q/Phi_q relations, the e_2 F_q e_2
// expansions, star-invariance and A_q membership of all Phi_q coefficients.
BmwIdentityReport bmw_identity_suite();

}  // namespace diagalg
