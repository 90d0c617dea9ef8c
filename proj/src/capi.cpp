#include "diagalg.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "diagalg/bmw.hpp"
#include "diagalg/brauer.hpp"
#include "diagalg/symcomb.hpp"
#include "diagalg/tensorrep.hpp"
#include "diagalg/verifier.hpp"

using namespace diagalg;

namespace {

thread_local std::string g_err;

char* dup(const std::string& s) {
  char* p = (char*)std::malloc(s.size() + 1);
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs the body, routing exceptions into (status, g_err).
template <class F>
da_status guard(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    g_err = e.what();
    return DA_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_err = e.what();
    return DA_ERR_COMPUTE;
  }
}

RankOptions rank_opts(const da_options* o) {
  RankOptions r;
  if (o) {
    r.seed = o->seed;
    r.exact = o->exact != 0;
    if (o->trials > 0) r.trials = o->trials;
  }
  return r;
}

VerifyOptions verify_opts(const da_options* o) {
  VerifyOptions v;
  if (o) {
    v.seed = o->seed;
    v.exact = o->exact != 0;
    if (o->trials > 0) v.trials = o->trials;
  }
  return v;
}

bool mode_quantum(const std::string& mode) {
  if (mode == "quantum") return true;
  if (mode == "classical") return false;
  throw std::invalid_argument("mode must be classical or quantum, got '" +
                              mode + "'");
}

std::string need(const char* s, const char* what) {
  if (!s) throw std::invalid_argument(std::string(what) + " is null");
  return s;
}

template <class K>
nlohmann::ordered_json gram_json(int r, const std::string& lam,
                                 const std::string& mode,
                                 const Matrix<K>& m,
                                 std::string (*show)(const K&)) {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["lambda"] = lam;
  j["mode"] = mode;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  auto rows = nlohmann::ordered_json::array();
  for (long i = 0; i < m.rows; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (long k = 0; k < m.cols; ++k) row.push_back(show(m.at(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

template <class K>
std::string gram_text(int r, const std::string& lam, const std::string& mode,
                      const std::string& fmt, const Matrix<K>& m,
                      std::string (*show)(const K&)) {
  if (fmt == "json") return gram_json(r, lam, mode, m, show).dump(2) + "\n";
  if (fmt != "tsv")
    throw std::invalid_argument("format must be tsv or json, got '" + fmt +
                                "'");
  std::ostringstream os;
  for (long i = 0; i < m.rows; ++i) {
    for (long k = 0; k < m.cols; ++k) {
      if (k) os << '\t';
      os << show(m.at(i, k));
    }
    os << '\n';
  }
  return os.str();
}

std::string show_rat(const Rat& x) { return x.get_str(); }
std::string show_ratfunc(const RatFunc& x) { return x.str(); }

long ideal_dim(int r, bool quantum, const RankOptions& opt) {
  if (r < 4) throw std::invalid_argument("ideal dim needs r >= 4");
  if (quantum) return bmw_ideal_dim(r, bmw_phi_embedded(r), opt);
  return brauer_ideal_dim(r, brauer_embed(brauer_Phi<Rat>(4, Rat(3)), r), opt);
}

}  // namespace

extern "C" {

const char* da_version(void) { return "diagalg 1.0.0"; }

const char* da_last_error(void) { return g_err.c_str(); }

void da_free_string(char* s) { std::free(s); }

da_status da_dim_end(int n, int r, char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1 and r >= 0");
    *out = dup(multiplicity_table(n, r).d.get_str());
    return DA_OK;
  });
}

da_status da_mult_table(int n, int rmax, const char* fmt, char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (n < 1 || rmax < 0)
      throw std::invalid_argument("need n >= 1 and rmax >= 0");
    std::string f = need(fmt, "format");
    if (f == "tsv") *out = dup(mult_table_tsv(n, rmax));
    else if (f == "json") *out = dup(mult_table_json(n, rmax));
    else
      throw std::invalid_argument("format must be tsv or json, got '" + f +
                                  "'");
    return DA_OK;
  });
}

da_status da_simple_dims(int r, const char* mode, const da_options* opt,
                         char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    bool qu = mode_quantum(need(mode, "mode"));
    RankReport rep = qu ? bmw_simple_dims(r, rank_opts(opt))
                        : brauer_simple_dims(r, rank_opts(opt));
    *out = dup(rep.str());
    return DA_OK;
  });
}

da_status da_radical_dim(int r, const char* mode, const da_options* opt,
                         long* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    bool qu = mode_quantum(need(mode, "mode"));
    RankReport rep = qu ? bmw_simple_dims(r, rank_opts(opt))
                        : brauer_simple_dims(r, rank_opts(opt));
    *out = rep.radical_dim();
    return DA_OK;
  });
}

da_status da_gram(int r, const char* lambda, const char* mode,
                  const char* fmt, char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    Partition lam = part_parse(need(lambda, "lambda"));
    if ((r - (int)part_size(lam)) % 2 || (int)part_size(lam) > r)
      throw std::invalid_argument("|lambda| must be r, r-2, r-4, ...");
    bool qu = mode_quantum(need(mode, "mode"));
    std::string f = need(fmt, "format");
    if (qu)
      *out = dup(gram_text(r, part_str(lam), "quantum", f, bmw_gram_q(r, lam),
                           show_ratfunc));
    else
      *out = dup(gram_text(r, part_str(lam), "classical", f,
                           brauer_gram(r, lam), show_rat));
    return DA_OK;
  });
}

da_status da_ideal_dim(int r, const char* mode, const da_options* opt,
                       long* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    *out = ideal_dim(r, mode_quantum(need(mode, "mode")), rank_opts(opt));
    return DA_OK;
  });
}

da_status da_p_r_dim(int r, const char* mode, const da_options* opt,
                     long* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    bool qu = mode_quantum(need(mode, "mode"));
    if (qu) *out = bmw_p_r_dim(r, rank_opts(opt));
    else {
      long id = ideal_dim(r, false, rank_opts(opt));
      *out = odd_double_factorial(r).get_si() - id;
    }
    return DA_OK;
  });
}

da_status da_verify(int r, const char* mode, const char* method,
                    const char* fmt, const da_options* opt, char** out,
                    int* all_pass) {
  if (out) *out = nullptr;
  if (all_pass) *all_pass = 0;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    std::string m = need(mode, "mode");
    std::string meth = method && *method ? method : "both";
    VerifyOptions vo = verify_opts(opt);
    Report rep;
    if (m == "classical") rep = verify_classical(r, meth, vo);
    else if (m == "quantum") rep = verify_quantum(r, vo);
    else if (m == "structure") rep = verify_structure(vo);
    else if (m == "all") {
      rep = verify_classical(r, meth, vo);
      rep.merge(verify_quantum(r, vo));
      rep.merge(verify_structure(vo));
    } else
      throw std::invalid_argument(
          "mode must be classical, quantum, structure or all, got '" + m +
          "'");
    std::string f = need(fmt, "format");
    if (f == "json") *out = dup(rep.json());
    else if (f == "pretty") *out = dup(rep.pretty());
    else
      throw std::invalid_argument("format must be json or pretty, got '" + f +
                                  "'");
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    return DA_OK;
  });
}

da_status da_identities(char** out, int* all_pass) {
  if (out) *out = nullptr;
  if (all_pass) *all_pass = 0;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    BmwIdentityReport rep = bmw_identity_suite();
    *out = dup(rep.str());
    if (all_pass) *all_pass = rep.all() ? 1 : 0;
    return DA_OK;
  });
}

da_status da_specialize_check(int r, char** out, int* ok) {
  if (out) *out = nullptr;
  if (ok) *ok = 0;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (r < 1 || r > 5)
      throw std::invalid_argument("specialize check supports 1 <= r <= 5");
    Bmw<Rat> A(r, bmw_field_q1());
    const BrauerBasis& B = A.basis();
    size_t n = B.dim();
    long bad = 0;
    std::ostringstream os;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        auto p = A.to_diagrams(A.mul({{i, Rat(1)}}, {{j, Rat(1)}}));
        auto c = brauer_mult(BrauerElt<Rat>{{B.diags[i], Rat(1)}},
                             BrauerElt<Rat>{{B.diags[j], Rat(1)}}, Rat(3));
        if (p != c && ++bad <= 10)
          os << "mismatch\t" << B.diags[i].str() << '\t' << B.diags[j].str()
             << '\n';
      }
    os << "r=" << r << ": " << n << "x" << n << " products at q=1, "
       << (bad ? std::to_string(bad) + " mismatches" : "all agree") << '\n';
    *out = dup(os.str());
    if (ok) *ok = bad == 0 ? 1 : 0;
    return DA_OK;
  });
}

da_status da_eval(int r, const char* word, const char* mode, char** out) {
  if (out) *out = nullptr;
  return guard([&] {
    if (!out) throw std::invalid_argument("out is null");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    std::string w = need(word, "word");
    std::ostringstream os;
    if (mode_quantum(need(mode, "mode"))) {
      Bmw<RatFunc> A(r, bmw_field_q());
      for (const auto& [d, c] : A.to_diagrams(A.word(w)))
        os << c.str() << '\t' << d.str() << '\n';
    } else {
      for (const auto& [d, c] : brauer_word(r, w, Rat(3)))
        if (c != 0) os << c.get_str() << '\t' << d.str() << '\n';
    }
    *out = dup(os.str());
    return DA_OK;
  });
}

}  // extern "C"
