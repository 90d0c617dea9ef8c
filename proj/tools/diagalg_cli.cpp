#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diagalg.h"

// Batch front end over the C API.  Every subcommand prints one report to
// stdout (or --out) and exits 0 on success; verification subcommands exit
// nonzero when a claim fails.

namespace {

struct Cfg {
  int r = 4, n = 2;
  std::string lambda, mode = "classical", method = "both", word;
  std::string out;
  uint64_t seed = 0;
  int threads = 0, trials = 0;
  bool exact = false;
};

da_options opts(const Cfg& c) {
  int threads = c.threads;
  if (!threads)
    if (const char* env = std::getenv("DIAGRAMALG_THREADS"))
      threads = std::atoi(env);
  return da_options{c.seed, c.exact ? 1 : 0, c.trials, threads};
}

int emit(const Cfg& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream f(c.out);
  if (!f) {
    std::cerr << "cannot open " << c.out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

int emit_take(const Cfg& c, char* s) {
  std::string text = s ? s : "";
  da_free_string(s);
  return emit(c, text);
}

// Computation failures become structured error JSON on stderr.
int fail(da_status st) {
  std::cerr << "{\"error\":\"" << da_last_error() << "\",\"status\":" << (int)st
            << "}\n";
  return st == DA_ERR_ARGUMENT ? 2 : 3;
}

void common_flags(CLI::App* cmd, Cfg& c, bool ranks) {
  cmd->add_option("--seed", c.seed, "seed for prime/point selection");
  cmd->add_option("--threads", c.threads,
                  "parallelism degree (output unaffected)");
  if (ranks) {
    cmd->add_flag("--exact", c.exact, "exact elimination, no modular trials");
    cmd->add_option("--trials", c.trials, "modular certification trials");
  }
  cmd->add_option("--out", c.out, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in Brauer and BMW diagram algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", da_version());
  Cfg c;

  auto* dims = app.add_subcommand("dims", "dim End(V(n)^{tensor r})");
  dims->add_option("--n", c.n, "highest weight of V(n)")->capture_default_str();
  dims->add_option("--r", c.r, "tensor power")->required();
  common_flags(dims, c, false);

  auto* gram = app.add_subcommand("gram", "Gram matrix of a cell module");
  gram->add_option("--r", c.r)->required();
  gram->add_option("--lambda", c.lambda, "partition, e.g. 2,1 (0 for empty)")
      ->required();
  gram->add_option("--mode", c.mode, "classical | quantum")
      ->capture_default_str();
  std::string gram_fmt = "tsv";
  gram->add_option("--format", gram_fmt, "tsv | json")->capture_default_str();
  common_flags(gram, c, false);

  auto* rad = app.add_subcommand("radical", "dim of the radical");
  rad->add_option("--r", c.r)->required();
  rad->add_option("--mode", c.mode)->capture_default_str();
  common_flags(rad, c, true);

  auto* ideal = app.add_subcommand("ideal-dim",
                                   "dim of the ideal generated by Phi");
  ideal->add_option("--r", c.r)->required();
  ideal->add_option("--mode", c.mode)->capture_default_str();
  common_flags(ideal, c, true);

  auto* ver = app.add_subcommand("verify", "kernel-generation claims");
  ver->add_option("--r", c.r)->required();
  ver->add_option("--mode", c.mode, "classical | quantum | structure | all")
      ->capture_default_str();
  ver->add_option("--method", c.method, "ideal-closure | cell-criterion | both")
      ->capture_default_str();
  std::string ver_fmt = "pretty";
  ver->add_option("--format", ver_fmt, "pretty | json")->capture_default_str();
  common_flags(ver, c, true);

  auto* idn = app.add_subcommand("identities", "exact BMW_4(q) identity suite");
  common_flags(idn, c, false);

  auto* spc = app.add_subcommand(
      "specialize-check", "structure constants at q = 1 vs diagram products");
  spc->add_option("--r", c.r)->required();
  common_flags(spc, c, false);

  auto* ev = app.add_subcommand("eval", "evaluate a generator word");
  ev->add_option("word", c.word, "e.g. \"g1 g2^-1 e3\" or \"s1 e2\"")
      ->required();
  ev->add_option("--r", c.r)->required();
  ev->add_option("--mode", c.mode)->capture_default_str();
  common_flags(ev, c, false);

  CLI11_PARSE(app, argc, argv);
  da_options o = opts(c);
  da_status st = DA_OK;
  char* s = nullptr;

  if (dims->parsed()) {
    st = da_dim_end(c.n, c.r, &s);
    return st ? fail(st) : emit_take(c, s);
  }
  if (gram->parsed()) {
    st = da_gram(c.r, c.lambda.c_str(), c.mode.c_str(), gram_fmt.c_str(), &s);
    return st ? fail(st) : emit_take(c, s);
  }
  if (rad->parsed()) {
    long v = 0;
    st = da_radical_dim(c.r, c.mode.c_str(), &o, &v);
    return st ? fail(st) : emit(c, std::to_string(v));
  }
  if (ideal->parsed()) {
    long v = 0;
    st = da_ideal_dim(c.r, c.mode.c_str(), &o, &v);
    return st ? fail(st) : emit(c, std::to_string(v));
  }
  if (ver->parsed()) {
    int pass = 0;
    st = da_verify(c.r, c.mode.c_str(), c.method.c_str(), ver_fmt.c_str(), &o,
                   &s, &pass);
    if (st) return fail(st);
    int rc = emit_take(c, s);
    return rc ? rc : (pass ? 0 : 1);
  }
  if (idn->parsed()) {
    int pass = 0;
    st = da_identities(&s, &pass);
    if (st) return fail(st);
    int rc = emit_take(c, s);
    return rc ? rc : (pass ? 0 : 1);
  }
  if (spc->parsed()) {
    int ok = 0;
    st = da_specialize_check(c.r, &s, &ok);
    if (st) return fail(st);
    int rc = emit_take(c, s);
    return rc ? rc : (ok ? 0 : 1);
  }
  if (ev->parsed()) {
    st = da_eval(c.r, c.word.c_str(), c.mode.c_str(), &s);
    return st ? fail(st) : emit_take(c, s);
  }
  return 2;
}
