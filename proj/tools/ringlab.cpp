#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "ringlab/ringlab.h"

namespace {

constexpr int kInputError = 2;

int report_error(rl_status s) {
  std::cerr << "ringlab: " << rl_status_name(s) << ": " << rl_last_error() << "\n";
  return kInputError;
}

// Owns a char* handed out by the C API.
struct CString {
  char* p = nullptr;
  ~CString() { rl_string_free(p); }
};

struct RingHandle {
  rl_ring* p = nullptr;
  ~RingHandle() { rl_ring_free(p); }
};

struct CorpusHandle {
  rl_corpus* p = nullptr;
  ~CorpusHandle() { rl_corpus_free(p); }
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

int load_ring(const std::string& spec, RingHandle& ring) {
  if (auto s = rl_ring_from_spec(spec.c_str(), &ring.p)) return report_error(s);
  return 0;
}

int cmd_classify(const std::string& spec, bool json) {
  RingHandle ring;
  if (int rc = load_ring(spec, ring)) return rc;
  CString out;
  if (auto s = rl_ring_classify(ring.p, json, &out.p)) return report_error(s);
  std::cout << out.p << "\n";
  return 0;
}

int cmd_sets(const std::string& spec, const std::string& set, bool json, bool labels) {
  RingHandle ring;
  if (int rc = load_ring(spec, ring)) return rc;
  CString out;
  const rl_render mode = json ? RL_RENDER_JSON : labels ? RL_RENDER_LABELS : RL_RENDER_INDICES;
  if (auto s = rl_ring_set_render(ring.p, set.c_str(), mode, &out.p)) return report_error(s);
  std::cout << out.p << "\n";
  return 0;
}

struct VerifyOptions {
  std::string id;
  std::string corpus_file;
  std::size_t fuzz = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "text";
};

int cmd_verify(const VerifyOptions& o) {
  CorpusHandle corpus;
  rl_status s = o.corpus_file.empty() ? rl_corpus_default(&corpus.p) : rl_corpus_from_file(o.corpus_file.c_str(), &corpus.p);
  if (s) return report_error(s);
  if (o.fuzz > 0)
    if ((s = rl_corpus_add_fuzz(corpus.p, o.fuzz, o.seed))) return report_error(s);
  CString out;
  int any_failed = 0;
  const bool color = o.format == "text" && use_color();
  if ((s = rl_verify(corpus.p, o.id.c_str(), o.jobs, o.format.c_str(), color, &out.p, &any_failed)))
    return report_error(s);
  std::cout << out.p;
  return any_failed ? 1 : 0;
}

int cmd_corpus_list() {
  CorpusHandle corpus;
  if (auto s = rl_corpus_default(&corpus.p)) return report_error(s);
  for (std::size_t i = 0; i < rl_corpus_size(corpus.p); ++i) {
    CString spec, origin;
    RingHandle ring;
    rl_corpus_spec(corpus.p, i, &spec.p);
    rl_corpus_origin(corpus.p, i, &origin.p);
    rl_corpus_ring(corpus.p, i, &ring.p);
    std::printf("%4zu  %-18s %5zu  %s\n", i, origin.p, rl_ring_order(ring.p), spec.p);
  }
  return 0;
}

int cmd_parse(const std::string& spec) {
  CString out;
  if (auto s = rl_parse_normalize(spec.c_str(), &out.p)) return report_error(s);
  std::cout << out.p << "\n";
  return 0;
}

int cmd_export(const std::string& spec, const std::string& path) {
  RingHandle ring;
  if (int rc = load_ring(spec, ring)) return rc;
  if (auto s = rl_ring_export_cayley(ring.p, path.c_str())) return report_error(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring laboratory: construct, classify and verify"};
  app.require_subcommand(1);
  std::size_t cap = rl_get_order_cap();
  app.add_option("--order-cap", cap, "Largest ring order any constructor may build")->check(CLI::PositiveNumber);

  std::string spec;
  bool json = false;

  auto* classify = app.add_subcommand("classify", "Classify a ring against the predicate catalog");
  classify->add_option("spec", spec, "Ring spec, e.g. Mat(2, Zn(2))")->required();
  classify->add_flag("--json", json, "Emit the record as JSON");

  std::string set;
  bool labels = false;
  auto* sets = app.add_subcommand("sets", "Print a structural set");
  sets->add_option("spec", spec, "Ring spec")->required();
  sets->add_option("--set", set, "units|jacobson|delta|idempotents|nilpotents|center")->required();
  sets->add_flag("--json", json, "Emit {\"set\", \"members\", \"labels\"}");
  sets->add_flag("--labels", labels, "Print element labels instead of indices");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check claims over a corpus");
  verify->add_option("claim", vo.id, "Claim id (C1..C23) or all")->required();
  verify->add_option("--corpus-file", vo.corpus_file, "One spec per line instead of the default corpus");
  auto* fuzz = verify->add_option("--fuzz", vo.fuzz, "Add N seeded random products and corners");
  verify->add_option("--seed", vo.seed, "Fuzz seed")->needs(fuzz);
  verify->add_option("--jobs", vo.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", vo.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));

  auto* corpus = app.add_subcommand("corpus", "Inspect the default corpus");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List index, origin, order and spec");

  auto* parse = app.add_subcommand("parse", "Echo the normalized spec");
  parse->add_option("spec", spec, "Ring spec")->required();

  std::string out_path;
  auto* exp = app.add_subcommand("export", "Write a ring's Cayley file");
  exp->add_option("spec", spec, "Ring spec")->required();
  exp->add_option("--out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  rl_set_order_cap(cap);

  if (*classify) return cmd_classify(spec, json);
  if (*sets) return cmd_sets(spec, set, json, labels);
  if (*verify) return cmd_verify(vo);
  if (*corpus_list) return cmd_corpus_list();
  if (*parse) return cmd_parse(spec);
  if (*exp) return cmd_export(spec, out_path);
  return kInputError;
}
