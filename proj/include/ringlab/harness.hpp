#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/expr.hpp"

namespace ringlab {

struct CorpusEntry {
  std::string spec;
  Ring ring;
  /// "atom", "jacobson-quotient", "corner", "fuzz" or "file".
  std::string origin;
};

/// A list of materialized rings plus a shared evaluator and a per-ring cache
/// of classification records. Records are computed on first use and are safe
/// to request concurrently.
class Corpus {
 public:
  Corpus();

  /// Evaluates `spec` and appends it unless a ring with the same normalized
  /// spec is already present. Returns false for duplicates.
  bool add(std::string_view spec, std::string origin);
  void add_ring(Ring ring, std::string origin);

  std::size_t size() const noexcept { return entries_.size(); }
  const CorpusEntry& entry(std::size_t i) const { return entries_.at(i); }
  const std::vector<CorpusEntry>& entries() const noexcept { return entries_; }

  Evaluator& evaluator() const { return *evaluator_; }
  Ring eval(const ExprPtr& e) const { return evaluator_->eval(e); }
  Ring eval(std::string_view spec) const { return evaluator_->eval(spec); }

  /// Record for any ring, cached by its name.
  const ClassificationRecord& record(const FiniteRing& r) const;
  const ClassificationRecord& record(std::size_t i) const { return record(*entries_.at(i).ring); }

 private:
  struct Slot;
  std::vector<CorpusEntry> entries_;
  std::shared_ptr<Evaluator> evaluator_;
  std::shared_ptr<std::mutex> records_mutex_;
  std::shared_ptr<std::map<std::string, std::shared_ptr<Slot>>> records_;
};

/// Fixed atom list (see README), followed by the Jacobson quotient of every
/// atom with J != 0 and the corners of every atom at its nontrivial
/// idempotents (corners with identical tables are merged, at most
/// kCornersPerAtom per atom).
inline constexpr std::size_t kCornersPerAtom = 6;
std::vector<std::string> default_atom_specs();
Corpus default_corpus();

/// One spec per line; '#' starts a comment and blank lines are skipped.
/// Errors name the offending line.
Corpus corpus_from_file(const std::string& path);

/// Appends `count` seeded random products of small corpus rings and corners
/// at random nontrivial idempotents.
void add_fuzz(Corpus& corpus, std::size_t count, std::uint64_t seed);

enum class ClaimStatus { holds, fails, vacuous };
const char* claim_status_name(ClaimStatus s);

struct ClaimWitness {
  std::string ring;
  std::vector<std::string> elements;
  std::string explanation;
};

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::vacuous;
  std::size_t checked = 0;
  std::vector<ClaimWitness> witnesses;
  std::vector<std::string> notes;
};

struct Claim {
  std::string id;
  std::string statement;
  std::string filter;
  std::function<ClaimResult(const Corpus&)> check;
};

/// C1 .. C23 in id order.
const std::vector<Claim>& claims();
/// Error(unknown_claim) for ids outside the registry.
ClaimResult verify_claim(std::string_view id, const Corpus& corpus);
/// `id` is a claim id or "all". Records are built up front, then claims run
/// on `jobs` threads; the result order is the registry order.
std::vector<ClaimResult> verify(const Corpus& corpus, std::string_view id, unsigned jobs = 1);
std::vector<ClaimResult> verify_all(const Corpus& corpus, unsigned jobs = 1);

/// Exit status for a verification run: 0 when nothing fails, 1 otherwise.
int verify_exit_code(const std::vector<ClaimResult>& results);

enum class ReportFormat { text, json, csv, markdown };
/// Error(bad_params) for unknown names.
ReportFormat parse_report_format(std::string_view name);
std::string report(const std::vector<ClaimResult>& results, ReportFormat format, bool color = false);

}  // namespace ringlab
