#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icolor/error.hpp"
#include "icolor/graph.hpp"
#include "icolor/obstruction.hpp"
#include "icolor/oracle.hpp"

namespace icolor {

inline constexpr int kSurveySchemaVersion = 1;
inline constexpr EdgeIndex kMaxEmbeddedWitnessEdges = 64;

enum class Method { kConstruction, kObstruction, kOracle };
const char* to_string(Method method);

enum class Agreement { kAgree, kDisagree, kUnknown };
const char* to_string(Agreement agreement);

struct TVerdict {
  int t = 0;
  std::optional<bool> exists;  // empty when the node budget ran out
  std::uint64_t nodes = 0;
};

struct ConjectureNote {
  Agreement status = Agreement::kUnknown;
  nlohmann::json detail;  // conjecture-specific evidence
};

struct SurveyRecord {
  std::vector<int> part_sizes;
  Method method = Method::kOracle;
  std::optional<bool> colorable;  // empty when resource-limited
  bool oracle_run = false;
  bool oracle_complete = false;
  int t_min = 0;
  int t_max = 0;
  std::vector<TVerdict> t_verdicts;
  std::optional<EdgeColoring> witness;
  std::optional<ParityCertificate> certificate;
  // "C2": feasible t-set of a colorable K_{1,m,n} is exactly {m+n}
  // "C3": K_{k,m,n} with n > k+m behaves like K_{k,m,n-k-m}
  // "C4": K_{k,m,n} with n <= k+m is colorable iff k+m+n is even
  std::map<std::string, ConjectureNote> conjectures;
  std::uint64_t nodes_explored = 0;
  std::string timestamp;

  std::string key() const;
  std::vector<int> feasible_t() const;
  // True when some conjecture annotation disagrees.
  bool flagged() const;
};

nlohmann::json to_json(const SurveyRecord& record);

struct SurveyOptions {
  // K_{1,m,n} instances with at most this many vertices also get an
  // exhaustive oracle scan.
  int oracle_max_vertices = 8;
  SearchOptions search;
  unsigned jobs = 1;
};

// Hooks for resumable persistence: `skip` filters out keys already on disk,
// `prior_colorable` supplies the stored verdict of a skipped key (outer empty:
// unknown key, inner empty: stored as resource-limited), and `on_record` sees
// each record as soon as it is finished (called serially).
struct SweepHooks {
  std::function<bool(const std::vector<int>&)> skip;
  std::function<std::optional<std::optional<bool>>(const std::vector<int>&)> prior_colorable;
  std::function<void(const SurveyRecord&)> on_record;
};

// A proved statement (the construction, the gcd obstruction, or oracle
// soundness) was contradicted by the sweep. Aborts the sweep.
class SurveyDisagreement : public Error {
 public:
  using Error::Error;
};

// Every (m, n) in [1, max_m] x [1, max_n]: construction or parity certificate,
// plus an oracle scan inside the oracle range with construction, gcd and oracle
// verdicts required to agree. Records sorted by part sizes.
std::vector<SurveyRecord> sweep_k1mn(int max_m, int max_n, const SurveyOptions& options = {},
                                     const SweepHooks& hooks = {});

// Every k <= m <= n with k + m + n <= max_total, decided by the oracle, with
// C3/C4 annotations (and C2 plus the gcd cross-check when k = 1).
std::vector<SurveyRecord> sweep_kkmn(int max_total, const SurveyOptions& options = {},
                                     const SweepHooks& hooks = {});

// JSON-lines survey file: a manifest line, then one record per line sorted by
// part sizes after finalize(). Appends are serialized; with `resume`, records
// already present under a matching manifest are kept and can be skipped.
class SurveyFile {
 public:
  SurveyFile(std::filesystem::path path, nlohmann::json manifest, bool resume);

  bool has(const std::vector<int>& part_sizes) const;
  std::optional<std::optional<bool>> prior_colorable(const std::vector<int>& part_sizes) const;
  // Hooks wired to this file: skip stored keys, append finished records.
  SweepHooks hooks();
  std::size_t size() const { return records_.size(); }
  void append(const SurveyRecord& record);
  void finalize();

 private:
  std::filesystem::path path_;
  nlohmann::json manifest_;
  std::map<std::vector<int>, std::string> records_;  // part sizes -> serialized line
  mutable std::mutex mutex_;
};

nlohmann::json survey_manifest(const std::string& mode, const nlohmann::json& limits,
                               const SurveyOptions& options);

// Manifest line followed by records sorted by part sizes.
void write_survey(std::ostream& out, const nlohmann::json& manifest,
                  const std::vector<SurveyRecord>& records);

std::string utc_timestamp();

}  // namespace icolor
