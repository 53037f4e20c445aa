#include "icolor/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "icolor/coloring_json.hpp"
#include "icolor/constructor.hpp"
#include "icolor/verifier.hpp"

namespace icolor {

namespace {

std::string key_of(const std::vector<int>& part_sizes) {
  std::string out;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(part_sizes[i]);
  }
  return out;
}

std::string graph_name(const std::vector<int>& part_sizes) { return "K_{" + key_of(part_sizes) + "}"; }

// Runs `work(i)` for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any item is rethrown after all workers stop.
template <typename Work>
void run_parallel(std::size_t count, unsigned jobs, Work&& work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);
}

std::optional<bool> oracle_verdict(const SurveyRecord& record) {
  bool complete = true;
  for (const auto& v : record.t_verdicts) {
    if (!v.exists) {
      complete = false;
    } else if (*v.exists) {
      return true;
    }
  }
  if (complete) return false;
  return std::nullopt;
}

// Scans t over [max degree, 2|V| - 4]; budget overruns become unknown
// verdicts. Every witness is re-checked by the verifier.
void oracle_scan(SurveyRecord& record, const SearchOptions& search_options,
                 bool keep_witness) {
  auto graph = build_graph(record.part_sizes);
  record.oracle_run = true;
  record.t_min = graph->max_degree();
  record.t_max = 2 * graph->vertex_count() - 4;
  record.oracle_complete = true;
  for (int t = record.t_min; t <= record.t_max; ++t) {
    TVerdict verdict;
    verdict.t = t;
    try {
      SearchOutcome outcome = search(graph, t, search_options);
      verdict.exists = outcome.exists;
      verdict.nodes = outcome.nodes_explored;
      if (outcome.exists) {
        const VerifyReport report = verify(*outcome.witness);
        if (!report.valid() || outcome.witness->t() != t) {
          throw SurveyDisagreement("oracle witness for " + graph_name(record.part_sizes) +
                                   " at t=" + std::to_string(t) + " fails verification");
        }
        if (keep_witness && !record.witness) record.witness = std::move(outcome.witness);
      }
    } catch (const ResourceLimit&) {
      record.oracle_complete = false;
    }
    record.nodes_explored += verdict.nodes;
    record.t_verdicts.push_back(verdict);
  }
}

ConjectureNote c2_note(const SurveyRecord& record, int m, int n, bool colorable) {
  ConjectureNote note;
  const std::vector<int> predicted =
      colorable ? std::vector<int>{m + n} : std::vector<int>{};
  note.detail["predicted_t"] = predicted;
  if (!record.oracle_run) {
    if (colorable) {
      note.status = Agreement::kUnknown;
      note.detail["reason"] = "outside oracle range";
    } else {
      note.status = Agreement::kAgree;
      note.detail["reason"] = "parity certificate";
    }
    return note;
  }
  const auto feasible = record.feasible_t();
  note.detail["feasible_t"] = feasible;
  note.detail["complete"] = record.oracle_complete;
  const bool extra = std::any_of(feasible.begin(), feasible.end(),
                                 [&](int t) { return !colorable || t != m + n; });
  if (extra) {
    note.status = Agreement::kDisagree;
  } else if (record.oracle_complete) {
    note.status = Agreement::kAgree;
  } else {
    note.status = Agreement::kUnknown;
  }
  return note;
}

Agreement compare(std::optional<bool> actual, std::optional<bool> predicted) {
  if (!actual || !predicted) return Agreement::kUnknown;
  return *actual == *predicted ? Agreement::kAgree : Agreement::kDisagree;
}

nlohmann::json optional_bool(std::optional<bool> v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void stamp(SurveyRecord& record) { record.timestamp = utc_timestamp(); }

SurveyRecord k1mn_record(int m, int n, const SurveyOptions& options) {
  SurveyRecord record;
  record.part_sizes = {1, m, n};
  const bool gcd_ok = gcd_colorability(m, n);
  record.colorable = gcd_ok;

  if (gcd_ok) {
    record.method = Method::kConstruction;
    EdgeColoring coloring = extend_to_k1mn(m, n);
    const VerifyReport report = verify(coloring);
    if (!report.valid() || coloring.t() != m + n) {
      throw SurveyDisagreement("construction for " + graph_name(record.part_sizes) +
                               " is not an interval (m+n)-coloring");
    }
    record.witness = std::move(coloring);
  } else {
    record.method = Method::kObstruction;
    record.certificate = parity_certificate(m, n);
  }

  if (1 + m + n <= options.oracle_max_vertices) {
    oracle_scan(record, options.search, /*keep_witness=*/false);
    const auto verdict = oracle_verdict(record);
    if (verdict && *verdict != gcd_ok) {
      throw SurveyDisagreement(graph_name(record.part_sizes) + ": oracle says " +
                               (*verdict ? "colorable" : "not colorable") +
                               ", gcd criterion says " +
                               (gcd_ok ? "colorable" : "not colorable"));
    }
    if (gcd_ok) {
      for (const auto& v : record.t_verdicts) {
        if (v.t == m + n && v.exists && !*v.exists) {
          throw SurveyDisagreement(graph_name(record.part_sizes) +
                                   ": oracle finds no interval (m+n)-coloring");
        }
      }
    }
  }
  record.conjectures["C2"] = c2_note(record, m, n, gcd_ok);
  stamp(record);
  return record;
}

SurveyRecord kkmn_record(int k, int m, int n, const SurveyOptions& options) {
  SurveyRecord record;
  record.part_sizes = {k, m, n};
  record.method = Method::kOracle;
  oracle_scan(record, options.search, /*keep_witness=*/true);
  record.colorable = oracle_verdict(record);

  if (k == 1) {
    const bool gcd_ok = gcd_colorability(m, n);
    if (record.colorable && *record.colorable != gcd_ok) {
      throw SurveyDisagreement(graph_name(record.part_sizes) +
                               ": oracle disagrees with the gcd criterion");
    }
    if (!gcd_ok) record.certificate = parity_certificate(m, n);
    record.conjectures["C2"] = c2_note(record, m, n, gcd_ok);
  }
  if (n <= k + m) {
    ConjectureNote note;
    const bool even = (k + m + n) % 2 == 0;
    note.status = compare(record.colorable, even);
    note.detail = {{"sum", k + m + n}, {"predicted_colorable", even}};
    record.conjectures["C4"] = note;
  }
  stamp(record);
  return record;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::kConstruction:
      return "construction";
    case Method::kObstruction:
      return "obstruction";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

const char* to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::kAgree:
      return "agree";
    case Agreement::kDisagree:
      return "disagree";
    case Agreement::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string SurveyRecord::key() const { return key_of(part_sizes); }

std::vector<int> SurveyRecord::feasible_t() const {
  std::vector<int> out;
  for (const auto& v : t_verdicts) {
    if (v.exists && *v.exists) out.push_back(v.t);
  }
  return out;
}

bool SurveyRecord::flagged() const {
  return std::any_of(conjectures.begin(), conjectures.end(), [](const auto& entry) {
    return entry.second.status == Agreement::kDisagree;
  });
}

nlohmann::json to_json(const SurveyRecord& record) {
  nlohmann::json j;
  j["key"] = record.key();
  j["part_sizes"] = record.part_sizes;
  j["method"] = to_string(record.method);
  j["colorable"] = optional_bool(record.colorable);

  if (record.oracle_run) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : record.t_verdicts) {
      verdicts.push_back({{"t", v.t}, {"exists", optional_bool(v.exists)}, {"nodes", v.nodes}});
    }
    j["oracle"] = {{"t_min", record.t_min},
                   {"t_max", record.t_max},
                   {"complete", record.oracle_complete},
                   {"verdicts", std::move(verdicts)}};
  } else {
    j["oracle"] = nullptr;
  }

  if (!record.witness) {
    j["witness"] = nullptr;
  } else if (record.witness->graph().edge_count() <= kMaxEmbeddedWitnessEdges) {
    j["witness"] = to_json(*record.witness);
  } else {
    // Large constructions are deterministic; reference instead of embedding.
    j["witness"] = {{"source", to_string(record.method)},
                    {"t", record.witness->t()},
                    {"verified", true}};
  }
  j["certificate"] = record.certificate ? to_json(*record.certificate) : nlohmann::json(nullptr);

  nlohmann::json notes = nlohmann::json::object();
  for (const auto& [name, note] : record.conjectures) {
    nlohmann::json n = note.detail.is_object() ? note.detail : nlohmann::json::object();
    n["status"] = to_string(note.status);
    notes[name] = std::move(n);
  }
  j["conjectures"] = std::move(notes);
  j["flagged"] = record.flagged();
  j["nodes_explored"] = record.nodes_explored;
  j["timestamp"] = record.timestamp;
  return j;
}

std::vector<SurveyRecord> sweep_k1mn(int max_m, int max_n, const SurveyOptions& options,
                                     const SweepHooks& hooks) {
  std::vector<std::pair<int, int>> items;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      if (hooks.skip && hooks.skip({1, m, n})) continue;
      items.emplace_back(m, n);
    }
  }

  std::vector<SurveyRecord> records(items.size());
  std::mutex emit_mutex;
  run_parallel(items.size(), options.jobs, [&](std::size_t i) {
    records[i] = k1mn_record(items[i].first, items[i].second, options);
    if (hooks.on_record) {
      std::lock_guard lock(emit_mutex);
      hooks.on_record(records[i]);
    }
  });
  return records;
}

std::vector<SurveyRecord> sweep_kkmn(int max_total, const SurveyOptions& options,
                                     const SweepHooks& hooks) {
  std::vector<std::vector<int>> items;
  for (int k = 1; 3 * k <= max_total; ++k) {
    for (int m = k; k + 2 * m <= max_total; ++m) {
      for (int n = m; k + m + n <= max_total; ++n) {
        if (hooks.skip && hooks.skip({k, m, n})) continue;
        items.push_back({k, m, n});
      }
    }
  }

  // Verdicts first; C3 compares instances with each other, so records are
  // emitted only after every instance is decided.
  std::vector<SurveyRecord> records(items.size());
  run_parallel(items.size(), options.jobs, [&](std::size_t i) {
    records[i] = kkmn_record(items[i][0], items[i][1], items[i][2], options);
  });

  std::map<std::vector<int>, std::optional<bool>> verdicts;
  for (const auto& r : records) verdicts[r.part_sizes] = r.colorable;

  for (auto& record : records) {
    const int k = record.part_sizes[0];
    const int m = record.part_sizes[1];
    const int n = record.part_sizes[2];
    if (n <= k + m) continue;
    std::vector<int> reduced = {k, m, n - k - m};
    std::sort(reduced.begin(), reduced.end());

    std::optional<bool> reduced_verdict;
    bool found = false;
    if (auto it = verdicts.find(reduced); it != verdicts.end()) {
      reduced_verdict = it->second;
      found = true;
    } else if (hooks.prior_colorable) {
      if (auto prior = hooks.prior_colorable(reduced)) {
        reduced_verdict = *prior;
        found = true;
      }
    }
    ConjectureNote note;
    note.status = compare(record.colorable, reduced_verdict);
    note.detail = {{"reduced", reduced},
                   {"reduced_colorable", optional_bool(reduced_verdict)},
                   {"reduced_in_survey", found}};
    record.conjectures["C3"] = note;
  }

  if (hooks.on_record) {
    for (const auto& r : records) hooks.on_record(r);
  }
  return records;
}

nlohmann::json survey_manifest(const std::string& mode, const nlohmann::json& limits,
                               const SurveyOptions& options) {
  return {{"manifest",
           {{"schema", kSurveySchemaVersion},
            {"mode", mode},
            {"limits", limits},
            {"oracle_max_vertices", options.oracle_max_vertices},
            {"node_limit", options.search.node_limit},
            {"edge_limit", options.search.edge_limit},
            {"reflection", options.search.reflection},
            {"timestamp", utc_timestamp()}}}};
}

namespace {

nlohmann::json manifest_identity(nlohmann::json manifest) {
  if (manifest.contains("manifest")) manifest["manifest"].erase("timestamp");
  return manifest;
}

}  // namespace

SurveyFile::SurveyFile(std::filesystem::path path, nlohmann::json manifest, bool resume)
    : path_(std::move(path)), manifest_(std::move(manifest)) {
  if (resume && std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        // A torn final line from an interrupted run; drop it.
        continue;
      }
      if (first) {
        first = false;
        if (manifest_identity(j) != manifest_identity(manifest_)) {
          throw PreconditionError("cannot resume " + path_.string() +
                                  ": its manifest records different limits");
        }
        continue;
      }
      if (j.contains("part_sizes")) {
        records_[j.at("part_sizes").get<std::vector<int>>()] = j.dump();
      }
    }
  }
  std::ofstream out(path_, std::ios::trunc);
  if (!out) throw Error("cannot write " + path_.string());
  out << manifest_.dump() << "\n";
  for (const auto& [key, line] : records_) out << line << "\n";
}

bool SurveyFile::has(const std::vector<int>& part_sizes) const {
  std::lock_guard lock(mutex_);
  return records_.count(part_sizes) > 0;
}

std::optional<std::optional<bool>> SurveyFile::prior_colorable(
    const std::vector<int>& part_sizes) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(part_sizes);
  if (it == records_.end()) return std::nullopt;
  const auto j = nlohmann::json::parse(it->second);
  const auto& c = j.at("colorable");
  if (c.is_null()) return std::optional<bool>{};
  return std::optional<bool>{c.get<bool>()};
}

SweepHooks SurveyFile::hooks() {
  SweepHooks h;
  h.skip = [this](const std::vector<int>& key) { return has(key); };
  h.prior_colorable = [this](const std::vector<int>& key) { return prior_colorable(key); };
  h.on_record = [this](const SurveyRecord& record) { append(record); };
  return h;
}

void SurveyFile::append(const SurveyRecord& record) {
  std::lock_guard lock(mutex_);
  const std::string line = to_json(record).dump();
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot append to " + path_.string());
  out << line << "\n";
  records_[record.part_sizes] = line;
}

void SurveyFile::finalize() {
  std::lock_guard lock(mutex_);
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << manifest_.dump() << "\n";
    for (const auto& [key, line] : records_) out << line << "\n";
  }
  std::filesystem::rename(tmp, path_);
}

void write_survey(std::ostream& out, const nlohmann::json& manifest,
                  const std::vector<SurveyRecord>& records) {
  std::vector<const SurveyRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const SurveyRecord* x, const SurveyRecord* y) { return x->part_sizes < y->part_sizes; });
  out << manifest.dump() << "\n";
  for (const auto* r : sorted) out << to_json(*r).dump() << "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace icolor
