// Copyright 2026 asreval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asreval/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "asreval/error.hpp"

namespace asreval {

namespace {

using ojson = nlohmann::ordered_json;

struct ModelCell {
  bool present = false;
  EditCounts counts;
  std::vector<std::pair<std::string, std::string>> subs;
};

// Result of normalizing and aligning one utterance under one scheme.
struct RecordCell {
  std::int64_t ref_len = 0;
  std::vector<ModelCell> models;
};

struct EvalPlan {
  std::vector<Pipeline> pipelines;           // one per scheme
  std::vector<std::string> scheme_names;
  std::vector<std::string> models;
  // slots[scheme][record], written by exactly one task each.
  std::vector<std::vector<RecordCell>> slots;
};

void run_task(const CorpusManifest& corpus, EvalPlan& plan,
              std::size_t scheme_index, std::size_t record_index) {
  const UtteranceRecord& record = corpus.records[record_index];
  const Pipeline& pipeline = plan.pipelines[scheme_index];
  RecordCell& cell = plan.slots[scheme_index][record_index];

  TokenSequence ref = tokenize(pipeline.apply(record.reference.text));
  cell.ref_len = static_cast<std::int64_t>(ref.size());
  cell.models.resize(plan.models.size());
  for (std::size_t m = 0; m < plan.models.size(); ++m) {
    const Transcript* hyp_text = record.hypothesis_for(plan.models[m]);
    if (!hyp_text) continue;
    ModelCell& out = cell.models[m];
    out.present = true;
    TokenSequence hyp = tokenize(pipeline.apply(hyp_text->text));
    Alignment ops = align(ref, hyp);
    out.counts = count_edits(ops, cell.ref_len);
    out.subs = substitution_pairs(ops, ref, hyp);
  }
}

void run_all_tasks(const CorpusManifest& corpus, EvalPlan& plan, int jobs) {
  const std::size_t records = corpus.records.size();
  const std::size_t total = plan.pipelines.size() * records;
  if (total == 0) return;

  if (jobs < 1) jobs = 1;
  std::size_t workers = std::min<std::size_t>(jobs, total);
  if (workers <= 1) {
    for (std::size_t t = 0; t < total; ++t) {
      run_task(corpus, plan, t / records, t % records);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= total) return;
      try {
        run_task(corpus, plan, t / records, t % records);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// Builds one matrix over the given record subset (indices into
// corpus.records).
ReportMatrix build_matrix(const CorpusManifest& corpus, const EvalPlan& plan,
                          const std::vector<std::size_t>& subset,
                          const std::string& scenario,
                          Aggregation aggregation) {
  ReportMatrix matrix;
  matrix.scenario = scenario;
  matrix.aggregation = aggregation;
  matrix.schemes = plan.scheme_names;
  matrix.models = plan.models;
  matrix.cells.assign(plan.scheme_names.size(),
                      std::vector<std::string>(plan.models.size(), "NA"));

  for (std::size_t s = 0; s < plan.scheme_names.size(); ++s) {
    // Zero-length references are a property of (scheme, record); warn
    // once each, not once per model column.
    for (std::size_t r : subset) {
      const RecordCell& cell = plan.slots[s][r];
      if (cell.ref_len == 0 && !corpus.records[r].reference.text.empty()) {
        matrix.warnings.push_back(
            "utterance " + corpus.records[r].id + ": reference empty after " +
            plan.scheme_names[s] +
            " normalization; counted as insertions in micro, excluded from "
            "macro");
      }
    }
    for (std::size_t m = 0; m < plan.models.size(); ++m) {
      std::vector<EditCounts> items;
      items.reserve(subset.size());
      for (std::size_t r : subset) {
        const ModelCell& mc = plan.slots[s][r].models[m];
        if (!mc.present) continue;
        if (aggregation == Aggregation::macro &&
            mc.counts.reference_length == 0) {
          continue;
        }
        items.push_back(mc.counts);
      }
      if (items.empty()) {
        matrix.warnings.push_back("no scorable utterances for scheme " +
                                  plan.scheme_names[s] + ", model " +
                                  plan.models[m]);
        continue;
      }
      try {
        matrix.cells[s][m] = corpus_wer(items, aggregation).percent();
      } catch (const MetricError&) {
        // Pooled reference empty but edits nonzero: WER undefined.
        matrix.warnings.push_back("undefined WER for scheme " +
                                  plan.scheme_names[s] + ", model " +
                                  plan.models[m]);
      }
    }
  }
  return matrix;
}

ErrorReport build_errors(const EvalPlan& plan, std::size_t record_count,
                         int top_k) {
  ErrorReport report;
  report.top_k = top_k;
  for (std::size_t s = 0; s < plan.scheme_names.size(); ++s) {
    for (std::size_t m = 0; m < plan.models.size(); ++m) {
      ErrorGroup group;
      group.scheme = plan.scheme_names[s];
      group.model = plan.models[m];
      std::map<std::pair<std::string, std::string>, std::int64_t> freq;
      for (std::size_t r = 0; r < record_count; ++r) {
        const ModelCell& mc = plan.slots[s][r].models[m];
        if (!mc.present) continue;
        group.substitutions += mc.counts.substitutions;
        for (const auto& pair : mc.subs) ++freq[pair];
      }
      for (const auto& [pair, count] : freq) {
        group.pairs.push_back({pair.first, pair.second, count});
      }
      std::stable_sort(group.pairs.begin(), group.pairs.end(),
                       [](const SubstitutionEntry& a,
                          const SubstitutionEntry& b) {
                         if (a.count != b.count) return a.count > b.count;
                         if (a.ref_word != b.ref_word)
                           return a.ref_word < b.ref_word;
                         return a.hyp_word < b.hyp_word;
                       });
      report.groups.push_back(std::move(group));
    }
  }
  return report;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string md_cell(const std::string& value) {
  std::string out;
  for (char c : value) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::string matrix_csv(const ReportMatrix& m) {
  std::string out = "scheme";
  for (const std::string& model : m.models) out += "," + csv_field(model);
  out += "\n";
  for (std::size_t s = 0; s < m.schemes.size(); ++s) {
    out += csv_field(m.schemes[s]);
    for (const std::string& cell : m.cells[s]) out += "," + cell;
    out += "\n";
  }
  return out;
}

std::string matrix_markdown(const ReportMatrix& m) {
  std::string out = "Scenario: " + m.scenario + "\n";
  out += std::string("Aggregation: ") + aggregation_name(m.aggregation) +
         "\n\n";
  out += "| Normalizer |";
  for (const std::string& model : m.models) out += " " + md_cell(model) + " |";
  out += "\n| --- |";
  for (std::size_t i = 0; i < m.models.size(); ++i) out += " --- |";
  out += "\n";
  for (std::size_t s = 0; s < m.schemes.size(); ++s) {
    out += "| " + md_cell(m.schemes[s]) + " |";
    for (const std::string& cell : m.cells[s]) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

ojson matrix_json(const ReportMatrix& m) {
  ojson j;
  j["type"] = "wer_matrix";
  j["scenario"] = m.scenario;
  j["aggregation"] = aggregation_name(m.aggregation);
  j["models"] = m.models;
  ojson rows = ojson::array();
  for (std::size_t s = 0; s < m.schemes.size(); ++s) {
    ojson row;
    row["scheme"] = m.schemes[s];
    row["cells"] = m.cells[s];
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["warnings"] = m.warnings;
  return j;
}

std::string errors_csv(const ErrorReport& r) {
  std::string out = "scheme,model,reference,hypothesis,count\n";
  for (const ErrorGroup& g : r.groups) {
    std::int64_t shown = 0;
    for (const SubstitutionEntry& e : g.pairs) {
      if (shown++ >= r.top_k) break;
      out += csv_field(g.scheme) + "," + csv_field(g.model) + "," +
             csv_field(e.ref_word) + "," + csv_field(e.hyp_word) + "," +
             std::to_string(e.count) + "\n";
    }
  }
  return out;
}

std::string errors_markdown(const ErrorReport& r) {
  std::string out =
      "Substitution pairs (top " + std::to_string(r.top_k) + " per scheme "
      "and model)\n\n";
  out += "| Scheme | Model | Reference | Hypothesis | Count |\n";
  out += "| --- | --- | --- | --- | --- |\n";
  for (const ErrorGroup& g : r.groups) {
    std::int64_t shown = 0;
    for (const SubstitutionEntry& e : g.pairs) {
      if (shown++ >= r.top_k) break;
      out += "| " + md_cell(g.scheme) + " | " + md_cell(g.model) + " | " +
             md_cell(e.ref_word) + " | " + md_cell(e.hyp_word) + " | " +
             std::to_string(e.count) + " |\n";
    }
  }
  return out;
}

ojson errors_json(const ErrorReport& r) {
  ojson j;
  j["type"] = "substitution_report";
  j["top_k"] = r.top_k;
  ojson groups = ojson::array();
  for (const ErrorGroup& g : r.groups) {
    ojson group;
    group["scheme"] = g.scheme;
    group["model"] = g.model;
    group["substitutions"] = g.substitutions;
    ojson pairs = ojson::array();
    for (const SubstitutionEntry& e : g.pairs) {
      ojson pair;
      pair["ref"] = e.ref_word;
      pair["hyp"] = e.hyp_word;
      pair["count"] = e.count;
      pairs.push_back(std::move(pair));
    }
    group["pairs"] = std::move(pairs);
    groups.push_back(std::move(group));
  }
  j["groups"] = std::move(groups);
  return j;
}

}  // namespace

const char* format_name(EmitFormat format) {
  switch (format) {
    case EmitFormat::csv: return "csv";
    case EmitFormat::json: return "json";
    case EmitFormat::markdown: return "markdown";
  }
  return "markdown";
}

const char* format_extension(EmitFormat format) {
  switch (format) {
    case EmitFormat::csv: return "csv";
    case EmitFormat::json: return "json";
    case EmitFormat::markdown: return "md";
  }
  return "md";
}

EmitFormat parse_format(std::string_view name) {
  std::string key = fold_case(name);
  if (key == "csv") return EmitFormat::csv;
  if (key == "json") return EmitFormat::json;
  if (key == "markdown" || key == "md") return EmitFormat::markdown;
  throw ConfigError("unknown format: " + std::string(name));
}

EvalResult evaluate_corpus(const CorpusManifest& corpus,
                           const std::vector<Scheme>& schemes,
                           const std::vector<std::string>& models,
                           Aggregation aggregation,
                           const EvalOptions& options) {
  if (schemes.empty()) throw ConfigError("no schemes to evaluate");
  if (models.empty()) throw ConfigError("no models to evaluate");
  for (const std::string& model : models) {
    if (std::find(corpus.models.begin(), corpus.models.end(), model) ==
        corpus.models.end()) {
      throw ConfigError("unknown model '" + model + "'");
    }
  }

  EvalPlan plan;
  plan.models = models;
  plan.pipelines.reserve(schemes.size());
  for (Scheme scheme : schemes) {
    plan.pipelines.push_back(build_pipeline(scheme, options.config));
    plan.scheme_names.emplace_back(scheme_name(scheme));
  }
  plan.slots.assign(schemes.size(),
                    std::vector<RecordCell>(corpus.records.size()));

  run_all_tasks(corpus, plan, options.jobs);

  EvalResult result;
  std::vector<std::size_t> all(corpus.records.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  result.overall = build_matrix(corpus, plan, all, "all", aggregation);

  // The five named scenarios in fixed order, then others by appearance.
  std::vector<ScenarioTag> order;
  for (ScenarioKind kind :
       {ScenarioKind::takeoff, ScenarioKind::ecam, ScenarioKind::fordec,
        ScenarioKind::landing, ScenarioKind::interview}) {
    order.push_back({kind, scenario_kind_name(kind)});
  }
  for (const UtteranceRecord& record : corpus.records) {
    if (record.scenario.kind != ScenarioKind::other) continue;
    if (std::find(order.begin(), order.end(), record.scenario) == order.end()) {
      order.push_back(record.scenario);
    }
  }
  for (const ScenarioTag& tag : order) {
    std::vector<std::size_t> subset;
    for (std::size_t r = 0; r < corpus.records.size(); ++r) {
      if (corpus.records[r].scenario == tag) subset.push_back(r);
    }
    if (subset.empty()) {
      result.warnings.push_back("scenario '" + tag.name +
                                "' has no utterances; omitted from breakdown");
      continue;
    }
    result.scenarios.push_back(
        build_matrix(corpus, plan, subset, tag.name, aggregation));
  }

  result.errors = build_errors(plan, corpus.records.size(), options.top_k);
  return result;
}

ReportMatrix evaluate_matrix(const CorpusManifest& corpus,
                             const std::vector<Scheme>& schemes,
                             const std::vector<std::string>& models,
                             Aggregation aggregation,
                             const EvalOptions& options) {
  return evaluate_corpus(corpus, schemes, models, aggregation, options)
      .overall;
}

std::vector<ReportMatrix> scenario_breakdown(
    const CorpusManifest& corpus, const std::vector<Scheme>& schemes,
    const std::vector<std::string>& models, Aggregation aggregation,
    const EvalOptions& options) {
  EvalResult result =
      evaluate_corpus(corpus, schemes, models, aggregation, options);
  std::vector<ReportMatrix> matrices;
  matrices.push_back(std::move(result.overall));
  for (ReportMatrix& m : result.scenarios) matrices.push_back(std::move(m));
  return matrices;
}

std::string emit(const ReportMatrix& matrix, EmitFormat format) {
  switch (format) {
    case EmitFormat::csv: return matrix_csv(matrix);
    case EmitFormat::json: return matrix_json(matrix).dump(2) + "\n";
    case EmitFormat::markdown: return matrix_markdown(matrix);
  }
  return {};
}

std::string emit(const ErrorReport& report, EmitFormat format) {
  switch (format) {
    case EmitFormat::csv: return errors_csv(report);
    case EmitFormat::json: return errors_json(report).dump(2) + "\n";
    case EmitFormat::markdown: return errors_markdown(report);
  }
  return {};
}

ReportMatrix matrix_from_json(std::string_view text) {
  try {
    ojson j = ojson::parse(text);
    if (j.at("type").get<std::string>() != "wer_matrix") {
      throw DataError("not a wer_matrix document");
    }
    ReportMatrix m;
    m.scenario = j.at("scenario").get<std::string>();
    m.aggregation = parse_aggregation(j.at("aggregation").get<std::string>());
    m.models = j.at("models").get<std::vector<std::string>>();
    for (const ojson& row : j.at("rows")) {
      m.schemes.push_back(row.at("scheme").get<std::string>());
      m.cells.push_back(row.at("cells").get<std::vector<std::string>>());
      if (m.cells.back().size() != m.models.size()) {
        throw DataError("matrix row width does not match model count");
      }
    }
    m.warnings = j.at("warnings").get<std::vector<std::string>>();
    return m;
  } catch (const ojson::exception& e) {
    throw DataError(std::string("malformed matrix json: ") + e.what());
  }
}

ErrorReport errors_from_json(std::string_view text) {
  try {
    ojson j = ojson::parse(text);
    if (j.at("type").get<std::string>() != "substitution_report") {
      throw DataError("not a substitution_report document");
    }
    ErrorReport r;
    r.top_k = j.at("top_k").get<int>();
    for (const ojson& group : j.at("groups")) {
      ErrorGroup g;
      g.scheme = group.at("scheme").get<std::string>();
      g.model = group.at("model").get<std::string>();
      g.substitutions = group.at("substitutions").get<std::int64_t>();
      for (const ojson& pair : group.at("pairs")) {
        g.pairs.push_back({pair.at("ref").get<std::string>(),
                           pair.at("hyp").get<std::string>(),
                           pair.at("count").get<std::int64_t>()});
      }
      r.groups.push_back(std::move(g));
    }
    return r;
  } catch (const ojson::exception& e) {
    throw DataError(std::string("malformed error report json: ") + e.what());
  }
}

}  // namespace asreval
