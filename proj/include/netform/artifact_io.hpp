#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "netform/borda.hpp"
#include "netform/choice.hpp"
#include "netform/config.hpp"
#include "netform/errors.hpp"
#include "netform/graph.hpp"
#include "netform/hash.hpp"
#include "netform/netgen.hpp"
#include "netform/prompt.hpp"

namespace netform {

/// One decision step as it entered the log: who chose, what was shown (in
/// presentation order), the raw feature counts behind each candidate, and
/// which candidates were picked (ranked) and committed as edges.
struct DecisionRecord {
  int t = 0;
  NodeId chooser = -1;
  std::vector<NodeId> presented;
  std::vector<FeatureVector> features;  // raw counts, parallel to presented
  std::vector<NodeId> selected;         // policy picks, ranked
  std::vector<NodeId> committed;        // edges added this step
  bool has_rewired = false;
  Edge rewired{};                 // edge removed before committing (rewiring)
  NodeId removed_friend = -1;     // dropped tie this decision replaces, if any
  std::string policy;
  std::string raw;                // raw policy response, when one exists
};

/// One survey response: the presented candidate profiles, the pick, and the
/// respondent's importance ranking of the three criteria.
struct SurveyRecord {
  std::string context;  // social | company
  int respondent = -1;
  std::vector<OrderedJson> candidates;
  std::string choice;
  CriterionRanking ranking{};
  bool dropped = false;  // respondent excluded (no valid response)
  std::string reason;
  std::string raw;
  std::string policy;
};

/// Everything one run produces.  The final graph is derived: replaying the
/// log onto the initial graph must reproduce it exactly.
struct RunArtifact {
  ExperimentConfig config;
  std::string fingerprint;
  Graph initial;
  Graph final_graph;
  std::vector<int> block_labels;
  AttributeTable attributes;
  std::vector<DecisionRecord> log;
  std::vector<SurveyRecord> survey_log;
  OrderedJson report = OrderedJson::object();
};

namespace artifact_detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write file " + path.string());
  out << text;
  if (!out) throw DataError("failed writing file " + path.string());
}

inline std::string strip_line(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  for (auto& field : out) field = strip_line(field);
  return out;
}

inline long long parse_int(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw DataError(where + ": expected an integer, got '" + text + "'");
  }
}

inline long long round_count(double v) { return std::llround(v); }

}  // namespace artifact_detail

/// Serialize a graph as tab-separated edges.  A leading `# nodes: N`
/// comment carries the node count so isolated nodes survive the round trip.
inline std::string emit_edge_file(const Graph& g) {
  std::string out = "# nodes: " + std::to_string(g.node_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += '\t';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

/// Parse a dense-id edge file.  Comment lines start with '#'; duplicate
/// edges collapse; self-loops are rejected.
inline Graph parse_edge_file(const std::string& text) {
  using namespace artifact_detail;
  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  long long declared_nodes = -1;
  std::vector<Edge> edges;
  long long max_id = -1;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    std::string line = strip_line(raw_line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string comment = strip_line(line.substr(1));
      if (comment.rfind("nodes:", 0) == 0)
        declared_nodes = parse_int(strip_line(comment.substr(6)),
                                   "edge file line " + std::to_string(line_no));
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw DataError("edge file line " + std::to_string(line_no) +
                      ": expected 'u<TAB>v', got '" + line + "'");
    const std::string where = "edge file line " + std::to_string(line_no);
    const long long u = parse_int(fields[0], where);
    const long long v = parse_int(fields[1], where);
    if (u < 0 || v < 0)
      throw DataError(where + ": negative node id");
    if (u == v)
      throw DataError(where + ": self-loop on node " + std::to_string(u));
    if (declared_nodes >= 0 && std::max(u, v) >= declared_nodes)
      throw DataError(where + ": node " + std::to_string(std::max(u, v)) +
                      " exceeds declared node count " +
                      std::to_string(declared_nodes));
    edges.push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
    max_id = std::max({max_id, u, v});
  }
  const long long n = declared_nodes >= 0 ? declared_nodes : max_id + 1;
  if (max_id >= n)
    throw DataError("edge file: node " + std::to_string(max_id) +
                    " exceeds declared node count " + std::to_string(n));
  Graph g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
  return g;
}

/// Serialize per-node attributes as TSV (header row, node id first column).
inline std::string emit_attribute_file(const AttributeTable& attrs) {
  std::string out = "node";
  for (const auto& name : attrs.feature_names) {
    out += '\t';
    out += name;
  }
  out += '\n';
  for (std::size_t i = 0; i < attrs.rows.size(); ++i) {
    out += std::to_string(i);
    for (const auto& value : attrs.rows[i]) {
      out += '\t';
      out += value;
    }
    out += '\n';
  }
  return out;
}

/// Parse a dense-id attribute TSV covering nodes 0..n-1.  Every node must
/// appear exactly once; errors name the offending node.
inline AttributeTable parse_attribute_file(const std::string& text,
                                           std::size_t node_count) {
  using namespace artifact_detail;
  std::istringstream stream(text);
  std::string raw_line;
  if (!std::getline(stream, raw_line))
    throw DataError("attribute file: missing header row");
  auto header = split_tabs(strip_line(raw_line));
  if (header.empty() || header[0] != "node")
    throw DataError("attribute file: header must start with 'node'");
  AttributeTable attrs;
  attrs.feature_names.assign(header.begin() + 1, header.end());
  attrs.rows.assign(node_count,
                    std::vector<std::string>(attrs.feature_names.size()));
  std::vector<bool> seen(node_count, false);
  int line_no = 1;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const std::string line = strip_line(raw_line);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    const std::string where = "attribute file line " + std::to_string(line_no);
    if (fields.size() != header.size())
      throw DataError(where + ": expected " + std::to_string(header.size()) +
                      " columns, got " + std::to_string(fields.size()));
    const long long id = parse_int(fields[0], where);
    if (id < 0 || static_cast<std::size_t>(id) >= node_count)
      throw DataError(where + ": unknown node '" + fields[0] + "'");
    if (seen[static_cast<std::size_t>(id)])
      throw DataError(where + ": duplicate row for node " + fields[0]);
    seen[static_cast<std::size_t>(id)] = true;
    for (std::size_t f = 1; f < fields.size(); ++f)
      attrs.rows[static_cast<std::size_t>(id)][f - 1] = fields[f];
  }
  for (std::size_t i = 0; i < node_count; ++i)
    if (!seen[i])
      throw DataError("attribute file: node " + std::to_string(i) +
                      " has no attribute row");
  return attrs;
}

inline std::string emit_label_file(const std::vector<int>& labels) {
  std::string out = "node\tblock\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += std::to_string(i);
    out += '\t';
    out += std::to_string(labels[i]);
    out += '\n';
  }
  return out;
}

inline std::vector<int> parse_label_file(const std::string& text,
                                         std::size_t node_count) {
  using namespace artifact_detail;
  std::istringstream stream(text);
  std::string raw_line;
  if (!std::getline(stream, raw_line) ||
      strip_line(raw_line) != "node\tblock")
    throw DataError("label file: expected 'node<TAB>block' header");
  std::vector<int> labels(node_count, -1);
  int line_no = 1;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const std::string line = strip_line(raw_line);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    const std::string where = "label file line " + std::to_string(line_no);
    if (fields.size() != 2)
      throw DataError(where + ": expected 'node<TAB>block'");
    const long long id = parse_int(fields[0], where);
    if (id < 0 || static_cast<std::size_t>(id) >= node_count)
      throw DataError(where + ": unknown node '" + fields[0] + "'");
    labels[static_cast<std::size_t>(id)] =
        static_cast<int>(parse_int(fields[1], where));
  }
  for (std::size_t i = 0; i < node_count; ++i)
    if (labels[i] < 0)
      throw DataError("label file: node " + std::to_string(i) +
                      " has no block label");
  return labels;
}

inline OrderedJson decision_to_json(const DecisionRecord& rec) {
  using artifact_detail::round_count;
  OrderedJson j = OrderedJson::object();
  j["t"] = rec.t;
  j["chooser"] = rec.chooser;
  j["presented"] = rec.presented;
  OrderedJson features = OrderedJson::array();
  for (const auto& f : rec.features)
    features.push_back({round_count(f[0]), round_count(f[1]), round_count(f[2])});
  j["features"] = std::move(features);
  j["selected"] = rec.selected;
  if (rec.committed != rec.selected) j["committed"] = rec.committed;
  if (rec.has_rewired) j["rewired"] = {rec.rewired.first, rec.rewired.second};
  if (rec.removed_friend >= 0) j["removed_friend"] = rec.removed_friend;
  j["policy"] = rec.policy;
  if (!rec.raw.empty()) j["raw"] = rec.raw;
  return j;
}

inline DecisionRecord decision_from_json(const OrderedJson& j,
                                         const std::string& where) {
  DecisionRecord rec;
  try {
    rec.t = j.at("t").get<int>();
    rec.chooser = j.at("chooser").get<NodeId>();
    rec.presented = j.at("presented").get<std::vector<NodeId>>();
    for (const auto& row : j.at("features")) {
      if (row.size() != kChoiceFeatureCount)
        throw DataError(where + ": feature row must have three entries");
      rec.features.push_back({row[0].get<double>(), row[1].get<double>(),
                              row[2].get<double>()});
    }
    rec.selected = j.at("selected").get<std::vector<NodeId>>();
    rec.committed = j.contains("committed")
                        ? j.at("committed").get<std::vector<NodeId>>()
                        : rec.selected;
    if (j.contains("rewired")) {
      const auto& pair = j.at("rewired");
      if (pair.size() != 2) throw DataError(where + ": malformed rewired edge");
      rec.has_rewired = true;
      rec.rewired = make_edge(pair[0].get<NodeId>(), pair[1].get<NodeId>());
    }
    if (j.contains("removed_friend"))
      rec.removed_friend = j.at("removed_friend").get<NodeId>();
    rec.policy = j.value("policy", std::string());
    rec.raw = j.value("raw", std::string());
  } catch (const OrderedJson::exception& e) {
    throw DataError(where + ": " + e.what());
  }
  if (rec.features.size() != rec.presented.size())
    throw DataError(where + ": features do not match presented candidates");
  return rec;
}

inline std::string emit_decision_log(const std::vector<DecisionRecord>& log) {
  std::string out;
  for (const auto& rec : log) {
    out += decision_to_json(rec).dump();
    out += '\n';
  }
  return out;
}

/// Parse a decision log; steps must be strictly increasing in t.
inline std::vector<DecisionRecord> parse_decision_log(const std::string& text) {
  std::vector<DecisionRecord> log;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  long long last_t = -1;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string body = artifact_detail::strip_line(line);
    if (body.empty()) continue;
    const std::string where = "decision log line " + std::to_string(line_no);
    OrderedJson j;
    try {
      j = OrderedJson::parse(body);
    } catch (const OrderedJson::exception& e) {
      throw DataError(where + ": " + e.what());
    }
    DecisionRecord rec = decision_from_json(j, where);
    if (rec.t <= last_t)
      throw DataError(where + ": step t=" + std::to_string(rec.t) +
                      " is not strictly increasing (previous t=" +
                      std::to_string(last_t) + ")");
    last_t = rec.t;
    log.push_back(std::move(rec));
  }
  return log;
}

inline OrderedJson survey_to_json(const SurveyRecord& rec) {
  OrderedJson j = OrderedJson::object();
  j["context"] = rec.context;
  j["respondent"] = rec.respondent;
  j["candidates"] = rec.candidates;
  j["choice"] = rec.choice;
  j["ranking"] = {{"degree", rec.ranking.degree},
                  {"common", rec.ranking.common},
                  {"similarity", rec.ranking.similarity}};
  j["dropped"] = rec.dropped;
  if (!rec.reason.empty()) j["reason"] = rec.reason;
  j["policy"] = rec.policy;
  if (!rec.raw.empty()) j["raw"] = rec.raw;
  return j;
}

inline SurveyRecord survey_from_json(const OrderedJson& j,
                                     const std::string& where) {
  SurveyRecord rec;
  try {
    rec.context = j.at("context").get<std::string>();
    rec.respondent = j.at("respondent").get<int>();
    for (const auto& c : j.at("candidates")) rec.candidates.push_back(c);
    rec.choice = j.at("choice").get<std::string>();
    const auto& r = j.at("ranking");
    rec.ranking.degree = r.at("degree").get<int>();
    rec.ranking.common = r.at("common").get<int>();
    rec.ranking.similarity = r.at("similarity").get<int>();
    rec.dropped = j.value("dropped", false);
    rec.reason = j.value("reason", std::string());
    rec.policy = j.value("policy", std::string());
    rec.raw = j.value("raw", std::string());
  } catch (const OrderedJson::exception& e) {
    throw DataError(where + ": " + e.what());
  }
  return rec;
}

inline std::string emit_survey_log(const std::vector<SurveyRecord>& log) {
  std::string out;
  for (const auto& rec : log) {
    out += survey_to_json(rec).dump();
    out += '\n';
  }
  return out;
}

inline std::vector<SurveyRecord> parse_survey_log(const std::string& text) {
  std::vector<SurveyRecord> log;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string body = artifact_detail::strip_line(line);
    if (body.empty()) continue;
    const std::string where = "survey log line " + std::to_string(line_no);
    OrderedJson j;
    try {
      j = OrderedJson::parse(body);
    } catch (const OrderedJson::exception& e) {
      throw DataError(where + ": " + e.what());
    }
    log.push_back(survey_from_json(j, where));
  }
  return log;
}

/// Apply a decision log to a copy of the initial graph.  Every recorded
/// removal and addition must change the graph, so a log that drifted from
/// its seed is caught here rather than producing a silently wrong network.
inline Graph replay_log(const Graph& initial,
                        const std::vector<DecisionRecord>& log) {
  Graph g = initial;
  for (const auto& rec : log) {
    const std::string where = "replay step t=" + std::to_string(rec.t);
    if (rec.has_rewired) {
      if (!g.remove_edge(rec.rewired.first, rec.rewired.second))
        throw DataError(where + ": rewired edge " +
                        std::to_string(rec.rewired.first) + "-" +
                        std::to_string(rec.rewired.second) + " is not present");
    }
    for (NodeId v : rec.committed) {
      if (!g.add_edge(rec.chooser, v))
        throw DataError(where + ": edge " + std::to_string(rec.chooser) + "-" +
                        std::to_string(v) + " already present");
    }
  }
  return g;
}

/// Extract a raw choice dataset from a decision log: one observation per
/// step with a selection, the first-ranked pick as the chosen alternative.
/// Transformed features are not filled; apply the dataset-wide transform
/// before fitting.
inline ChoiceDataset choice_dataset_from_log(
    const std::vector<DecisionRecord>& log) {
  ChoiceDataset data;
  for (const auto& rec : log) {
    if (rec.selected.empty()) continue;
    ChoiceObservation obs;
    obs.chooser = rec.chooser;
    obs.chosen = -1;
    for (std::size_t i = 0; i < rec.presented.size(); ++i) {
      Alternative alt;
      alt.node = rec.presented[i];
      alt.raw = rec.features[i];
      obs.alternatives.push_back(alt);
      if (rec.presented[i] == rec.selected.front())
        obs.chosen = static_cast<int>(i);
    }
    if (obs.chosen < 0)
      throw DataError("decision log step t=" + std::to_string(rec.t) +
                      ": selected node " + std::to_string(rec.selected.front()) +
                      " was not presented");
    data.push_back(std::move(obs));
  }
  return data;
}

inline constexpr const char* kArtifactFormat = "netform-artifact";
inline constexpr int kArtifactVersion = 1;

/// Write a run artifact as a directory of text files plus a manifest with
/// per-file checksums.  report.json stays outside the checksum map so the
/// analysis stage can refresh it without re-sealing the raw run.
inline void write_artifact(const RunArtifact& artifact,
                           const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  using artifact_detail::write_file;
  fs::create_directories(dir);
  std::map<std::string, std::string> files;
  const auto put = [&](const std::string& name, const std::string& text) {
    write_file(dir / name, text);
    files[name] = sha256_hex(text);
  };
  put("config.txt", canonical_config(artifact.config));
  put("initial.edges", emit_edge_file(artifact.initial));
  if (!artifact.attributes.empty())
    put("attributes.tsv", emit_attribute_file(artifact.attributes));
  if (!artifact.block_labels.empty())
    put("labels.tsv", emit_label_file(artifact.block_labels));
  put("decisions.jsonl", emit_decision_log(artifact.log));
  if (!artifact.survey_log.empty())
    put("survey.jsonl", emit_survey_log(artifact.survey_log));
  write_file(dir / "report.json", artifact.report.dump(2) + "\n");

  OrderedJson manifest = OrderedJson::object();
  manifest["format"] = kArtifactFormat;
  manifest["version"] = kArtifactVersion;
  manifest["fingerprint"] = artifact.fingerprint;
  manifest["rng_version"] = kRngVersion;
  OrderedJson file_map = OrderedJson::object();
  for (const auto& [name, digest] : files) file_map[name] = digest;
  manifest["files"] = std::move(file_map);
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

/// Read an artifact directory back.  Checksums are verified against the
/// manifest, the config must hash to the recorded fingerprint, and the
/// final graph is rebuilt by replaying the decision log.
inline RunArtifact read_artifact(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  using artifact_detail::read_file;
  if (!fs::exists(dir / "manifest.json"))
    throw DataError("artifact " + dir.string() + ": missing manifest.json");
  OrderedJson manifest;
  try {
    manifest = OrderedJson::parse(read_file(dir / "manifest.json"));
  } catch (const OrderedJson::exception& e) {
    throw DataError("artifact manifest: " + std::string(e.what()));
  }
  if (manifest.value("format", std::string()) != kArtifactFormat)
    throw DataError("artifact manifest: unrecognized format");
  if (manifest.value("version", -1) != kArtifactVersion)
    throw DataError("artifact manifest: unsupported version");

  std::map<std::string, std::string> contents;
  for (const auto& [name, digest] : manifest.at("files").items()) {
    if (!fs::exists(dir / name))
      throw DataError("artifact corruption: file " + name + " is missing");
    std::string text = read_file(dir / name);
    if (sha256_hex(text) != digest.get<std::string>())
      throw DataError("artifact corruption: checksum mismatch on " + name);
    contents[name] = std::move(text);
  }
  if (!contents.count("config.txt"))
    throw DataError("artifact manifest: config.txt is not listed");
  if (!contents.count("initial.edges"))
    throw DataError("artifact manifest: initial.edges is not listed");
  if (!contents.count("decisions.jsonl"))
    throw DataError("artifact manifest: decisions.jsonl is not listed");

  RunArtifact artifact;
  artifact.config = parse_config(contents.at("config.txt"));
  artifact.fingerprint = manifest.value("fingerprint", std::string());
  if (config_fingerprint(artifact.config) != artifact.fingerprint)
    throw DataError("artifact corruption: config does not match fingerprint");
  artifact.initial = parse_edge_file(contents.at("initial.edges"));
  if (contents.count("attributes.tsv"))
    artifact.attributes = parse_attribute_file(contents.at("attributes.tsv"),
                                               artifact.initial.node_count());
  if (contents.count("labels.tsv"))
    artifact.block_labels =
        parse_label_file(contents.at("labels.tsv"), artifact.initial.node_count());
  artifact.log = parse_decision_log(contents.at("decisions.jsonl"));
  if (contents.count("survey.jsonl"))
    artifact.survey_log = parse_survey_log(contents.at("survey.jsonl"));
  artifact.final_graph = replay_log(artifact.initial, artifact.log);
  if (fs::exists(dir / "report.json")) {
    try {
      artifact.report = OrderedJson::parse(read_file(dir / "report.json"));
    } catch (const OrderedJson::exception& e) {
      throw DataError("artifact report.json: " + std::string(e.what()));
    }
  }
  return artifact;
}

/// External dataset: a graph plus optional attributes keyed by arbitrary
/// node labels, densified to 0..n-1 with the original labels recorded.
struct Dataset {
  Graph graph;
  AttributeTable attributes;
  std::vector<std::string> original_ids;  // dense id -> original label
};

namespace artifact_detail {

/// Sort labels numerically when every label parses as an integer,
/// lexicographically otherwise, so dense ids are reproducible.
inline void sort_labels(std::vector<std::string>& labels) {
  bool all_numeric = !labels.empty();
  for (const auto& label : labels) {
    if (label.empty() ||
        label.find_first_not_of("0123456789") != std::string::npos) {
      all_numeric = false;
      break;
    }
  }
  if (all_numeric)
    std::sort(labels.begin(), labels.end(),
              [](const std::string& a, const std::string& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
  else
    std::sort(labels.begin(), labels.end());
}

}  // namespace artifact_detail

/// Ingest an external edge file (and optional attribute TSV keyed by the
/// same labels) into a dense-id dataset.  Label order is deterministic,
/// duplicate edges collapse, self-loops and dangling references error out
/// naming the offending node.
inline Dataset load_dataset(const std::filesystem::path& edges_path,
                            const std::filesystem::path& attributes_path = {}) {
  using namespace artifact_detail;
  const std::string text = read_file(edges_path);
  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> dense;
  const auto note_label = [&](const std::string& label) {
    if (!dense.count(label)) {
      dense.emplace(label, 0);
      labels.push_back(label);
    }
  };
  while (std::getline(stream, raw_line)) {
    ++line_no;
    const std::string line = strip_line(raw_line);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw DataError("edge file line " + std::to_string(line_no) +
                      ": expected 'u<TAB>v', got '" + line + "'");
    if (fields[0] == fields[1])
      throw DataError("edge file line " + std::to_string(line_no) +
                      ": self-loop on node '" + fields[0] + "'");
    note_label(fields[0]);
    note_label(fields[1]);
    raw_edges.emplace_back(fields[0], fields[1]);
  }
  sort_labels(labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    dense[labels[i]] = static_cast<NodeId>(i);

  Dataset dataset;
  dataset.original_ids = labels;
  dataset.graph = Graph(labels.size());
  for (const auto& [a, b] : raw_edges)
    dataset.graph.add_edge(dense.at(a), dense.at(b));

  if (!attributes_path.empty()) {
    const std::string attr_text = read_file(attributes_path);
    std::istringstream attr_stream(attr_text);
    if (!std::getline(attr_stream, raw_line))
      throw DataError("attribute file: missing header row");
    auto header = split_tabs(strip_line(raw_line));
    if (header.empty() || header[0] != "node")
      throw DataError("attribute file: header must start with 'node'");
    dataset.attributes.feature_names.assign(header.begin() + 1, header.end());
    dataset.attributes.rows.assign(
        labels.size(), std::vector<std::string>(header.size() - 1));
    std::vector<bool> seen(labels.size(), false);
    int attr_line = 1;
    while (std::getline(attr_stream, raw_line)) {
      ++attr_line;
      const std::string line = strip_line(raw_line);
      if (line.empty() || line[0] == '#') continue;
      const auto fields = split_tabs(line);
      const std::string where = "attribute file line " + std::to_string(attr_line);
      if (fields.size() != header.size())
        throw DataError(where + ": expected " + std::to_string(header.size()) +
                        " columns, got " + std::to_string(fields.size()));
      const auto it = dense.find(fields[0]);
      if (it == dense.end())
        throw DataError(where + ": unknown node '" + fields[0] + "'");
      const auto id = static_cast<std::size_t>(it->second);
      if (seen[id])
        throw DataError(where + ": duplicate row for node '" + fields[0] + "'");
      seen[id] = true;
      for (std::size_t f = 1; f < fields.size(); ++f)
        dataset.attributes.rows[id][f - 1] = fields[f];
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!seen[i])
        throw DataError("attribute file: node '" + labels[i] +
                        "' has no attribute row");
  }
  return dataset;
}

}  // namespace netform
