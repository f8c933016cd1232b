// Command-line front end: simulate experiments, analyze artifacts, fit
// decision logs, ingest datasets, and export report series.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netform/experiments.hpp"

namespace {

namespace fs = std::filesystem;
using netform::ConfigError;
using netform::DataError;
using netform::ExperimentConfig;
using netform::OrderedJson;
using netform::PolicyError;
using netform::RunArtifact;

std::string slurp(const fs::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(std::string(what) + " not readable: " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string fmt(double value) {
  if (!std::isfinite(value)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> temperature;
  std::optional<std::string> endpoint;
};

ExperimentConfig load_config(const fs::path& path, const Overrides& overrides) {
  std::string text;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config not readable: " + path.string());
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  ExperimentConfig cfg = netform::parse_config(text);
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (overrides.temperature) cfg.llm.temperature = *overrides.temperature;
  if (overrides.endpoint) cfg.llm.base_url = *overrides.endpoint;
  cfg.validate();
  return cfg;
}

int simulate(const fs::path& config_path, const fs::path& out,
             const Overrides& overrides, bool survey_only) {
  const ExperimentConfig cfg = load_config(config_path, overrides);
  if (survey_only && cfg.kind != netform::ExperimentKind::survey)
    throw ConfigError("the survey subcommand requires kind = survey");
  RunArtifact artifact = netform::run_experiment(cfg);
  netform::write_artifact(artifact, out);
  std::cout << "artifact " << artifact.fingerprint.substr(0, 12) << " ("
            << netform::kind_name(cfg.kind) << ") written to " << out.string()
            << "\n";
  if (artifact.report.contains("aborted") &&
      artifact.report.at("aborted").get<bool>()) {
    std::cerr << "run aborted: "
              << artifact.report.value("abort_message", std::string("unknown"))
              << "\n";
    return 3;
  }
  return 0;
}

int analyze_cmd(const fs::path& dir) {
  RunArtifact artifact = netform::read_artifact(dir);
  const OrderedJson analysis = netform::analyze(artifact);
  std::ofstream out(dir / "report.json", std::ios::binary);
  out << artifact.report.dump(2) << "\n";
  std::cout << "analysis (" << analysis.at("kind").get<std::string>() << ")";
  if (analysis.contains("replay_ok"))
    std::cout << " replay_ok="
              << (analysis.at("replay_ok").get<bool>() ? "true" : "false");
  std::cout << " written to " << (dir / "report.json").string() << "\n";
  return 0;
}

void print_fit_table(const netform::MnlFit& fit) {
  std::printf("%-18s %12s %12s %10s %s\n", "feature", "estimate", "std_err",
              "p", "");
  for (std::size_t f = 0; f < netform::kChoiceFeatureCount; ++f) {
    std::printf("%-18s %12s %12s %10s %s\n", netform::kChoiceFeatureNames[f],
                fmt(fit.theta[f]).c_str(), fmt(fit.std_err[f]).c_str(),
                fmt(fit.p_value[f]).c_str(),
                netform::significance_stars(fit.p_value[f]));
  }
  std::printf("%-18s %12s\n", "log_likelihood", fmt(fit.log_likelihood).c_str());
  std::printf("%-18s %12s\n", "aic", fmt(fit.aic).c_str());
  std::printf("%-18s %12zu\n", "n_obs", fit.n_obs);
}

int fit_cmd(const fs::path& log_path) {
  const std::string text = slurp(log_path, "decision log");
  const auto log = netform::parse_decision_log(text);
  netform::ChoiceDataset data = netform::choice_dataset_from_log(log);
  if (data.empty())
    throw DataError("decision log holds no records with selections");
  netform::apply_feature_transform(data);
  print_fit_table(netform::fit_mnl(data));
  return 0;
}

int ingest(const fs::path& edges, const fs::path& attrs, const fs::path& out) {
  const netform::Dataset dataset = netform::load_dataset(edges, attrs);
  fs::create_directories(out);
  {
    std::ofstream f(out / "edges.tsv", std::ios::binary);
    f << netform::emit_edge_file(dataset.graph);
  }
  if (!dataset.attributes.empty()) {
    std::ofstream f(out / "attributes.tsv", std::ios::binary);
    f << netform::emit_attribute_file(dataset.attributes);
  }
  {
    std::ofstream f(out / "nodes.tsv", std::ios::binary);
    f << "node\toriginal_id\n";
    for (std::size_t i = 0; i < dataset.original_ids.size(); ++i)
      f << i << "\t" << dataset.original_ids[i] << "\n";
  }
  std::cout << "ingested " << dataset.graph.node_count() << " nodes, "
            << dataset.graph.edge_count() << " edges into " << out.string()
            << "\n";
  return 0;
}

void csv_row(std::string& csv, const std::string& series,
             const std::string& x, double y) {
  csv += series;
  csv += ',';
  csv += x;
  csv += ',';
  csv += fmt(y);
  csv += '\n';
}

void series_rows(std::string& csv, const OrderedJson& a,
                 const RunArtifact& artifact) {
  const std::string kind = a.at("kind").get<std::string>();
  if (a.contains("evolution")) {
    const auto& ev = a.at("evolution");
    for (std::size_t i = 0; i < ev.at("t").size(); ++i)
      csv_row(csv, "edges_over_time", std::to_string(ev.at("t")[i].get<int>()),
              ev.at("edges")[i].get<double>());
  }
  if (kind == "p1" && a.contains("topk")) {
    const auto& curve = a.at("topk");
    for (std::size_t i = 0; i < curve.at("percent").size(); ++i) {
      const std::string x = std::to_string(curve.at("percent")[i].get<int>());
      csv_row(csv, "topk_empirical", x, curve.at("empirical")[i].get<double>());
      csv_row(csv, "topk_null", x, curve.at("null")[i].get<double>());
    }
  }
  if (kind == "p2") {
    csv_row(csv, "D", "observed", a.at("D").get<double>());
    if (a.contains("null_D"))
      for (std::size_t i = 0; i < a.at("null_D").size(); ++i)
        csv_row(csv, "null_D", std::to_string(i),
                a.at("null_D")[i].get<double>());
    if (a.contains("p_within") && !a.at("p_within").is_null())
      csv_row(csv, "p_within", "observed", a.at("p_within").get<double>());
  }
  if (kind == "p3" && a.contains("R"))
    for (const auto& [feature, value] : a.at("R").items())
      csv_row(csv, "assortativity", feature, value.get<double>());
  if (kind == "p5" && artifact.report.contains("series")) {
    const auto& series = artifact.report.at("series");
    for (std::size_t i = 0; i < series.at("n").size(); ++i) {
      const std::string x = std::to_string(series.at("n")[i].get<int>());
      csv_row(csv, "L", x, series.at("L")[i].get<double>());
      csv_row(csv, "C", x, series.at("C")[i].get<double>());
    }
  }
  if (kind == "realworld") {
    if (a.contains("fit"))
      for (const auto& row : a.at("fit").at("coefficients")) {
        csv_row(csv, "coefficient", row.at("feature").get<std::string>(),
                row.at("theta").get<double>());
        csv_row(csv, "coefficient_se", row.at("feature").get<std::string>(),
                row.at("std_err").get<double>());
      }
    if (a.contains("ame"))
      for (const auto& row : a.at("ame"))
        csv_row(csv, "ame", row.at("feature").get<std::string>(),
                row.at("ame").get<double>());
    if (a.contains("graph_change"))
      for (const char* metric :
           {"degree_ks", "component_ks", "spectrum_ks", "clustering_ks"})
        csv_row(csv, "change_ks_p", metric,
                a.at("graph_change").at(metric).at("p").get<double>());
  }
  if (kind == "survey" && a.contains("contexts"))
    for (const auto& [context, group] : a.at("contexts").items())
      if (group.contains("borda_mean"))
        for (const auto& [criterion, value] : group.at("borda_mean").items())
          csv_row(csv, "borda_mean", context + "." + criterion,
                  value.get<double>());
}

int report_cmd(const fs::path& dir, const std::string& format) {
  RunArtifact artifact = netform::read_artifact(dir);
  if (!artifact.report.contains("analysis")) netform::analyze(artifact);
  if (format == "json") {
    std::cout << artifact.report.dump(2) << "\n";
    return 0;
  }
  std::string csv = "series,x,y\n";
  series_rows(csv, artifact.report.at("analysis"), artifact);
  std::cout << csv;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"network-formation laboratory"};
  app.require_subcommand(1);
  Overrides overrides;

  std::string config_path;
  std::string out_dir = "artifact";
  auto add_overrides = [&overrides](CLI::App* cmd) {
    cmd->add_option("--seed", overrides.seed, "override the master seed");
    cmd->add_option("--temperature", overrides.temperature,
                    "override the endpoint sampling temperature");
    cmd->add_option("--endpoint", overrides.endpoint,
                    "override the endpoint base URL");
  };

  CLI::App* sim = app.add_subcommand("simulate", "run an experiment config");
  sim->add_option("config", config_path, "experiment config file")->required();
  sim->add_option("-o,--out", out_dir, "artifact output directory");
  add_overrides(sim);

  CLI::App* survey =
      app.add_subcommand("survey", "run a survey config (kind = survey)");
  survey->add_option("config", config_path, "survey config file")->required();
  survey->add_option("-o,--out", out_dir, "artifact output directory");
  add_overrides(survey);

  std::string artifact_dir;
  CLI::App* ana = app.add_subcommand("analyze", "recompute artifact analysis");
  ana->add_option("artifact", artifact_dir, "artifact directory")->required();

  std::string log_path;
  CLI::App* fit = app.add_subcommand("fit", "fit a choice model to a log");
  fit->add_option("log", log_path, "decision log (JSON lines)")->required();

  std::string edges_path;
  std::string attrs_path;
  std::string ingest_out = "dataset";
  CLI::App* ing = app.add_subcommand("ingest", "normalize an external dataset");
  ing->add_option("edges", edges_path, "edge list file")->required();
  ing->add_option("attributes", attrs_path, "attribute file");
  ing->add_option("-o,--out", ingest_out, "normalized output directory");

  std::string format = "json";
  CLI::App* rep = app.add_subcommand("report", "export artifact report");
  rep->add_option("artifact", artifact_dir, "artifact directory")->required();
  rep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sim->parsed()) return simulate(config_path, out_dir, overrides, false);
  if (survey->parsed()) return simulate(config_path, out_dir, overrides, true);
  if (ana->parsed()) return analyze_cmd(artifact_dir);
  if (fit->parsed()) return fit_cmd(log_path);
  if (ing->parsed()) return ingest(edges_path, attrs_path, ingest_out);
  if (rep->parsed()) return report_cmd(artifact_dir, format);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const PolicyError& e) {
    std::cerr << "policy error: " << e.what() << "\n";
    return 3;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
