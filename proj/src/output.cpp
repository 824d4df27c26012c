#include "edqc/output.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace edqc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::uint64_t> sorted_labels(const Graph& g, const std::vector<VertexId>& vertices) {
  std::vector<std::uint64_t> labels;
  labels.reserve(vertices.size());
  for (VertexId v : vertices) labels.push_back(g.original_label(v));
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string shortest(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  double parsed = 0.0;
  std::sscanf(buf, "%lg", &parsed);
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
    std::sscanf(shorter, "%lg", &parsed);
    if (parsed == x) return shorter;
  }
  return buf;
}

std::string join_labels(const std::vector<std::uint64_t>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out;
}

ordered_json meta_json(const RunMetadata& meta) {
  return ordered_json{{"command", meta.command},   {"input", meta.input},
                      {"gamma", meta.gamma},       {"steps", meta.steps},
                      {"theta", meta.theta},       {"timeout_seconds", meta.timeout_seconds},
                      {"workers", meta.workers},   {"base_seed", meta.seed},
                      {"runs", meta.runs}};
}

ordered_json result_json(const Graph& g, const QuasiCliqueResult& r, std::uint64_t seed) {
  ordered_json j;
  j["seed"] = seed;
  j["size"] = r.size;
  j["density"] = r.density.value();
  j["internal_edges"] = r.internal_edges;
  if (r.source)
    j["source"] = g.original_label(*r.source);
  else
    j["source"] = nullptr;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["sources_processed"] = r.sources_processed;
  j["vertices"] = sorted_labels(g, r.vertices);
  return j;
}

}  // namespace

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format: '" + name + "'");
}

std::string format_find_output(const RunMetadata& meta, const Graph& g, const RunSummary& summary,
                               OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j = meta_json(meta);
    j["results"] = ordered_json::array();
    for (std::size_t i = 0; i < summary.runs.size(); ++i)
      j["results"].push_back(result_json(g, summary.runs[i], meta.seed + i));
    j["summary"] = {{"mean_size", summary.mean_size}, {"stddev_size", summary.stddev_size}};
    return j.dump(2) + "\n";
  }
  std::string out =
      "seed,size,density,internal_edges,source,elapsed_seconds,sources_processed,vertices\n";
  for (std::size_t i = 0; i < summary.runs.size(); ++i) {
    const auto& r = summary.runs[i];
    out += std::to_string(meta.seed + i) + ',' + std::to_string(r.size) + ',' +
           shortest(r.density.value()) + ',' + std::to_string(r.internal_edges) + ',' +
           (r.source ? std::to_string(g.original_label(*r.source)) : std::string()) + ',' +
           shortest(r.elapsed_seconds) + ',' + std::to_string(r.sources_processed) + ",\"" +
           join_labels(sorted_labels(g, r.vertices)) + "\"\n";
  }
  return out;
}

std::string format_oracle_output(const RunMetadata& meta, const Graph& g,
                                 const std::vector<VertexId>& vertices, OutputFormat format) {
  auto labels = sorted_labels(g, vertices);
  Rational density = subset_density(g, vertices);
  if (format == OutputFormat::Json) {
    ordered_json j{{"command", meta.command}, {"input", meta.input}, {"gamma", meta.gamma}};
    j["size"] = vertices.size();
    j["density"] = density.value();
    j["vertices"] = labels;
    return j.dump(2) + "\n";
  }
  return "size,density,vertices\n" + std::to_string(vertices.size()) + ',' +
         shortest(density.value()) + ",\"" + join_labels(labels) + "\"\n";
}

std::string format_stats_output(const RunMetadata& meta, const Graph& g, OutputFormat format) {
  double density = make_density(g.edge_count(), g.vertex_count()).value();
  if (format == OutputFormat::Json) {
    ordered_json j{{"command", meta.command}, {"input", meta.input}};
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["max_degree"] = g.max_degree();
    j["density"] = density;
    return j.dump(2) + "\n";
  }
  return "n,m,max_degree,density\n" + std::to_string(g.vertex_count()) + ',' +
         std::to_string(g.edge_count()) + ',' + std::to_string(g.max_degree()) + ',' +
         shortest(density) + "\n";
}

std::string format_ablate_output(const RunMetadata& meta,
                                 const std::vector<std::pair<Variant, RunSummary>>& results,
                                 OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j = meta_json(meta);
    j["variants"] = ordered_json::array();
    for (const auto& [variant, summary] : results) {
      ordered_json v{{"variant", variant_name(variant)},
                     {"mean_size", summary.mean_size},
                     {"stddev_size", summary.stddev_size}};
      v["sizes"] = ordered_json::array();
      for (const auto& r : summary.runs) v["sizes"].push_back(r.size);
      j["variants"].push_back(v);
    }
    return j.dump(2) + "\n";
  }
  std::string out = "variant,mean_size,stddev_size,sizes\n";
  for (const auto& [variant, summary] : results) {
    std::string sizes;
    for (std::size_t i = 0; i < summary.runs.size(); ++i) {
      if (i) sizes += ' ';
      sizes += std::to_string(summary.runs[i].size);
    }
    out += variant_name(variant) + ',' + shortest(summary.mean_size) + ',' +
           shortest(summary.stddev_size) + ",\"" + sizes + "\"\n";
  }
  return out;
}

std::string format_correlate_output(const RunMetadata& meta, const Graph& g,
                                    const CorrelationReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j = meta_json(meta);
    j["subset_size"] = report.subset_size;
    j["count"] = report.samples.size();
    j["pearson_r"] = report.pearson_r;
    j["source"] = g.original_label(report.source);
    j["reference"] = {{"density", report.reference[0]}, {"energy", report.reference[1]}};
    j["samples"] = ordered_json::array();
    for (const auto& [d, e] : report.samples) j["samples"].push_back({d, e});
    return j.dump(2) + "\n";
  }
  std::string out = "density,energy\n";
  for (const auto& [d, e] : report.samples) out += shortest(d) + ',' + shortest(e) + "\n";
  return out;
}

std::string format_sweep_output(const RunMetadata& meta, const SweepTable& table,
                                OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j = meta_json(meta);
    j["steps"] = table.steps;
    j["thetas"] = table.thetas;
    j["mean_sizes"] = table.mean_sizes;
    return j.dump(2) + "\n";
  }
  std::string out = "T";
  for (double theta : table.thetas) out += ',' + shortest(theta);
  out += '\n';
  for (std::size_t i = 0; i < table.steps.size(); ++i) {
    out += std::to_string(table.steps[i]);
    for (double mean : table.mean_sizes[i]) out += ',' + shortest(mean);
    out += '\n';
  }
  return out;
}

}  // namespace edqc
