#pragma once

#include <cstdint>
#include <string>

#include "edqc/ablation.hpp"
#include "edqc/analysis.hpp"
#include "edqc/driver.hpp"

namespace edqc {

enum class OutputFormat { Json, Csv };

OutputFormat output_format_from_name(const std::string& name);  // "json" | "csv"

// Common run parameters echoed into every record.
struct RunMetadata {
  std::string command;
  std::string input;  // dataset path or generator spec
  std::string gamma;
  unsigned steps = 3;
  double theta = 0.001;
  double timeout_seconds = 60.0;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::size_t runs = 1;
};

// All records serialize losslessly to JSON and CSV with a fixed field order;
// vertex lists are reported as original input labels, ascending.
std::string format_find_output(const RunMetadata& meta, const Graph& g, const RunSummary& summary,
                               OutputFormat format);
std::string format_oracle_output(const RunMetadata& meta, const Graph& g,
                                 const std::vector<VertexId>& vertices, OutputFormat format);
std::string format_stats_output(const RunMetadata& meta, const Graph& g, OutputFormat format);
std::string format_ablate_output(const RunMetadata& meta,
                                 const std::vector<std::pair<Variant, RunSummary>>& results,
                                 OutputFormat format);
std::string format_correlate_output(const RunMetadata& meta, const Graph& g,
                                    const CorrelationReport& report, OutputFormat format);
std::string format_sweep_output(const RunMetadata& meta, const SweepTable& table,
                                OutputFormat format);

}  // namespace edqc
