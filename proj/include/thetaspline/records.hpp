#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thetaspline/xreal.hpp"

namespace thetaspline {

/// One row of a convergence table.
struct ConvergenceRecord {
  std::string experiment_id;
  int N = 0;
  double point = 0.0;  // t or s
  LogValue scaled;
  double limit = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  int precision_bits = 0;
  long wall_ms = 0;

  double scaled_value() const { return scaled.to_double(); }
};

/// Fills abs_err and rel_err. When signs agree the relative error is taken
/// from the log ratio, so huge scaled values never pass through a double.
ConvergenceRecord make_record(std::string id, int N, double point, LogValue scaled, double limit,
                              int precision_bits = 53, long wall_ms = 0);

/// Orders by (experiment_id, point, N).
void sort_records(std::vector<ConvergenceRecord>& records);

enum class OutputFormat { csv, json };

extern const char* const kCsvHeader;

std::string to_csv(const std::vector<ConvergenceRecord>& records);
std::string to_json(const std::vector<ConvergenceRecord>& records);
std::vector<ConvergenceRecord> records_from_json(const std::string& text);

void write_records(std::ostream& out, const std::vector<ConvergenceRecord>& records, OutputFormat format);
/// Writes to `path`; IoError when the file cannot be written.
void emit(const std::vector<ConvergenceRecord>& records, const std::string& path, OutputFormat format);

}  // namespace thetaspline
