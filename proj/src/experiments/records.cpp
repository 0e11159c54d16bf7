#include "thetaspline/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "thetaspline/error.hpp"

namespace thetaspline {

const char* const kCsvHeader =
    "experiment_id,N,point,scaled_log,scaled_sign,limit,abs_err,rel_err,precision_bits,wall_ms";

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no inf/nan; they travel as strings
nlohmann::json jnum(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

double from_jnum(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

ConvergenceRecord make_record(std::string id, int N, double point, LogValue scaled, double limit, int precision_bits,
                              long wall_ms) {
  ConvergenceRecord r{std::move(id), N, point, scaled, limit, 0.0, 0.0, precision_bits, wall_ms};
  if (limit != 0.0 && scaled.sign != 0 && scaled.sign == (limit > 0 ? 1 : -1)) {
    r.rel_err = std::fabs(std::expm1(scaled.log_mag - std::log(std::fabs(limit))));
    r.abs_err = r.rel_err * std::fabs(limit);
  } else {
    r.abs_err = std::fabs(scaled.to_double() - limit);
    r.rel_err = r.abs_err / std::max(std::fabs(limit), 1e-300);
  }
  return r;
}

void sort_records(std::vector<ConvergenceRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.experiment_id, a.point, a.N) < std::tie(b.experiment_id, b.point, b.N);
  });
}

std::string to_csv(const std::vector<ConvergenceRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    double log_field = r.scaled.sign == 0 ? 0.0 : r.scaled.log_mag;
    out << r.experiment_id << ',' << r.N << ',' << num(r.point) << ',' << num(log_field) << ',' << r.scaled.sign
        << ',' << num(r.limit) << ',' << num(r.abs_err) << ',' << num(r.rel_err) << ',' << r.precision_bits << ','
        << r.wall_ms << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<ConvergenceRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["experiment_id"] = r.experiment_id;
    o["N"] = r.N;
    o["point"] = jnum(r.point);
    o["scaled_log"] = jnum(r.scaled.sign == 0 ? 0.0 : r.scaled.log_mag);
    o["scaled_sign"] = r.scaled.sign;
    o["limit"] = jnum(r.limit);
    o["abs_err"] = jnum(r.abs_err);
    o["rel_err"] = jnum(r.rel_err);
    o["precision_bits"] = r.precision_bits;
    o["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<ConvergenceRecord> records_from_json(const std::string& text) {
  std::vector<ConvergenceRecord> out;
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad records JSON: ") + e.what());
  }
  for (const auto& o : arr) {
    ConvergenceRecord r;
    r.experiment_id = o.at("experiment_id").get<std::string>();
    r.N = o.at("N").get<int>();
    r.point = from_jnum(o.at("point"));
    r.scaled.sign = o.at("scaled_sign").get<int>();
    r.scaled.log_mag = from_jnum(o.at("scaled_log"));
    r.limit = from_jnum(o.at("limit"));
    r.abs_err = from_jnum(o.at("abs_err"));
    r.rel_err = from_jnum(o.at("rel_err"));
    r.precision_bits = o.at("precision_bits").get<int>();
    r.wall_ms = o.at("wall_ms").get<long>();
    out.push_back(std::move(r));
  }
  return out;
}

void write_records(std::ostream& out, const std::vector<ConvergenceRecord>& records, OutputFormat format) {
  out << (format == OutputFormat::csv ? to_csv(records) : to_json(records));
}

void emit(const std::vector<ConvergenceRecord>& records, const std::string& path, OutputFormat format) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_records(file, records, format);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace thetaspline
