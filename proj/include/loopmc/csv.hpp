#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loopmc {

// Canonical rendering of every real number that leaves the program: %.12g.
std::string format_g12(double v);

// One line of the result table.  lambda and S stay empty when the parameter
// point has no quantum counterpart (Q = 1).
struct ResultRecord {
  std::string run_id;
  int L = 0;
  double beta = 0;
  double Q = 0;
  std::optional<double> lambda;
  std::optional<double> S;
  std::string bc;
  std::string observable;
  std::string args;
  double mean = 0;
  double stderr_mean = 0;  // "stderr" itself is a stdio macro
  double n_eff = 0;
  double tau_int = 0;
  std::uint64_t seed = 0;
  std::string code_version;

  // The fields identifying a parameter point + estimator, used to join
  // sampler output against oracle output.
  std::string key() const;
};

extern const char* const kCsvHeader;

std::string csv_line(const ResultRecord& r);

// Writes header + rows to a temp file in the same directory, then renames it
// over the target, so readers never observe a half-written file.
void write_csv(const std::string& path, const std::vector<ResultRecord>& rows);
void write_text_atomic(const std::string& path, const std::string& content);

std::vector<ResultRecord> read_csv(const std::string& path);

}  // namespace loopmc
