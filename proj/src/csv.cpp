#include "loopmc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "loopmc/errors.hpp"

namespace loopmc {

const char* const kCsvHeader =
    "run_id,L,beta,Q,lambda,S,bc,observable,args,mean,stderr,n_eff,tau_int,"
    "seed,code_version";

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string opt_g12(const std::optional<double>& v) {
  return v ? format_g12(*v) : std::string();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw IoError("bad numeric field '" + s + "' for " + what);
  }
}

}  // namespace

std::string ResultRecord::key() const {
  std::ostringstream os;
  os << L << ',' << format_g12(beta) << ',' << format_g12(Q) << ','
     << opt_g12(lambda) << ',' << opt_g12(S) << ',' << bc << ',' << observable
     << ',' << args;
  return os.str();
}

std::string csv_line(const ResultRecord& r) {
  std::ostringstream os;
  os << r.run_id << ',' << r.L << ',' << format_g12(r.beta) << ','
     << format_g12(r.Q) << ',' << opt_g12(r.lambda) << ',' << opt_g12(r.S)
     << ',' << r.bc << ',' << r.observable << ',' << r.args << ','
     << format_g12(r.mean) << ',' << format_g12(r.stderr_mean) << ','
     << format_g12(r.n_eff) << ',' << format_g12(r.tau_int) << ',' << r.seed
     << ',' << r.code_version;
  return os.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp + "' for writing");
    os << content;
    os.flush();
    if (!os) throw IoError("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

void write_csv(const std::string& path,
               const std::vector<ResultRecord>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_line(r) << '\n';
  write_text_atomic(path, os.str());
}

std::vector<ResultRecord> read_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(is, line)) throw IoError("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw IoError("'" + path + "' does not start with the expected header");
  std::vector<ResultRecord> rows;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 15)
      throw IoError("'" + path + "' row has " + std::to_string(f.size()) +
                    " fields, expected 15");
    ResultRecord r;
    r.run_id = f[0];
    r.L = static_cast<int>(to_double(f[1], "L"));
    r.beta = to_double(f[2], "beta");
    r.Q = to_double(f[3], "Q");
    if (!f[4].empty()) r.lambda = to_double(f[4], "lambda");
    if (!f[5].empty()) r.S = to_double(f[5], "S");
    r.bc = f[6];
    r.observable = f[7];
    r.args = f[8];
    r.mean = to_double(f[9], "mean");
    r.stderr_mean = to_double(f[10], "stderr");
    r.n_eff = to_double(f[11], "n_eff");
    r.tau_int = to_double(f[12], "tau_int");
    try {
      r.seed = std::stoull(f[13]);
    } catch (const std::exception&) {
      throw IoError("bad seed field '" + f[13] + "'");
    }
    r.code_version = f[14];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace loopmc
