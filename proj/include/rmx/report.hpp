#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmx {

// One line of a residual report. The JSON schema is shared by every suite in
// the project: {family, identity, samples, max_residual, seed, tol, pass}.
struct ResidualEntry {
  std::string family;
  std::string identity;
  int samples = 0;
  double max_residual = 0.0;
  std::uint64_t seed = 0;
  double tol = 0.0;

  bool pass() const { return max_residual < tol; }
};

struct Report {
  std::vector<ResidualEntry> entries;

  void add(ResidualEntry e) { entries.push_back(std::move(e)); }
  void merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
  bool all_pass() const;
  double worst() const;
  std::string to_json() const;  // deterministic: fixed key order, shortest round-trip doubles
};

// Writes via a temp file + rename so concurrent readers never see a torn file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace rmx
