#include "rmx/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace rmx {

bool Report::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass()) return false;
  return true;
}

double Report::worst() const {
  double w = 0.0;
  for (const auto& e : entries) w = std::max(w, e.max_residual);
  return w;
}

std::string Report::to_json() const {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["family"] = e.family;
    j["identity"] = e.identity;
    j["samples"] = e.samples;
    j["max_residual"] = e.max_residual;
    j["seed"] = e.seed;
    j["tol"] = e.tol;
    j["pass"] = e.pass();
    root.push_back(std::move(j));
  }
  return root.dump(2);
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " -> " + path);
}

}  // namespace rmx
