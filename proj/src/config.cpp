#include "exppell/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "exppell/error.hpp"

namespace exppell {

void Config::validate() const {
  if (degree <= 0 || height <= 0 || samples <= 0 || pell_index_cap <= 0 ||
      budget <= 0)
    throw Error(ErrorCode::DomainError, "config values must be positive");
  if (!(tolerance > 0 && tolerance <= 1e-3))
    throw Error(ErrorCode::DomainError, "tolerance must be in (0, 1e-3]");
}

namespace {

void set_key(Config* c, const std::string& key, const std::string& value) {
  try {
    if (key == "degree")
      c->degree = std::stoi(value);
    else if (key == "height")
      c->height = std::stoi(value);
    else if (key == "samples")
      c->samples = std::stoi(value);
    else if (key == "tolerance" || key == "tol")
      c->tolerance = std::stod(value);
    else if (key == "pell_index_cap")
      c->pell_index_cap = std::stol(value);
    else if (key == "budget")
      c->budget = std::stoll(value);
    else
      throw Error(ErrorCode::DomainError, "unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::DomainError,
                "bad value for config key " + key + ": " + value);
  }
}

}  // namespace

Config load_config_file(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::DomainError, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::DomainError,
                  "config line " + std::to_string(lineno) +
                      " is not key=value");
    set_key(&base, trimmed.substr(0, eq), trimmed.substr(eq + 1));
  }
  return base;
}

Config apply_env(Config base) {
  auto get = [](const char* name) -> const char* {
    return std::getenv(name);
  };
  if (const char* v = get("EXPPELL_DEGREE")) set_key(&base, "degree", v);
  if (const char* v = get("EXPPELL_HEIGHT")) set_key(&base, "height", v);
  if (const char* v = get("EXPPELL_SAMPLES")) set_key(&base, "samples", v);
  if (const char* v = get("EXPPELL_TOL")) set_key(&base, "tolerance", v);
  if (const char* v = get("EXPPELL_PELL_INDEX_CAP"))
    set_key(&base, "pell_index_cap", v);
  if (const char* v = get("EXPPELL_BUDGET")) set_key(&base, "budget", v);
  return base;
}

}  // namespace exppell
