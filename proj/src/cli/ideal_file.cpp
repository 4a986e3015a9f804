#include "bil/cli/ideal_file.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "bil/error.hpp"
#include "bil/modgb/ops.hpp"
#include "bil/ring/parse.hpp"

namespace bil::cli {

namespace {

std::string strip_comment(const std::string& line) {
  auto k = line.find('#');
  std::string s = k == std::string::npos ? line : line.substr(0, k);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t number(const std::string& v, int line, const std::string& key) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) syntax(line, "bad value for " + key);
  if (v.size() > 10) syntax(line, "value for " + key + " out of range");
  return std::stoll(v);
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  if (EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr) != 1)
    throw Error(Errc::InvalidArgument, "sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < n; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

IdealFile parse_ideal_file(const std::string& text, const std::string& name) {
  IdealFile f;
  f.name = name;
  f.sha256 = sha256_hex(text);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  std::vector<std::pair<int, std::string>> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (!header) {
      std::istringstream hs(line);
      std::string word;
      hs >> word;
      if (word != "ring") syntax(lineno, "expected a 'ring' header");
      std::string rest;
      std::getline(hs, rest);
      bool have_p = false, have_vars = false;
      std::istringstream ts(rest);
      std::string tok;
      while (ts >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) syntax(lineno, "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "rel") {
          std::string tail;
          std::getline(ts, tail);
          val += tail;
          if (strip_comment(val).empty()) syntax(lineno, "empty relation");
          f.relation = strip_comment(val);
          break;
        }
        if (key == "p") {
          f.p = static_cast<std::uint32_t>(number(val, lineno, key));
          have_p = true;
        } else if (key == "vars") {
          f.vars = static_cast<int>(number(val, lineno, key));
          have_vars = true;
        } else if (key == "v") {
          f.version = static_cast<int>(number(val, lineno, key));
          if (f.version != 1) syntax(lineno, "unsupported format version " + val);
        } else {
          syntax(lineno, "unknown header key '" + key + "'");
        }
      }
      if (!have_p || !have_vars) syntax(lineno, "header needs p= and vars=");
      if (f.vars < 1 || f.vars > 8) syntax(lineno, "vars must be between 1 and 8");
      try {
        if (f.relation) {
          auto T = ring::RingContext::polynomial(f.p, f.vars);
          f.ring = modgb::make_hypersurface(f.p, f.vars, ring::parse_polynomial(*f.relation, *T, true));
        } else {
          f.ring = ring::RingContext::polynomial(f.p, f.vars);
        }
      } catch (const Error& e) {
        if (e.code() == Errc::InvalidArgument) syntax(lineno, e.what());
        throw;
      }
      header = true;
      continue;
    }
    gens.push_back({lineno, line});
  }
  if (!header) syntax(lineno, "missing 'ring' header");
  for (const auto& [ln, g] : gens) {
    try {
      auto poly = ring::parse_polynomial(g, *f.ring, true);
      f.generators.push_back(f.ring->normalize(poly));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(ln) + ": " + e.what());
    }
  }
  f.ideal = modgb::Ideal::ideal(f.ring, f.generators);
  return f;
}

IdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str(), path);
}

}  // namespace bil::cli
