#ifndef ALOOPS_IO_HPP
#define ALOOPS_IO_HPP

// ALOOP v1 Cayley-table text format:
//   line 1: "ALOOP v1"
//   line 2: "n=<order>"
//   then n lines of n space-separated 0-based entries.
// Lines starting with '#' are ignored. Element 0 must be neutral; files with
// the neutral elsewhere are accepted and relabeled on import, so writing a
// just-imported normalized table round-trips bit-exactly.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aloops/loop.hpp"

namespace aloops {

inline std::string write_aloop(const LoopTable& L) {
  std::ostringstream os;
  os << "ALOOP v1\n";
  os << "n=" << L.order() << "\n";
  for (int i = 0; i < L.order(); ++i) {
    for (int j = 0; j < L.order(); ++j) {
      if (j) os << ' ';
      os << L.mul(static_cast<Elem>(i), static_cast<Elem>(j));
    }
    os << '\n';
  }
  return os.str();
}

inline LoopTable read_aloop(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') continue;
    lines.push_back(raw);
  }
  if (lines.size() < 2) throw Error(Errc::ParseError, "truncated ALOOP file");
  if (lines[0] != "ALOOP v1") throw Error(Errc::ParseError, "missing 'ALOOP v1' header");
  int n = 0;
  if (lines[1].rfind("n=", 0) != 0) throw Error(Errc::ParseError, "expected 'n=<order>' on line 2");
  try {
    n = std::stoi(lines[1].substr(2));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad order in 'n=' line");
  }
  if (n <= 0) throw Error(Errc::ParseError, "order must be positive");
  if (lines.size() != static_cast<size_t>(n) + 2)
    throw Error(Errc::ParseError, "expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 2));

  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    std::istringstream ls(lines[i + 2]);
    for (int j = 0; j < n; ++j) {
      if (!(ls >> rows[i][j]))
        throw Error(Errc::ParseError, "row " + std::to_string(i) + ": expected " + std::to_string(n) + " entries");
    }
    int extra;
    if (ls >> extra) throw Error(Errc::ParseError, "row " + std::to_string(i) + ": too many entries");
  }
  try {
    return LoopTable::from_rows(n, rows);
  } catch (const Error& e) {
    if (e.code() == Errc::NotLatin || e.code() == Errc::OutOfRange)
      throw Error(Errc::ParseError, std::string("invalid Cayley table: ") + e.what());
    throw;
  }
}

inline LoopTable read_aloop_string(const std::string& text) {
  std::istringstream is(text);
  return read_aloop(is);
}

inline LoopTable read_aloop_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot open " + path);
  return read_aloop(f);
}

inline void write_aloop_file(const LoopTable& L, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
  f << write_aloop(L);
}

}  // namespace aloops

#endif  // ALOOPS_IO_HPP
