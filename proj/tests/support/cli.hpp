#pragma once

// Runs the zykov binary through the shell and reads golden files.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char ch : arg) {
    if (ch == '\'') q += "'\\''";
    else q += ch;
  }
  return q + "'";
}

/// stdout of `zykov args...` (stderr discarded) and its exit status. `input` is piped to stdin.
inline Result run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::string cmd = quote(ZYKOV_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  if (!input.empty()) cmd = "printf '%s' " + quote(input) + " | " + cmd;
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Result r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct GoldenCase {
  std::vector<std::string> args;  // arguments after the binary name
  std::string expected;           // exact stdout
};

/// Golden file format: a line "$ <subcommand> [flags] -- <expression>" or "$ <subcommand> <args>"
/// starts a case; the lines up to the next "$ " line (or end of file) are the expected stdout.
/// Arguments before " -- " are split on spaces; everything after it is one argument.
inline std::vector<GoldenCase> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("$ ", 0) == 0) {
      GoldenCase c;
      std::string head = line.substr(2), tail;
      const auto sep = head.find(" -- ");
      if (sep != std::string::npos) {
        tail = head.substr(sep + 4);
        head = head.substr(0, sep);
      }
      std::size_t pos = 0;
      while (pos < head.size()) {
        auto next = head.find(' ', pos);
        if (next == std::string::npos) next = head.size();
        if (next > pos) c.args.push_back(head.substr(pos, next - pos));
        pos = next + 1;
      }
      if (sep != std::string::npos) {
        c.args.push_back("--");
        c.args.push_back(tail);
      }
      cases.push_back(std::move(c));
    } else if (!cases.empty()) {
      cases.back().expected += line + "\n";
    }
  }
  return cases;
}

}  // namespace cli
