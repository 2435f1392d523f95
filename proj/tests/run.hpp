#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace kt {

struct RunResult {
  int status = -1;
  std::string out;
};

// runs through /bin/sh; stderr is discarded unless the command redirects it
inline RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed: " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

inline std::string cli() { return KURANK2_CLI; }

inline RunResult kurank2(const std::string& args) { return run(cli() + " " + args + " 2>/dev/null"); }

}  // namespace kt
