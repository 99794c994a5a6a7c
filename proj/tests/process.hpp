#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;  // stdout only
};

/// Runs a shell command, capturing stdout; stderr is discarded.
inline CommandResult run_command(const std::string& command) {
  CommandResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string cli() { return std::string("'") + RICHNESS_CLI + "'"; }
inline std::string data(const std::string& name) {
  return std::string("'") + RICHNESS_DATA_DIR + "/" + name + "'";
}

}  // namespace testing
