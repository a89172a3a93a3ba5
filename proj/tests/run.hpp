#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace run {

struct Result {
  int status = -1;
  std::string out;
};

inline std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("tri-tests-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the tri binary with `args` (shell syntax); captures stdout.
inline Result tri(const std::string& args) {
  const auto out = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string("\"") + TRI_BINARY + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  Result r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  return r;
}

}  // namespace run
