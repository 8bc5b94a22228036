#pragma once

// Replays CLI golden cases. A case file holds
//
//   args: <arguments passed to gk, shell syntax, run inside the golden dir;
//          {gk} expands to the binary for pipelines>
//   exit: <expected exit status>
//   stderr-contains: <substring>     (optional, repeatable)
//   stdout:
//   <expected stdout, byte for byte, up to end of file>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string name;
  std::string args;
  int exit_code = 0;
  std::vector<std::string> stderr_contains;
  std::string stdout_text;
};

struct Result {
  std::string name;
  bool ok = true;
  std::string detail;
};

inline Case load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  Case c;
  c.name = file.stem().string();
  std::string line;
  while (std::getline(in, line)) {
    if (line == "stdout:") {
      std::ostringstream rest;
      rest << in.rdbuf();
      c.stdout_text = rest.str();
      break;
    }
    if (line.rfind("args: ", 0) == 0) c.args = line.substr(6);
    else if (line.rfind("exit: ", 0) == 0) c.exit_code = std::stoi(line.substr(6));
    else if (line.rfind("stderr-contains: ", 0) == 0) c.stderr_contains.push_back(line.substr(17));
  }
  return c;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Result run(const std::string& gk, const std::filesystem::path& dir, const Case& c) {
  Result r{c.name, true, {}};
  auto err_file = std::filesystem::temp_directory_path() / ("gk_golden_" + c.name + ".err");
  std::string args = c.args;
  const std::string quoted = "'" + std::filesystem::absolute(gk).string() + "'";
  for (auto pos = args.find("{gk}"); pos != std::string::npos; pos = args.find("{gk}", pos + quoted.size()))
    args.replace(pos, 4, quoted);
  std::string cmd = "cd '" + std::filesystem::absolute(dir).string() + "' && (" + quoted + " " + args + ") 2>'" + err_file.string() + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {c.name, false, "popen failed"};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::string err = slurp(err_file);
  std::filesystem::remove(err_file);
  if (code != c.exit_code) {
    r.ok = false;
    r.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code) + "; stderr: " + err;
  } else if (out != c.stdout_text) {
    r.ok = false;
    r.detail = "stdout mismatch:\n--- got\n" + out + "--- expected\n" + c.stdout_text;
  } else {
    for (const auto& s : c.stderr_contains)
      if (err.find(s) == std::string::npos) {
        r.ok = false;
        r.detail = "stderr lacks '" + s + "': " + err;
      }
  }
  return r;
}

inline std::vector<Result> run_all(const std::string& gk, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir / "cases"))
    if (e.path().extension() == ".case") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Result> out;
  for (const auto& f : files) out.push_back(run(gk, dir, load(f)));
  return out;
}

}  // namespace golden
