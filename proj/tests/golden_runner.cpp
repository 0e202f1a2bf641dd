// Runs the dani binary on every golden/*.args file (one argument per line)
// and compares stdout byte for byte with the matching .out file, twice.
#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string quote(const std::string& a) {
  std::string q = "'";
  for (char c : a) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string run(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: golden_runner DANI GOLDEN_DIR\n";
    return 2;
  }
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(argv[2])) {
    if (e.path().extension() == ".args") cases.push_back(e.path());
  }
  std::sort(cases.begin(), cases.end());
  int failures = 0;
  for (const auto& c : cases) {
    std::string cmd = quote(argv[1]);
    std::istringstream args(slurp(c));
    for (std::string a; std::getline(args, a);) {
      if (!a.empty()) cmd += " " + quote(a);
    }
    fs::path expected_path = c;
    expected_path.replace_extension(".out");
    const std::string expected = slurp(expected_path);
    bool ok = true;
    for (int pass = 0; pass < 2; ++pass) {
      int status = 0;
      const std::string got = run("env -u DANI_SEED " + cmd, status);
      ok = ok && status == 0 && got == expected;
    }
    std::cout << c.stem().string() << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) ++failures;
  }
  if (cases.size() < 3) {
    std::cout << "expected at least 3 golden cases, found " << cases.size() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
