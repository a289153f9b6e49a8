#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unrep/unrep.h"

namespace {

bool read_all(std::istream& in, std::string& out) {
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return !in.bad();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unrepresentations of finite transformation semigroups"};
  std::string command;
  std::string path;
  bool oracle = false;
  bool pretty = false;
  unsigned jobs = 1;
  std::int64_t identity = -1;
  std::size_t cap = 0;
  std::uint64_t seed = 0;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember({"analyze", "unreps", "heap", "centralizer",
                             "pseudounits", "clifford", "check-all"}));
  app.add_option("input", path, "Input JSON file (standard input if omitted)");
  app.add_flag("--oracle", oracle, "Enumerate by brute force over all bijections");
  app.add_flag("--pretty", pretty, "Human-readable output");
  app.add_option("--jobs", jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--identity", identity, "Heap identity index")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cap", cap, "Closure size cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : UNREP_E_INPUT;
  }

  std::string text;
  if (path.empty() || path == "-") {
    read_all(std::cin, text);
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in || !read_all(in, text)) {
      std::cerr << "error: cannot read " << path << "\n";
      return UNREP_E_INPUT;
    }
  }

  unrep_options opts;
  unrep_options_init(&opts);
  opts.oracle = oracle;
  opts.pretty = pretty;
  opts.jobs = jobs;
  opts.identity = identity;
  opts.cap = cap;
  opts.seed = seed;

  auto start = std::chrono::steady_clock::now();
  char* out = nullptr;
  unrep_status st = unrep_run(command.c_str(), text.c_str(), &opts, &out);
  auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);

  if (out) {
    std::fputs(out, stdout);
    unrep_string_free(out);
  }
  if (pretty) {
    std::printf("elapsed_ms: %.3f\n", elapsed.count());
  }
  if (st != UNREP_OK) {
    std::cerr << "error (" << unrep_status_string(st) << "): "
              << unrep_last_error() << "\n";
  }
  return static_cast<int>(st);
}
