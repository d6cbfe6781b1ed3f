// Command-line front end. Talks to the toolkit only through the C API.
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>

#include <CLI11.hpp>

#include "tcbetti/tcbetti.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInterrupted = 130;

static_assert(std::is_same_v<std::sig_atomic_t, int>,
              "cancel flag is shared with the library as an int");
volatile std::sig_atomic_t g_cancel = 0;

extern "C" void on_sigint(int) { g_cancel = 1; }

int exit_for(tcb_status s) {
  switch (s) {
    case TCB_OK:
      return kExitOk;
    case TCB_ERR_INVALID_PARAMS:
    case TCB_ERR_INVALID_ARGUMENT:
    case TCB_ERR_PARSE:
      return kExitInput;
    case TCB_ERR_CANCELLED:
      return kExitInterrupted;
    default:
      return kExitFailure;
  }
}

int report_error(tcb_status s, const std::string& context) {
  std::cerr << "error: " << context << ": " << tcb_status_string(s);
  const char* msg = tcb_last_error();
  if (msg && *msg) std::cerr << ": " << msg;
  int line = 0, column = 0;
  tcb_last_error_location(&line, &column);
  if (s == TCB_ERR_PARSE && line > 0) {
    std::cerr << " (line " << line << ", column " << column << ")";
  }
  std::cerr << '\n';
  return exit_for(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Owns the output stream: stdout or the --out file.
class Output {
 public:
  bool open(const std::string& path) {
    if (path.empty()) {
      file_ = stdout;
      return true;
    }
    file_ = std::fopen(path.c_str(), "wb");
    owned_ = file_ != nullptr;
    return owned_;
  }
  ~Output() {
    if (owned_) std::fclose(file_);
  }
  void write(const char* data, size_t n) {
    std::fwrite(data, 1, n, file_);
    std::fflush(file_);
  }
  void write(const std::string& s) { write(s.data(), s.size()); }

 private:
  std::FILE* file_ = nullptr;
  bool owned_ = false;
};

tcb_format parse_format(const std::string& s) {
  if (s == "json") return TCB_FORMAT_JSON;
  if (s == "csv") return TCB_FORMAT_CSV;
  return TCB_FORMAT_TEXT;
}

// Prints a finished report and turns its verdict into the exit code.
int emit_report(tcb_status s, tcb_report* report, const std::string& context,
                const std::string& out_path) {
  if (s != TCB_OK) return report_error(s, context);
  Output out;
  if (!out.open(out_path)) {
    tcb_report_destroy(report);
    std::cerr << "error: cannot write " << out_path << '\n';
    return kExitInput;
  }
  out.write(tcb_report_text(report));
  int code = tcb_report_exit_code(report) == 0 ? kExitOk : kExitMismatch;
  tcb_report_destroy(report);
  return code;
}

void sink(const char* chunk, size_t length, void* user) {
  static_cast<Output*>(user)->write(chunk, length);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of tangent cones of 4-generated "
               "pseudo-symmetric numerical semigroups"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  bool verify = false, oracle = false, resolutions = false;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "Write output to PATH");
  };

  std::vector<int> alphas;
  auto* betti = app.add_subcommand("betti", "Analyse one alpha tuple");
  betti->add_option("alphas", alphas, "alpha21 alpha1 alpha2 alpha3 alpha4")
      ->expected(5)
      ->required();
  betti->add_flag("--verify", verify, "Same as --oracle --resolutions");
  betti->add_flag("--oracle", oracle, "Compute Betti numbers independently");
  betti->add_flag("--resolutions", resolutions,
                  "Build and audit the explicit resolution");
  add_common(betti);

  std::string expected_path;
  auto* table1 = app.add_subcommand("table1", "Reproduce the reference table");
  table1->add_option("--expected", expected_path,
                     "Fixture replacing the built-in expected rows");
  table1->add_flag("--verify", verify, "Accepted; the table always verifies");
  add_common(table1);

  int max_alpha = 4, jobs = 1;
  auto* scan = app.add_subcommand("scan", "Sweep all tuples up to a bound");
  scan->add_option("--max-alpha", max_alpha, "Largest alpha value")
      ->check(CLI::Range(2, 8));
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  scan->add_flag("--verify", verify, "Same as --oracle --resolutions");
  scan->add_flag("--oracle", oracle, "Compute Betti numbers independently");
  scan->add_flag("--resolutions", resolutions,
                 "Build and audit explicit resolutions");
  add_common(scan);

  std::string chain_path;
  auto* audit = app.add_subcommand("audit", "Audit a matrix-chain file");
  audit->add_option("file", chain_path, "Matrix-chain file")->required();
  add_common(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (verify) oracle = resolutions = true;
  tcb_format fmt = parse_format(format);

  if (*betti) {
    tcb_params p{alphas[0], alphas[1], alphas[2], alphas[3], alphas[4]};
    tcb_instance* inst = nullptr;
    tcb_status s = tcb_instance_create(&p, 0, &inst);
    if (s == TCB_ERR_INVALID_PARAMS &&
        tcb_instance_create(&p, 1, &inst) == TCB_OK) {
      std::cerr << "warning: n1..n4 share a common factor; analysing the "
                   "semigroup generated by n / gcd\n";
    } else if (s != TCB_OK) {
      return report_error(s, "betti");
    }
    tcb_instance_destroy(inst);
    tcb_report* r = nullptr;
    s = tcb_betti_report(&p, oracle, resolutions, fmt, &r);
    return emit_report(s, r, "betti", out_path);
  }

  if (*table1) {
    std::string fixture;
    if (!expected_path.empty() && !read_file(expected_path, fixture)) {
      std::cerr << "error: cannot read " << expected_path << '\n';
      return kExitInput;
    }
    tcb_report* r = nullptr;
    tcb_status s = tcb_table1_report(
        fmt, expected_path.empty() ? nullptr : fixture.c_str(), &r);
    return emit_report(s, r, "table1", out_path);
  }

  if (*audit) {
    std::string text;
    if (!read_file(chain_path, text)) {
      std::cerr << "error: cannot read " << chain_path << '\n';
      return kExitInput;
    }
    tcb_report* r = nullptr;
    tcb_status s = tcb_audit_report(text.c_str(), fmt, &r);
    return emit_report(s, r, chain_path, out_path);
  }

  // scan
  tcb_scan_config config;
  tcb_scan_config_default(&config, max_alpha);
  config.run_oracle = oracle;
  config.run_resolutions = resolutions;
  config.jobs = jobs;
  config.format = fmt;
  Output out;
  if (!out.open(out_path)) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kExitInput;
  }
  std::signal(SIGINT, on_sigint);
  tcb_report* summary = nullptr;
  tcb_status s = tcb_scan_run(&config, sink, &out, &g_cancel, &summary);
  if (summary) {
    std::cerr << tcb_report_text(summary);
    int verdict = tcb_report_exit_code(summary);
    tcb_report_destroy(summary);
    if (s == TCB_OK) return verdict == 0 ? kExitOk : kExitMismatch;
  }
  return report_error(s, "scan");
}
