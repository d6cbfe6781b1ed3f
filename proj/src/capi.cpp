#include "tcbetti/tcbetti.h"

#include <array>
#include <exception>
#include <functional>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "tcbetti/analysis.hpp"
#include "tcbetti/error.hpp"
#include "tcbetti/komeda.hpp"

struct tcb_instance {
  tcb::KomedaParams params;
  tcb::CommonFactor policy = tcb::CommonFactor::Reject;
  std::array<long long, 4> n{};
  tcb::CaseTag tag;
  std::string case_name;
  std::optional<tcb::InstanceReport> basic;
  std::optional<tcb::InstanceReport> with_oracle;
  std::optional<tcb::InstanceReport> with_resolution;
};

struct tcb_report {
  std::string text;
  int exit_code = 0;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;
thread_local int last_column = 0;

tcb_status fail(tcb_status s, std::string message) {
  last_error = std::move(message);
  last_line = 0;
  last_column = 0;
  return s;
}

tcb_status status_for(tcb::ErrorCode code) {
  using tcb::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParams:
      return TCB_ERR_INVALID_PARAMS;
    case ErrorCode::Parse:
      return TCB_ERR_PARSE;
    case ErrorCode::InvalidArgument:
      return TCB_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnsupportedCase:
    case ErrorCode::NoBasisStated:
    case ErrorCode::NoGStarStated:
      return TCB_ERR_UNSUPPORTED;
    default:
      return TCB_ERR_COMPUTATION;
  }
}

// Runs `body` and converts any exception into a status plus message.
template <class F>
tcb_status guarded(F&& body) {
  try {
    last_error.clear();
    last_line = 0;
    last_column = 0;
    return body();
  } catch (const tcb::ParseError& e) {
    tcb_status s = fail(TCB_ERR_PARSE, e.what());
    last_line = e.line();
    last_column = e.column();
    return s;
  } catch (const tcb::Error& e) {
    return fail(status_for(e.code()),
                std::string(tcb::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(TCB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TCB_ERR_INTERNAL, e.what());
  }
}

tcb::KomedaParams to_params(const tcb_params& p) {
  return {p.alpha21, p.alpha1, p.alpha2, p.alpha3, p.alpha4};
}

std::optional<tcb::OutputFormat> to_format(tcb_format f) {
  switch (f) {
    case TCB_FORMAT_TEXT:
      return tcb::OutputFormat::Text;
    case TCB_FORMAT_JSON:
      return tcb::OutputFormat::Json;
    case TCB_FORMAT_CSV:
      return tcb::OutputFormat::Csv;
  }
  return std::nullopt;
}

void copy_betti(const tcb::BettiSequence& b, long long out[4]) {
  for (int i = 0; i < 4; ++i) out[i] = b.beta[static_cast<std::size_t>(i)];
}

const tcb::InstanceReport& report_for(tcb_instance* inst, bool oracle,
                                      bool resolutions) {
  auto& slot = oracle ? inst->with_oracle
               : resolutions ? inst->with_resolution
                             : inst->basic;
  if (!slot) {
    tcb::InstanceOptions o;
    o.oracle = oracle;
    o.resolutions = resolutions;
    o.homogeneity = false;
    o.common_factor = inst->policy;
    slot = tcb::analyze_instance(inst->params, o);
  }
  return *slot;
}

tcb_status new_report(std::string text, int exit_code, tcb_report** out) {
  *out = new tcb_report{std::move(text), exit_code};
  return TCB_OK;
}

}  // namespace

extern "C" {

const char* tcb_status_string(tcb_status status) {
  switch (status) {
    case TCB_OK:
      return "ok";
    case TCB_ERR_INVALID_PARAMS:
      return "invalid parameters";
    case TCB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TCB_ERR_PARSE:
      return "parse error";
    case TCB_ERR_UNSUPPORTED:
      return "unsupported";
    case TCB_ERR_COMPUTATION:
      return "computation error";
    case TCB_ERR_CANCELLED:
      return "cancelled";
    case TCB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* tcb_last_error(void) { return last_error.c_str(); }

void tcb_last_error_location(int* line, int* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

tcb_status tcb_instance_create(const tcb_params* params,
                               int allow_common_factor, tcb_instance** out) {
  if (!params || !out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto inst = std::make_unique<tcb_instance>();
    inst->params = to_params(*params);
    inst->policy = allow_common_factor ? tcb::CommonFactor::Divide
                                       : tcb::CommonFactor::Reject;
    tcb::validate_params(inst->params, inst->policy);
    inst->n = tcb::semigroup_generators(inst->params);
    inst->tag = tcb::classify_case(inst->params);
    inst->case_name = inst->tag.name();
    *out = inst.release();
    return TCB_OK;
  });
}

void tcb_instance_destroy(tcb_instance* inst) { delete inst; }

tcb_status tcb_instance_generators(const tcb_instance* inst,
                                   long long out[4]) {
  if (!inst || !out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  for (int i = 0; i < 4; ++i) out[i] = inst->n[static_cast<std::size_t>(i)];
  return TCB_OK;
}

tcb_status tcb_instance_case(const tcb_instance* inst,
                             int* multiplicity_index, const char** name) {
  if (!inst) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  if (multiplicity_index) *multiplicity_index = inst->tag.multiplicity_index;
  if (name) *name = inst->case_name.c_str();
  return TCB_OK;
}

tcb_status tcb_instance_formula_betti(const tcb_instance* inst,
                                      long long out[4]) {
  if (!inst || !out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    copy_betti(tcb::betti_formula(inst->tag), out);
    return TCB_OK;
  });
}

tcb_status tcb_instance_cm(tcb_instance* inst, int* is_cm) {
  if (!inst || !is_cm) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *is_cm = report_for(inst, false, false).cm ? 1 : 0;
    return TCB_OK;
  });
}

tcb_status tcb_instance_oracle_betti(tcb_instance* inst, long long out[4]) {
  if (!inst || !out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& r = report_for(inst, true, false);
    if (!r.oracle) {
      return fail(TCB_ERR_UNSUPPORTED,
                  "tangent cone is not Cohen-Macaulay; no oracle value");
    }
    copy_betti(*r.oracle, out);
    return TCB_OK;
  });
}

tcb_status tcb_instance_resolution_betti(tcb_instance* inst,
                                         long long out[4]) {
  if (!inst || !out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& r = report_for(inst, false, true);
    if (!r.resolution_betti) {
      std::string why = r.resolution_verdict.empty()
                            ? "no resolution for case " + inst->case_name
                            : "resolution verdict: " + r.resolution_verdict;
      return fail(r.resolution_verdict.empty() ? TCB_ERR_UNSUPPORTED
                                               : TCB_ERR_COMPUTATION,
                  why);
    }
    copy_betti(*r.resolution_betti, out);
    return TCB_OK;
  });
}

const char* tcb_report_text(const tcb_report* report) {
  return report ? report->text.c_str() : "";
}

int tcb_report_exit_code(const tcb_report* report) {
  return report ? report->exit_code : 0;
}

void tcb_report_destroy(tcb_report* report) { delete report; }

tcb_status tcb_betti_report(const tcb_params* params, int oracle,
                            int resolutions, tcb_format format,
                            tcb_report** out) {
  if (!params || !out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  auto f = to_format(format);
  if (!f) return fail(TCB_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    tcb::InstanceOptions o;
    o.oracle = oracle != 0;
    o.resolutions = resolutions != 0;
    o.common_factor = tcb::CommonFactor::Divide;
    auto r = tcb::analyze_instance(to_params(*params), o);
    return new_report(tcb::format_instance(r, *f),
                      r.mismatches.empty() ? 0 : 3, out);
  });
}

tcb_status tcb_table1_report(tcb_format format, const char* expected_override,
                             tcb_report** out) {
  if (!out) return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  auto f = to_format(format);
  if (!f) return fail(TCB_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    auto rows = expected_override
                    ? tcb::parse_table1_fixture(expected_override)
                    : tcb::table1_expected();
    auto t = tcb::run_table1(rows);
    return new_report(tcb::format_table1(t, *f), t.all_match() ? 0 : 3, out);
  });
}

tcb_status tcb_audit_report(const char* chain_text, tcb_format format,
                            tcb_report** out) {
  if (!chain_text || !out) {
    return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  auto f = to_format(format);
  if (!f) return fail(TCB_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    auto a = tcb::audit_chain_text(chain_text);
    bool ok = a.audit.complex.is_complex && a.audit.be.verdict == "exact";
    return new_report(tcb::format_audit(a, *f), ok ? 0 : 3, out);
  });
}

void tcb_scan_config_default(tcb_scan_config* config, int max_alpha) {
  if (!config) return;
  *config = tcb_scan_config{};
  config->lo[0] = 1;
  config->hi[0] = max_alpha;
  for (int i = 1; i < 5; ++i) {
    config->lo[i] = 2;
    config->hi[i] = max_alpha;
  }
  config->run_homogeneity = 1;
  config->jobs = 1;
  config->format = TCB_FORMAT_CSV;
}

tcb_status tcb_scan_run(const tcb_scan_config* config, tcb_chunk_callback sink,
                        void* user, const volatile int* cancel,
                        tcb_report** summary) {
  if (!config || !sink || !summary) {
    return fail(TCB_ERR_INVALID_ARGUMENT, "null argument");
  }
  *summary = nullptr;
  auto f = to_format(config->format);
  if (!f) return fail(TCB_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    tcb::ScanConfig c;
    for (std::size_t i = 0; i < 5; ++i) {
      c.ranges[i] = {config->lo[i], config->hi[i]};
    }
    c.run_oracle = config->run_oracle != 0;
    c.run_resolutions = config->run_resolutions != 0;
    c.run_homogeneity = config->run_homogeneity != 0;
    c.jobs = config->jobs;
    c.safety_cap = config->safety_cap == 0 ? 8 : config->safety_cap;
    tcb::validate_scan_config(c);

    auto put = [&](const std::string& s) { sink(s.data(), s.size(), user); };
    bool first = true;
    if (*f == tcb::OutputFormat::Csv) put(std::string(tcb::csv_header()) + "\n");
    if (*f == tcb::OutputFormat::Json) put("[");
    auto emit = [&](const tcb::InstanceReport& r) {
      switch (*f) {
        case tcb::OutputFormat::Csv:
          put(tcb::csv_row(r) + "\n");
          break;
        case tcb::OutputFormat::Json:
          put((first ? "\n  " : ",\n  ") + tcb::json_row(r));
          break;
        case tcb::OutputFormat::Text:
          put(tcb::text_row(r) + "\n");
          break;
      }
      first = false;
    };
    std::function<bool()> cancelled;
    if (cancel) cancelled = [cancel] { return *cancel != 0; };
    auto s = tcb::run_scan(c, emit, cancelled);
    if (*f == tcb::OutputFormat::Json) put(first ? "]\n" : "\n]\n");

    std::string text = tcb::format_summary(s, *f);
    if (!text.empty() && text.back() != '\n') text += '\n';
    new_report(std::move(text), s.clean() ? 0 : 3, summary);
    if (s.interrupted) return fail(TCB_ERR_CANCELLED, "scan interrupted");
    return TCB_OK;
  });
}

}  // extern "C"
