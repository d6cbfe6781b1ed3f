#include <doctest.h>

#include <cstring>
#include <string>

#include "tcbetti/tcbetti.h"

namespace {

struct Sink {
  std::string text;
  int chunks = 0;
  volatile int* cancel_after_first = nullptr;
};

void collect(const char* chunk, size_t length, void* user) {
  auto* s = static_cast<Sink*>(user);
  s->text.append(chunk, length);
  if (++s->chunks == 2 && s->cancel_after_first) *s->cancel_after_first = 1;
}

}  // namespace

TEST_CASE("instance handle lifecycle") {
  tcb_params p{2, 4, 4, 2, 5};
  tcb_instance* inst = nullptr;
  REQUIRE(tcb_instance_create(&p, 0, &inst) == TCB_OK);
  long long n[4];
  CHECK(tcb_instance_generators(inst, n) == TCB_OK);
  CHECK(n[0] == 33);
  CHECK(n[3] == 26);
  int mult = 0;
  const char* name = nullptr;
  CHECK(tcb_instance_case(inst, &mult, &name) == TCB_OK);
  CHECK(mult == 2);
  CHECK(std::string(name) == "N2_LT");
  long long b[4];
  CHECK(tcb_instance_formula_betti(inst, b) == TCB_OK);
  CHECK(b[2] == 7);
  int cm = 0;
  CHECK(tcb_instance_cm(inst, &cm) == TCB_OK);
  CHECK(cm == 1);
  long long o[4];
  CHECK(tcb_instance_oracle_betti(inst, o) == TCB_OK);
  CHECK(std::memcmp(o, b, sizeof b) == 0);
  long long r[4];
  CHECK(tcb_instance_resolution_betti(inst, r) == TCB_OK);
  CHECK(std::memcmp(r, b, sizeof b) == 0);
  tcb_instance_destroy(inst);
}

TEST_CASE("errors set status and message") {
  tcb_params bad{0, 3, 2, 2, 2};
  tcb_instance* inst = nullptr;
  CHECK(tcb_instance_create(&bad, 0, &inst) == TCB_ERR_INVALID_PARAMS);
  CHECK(inst == nullptr);
  CHECK(std::strlen(tcb_last_error()) > 0);
  CHECK(tcb_instance_create(nullptr, 0, &inst) == TCB_ERR_INVALID_ARGUMENT);

  tcb_params shared{2, 5, 4, 2, 4};
  CHECK(tcb_instance_create(&shared, 0, &inst) == TCB_ERR_INVALID_PARAMS);
  REQUIRE(tcb_instance_create(&shared, 1, &inst) == TCB_OK);
  tcb_instance_destroy(inst);

  tcb_params homogeneous{2, 5, 3, 2, 2};
  REQUIRE(tcb_instance_create(&homogeneous, 0, &inst) == TCB_OK);
  long long b[4];
  CHECK(tcb_instance_resolution_betti(inst, b) == TCB_ERR_UNSUPPORTED);
  tcb_instance_destroy(inst);
  CHECK(std::string(tcb_status_string(TCB_ERR_PARSE)) == "parse error");
}

TEST_CASE("reports and exit codes") {
  tcb_params p{2, 5, 3, 2, 2};
  tcb_report* rep = nullptr;
  REQUIRE(tcb_betti_report(&p, 1, 0, TCB_FORMAT_JSON, &rep) == TCB_OK);
  CHECK(std::string(tcb_report_text(rep)).find("\"n\"") != std::string::npos);
  CHECK(tcb_report_exit_code(rep) == 0);
  tcb_report_destroy(rep);

  REQUIRE(tcb_table1_report(TCB_FORMAT_CSV, "2,5,3,2,2,7,12,13,22,1,6,6,2\n", &rep) == TCB_OK);
  CHECK(tcb_report_exit_code(rep) == 3);
  tcb_report_destroy(rep);

  CHECK(tcb_audit_report("vars 3\nmatrix 1x3\nx1; x2; x3 $\n", TCB_FORMAT_TEXT, &rep) ==
        TCB_ERR_PARSE);
  int line = 0, col = 0;
  tcb_last_error_location(&line, &col);
  CHECK(line == 3);
  CHECK(col == 12);
  CHECK(tcb_betti_report(&p, 0, 0, static_cast<tcb_format>(9), &rep) ==
        TCB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scan streaming") {
  tcb_scan_config c;
  tcb_scan_config_default(&c, 3);
  c.jobs = 2;
  Sink sink;
  tcb_report* summary = nullptr;
  REQUIRE(tcb_scan_run(&c, collect, &sink, nullptr, &summary) == TCB_OK);
  CHECK(sink.text.rfind("alpha21,alpha1,", 0) == 0);
  CHECK(std::string(tcb_report_text(summary)).find("processed") != std::string::npos);
  CHECK(tcb_report_exit_code(summary) == 0);
  tcb_report_destroy(summary);

  c.format = TCB_FORMAT_JSON;
  Sink json;
  REQUIRE(tcb_scan_run(&c, collect, &json, nullptr, &summary) == TCB_OK);
  CHECK(json.text.front() == '[');
  CHECK(json.text.substr(json.text.size() - 2) == "]\n");
  tcb_report_destroy(summary);

  c.hi[1] = 9;
  CHECK(tcb_scan_run(&c, collect, &json, nullptr, &summary) == TCB_ERR_INVALID_ARGUMENT);
  CHECK(summary == nullptr);
}

TEST_CASE("scan cancellation keeps the dataset well formed") {
  tcb_scan_config c;
  tcb_scan_config_default(&c, 5);
  c.format = TCB_FORMAT_JSON;
  volatile int cancel = 0;
  Sink sink;
  sink.cancel_after_first = &cancel;
  tcb_report* summary = nullptr;
  CHECK(tcb_scan_run(&c, collect, &sink, &cancel, &summary) == TCB_ERR_CANCELLED);
  REQUIRE(summary != nullptr);
  CHECK(std::string(tcb_report_text(summary)).find("\"interrupted\": true") != std::string::npos);
  CHECK(sink.text.substr(sink.text.size() - 2) == "]\n");
  tcb_report_destroy(summary);
}
