#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "qv/verify.hpp"

using namespace fixtures;

namespace {

qv::VerifyLimits quick() {
  qv::VerifyLimits lim;
  lim.max_seq_len = 5;
  lim.r_max = 3;
  lim.m_max = 6;
  return lim;
}

}  // namespace

TEST_CASE("self-checks pass on the simply laced fixtures") {
  for (const auto& q : {q_a3(), q_k2()}) {
    auto report = qv::run_verify(q, quick());
    INFO(qv::to_text(report));
    CHECK(report.all_passed());
    for (const auto& c : report.checks) CHECK(c.status != qv::check_status::skipped);
  }
}

TEST_CASE("matrix-level checks are skipped for non-symmetric valuations") {
  auto report = qv::run_verify(q_b2(), quick());
  INFO(qv::to_text(report));
  CHECK(report.all_passed());
  int skipped = 0;
  for (const auto& c : report.checks)
    if (c.status == qv::check_status::skipped) {
      ++skipped;
      CHECK(c.detail.find("non-symmetric") != std::string::npos);
    }
  CHECK(skipped > 0);
  // dimension-level knitting still runs
  bool knit_ran = false;
  for (const auto& c : report.checks)
    if (c.name == "reps.knit_tags_principal") knit_ran = c.status == qv::check_status::pass;
  CHECK(knit_ran);
}

TEST_CASE("self-checks tolerate bypasses") {
  auto report = qv::run_verify(q_triangle(), quick());
  INFO(qv::to_text(report));
  CHECK(report.all_passed());
}

TEST_CASE("report renders one line per check") {
  auto report = qv::run_verify(q_a3(), quick());
  std::string text = qv::to_text(report);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("0 failed") != std::string::npos);
  size_t lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == report.checks.size() + 1);  // checks + summary
}
