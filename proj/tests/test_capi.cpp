#include <algorithm>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "permutoria.h"

namespace {

struct Ctx {
  pm_context* c = pm_context_new();
  ~Ctx() { pm_context_free(c); }
};

}  // namespace

TEST_CASE("pm_count") {
  Ctx ctx;
  int64_t n = 0;
  CHECK(pm_count(ctx.c, "2413", 10, 1, 1, &n) == PM_OK);
  CHECK(n == 42);
  CHECK(pm_count(ctx.c, "132", 6, 0, 1, &n) == PM_OK);
  CHECK(n == 132);
  CHECK(std::string(pm_last_error(ctx.c)).empty());
  CHECK(pm_count_extended(ctx.c, "123", 1, 1, 0, &n) == PM_OK);
  CHECK(n == 2);
}

TEST_CASE("error codes") {
  Ctx ctx;
  int64_t n = 0;
  CHECK(pm_count(ctx.c, "1x3", 4, 0, 1, &n) == PM_PARSE_ERROR);
  CHECK(!std::string(pm_last_error(ctx.c)).empty());
  CHECK(pm_count(ctx.c, "123", 40, 0, 1, &n) == PM_LIMIT_EXCEEDED);
  CHECK(pm_count(ctx.c, "123", 4, 0, 1, nullptr) == PM_INVALID_ARGUMENT);
  const char* out = nullptr;
  CHECK(pm_tableau(ctx.c, "jdt", "2,1", nullptr, &out) == PM_NOT_A_TABLEAU);
  CHECK(pm_tableau(ctx.c, "rho", "1,2/2", "{\"orientation\":\"lr\"}", &out) == PM_NOT_LR);
  CHECK(pm_biject(ctx.c, "nope", "12", nullptr, &out) == PM_INVALID_ARGUMENT);
  CHECK(std::string(pm_status_name(PM_NOT_LR)) != std::string(pm_status_name(PM_OK)));
  CHECK(pm_verify(ctx.c, "no-such-suite", nullptr, "json", &out, nullptr) == PM_INVALID_ARGUMENT);
}

TEST_CASE("pm_biject and pm_tableau") {
  Ctx ctx;
  const char* out = nullptr;
  REQUIRE(pm_biject(ctx.c, "theta", "3412", nullptr, &out) == PM_OK);
  CHECK(std::string(out) == "3412\tUDUD\n");
  REQUIRE(pm_biject_table(ctx.c, "theta", 4, nullptr, &out) == PM_OK);
  std::string table = out;
  CHECK(std::count(table.begin(), table.end(), '\n') == 2);
  REQUIRE(pm_tableau(ctx.c, "jdt", ".,2/1,3", nullptr, &out) == PM_OK);
  CHECK(nlohmann::json::parse(out).dump().find("1,2/3") != std::string::npos);
  int64_t c = 0;
  REQUIRE(pm_lr_coefficient(ctx.c, "3,2,1", "2,1", "2,1", &c) == PM_OK);
  CHECK(c == 2);
}

TEST_CASE("pm_verify") {
  Ctx ctx;
  const char* out = nullptr;
  REQUIRE(pm_suites(ctx.c, &out) == PM_OK);
  CHECK(nlohmann::json::parse(out).size() >= 20);
  int hard = -1;
  REQUIRE(pm_verify(ctx.c, "I-thm2.2", "{\"n\":8}", "json", &out, &hard) == PM_OK);
  auto j = nlohmann::json::parse(out);
  CHECK(j["suite"] == "I-thm2.2");
  CHECK(j["failed"] == 0);
  CHECK(hard == 0);
}

TEST_CASE("series dumps") {
  Ctx ctx;
  const char* out = nullptr;
  REQUIRE(pm_series_formula(ctx.c, "c(x)", "4", 4, &out) == PM_OK);
  CHECK(std::string(out) == "0\t0\t0\t1\n1\t0\t0\t1\n2\t0\t0\t2\n3\t0\t0\t5\n4\t0\t0\t14\n");
  std::string f = out;
  REQUIRE(pm_series_brute(ctx.c, "132", "standard", "4", 4, &out) == PM_OK);
  CHECK(std::string(out) == f);
}
