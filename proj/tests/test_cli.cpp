#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "diffsres/cli.hpp"
#include "json.hpp"
#include "support/golden.hpp"

using diffsres::testing::run;

TEST_CASE("golden outputs") {
  auto r = diffsres::testing::golden_suite(DIFFSRES_GOLDEN_DIR);
  INFO(r.summary());
  CHECK(r.passed());
}

TEST_CASE("exit codes") {
  CHECK(run({"resultant", "Dx^2 +", "Dx"}).code == diffsres::exit_usage);
  CHECK(run({"resultant", "Dx^2 + y", "Dx"}).code == diffsres::exit_usage);
  CHECK(run({"resultant", "--domain", "nonsense", "Dx", "Dx"}).code == diffsres::exit_usage);
  CHECK(run({"frobnicate"}).code == diffsres::exit_usage);
  CHECK(run({"resultant", "Dx"}).code == diffsres::exit_usage);
  CHECK(run({"spectral", "euler", "4"}).code == diffsres::exit_usage);
  CHECK(run({"spectral", "euler", "0", "2"}).code == diffsres::exit_usage);
  CHECK(run({"resultant", "0", "Dx"}).code == diffsres::exit_domain);
  CHECK(run({"resultant", "x/(x-x)", "Dx"}).code == diffsres::exit_domain);
  CHECK(run({"subresultant", "--index", "3", "Dx^2", "Dx^3"}).code == diffsres::exit_range);
  CHECK(run({"subres-matrix", "--index", "-1", "Dx^2", "Dx^3"}).code == diffsres::exit_range);
  auto nc = run({"spectral", "Dx^2", "Dx^3 + x"});
  CHECK(nc.code == diffsres::exit_not_commuting);
  CHECK(nc.err.find("order 1") != std::string::npos);
  CHECK(nc.out.empty());
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("spectral") != std::string::npos);
}

TEST_CASE("operands from files") {
  const std::string path = "diffsres_cli_operand.txt";
  std::ofstream(path) << "Ds^2\n  + s\n";
  auto r = run({"resultant", "--domain", "ratfunc(s)", "@" + path, "Ds^3+Ds"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "s^3 - 2*s^2 + s + 2\n");
  CHECK(run({"resultant", "@/nonexistent/file", "Dx"}).code == diffsres::exit_usage);
}

TEST_CASE("json output is well formed") {
  auto r = run({"subresultant", "--format", "json", "--index", "1", "--domain", "ratfunc(s)", "Ds^2+s", "Ds^3+Ds"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["index"] == 1);
  CHECK(j["operator"]["domain"] == "ratfunc(s)");
  CHECK(j["minors"].size() == 2);
  CHECK(j["minors"][0]["rows"] == 3);
  auto s = nlohmann::json::parse(run({"spectral", "--format", "json", "lame"}).out);
  CHECK(s["d"] == 1);
  CHECK(s["gcrd"]["order"] == 1);
  CHECK(s["f"] == "4*lambda^3 - g2*lambda - 4*mu^2 - g3");
  CHECK(run({"sequence", "--serial", "--domain", "ratfunc(s)", "Ds^2+s", "Ds^3+Ds"}).out ==
        run({"sequence", "--domain", "ratfunc(s)", "Ds^2+s", "Ds^3+Ds"}).out);
}
