/* Copyright (C) 2026 The hyperquad authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <gtest/gtest.h>

#include <json.hpp>

#include "errors.hpp"
#include "report.hpp"

using namespace hq;
using nlohmann::json;

namespace {

// Rerun from the echoed config; the document must come back byte for byte.
void expect_round_trip(const std::string& cfg) {
  auto first = run_command(cfg);
  auto doc = json::parse(first.json);
  ASSERT_EQ(doc["schema"], "hyperquad/1");
  auto second = run_command(doc["config"].dump());
  EXPECT_EQ(second.json, first.json) << cfg;
  EXPECT_EQ(second.exit_code, first.exit_code);
}

}  // namespace

TEST(Report, RoundTrips) {
  expect_round_trip(R"({"command":"seedpair","p":5,"t":2,"k":7})");
  expect_round_trip(R"({"command":"expand","field":"f27-paper","k":1,"lambdas":"1","eps1":"-u^6","eps2":"u^3","n":12})");
  expect_round_trip(R"({"command":"predict","p":5,"s":2,"k":1,"lambdas":"1,2","eps1":"3","eps2":"1"})");
  expect_round_trip(R"({"command":"verify","field":"f27-paper","k":1,"lambdas":"u","eps1":"-u^6","eps2":"u^3","n":40})");
  expect_round_trip(R"({"command":"corollary-c","n":30})");
  expect_round_trip(R"({"command":"conjecture","p":3,"depth":3})");
}

TEST(Report, CorollaryCommand) {
  auto r = run_command(R"({"command":"corollary-c","n":5})");
  EXPECT_EQ(r.exit_code, 0);
  auto doc = json::parse(r.json);
  const auto& res = doc["result"];
  EXPECT_EQ(res["verdict"], "match");
  EXPECT_EQ(res["case"], "III2");
  EXPECT_EQ(res["gamma1"], "u");
  EXPECT_EQ(res["C0"], "1");
  EXPECT_EQ(res["direct"]["quotients"], (json{"T", "u^7*T", "u^2*T", "u^11*T", "-u*T"}));
  EXPECT_EQ(doc["config"]["n"], 5);
  r = run_command(R"({"command":"corollary-c","n":1})");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Report, VerifyExitCodes) {
  auto r = run_command(R"({"command":"verify","field":"f27-paper","k":1,"lambdas":"1","eps1":"-u^6","eps2":"u^3","n":60})");
  EXPECT_EQ(r.exit_code, 0);
  r = run_command(R"({"command":"verify","field":"f27-paper","k":1,"lambdas":"u","eps1":"-u^6","eps2":"u^3","n":60})");
  EXPECT_EQ(r.exit_code, 2);
  auto doc = json::parse(r.json);
  EXPECT_EQ(doc["result"]["verdict"], "mismatch");
  EXPECT_FALSE(doc["result"]["first_mismatch"].is_null());
  EXPECT_EQ(doc["result"]["condition_II"]["holds"], false);
}

TEST(Report, UsageErrors) {
  try {
    run_command(R"({"command":"verify","field":"f27-paper","lambdas":"1","eps1":"1","eps2":"1"})");
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_TRUE(is_usage_error(e));
  }
  EXPECT_THROW(run_command(R"({"command":"frobnicate"})"), ParameterError);
  EXPECT_THROW(run_command(R"({"command":"verify","field":"f27-paper","k":1,"l":2,"lambdas":"1","eps1":"1","eps2":"1"})"),
               ParameterError);
}

TEST(Report, ListParsing) {
  // top-level commas only; coordinates in parentheses stay together
  auto r = run_command(R"({"command":"expand","p":3,"s":2,"k":1,"lambdas":"(1,1),u","eps1":"1","eps2":"1","n":4})");
  auto doc = json::parse(r.json);
  EXPECT_EQ(doc["config"]["l"], 2);
}
