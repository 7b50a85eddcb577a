// Copyright 2026 The skewlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "oracles.hpp"
#include "skewlat/census.hpp"
#include "skewlat/cli.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/format.hpp"
#include "skewlat/models.hpp"

using namespace skewlat;

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("SKEWLAT_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void check_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_structure(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("emit then parse reproduces L2") {
  const auto l2 = oracle::L2();
  const auto back = parse_structure(emit_structure(l2)).to_lattice();
  CHECK(back == l2);
  CHECK(back.labels() == l2.labels());
}

TEST_CASE("round trip over the census up to order 4 and the named models") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate(n)) {
      const std::string text = emit_structure(s);
      const auto back = parse_structure(text).to_lattice();
      CHECK(back == s);
      CHECK(emit_structure(back) == text);
    }
  }
  for (const auto& s : {build_pfn_algebra(2, 2), om_window(3)}) {
    const auto back = parse_structure(emit_structure(s)).to_lattice();
    CHECK(back == s);
    CHECK(back.labels() == s.labels());
  }
}

TEST_CASE("parse errors carry line and column") {
  check_parse_error("skewlat 1\nn 2\nmeet\n0 0 0\n1 1\njoin\n0 1\n0 1\n", 4, 5);
  check_parse_error("skewlat 1\nn 3\nmeet\n0 0 0\n0 1 7\n0 1 2\njoin\n0 1 2\n1 1 2\n2 2 2\n", 5, 5);
  check_parse_error("skewlat 1\nn 1\nmeet\n0\nmeet\n0\njoin\n0\n", 5, 1);
  check_parse_error("lattice 1\n", 1, 1);
  check_parse_error("skewlat 2\n", 1, 9);
  check_parse_error("skewlat 1\nmeet\n0\n", 2, 1);
  check_parse_error("skewlat 1\nn 1\nmeet\n0\n", 5, 1);
  check_parse_error("skewlat 1\nn 1\nfrobnicate\n", 3, 1);
  check_parse_error("skewlat 1\nn 2\nlabels \"a\n", 3, 8);
  check_parse_error("skewlat 1\nn 1\nmeet\nx\njoin\n0\n", 4, 1);
  check_parse_error("", 1, 1);
  CHECK_THROWS_AS(parse_structure("skewlat 1\nn 1\nmeet\n0\n"), StructuralError);
}

TEST_CASE("comments, labels across lines and escapes") {
  const auto f = parse_structure(
      "# leading comment\nskewlat 1\nn 2  # order\nmeet\n0 0\n1 1\njoin\n0 1\n0 1\nlabels \"a \\\"q\\\"\"\n\"b\"\n");
  REQUIRE(f.labels.size() == 2);
  CHECK(f.labels[0] == "a \"q\"");
  CHECK(f.labels[1] == "b");
  const auto s = f.to_lattice();
  CHECK(parse_structure(emit_structure(s)).labels == f.labels);
}

TEST_CASE("exit code contract on the fixture set") {
  CHECK(run({"check", fixture("l2.skl")}).code == cli::kExitTrue);
  CHECK(run({"check", fixture("not_skew.skl")}).code == cli::kExitFalse);
  CHECK(run({"check", fixture("bad_dimension.skl")}).code == cli::kExitUsage);
  CHECK(run({"check", fixture("bad_range.skl")}).code == cli::kExitUsage);
  CHECK(run({"check", fixture("bad_duplicate.skl")}).code == cli::kExitUsage);
  CHECK(run({"check", fixture("bad_header.skl")}).code == cli::kExitUsage);
  CHECK(run({"check", fixture("missing.skl")}).code == cli::kExitUsage);
  CHECK(run({"theorem", fixture("m3.skl")}).code == cli::kExitUsage);
  CHECK(run({"theorem", fixture("pfn22.skl")}).code == cli::kExitTrue);
  CHECK(run({"sections", fixture("pfn22.skl")}).code == cli::kExitTrue);
  CHECK(run({"sup", fixture("omega2.skl"), "--elements", "inf_a,inf_b"}).code == cli::kExitFalse);
  CHECK(run({"sup", fixture("omega2.skl"), "--elements", "0,1"}).code == cli::kExitTrue);
  CHECK(run({"paper", "omega", "--window", "100", "--verify"}).code == cli::kExitTrue);
  CHECK(run({"paper", "finimg"}).code == cli::kExitUsage);
  CHECK(run({"paper", "nope"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitTrue);
}

TEST_CASE("reports") {
  const Run bad = run({"check", fixture("not_skew.skl")});
  CHECK(bad.out == "not a skew lattice: (x ∨ y) ∧ y = y fails at (0, 1)\n");
  const Run dim = run({"check", fixture("bad_dimension.skl")});
  CHECK(dim.err.find("bad_dimension.skl:4:5:") != std::string::npos);
  const Run thm = run({"theorem", fixture("m3.skl")});
  CHECK(thm.err.find("strongly distributive") != std::string::npos);
  const Run sup = run({"sup", fixture("omega2.skl"), "--elements", "inf_a,inf_b"});
  CHECK(sup.out.find("sup: none") != std::string::npos);
  CHECK(sup.out.find("inf: 2") != std::string::npos);
  const Run cls = run({"classify", fixture("m3.skl")});
  CHECK(cls.out.find("JC: n/a") == std::string::npos);
  CHECK(cls.out.find("strongly-distributive: no") != std::string::npos);
  const Run omega = run({"paper", "omega", "--window", "100", "--verify"});
  CHECK(omega.out.find("404/404") != std::string::npos);
  const Run sections = run({"sections", fixture("l2.skl")});
  CHECK(sections.out == "2 lattice section(s)\n{a}\n{b}\n");
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> invocations{
      {"classify", fixture("pfn22.skl")},
      {"census", "--order", "4"},
      {"census", "--order", "4", "--workers", "3"},
      {"quotient", fixture("pfn22.skl")},
      {"paper", "pfn", "--sizes", "2,3", "--verify"}};
  for (const auto& args : invocations) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  CHECK(run({"census", "--order", "4"}).out == run({"census", "--order", "4", "--workers", "3"}).out);
}

TEST_CASE("census and model emission parse back") {
  const Run census = run({"census", "--order", "3"});
  CHECK(census.code == 0);
  CHECK(census.out.rfind("7 structure(s) of order 3\n", 0) == 0);
  const Run pfn = run({"paper", "pfn", "--sizes", "2,2"});
  CHECK(parse_structure(pfn.out).to_lattice() == build_pfn_algebra(2, 2));
  const Run quot = run({"quotient", fixture("pfn22.skl")});
  CHECK(parse_structure(quot.out).order == 4);
  CHECK(run({"census", "--order", "2", "--filter", "left_handed,!commutative", "--count-only"}).out ==
        "1 structure(s) of order 2\n");
}
