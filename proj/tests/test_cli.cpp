// Copyright 2026 The Authors.
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


#include <sstream>

#include <doctest.h>

#include "cftutte/corpus.hpp"
#include "cftutte/io.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace cft;
using cft::testing::data_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("rgp on each input kind") {
  Result r = run({"rgp", data_path("examples/u23.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "x^2 + 3x + 3 + y\nS(1,1)=8\nT(1,1)=15\n");

  r = run({"rgp", data_path("golay_condensed.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("S(1,1)=16777216\n") != std::string::npos);

  r = run({"rgp", "--check-oracle", data_path("examples/m1_bases.json")});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "x^3 + 6x^2 + 15x + 18 + 2xy + 15y + 6y^2 + y^3");

  r = run({"rgp", data_path("examples/pmd_fano.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("S(1,1)=128") != std::string::npos);

  r = run({"rgp", "--as-tutte", data_path("examples/u23.json")});
  CHECK(first_line(r.out) == "x^2 + x + y");
}

TEST_CASE("loops and coloops go through the wrapper") {
  Result r = run({"rgp", "--check-oracle", "-"}, R"({"type":"bases","n":3,"bases":[[1],[2]]})");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "x + 2 + xy + 3y + y^2");
  r = run({"rgp", "--check-oracle", "-"}, R"({"type":"uniform","n":3,"r":3})");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "x^3 + 3x^2 + 3x + 1");
}

TEST_CASE("json output") {
  Result r = run({"rgp", "--json", data_path("examples/u23.json")});
  CHECK(r.code == 0);
  const io::Json j = io::parse_json(r.out);
  CHECK(j["terms"].dump() == R"([[2,0,"1"],[1,0,"3"],[0,0,"3"],[0,1,"1"]])");
  CHECK(j["S(1,1)"] == "8");
  CHECK(io::polynomial_from_json(j) == parse_bivar("x^2 + 3x + 3 + y"));
}

TEST_CASE("oracle subcommand and worker counts") {
  const Result one = run({"oracle", data_path("examples/m1_bases.json")});
  CHECK(one.code == 0);
  for (const char* jobs : {"2", "5"}) CHECK(run({"oracle", "--jobs", jobs, data_path("examples/m1_bases.json")}).out == one.out);
  CHECK(run({"rgp", data_path("examples/m1_bases.json")}).out == one.out);
}

TEST_CASE("config output is shared by the six-element pair") {
  const Result a = run({"config", data_path("examples/m1_flats.json")});
  const Result b = run({"config", data_path("examples/m2_flats.json")});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run({"config", data_path("examples/m1_bases.json")}).out);
  // Feeding the configuration back gives the matroid-path polynomial.
  const Result via_config = run({"rgp", "-"}, a.out);
  CHECK(via_config.code == 0);
  CHECK(via_config.out == run({"rgp", data_path("examples/m1_flats.json")}).out);
}

TEST_CASE("condense") {
  Result r = run({"condense", data_path("examples/m2_flats.json"), "--group", data_path("examples/m2_group.json")});
  CHECK(r.code == 0);
  const io::Json j = io::parse_json(r.out);
  CHECK(j["A"].dump() == "[[1,1,1],[0,1,2],[0,0,1]]");
  CHECK(j["members"][1].dump() == "[[0,1,2],[3,4,5]]");
  const Result via = run({"rgp", "-"}, r.out);
  CHECK(first_line(via.out) == "x^3 + 6x^2 + 15x + 18 + 2xy + 15y + 6y^2 + y^3");

  r = run({"condense", data_path("examples/m1_flats.json")});
  CHECK(io::parse_json(r.out)["A"].dump() == "[[1,1,1],[0,1,2],[0,0,1]]");

  r = run({"condense", data_path("examples/m1_flats.json"), "--group", data_path("examples/m2_group.json")});
  CHECK(r.code == 2);
}

TEST_CASE("cyclic-flats listing") {
  Result r = run({"cyclic-flats", data_path("examples/m1_flats.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{} size=0 rank=0\n{0,1,2} size=3 rank=2\n{0,3,4} size=3 rank=2\n{0,1,2,3,4,5} size=6 rank=3\n");
  r = run({"cyclic-flats", "--json", data_path("examples/m1_bases.json")});
  CHECK(r.code == 0);
  CHECK(run({"rgp", "-"}, r.out).out == run({"rgp", data_path("examples/m1_bases.json")}).out);
}

TEST_CASE("pmd-check") {
  Result r = run({"pmd-check", data_path("examples/pmd_infeasible.json")});
  CHECK(r.code == 3);
  CHECK(r.out.find("(i,j)=(2,3)") != std::string::npos);
  CHECK(r.out.find("56/6") != std::string::npos);
  CHECK(run({"pmd-check", data_path("examples/pmd_fano.json")}).code == 0);
  r = run({"pmd-check", "--batch", data_path("examples/pmd_batch.txt")});
  CHECK(r.code == 3);
  CHECK(r.out.find("(0,1,4,13): feasible") != std::string::npos);
  r = run({"pmd-check", "--json", "-"}, "[0,1,3,8]");
  const io::Json j = io::parse_json(r.out);
  CHECK(j["feasible"] == false);
  CHECK(j["violations"][0]["i"] == 2);
  CHECK(run({"pmd-check", "-"}, "[0,2,2]").code == 2);
  CHECK(run({"pmd-check"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({"rgp", "-"}, "{oops").code == 2);
  CHECK(run({"rgp", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"rgp", "--check-oracle", data_path("golay_condensed.json")}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"rgp", "-"}, R"({"type":"cyclic_flats","n":2,"flats":[{"set":[],"rank":0},{"set":[0,1],"rank":2}]})").code == 2);
  const Result infeasible = run({"rgp", data_path("golay_condensed_75.json")});
  CHECK(infeasible.code == 3);
  CHECK(infeasible.err.find("negative") != std::string::npos);
  CHECK(run({"rgp", data_path("examples/pmd_infeasible.json")}).code == 3);
  CHECK(run({"--help"}).code == 0);
}
