#include <doctest.h>

#include <sstream>

#include "nchopf/cli.hpp"

using nchopf::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mul prints the expansion") {
  const Run r = run({"mul", "w", "{1,2,3}", "{1}"});
  CHECK(r.code == nchopf::kExitOk);
  CHECK(r.out == "w_{1,2,3|4} + w_{1,2,4|3} + w_{1,3,4|2} + w_{1|2,3,4}\n");

  const Run q = run({"mul", "m", "{1}", "{1}"});
  CHECK(q.out == "m_{1,2} + m_{1|2}\n");
  const Run v = run({"mul", "V", "(1,2)", "(2|1)"});
  CHECK(v.out == "V_(1,2|4|3)\n");
}

TEST_CASE("comul and antipode") {
  const Run r = run({"comul", "M", "(2|1,3)"});
  CHECK(r.out == "M_(2|1,3) (x) 1 + M_(1) (x) M_(1,2) + 1 (x) M_(2|1,3)\n");
  const Run s = run({"antipode", "m", "{1|2}"});
  CHECK(s.out == "2 m_{1,2} + m_{1|2}\n");
}

TEST_CASE("json output") {
  const Run r = run({"--format", "json", "mul", "M", "(1)", "(1)"});
  CHECK(r.code == 0);
  CHECK(r.out == R"j({"basis":"M","terms":{"(1,2)":1,"(1|2)":1,"(2|1)":1}})j"
                 "\n");
  const Run t = run({"--format", "json", "comul", "w", "{1}"});
  CHECK(t.out.find("\"bases\"") != std::string::npos);
}

TEST_CASE("convert and pair") {
  const Run r = run({"convert", "m", "p", R"j({"basis":"m","terms":{"{1|2}":1}})j"});
  CHECK(r.out == "-p_{1,2} + p_{1|2}\n");
  const Run t = run({"convert", "m", "M", R"j({"basis":"m","terms":{"{1|2}":1}})j"});
  CHECK(t.out == "M_(1|2) + M_(2|1)\n");
  const Run u = run({"convert", "W", "w", R"j({"basis":"W","terms":{"(2|1,3)":1}})j"});
  CHECK(u.out == "w_{1,3|2}\n");
  const Run bad = run({"convert", "m", "w", R"j({"basis":"m","terms":{"{1}":1}})j"});
  CHECK(bad.code == nchopf::kExitUsage);
  const Run wrong = run({"convert", "p", "m", R"j({"basis":"m","terms":{"{1}":1}})j"});
  CHECK(wrong.code == nchopf::kExitUsage);

  const Run p = run({"pair", R"j({"basis":"q","terms":{"{1|2}":1}})j",
                     R"j({"basis":"qdual","terms":{"{1|2}":1}})j"});
  CHECK(p.out == "1\n");
  const Run pj = run({"--format", "json", "pair",
                      R"j({"basis":"M","terms":{"(1)":2}})j",
                      R"j({"basis":"W","terms":{"(1)":3}})j"});
  CHECK(pj.out == "{\"pairing\":6}\n");
}

TEST_CASE("poset output") {
  const Run r = run({"poset", "star", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("star 3: 5 elements, 5 covers\n", 0) == 0);
  CHECK(r.out.find("ranked: yes") != std::string::npos);
  const Run d = run({"poset", "sharp", "2,2", "--dot"});
  CHECK(d.out.rfind("digraph \"sharp 2,2\" {", 0) == 0);
  const Run j = run({"--format", "dot", "poset", "refinement", "2"});
  CHECK(j.out.find("->") != std::string::npos);
}

TEST_CASE("counts") {
  const Run r = run({"count", "bell", "4"});
  CHECK(r.out == "n\tbell\n0\t1\n1\t1\n2\t2\n3\t5\n4\t15\n");
  const Run s = run({"count", "stirling2", "2"});
  CHECK(s.out == "k\ttotal\t0\t1\t2\n0\t1\t1\t0\t0\n1\t1\t0\t1\t0\n2\t2\t0\t1\t1\n");
  const Run i = run({"count", "vi", "4"});
  CHECK(i.code == 0);
  CHECK(i.out.find("0 failed") != std::string::npos);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "ncsym-hopf", "3"});
  CHECK(r.code == nchopf::kExitOk);
  CHECK(r.out.find("PASS ncsym.m.associativity [3]") != std::string::npos);
  const Run j = run({"--format", "json", "verify", "ncqsym-qdual", "2"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK_FALSE(nchopf::verify_suite_names().empty());
}

TEST_CASE("usage errors exit with status 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"mul", "m", "{1|1}", "{1}"},
           {"mul", "x", "{1}", "{1}"},
           {"mul", "m", "{1}"},
           {"poset", "star", "abc"},
           {"poset", "nope", "3"},
           {"count", "nope", "3"},
           {"count", "bell", "-1"},
           {"verify", "nope", "3"},
           {"--format", "xml", "mul", "m", "{1}", "{1}"},
           {"--format", "dot", "mul", "m", "{1}", "{1}"},
           {"convert", "m", "p", "not json"},
           {"antipode", "m", "{1|3}"},
       }) {
    const Run r = run(args);
    const std::string first = args.empty() ? "<none>" : args[0];
    INFO(first);
    CHECK(r.code == nchopf::kExitUsage);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.out.empty());
  }
}

TEST_CASE("help") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "posets", "4"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> mul{"mul", "Q", "(1,3|2)", "(1|2)"};
  CHECK(run(mul).out == run(mul).out);
}
