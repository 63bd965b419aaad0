#include <sstream>

#include "doctest.h"
#include "gkostka/cli.hpp"

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& in = "") {
  std::istringstream is(in);
  std::ostringstream os, es;
  const int code = gkostka::cli::run(args, is, os, es);
  return {code, os.str(), es.str()};
}

const std::string kS = "1 1 1 3 4 5/2 2 2 4 5 6/3 3 6/4 7 7";
}  // namespace

TEST_CASE("lrt enumerate") {
  auto r = run({"lrt", "enumerate", "--shape", "5,4,3,3,2,1", "--rects", "4x3,2x3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 1 5 5\n2 2 2 6\n3 3 3\n4 4 4\n5 6\n6\n");
  r = run({"lrt", "enumerate", "--rects", "4x3,2x3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find('[') != std::string::npos);
  CHECK(run({"lrt", "enumerate", "--rects", "3y2"}).code == 2);
  CHECK(run({"lrt", "enumerate", "--rects", "2x0"}).code == 2);
  CHECK(run({"lrt", "enumerate"}).code == 2);
}

TEST_CASE("poly verbs") {
  auto r = run({"poly", "kf", "--shape", "2,1", "--content", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q + q^2") != std::string::npos);
  r = run({"poly", "kostka", "--rects", "4x3,2x3", "--shape", "5,4,3,3,2,1"});
  CHECK(r.code == 0);
  CHECK(run({"poly", "dual", "--rects", "2x3,2x3,3x2"}).code == 0);
  CHECK(run({"poly", "mono", "--from", "4x3,2x3", "--to", "3x3,3x3"}).code == 0);
  CHECK(run({"poly", "mono", "--from", "3x3,3x3", "--to", "4x3,2x3"}).code == 2);
}

TEST_CASE("tableau verbs") {
  auto r = run({"ctype", "--tableau", kS});
  CHECK(r.code == 0);
  CHECK(r.out.find("(); (3); (2,2)") != std::string::npos);
  r = run({"ctype", "-i", "-"}, "1 1 1 3 4 5\n2 2 2 4 5 6\n3 3 6\n4 7 7\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("(); (3); (2,2)") != std::string::npos);
  r = run({"catabolize", "--rects", "2x3,2x3,3x2", "--mode", "col", "--trace", "-t", kS});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 3 3 6 7") != std::string::npos);
  r = run({"transpose", "--rects", "2x3,2x3,3x2", "-t", "1 1 1 3 3 5/2 2 2 4 5 6/3 4 6/4 7 7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 1 4 4\n2 2 5 7\n3 3 7 8\n5 6\n6 7\n8 8") != std::string::npos);
  r = run({"embed", "apply", "--from", "4x3,2x3", "--to", "3x3,3x3", "--chain", "-t",
           "1 1 1 5 5/2 2 2 6/3 3 3/4 4 4/5 6/6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 1 1 4 4\n2 2 2 5\n3 3 3\n4 5 6\n5 6\n6") != std::string::npos);
  r = run({"embed", "image-test", "--rects", "2x3,2x3,3x2", "-t", kS});
  CHECK(r.code == 0);
  // brackets from a counterexample dump are accepted
  CHECK(run({"ctype", "-t", "[1 1 2/3]"}).code == 0);
  CHECK(run({"ctype", "-t", "2 1"}).code == 2);
  CHECK(run({"transpose", "--rects", "2x1", "-t", "1 1"}).code == 2);
}

TEST_CASE("poset and atoms") {
  auto r = run({"poset", "export", "--rects", "1x2,1x1", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  r = run({"poset", "export", "--rects", "1x2,1x1", "--order", "strong", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"covers\"") != std::string::npos);
  CHECK(run({"poset", "export", "--rects", "3x3,3x3", "--max-cells", "8"}).code == 2);
  r = run({"atom", "list", "--rects", "2x2,1x1"});
  CHECK(r.code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "charge-comp", "--max-cells", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "kostka", "--max-cells", "13"}).code == 2);
}
