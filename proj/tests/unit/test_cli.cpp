#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PLANAR_COUNT_EXE) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

nlohmann::json parse_line(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("count records") {
  auto a = run("count --n 2 --r 2 --d 2 --method walks");
  CHECK(a.status == 0);
  CHECK(a.out == "{\"n\":2,\"r\":2,\"d\":2,\"method\":\"walks\",\"variant\":\"matching\",\"count\":\"3\"}\n");

  auto b = run("count --n 1 --r 2 --d 2 --method tableaux");
  CHECK(b.status == 0);
  CHECK(parse_line(b.out)["count"] == "1");

  auto c = run("count --n 0 --r 1 --d 1 --method brute");
  CHECK(c.status == 0);
  CHECK(parse_line(c.out)["count"] == "1");
}

TEST_CASE("methods agree") {
  for (const char* variant : {"matching", "subgraph"}) {
    std::string first;
    for (const char* method : {"brute", "walks", "tableaux", "chamber"}) {
      if (std::string(variant) == "subgraph" && std::string(method) == "chamber") continue;
      auto r = run(std::string("count --n 3 --r 2 --d 2 --variant ") + variant + " --method " + method);
      REQUIRE(r.status == 0);
      const std::string count = parse_line(r.out)["count"];
      if (first.empty()) first = count;
      CHECK(count == first);
    }
  }
}

TEST_CASE("count formats") {
  auto csv = run("count --n 2 --r 2 --d 2 --format csv");
  CHECK(csv.out == "n,r,d,method,variant,count\n2,2,2,walks,matching,3\n");
  auto text = run("count --n 2 --r 2 --d 2 --format text");
  CHECK(text.out == "3\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("count --n 2 --r 2").status == 2);
  CHECK(run("count --n 2 --r 2 --d 2 --method magic").status == 2);
  CHECK(run("count --n 2 --r 2 --d 2 --bogus").status == 2);
  CHECK(run("count --n -1 --r 2 --d 2").status == 2);
  CHECK(run("count --n 2 --r 2 --d 2 --method chamber --variant subgraph").status == 2);
  CHECK(run("series nonsense").status == 2);
  CHECK(run("series gessel --xmax 4").status == 2);
}

TEST_CASE("budget overflow exits 3") {
  CHECK(run("count --n 4 --r 2 --d 2 --method brute --budget 10").status == 3);
  CHECK(run("count --n 1 --r 1 --d 9 --method walks").status == 3);
  CHECK(run("series theorem8 --xmax 1000").status == 3);
  CHECK(std::system((std::string("PLANAR_COUNT_BUDGET=5 ") + PLANAR_COUNT_EXE +
                     " count --n 4 --r 2 --d 2 --method brute >/dev/null 2>&1")
                        .c_str()) != 0);
}

TEST_CASE("series output") {
  auto g = run("series gessel --d 2 --xmax 4 --format csv");
  CHECK(g.status == 0);
  CHECK(g.out == "power,num,den\n0,1,1\n2,1,1\n4,1,2\n");

  auto t = run("series theorem8 --xmax 4 --format csv");
  CHECK(t.status == 0);
  CHECK(t.out == "power,num,den\n0,1,1\n4,1,4\n");

  auto one = run("series gessel --d 1 --xmax 2 --format csv");
  CHECK(one.out == "power,num,den\n0,1,1\n2,1,1\n");

  auto j = run("series gessel --d 2 --xmax 4");
  CHECK(j.status == 0);
  const auto doc = parse_line(j.out);
  CHECK(doc["xmax"] == 4);
  CHECK(doc["terms"].size() == 3);
  CHECK(doc["terms"][2]["den"] == "2");

  auto alt = run("series gessel-alt --xmax 4 --format csv");
  CHECK(alt.out == g.out);
}

TEST_CASE("verify exit codes and report files") {
  // default ranges; passes only if every listed identity holds
  CHECK(run("verify").status == 0);
  CHECK(run("verify --max-rn 4").status == 0);

  CHECK(run("verify --max-rn 0").status == 0);
  CHECK(run("verify --max-rn 0 --corrupt-fixture").status == 1);

  const std::string path = "verify_report_test.csv";
  auto r = run("verify --max-rn 2 --max-d 2 --xmax 4 --format csv --out " + path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().rfind("claim,params,method,value,pass\n", 0) == 0);
  std::remove(path.c_str());

  auto j = run("verify --max-rn 2 --max-d 2 --xmax 4 --format json");
  const auto doc = parse_line(j.out);
  CHECK(doc["rows"] == doc["results"].size());
  CHECK(j.status == (doc["passed"].get<bool>() ? 0 : 1));
  CHECK(run("verify --max-rn 2 --max-d 2 --xmax 4 --format json").out == j.out);
}
