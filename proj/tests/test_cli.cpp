#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cmlab/cli/app.hpp"
#include "cmlab/cli/ideal_file.hpp"
#include "cmlab/errors.hpp"
#include "cmlab/lab/schemes.hpp"

using namespace cmlab;

namespace {

const std::string root = CMLAB_SOURCE_DIR;

std::string data(const std::string& name) { return root + "/tests/data/" + name; }
std::string corpus(const std::string& name) { return root + "/data/corpus/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("ideal file: parsing") {
  const auto I = cli::parse_ideal_text("# c\n\nvars: a b  # trailing\nfield: fp:7\na*b - 1\n\nb^2 # more\n");
  CHECK(I.vars().names() == std::vector<std::string>{"a", "b"});
  CHECK(I.field().characteristic() == 7u);
  CHECK(I.gens().size() == 2);
  const auto Q = cli::parse_ideal_text("vars: a\nfield: fp:7\na\n", Field::rationals());
  CHECK(Q.field().is_rational());
  CHECK(cli::parse_ideal_text("vars: a\na\n").field().is_rational());
  CHECK(cli::parse_ideal_text(cli::format_ideal(I)).gens() == I.gens());
}

TEST_CASE("ideal file: errors carry line and column") {
  auto where = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      cli::parse_ideal_text(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(where("x^2\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(where("vars: x x\n").first == 1);
  CHECK(where("vars: x\nfield: fp:9\n").first == 2);
  CHECK(where("vars: x\n\nx + y\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(where("vars: x\n   x ^\n") == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK_THROWS_AS(cli::read_ideal_file(data("missing.ideal")), DomainError);
}

TEST_CASE("cli: gb and dim") {
  auto r = invoke({"gb", data("example.ideal"), "--order", "lex"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out == "x - y^2\ny^3 - 1\n");
  CHECK(invoke({"dim", data("example.ideal")}).out == "0\n");
  CHECK(invoke({"dim", data("zero.ideal")}).out == "2\n");
  CHECK(invoke({"gb", data("fp7.ideal"), "--field", "q"}).out == "y^2 + 7*x\n");
  CHECK(invoke({"gb", data("fp7.ideal")}).out == "y^2\n");
  CHECK(invoke({"gb", data("example.ideal"), "--sugar"}).code == cli::exit_ok);

  const std::string unit = (std::filesystem::temp_directory_path() / "cmlab_unit.ideal").string();
  std::ofstream(unit) << "vars: x\nx\nx - 1\n";
  CHECK(invoke({"dim", unit}).out == "-1\n");
}

TEST_CASE("cli: exit codes") {
  const auto bad = invoke({"gb", data("malformed.ideal")});
  CHECK(bad.code == cli::exit_bad_input);
  CHECK(bad.err.find("malformed.ideal:4:10:") != std::string::npos);
  CHECK(invoke({}).code == cli::exit_bad_input);
  CHECK(invoke({"gb", data("missing.ideal")}).code == cli::exit_bad_input);
  CHECK(invoke({"gb", data("example.ideal"), "--order", "nope"}).code == cli::exit_bad_input);
  CHECK(invoke({"gb", corpus("I3.ideal"), "--budget", "0.0001"}).code == cli::exit_budget);
  CHECK(invoke({"verify", "--check", "family", "--family", "split_jordan", "--m", "3"}).code == cli::exit_bad_input);
  CHECK(invoke({"verify", "--check", "jacobian", "--m", "2", "--m1", "2", "--m2", "1"}).code == cli::exit_bad_input);
  CHECK(invoke({"verify", "--check", "hom", "--map", "corner_strip", "--n", "2", "--corrupt"}).code ==
        cli::exit_failed);
  CHECK(invoke({"suite", "--out", "/nonexistent/dir/out.json"}).code == cli::exit_bad_input);
}

TEST_CASE("cli: verify prints one report") {
  const auto r = invoke({"verify", "--check", "jacobian", "--m", "2", "--m1", "1", "--m2", "1"});
  CHECK(r.code == cli::exit_ok);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["check_id"] == "jacobian:m=2,m1=1,m2=1");
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["m1"] == 1);
  for (auto args : std::vector<std::vector<std::string>>{
           {"verify", "--check", "psi-membership", "--m", "3", "--m1", "1", "--m2", "2", "--samples", "10"},
           {"verify", "--check", "dimension", "--scheme", "R_tilde", "--n", "2", "--tags", "t=0,add_w"},
           {"verify", "--check", "dimension", "--ideal", corpus("I2.ideal"), "--expect", "6"},
           {"verify", "--check", "hom", "--lemma", "4.4", "--n", "3"},
           {"verify", "--check", "family", "--family", "L59", "--m", "3"},
           {"verify", "--check", "regular-point", "--A", "1,0;0,2", "--B", "3,0;0,4"},
       }) {
    CAPTURE(args[2]);
    CHECK(invoke(args).code == cli::exit_ok);
  }
  CHECK(invoke({"verify", "--check", "dimension", "--ideal", corpus("I2.ideal"), "--expect", "5"}).code ==
        cli::exit_failed);
}

TEST_CASE("cli: suite writes a json array") {
  const std::string out = (std::filesystem::temp_directory_path() / "cmlab_suite_test.json").string();
  const auto r = invoke({"suite", "--max-n", "2", "--max-m", "2", "--out", out});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("fail=0") != std::string::npos);
  const auto j = nlohmann::ordered_json::parse(slurp(out));
  REQUIRE(j.is_array());
  CHECK(j.size() > 40);
  for (const auto& e : j) {
    std::vector<std::string> keys;
    for (auto it = e.begin(); it != e.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check_id", "params", "status", "details", "elapsed_ms"});
  }
  CHECK(invoke({"suite", "--inject-fault", "--out", out}).code == cli::exit_failed);
}

TEST_CASE("corpus files match the builder and have the expected dimensions") {
  struct Entry {
    std::string file;
    std::vector<std::string> build;
    std::string dim;
  };
  const std::vector<Entry> entries{
      {"I2.ideal", {"--scheme", "R", "--n", "2", "--field", "q"}, "6"},
      {"I3.ideal", {"--scheme", "R", "--n", "3", "--field", "fp:32003"}, "12"},
      {"R1_2.ideal", {"--scheme", "R1", "--n", "2", "--field", "q"}, "5"},
      {"Jt1_w.ideal", {"--scheme", "R_tilde", "--n", "1", "--tags", "t=0,add_w", "--field", "q"}, "4"},
      {"J1_t1.ideal", {"--scheme", "R_tilde", "--n", "1", "--tags", "t=1", "--field", "q"}, "4"},
      {"J1_w.ideal", {"--scheme", "R_tilde", "--n", "1", "--tags", "add_w", "--field", "q"}, "5"},
      {"Jt2_w.ideal", {"--scheme", "R_tilde", "--n", "2", "--tags", "t=0,add_w", "--field", "fp:32003"}, "8"},
  };
  for (const auto& e : entries) {
    CAPTURE(e.file);
    std::vector<std::string> args{"build"};
    args.insert(args.end(), e.build.begin(), e.build.end());
    CHECK(invoke(args).out == slurp(corpus(e.file)));
    CHECK(invoke({"dim", corpus(e.file)}).out == e.dim + "\n");
  }
}
