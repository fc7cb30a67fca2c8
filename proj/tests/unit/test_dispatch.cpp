#include <sstream>

#include "catch_amalgamated.hpp"
#include "vk/cli/dispatch.hpp"
#include "vk/error.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "vkj");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = vk::cli::parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(VK_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exit codes follow the status", "[dispatch]") {
  CHECK(vk::cli::exit_code(vk::cli::Status::ok) == 0);
  CHECK(vk::cli::exit_code(vk::cli::Status::violation) == 2);
  CHECK(vk::cli::exit_code(vk::cli::Status::error) == 1);
}

TEST_CASE("pushout and abelianize on fixtures", "[dispatch]") {
  const Outcome circle = invoke({"pushout", fixture("circle.json")});
  CHECK(circle.code == 0);
  CHECK(circle.out.find("abelianization: Z\n") != std::string::npos);
  CHECK(circle.out.find("certificate: nontrivial") != std::string::npos);

  const Outcome klein = invoke({"abelianize", fixture("klein.json")});
  CHECK(klein.code == 0);
  CHECK(klein.out.find("Z + Z/2") != std::string::npos);

  const Outcome bad = invoke({"pushout", fixture("bad_c.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("vkj: ") == 0);

  CHECK(invoke({"abelianize", fixture("bad_sign.json")}).code == 1);
  const Outcome malformed = invoke({"abelianize", fixture("malformed.json")});
  CHECK(malformed.code == 1);
  CHECK(malformed.err.find("line ") != std::string::npos);
  CHECK(invoke({"abelianize", fixture("missing.json")}).code == 1);
}

TEST_CASE("json reports are deterministic", "[dispatch]") {
  const std::vector<std::string> args{"--format", "json", "jordan", "--n", "6", "--seed", "4", "--count", "2"};
  const Outcome first = invoke(args);
  const Outcome second = invoke(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const json doc = json::parse(first.out);
  CHECK(doc.at("schema") == "report");
  CHECK(doc.at("status") == "ok");
  CHECK(doc.at("config").at("seed") == 4);
}

TEST_CASE("json error reports carry the error kind", "[dispatch]") {
  const Outcome bad = invoke({"--format", "json", "pushout", fixture("bad_c.json")});
  CHECK(bad.code == 1);
  const json doc = json::parse(bad.out);
  CHECK(doc.at("status") == "error");
  CHECK(doc.at("result").at("error").at("kind") == "total-disconnection");
}

TEST_CASE("pbp expectations drive the status", "[dispatch]") {
  CHECK(invoke({"pbp", "--n", "5", "--count", "20", "--seed", "1"}).code == 0);
  CHECK(invoke({"pbp", "--witness", "--n", "6"}).code == 0);
  CHECK(invoke({"pbp", "--witness", "--n", "6", "--expect", "holds"}).code == 2);
  CHECK(invoke({"pbp", fixture("circle_pbp.json"), "--expect", "violated"}).code == 0);
  CHECK(invoke({"pbp", fixture("circle_pbp.json"), "--expect", "holds"}).code == 2);
  CHECK(invoke({"pbp", "--expect", "sometimes"}).code == 1);
}

TEST_CASE("arc subcommand reports the separating subarc", "[dispatch]") {
  const Outcome arc = invoke({"--format", "json", "arc", fixture("interval_arc.json")});
  CHECK(arc.code == 0);
  const json doc = json::parse(arc.out);
  CHECK(doc.at("status") == "ok");
  CHECK(arc.out.find("\"v2\"") != std::string::npos);
}

TEST_CASE("pi1 of built-in models", "[dispatch]") {
  const Outcome sphere = invoke({"pi1", "--model", "grid_sphere", "--n", "3"});
  CHECK(sphere.code == 0);
  CHECK(sphere.out.find("chi=2") != std::string::npos);
  CHECK(sphere.out.find("abelianization: 0") != std::string::npos);
  const Outcome annulus = invoke({"pi1", "--model", "annulus", "--n", "4", "--tietze", "50"});
  CHECK(annulus.out.find("abelianization: Z\n") != std::string::npos);
  CHECK(invoke({"pi1", "--model", "torus"}).code == 1);
}

TEST_CASE("command-line misuse exits with 1", "[dispatch]") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frob"}).code == 1);
  CHECK(invoke({"pushout"}).code == 1);
  CHECK(invoke({"--format", "yaml", "pi1"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("run rejects unknown subcommands", "[dispatch]") {
  vk::cli::RunConfig c;
  c.subcommand = "nope";
  CHECK_THROWS_AS(vk::cli::run(c), vk::Error);
}
