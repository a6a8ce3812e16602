#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "cli.hpp"
#include "spec_io.hpp"

#include "boroczky/error.hpp"

using namespace boroczky;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Errc parse_error_code(const std::string& text) {
  try {
    io::parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("spec was accepted: " << text);
  return Errc::InvalidArgument;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("boroczky-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  return dir;
}

const std::string kTwoPool = R"({"dim":1,"coords":[{"pre":[],"period":[1]}]})";
const std::string kOnePool = R"({"dim":1,"coords":[{"pre":[],"period":[1,-1]}]})";
const std::string kPlane = R"({"dim":2,"coords":[{"pre":[1],"period":[-1]},{"pre":[],"period":[1,-1]}]})";

}  // namespace

TEST_CASE("parse_spec") {
  auto s = io::parse_spec(kTwoPool);
  CHECK(s.dim() == 1);
  CHECK(s == SequenceSpec::eventually_periodic({{{}, {1}}}));
  s = io::parse_spec(kPlane);
  CHECK(s.dim() == 2);
  s = io::parse_spec(R"({"dim":2,"word":[[1,-1],[-1,-1]]})");
  CHECK_FALSE(s.is_periodic_mode());
  CHECK(s.length() == 2);

  CHECK(parse_error_code(R"({"dim":1,"coords":[{"pre":[],"period":[]}]})") == Errc::ValidationError);
  CHECK(parse_error_code(R"({"dim":1,"coords":[{"pre":[],"period":[2]}]})") == Errc::ValidationError);
  CHECK(parse_error_code(R"({"dim":2,"coords":[{"pre":[],"period":[1]}]})") == Errc::ValidationError);
  CHECK(parse_error_code(R"({"dim":0,"coords":[]})") == Errc::ValidationError);
  CHECK(parse_error_code(R"({"coords":[{"pre":[],"period":[1]}]})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"dim":1,"coords":[{"period":[1]}]})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"dim":1,"coords":[{"pre":[],"period":["+"]}]})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"dim":1})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"dim":1,"word":[[1]],"coords":[]})") == Errc::ParseError);
  CHECK(parse_error_code("[1,2]") == Errc::ParseError);
  CHECK(parse_error_code("{") == Errc::ParseError);
}

TEST_CASE("canonical spec documents") {
  const auto a = io::parse_spec(R"({"dim":1,"coords":[{"pre":[1,1],"period":[1]}]})");
  const auto b = io::parse_spec(kTwoPool);
  CHECK(io::spec_json(a) == io::spec_json(b));
  CHECK(io::spec_hash(a) == io::spec_hash(b));
  CHECK(io::spec_hash(a) != io::spec_hash(io::parse_spec(kOnePool)));
  CHECK(io::parse_spec(io::spec_json(io::parse_spec(kPlane)).dump()) == io::parse_spec(kPlane));
  CHECK(io::hex(0xabc) == "0000000000000abc");
}

TEST_CASE("census documents round trip") {
  const auto spec = io::parse_spec(kPlane);
  const auto r = census(spec, 2, CensusWindow::centered(2, 0, 8));
  const auto back = io::census_from_json(io::to_json(r));
  CHECK(back.k == r.k);
  CHECK(back.window == r.window);
  REQUIRE(back.classes.size() == r.classes.size());
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    CHECK(back.classes[i].code == r.classes[i].code);
    CHECK(back.classes[i].witness == r.classes[i].witness);
    CHECK(back.classes[i].multiplicity == r.classes[i].multiplicity);
    CHECK(back.classes[i].stabilizer_order == r.classes[i].stabilizer_order);
  }
}

TEST_CASE("symmetry subcommand") {
  auto r = run({"symmetry", "--inline", kTwoPool});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"group\": \"Z x B1\"") != std::string::npos);
  r = run({"symmetry", "--inline", R"({"dim":1,"word":[[1],[-1]]})", "--assume-aperiodic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"group\": \"trivial\"") != std::string::npos);
  r = run({"symmetry", "--inline", R"({"dim":1,"word":[[1],[-1]]})"});
  CHECK(r.code == 2);
}

TEST_CASE("pools subcommand") {
  const auto r = run({"pools", "--inline", kPlane});
  CHECK(r.code == 0);
  const auto doc = io::Json::parse(r.out);
  CHECK(doc["pool_count"] == 2);
  CHECK(doc["support_signature"] == "E^1 (+) octant^1");
  CHECK(doc["walls"].size() == 1);
}

TEST_CASE("census subcommand persists and reuses reports") {
  const auto dir = scratch_dir("census");
  const std::vector<std::string> args{"census", "--inline", kOnePool, "--k", "1..8", "--out", dir.string()};
  const auto first = run(args);
  CHECK(first.code == 0);
  std::istringstream lines(first.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("k\tN_k", 0) == 0);
  for (std::int64_t k = 1; k <= 8; ++k) {
    REQUIRE(std::getline(lines, line));
    std::istringstream row(line);
    std::int64_t kk = 0, n = 0;
    row >> kk >> n;
    CHECK(kk == k);
    CHECK(n == std::int64_t{1} << (k - 1));
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    std::ifstream in(entry.path());
    const auto doc = io::Json::parse(in);
    CHECK(doc["spec"] == io::spec_json(io::parse_spec(kOnePool)));
  }
  CHECK(files == 8);

  const auto second = run(args);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(second.err.find("reusing") != std::string::npos);

  const auto lt = run({"local-theorem", "--inline", kOnePool, "--k", "0..8", "--out", dir.string()});
  CHECK(lt.code == 0);
  CHECK(io::Json::parse(lt.out)["verdict"] == "NonCrystallographic(condition 2 at k=0)");
  fs::remove_all(dir);
}

TEST_CASE("census refusals exit 2") {
  const auto dir = scratch_dir("small");
  const auto r = run({"census", "--inline", kOnePool, "--k", "5", "--half-width", "4", "--out", dir.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("WindowTooSmall") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("window and render subcommands") {
  const auto w1 = run({"window", "--inline", kTwoPool, "--layers", "0..1", "--half-width", "1"});
  CHECK(w1.code == 0);
  const auto doc = io::Json::parse(w1.out);
  CHECK(doc["nodes"].size() == 2);
  CHECK(doc["edges"][0]["from_facet"] == "A");
  CHECK(run({"window", "--inline", kTwoPool, "--layers", "0..1", "--half-width", "1"}).out == w1.out);

  const auto svg = run({"render", "--inline", kTwoPool, "--model", "disc", "--style", "pools=true"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);

  auto r = run({"render", "--inline", kPlane, "--model", "disc"});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnsupportedDimension") != std::string::npos);
  r = run({"render", "--inline", kPlane, "--model", "footprint", "--layers", "0..1"});
  CHECK(r.code == 0);
  r = run({"render", "--inline", kTwoPool, "--style", "nonsense"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"pools"}).code == 2);
  CHECK(run({"pools", "--inline", kTwoPool, "--spec", "x.json"}).code == 2);
  CHECK(run({"pools", "--spec", "/nonexistent/spec.json"}).code == 2);
  CHECK(run({"census", "--inline", kTwoPool, "--k", "3..1"}).code == 2);
  CHECK(run({"census", "--inline", kTwoPool, "--k", "a..b"}).code == 2);
}

TEST_CASE("spec files and verify") {
  const auto dir = scratch_dir("verify");
  fs::create_directories(dir);
  const auto path = dir / "plane.spec";
  std::ofstream(path) << kPlane;
  const auto r = run({"verify", "--spec", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("ok   pool-count") != std::string::npos);

  const auto outcomes = cli::verify_spec(kOnePool);
  CHECK(outcomes.size() == 10);
  for (const auto& o : outcomes) CHECK(o.status == cli::PropertyOutcome::Status::Pass);
  fs::remove_all(dir);
}
