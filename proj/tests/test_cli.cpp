#include <doctest.h>

#include <sstream>

#include "ppreal/cli.hpp"
#include "ppreal/errors.hpp"

using namespace ppreal;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("hom counts") {
  CHECK(run({"hom", "cyclic", "1", "1", "--count-only"}).out == "6\n");
  CHECK(run({"hom", "delta", "1", "1", "--count-only"}).out == "3\n");
  CHECK(run({"hom", "cyclic", "0", "0", "--count-only"}).out == "1\n");
  const auto listed = run({"hom", "cyclic", "1", "1"});
  CHECK(listed.code == 0);
  CHECK(line_count(listed.out) == 6);
  CHECK(line_count(run({"hom", "cyclic", "1", "1", "--model", "nabla"}).out) == 6);
  CHECK(run({"hom", "circle", "1", "1"}).code == 2);
}

TEST_CASE("composition and duality") {
  const auto id = run({"compose", "chi=[0,1];u=0", "chi=[0,1];u=1"});
  CHECK(id.code == 0);
  CHECK(id.out.find("u=1") != std::string::npos);
  const auto d = run({"compose", "f=[1,2];m=1", "--dual"});
  CHECK(d.code == 0);
  CHECK(d.out.find("chi=[0,1];u=1") != std::string::npos);
  const auto random = run({"compose", "--random", "50", "--seed", "3", "--via-oracle"});
  CHECK(random.code == 0);
  const auto mismatch = run({"compose", "chi=[0];u=0", "chi=[0,1];u=0;m=1"});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("ObjectMismatch") != std::string::npos);
  CHECK(run({"compose", "f=[0,1];u=1"}).code == 2);
}

TEST_CASE("realize") {
  CHECK(run({"realize", "product", "[1]", "[1]", "--f-vector"}).out == "4 5 2\n");
  CHECK(run({"realize", "[2]", "--euler"}).out == "1\n");
  CHECK(run({"realize", "[0]", "--f-vector"}).out == "1\n");
  const auto off = run({"realize", "product", "[1]", "[1]", "--export", "off"});
  CHECK(off.code == 0);
  CHECK(off.out.rfind("OFF", 0) == 0);
  const auto big = run({"realize", "product", "[2]", "[2]", "--export", "off"});
  CHECK(big.code == 2);
  CHECK(big.err.find("UnsupportedExportDimension") != std::string::npos);
  CHECK(run({"realize", "[x]"}).code == 2);
}

TEST_CASE("nerve and ppset") {
  CHECK(run({"nerve", "[2]", "--level", "1", "--count-only"}).out == "6\n");
  CHECK(run({"nerve", "[2]", "--level", "1", "--json"}).out.find("\"level\":1") != std::string::npos);
  const auto nf = run({"ppset", "embedded", "0,3@5", "--normal-form"});
  CHECK(nf.code == 0);
  CHECK(nf.out.find("0->0 1->3") != std::string::npos);
  const auto rev = run({"ppset", "reversed", "embedded", "0,3@5", "--normal-form"});
  CHECK(rev.code == 2);
  CHECK(rev.err.find("NotPositiveArchimedean") != std::string::npos);
  CHECK(run({"ppset", "product", "[[1]]", "embedded", "0,3@5"}).out.find("degree 2") !=
        std::string::npos);
}

TEST_CASE("points") {
  const auto json = run({"point", "--bary", "1/3,2/3", "--json"});
  REQUIRE(json.code == 0);
  std::string literal = json.out;
  literal.pop_back();
  const auto homeo = run({"point", literal, "--homeo"});
  CHECK(homeo.out.find("barycentric 1/3 2/3") != std::string::npos);
  CHECK(homeo.out.find("phase 0") != std::string::npos);
  const auto rotated = run({"point", "--bary", "1/2,1/2", "--phase", "1/4", "--homeo"});
  CHECK(rotated.out.find("phase 1/4") != std::string::npos);
  CHECK(run({"point", "--bary", "1/2,1/3"}).code == 2);
  CHECK(run({"point", "--bary", "1/2,1/2", "--phase", "1"}).code == 2);
}

TEST_CASE("verify") {
  const auto one = run({"verify", "delta-laws", "--max-n", "2"});
  CHECK(one.code == 0);
  CHECK(one.out.find("delta-laws") != std::string::npos);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(line_count(run({"verify", "--list"}).out) == 15);
}

TEST_CASE("literal parsers") {
  CHECK(cli::parse_poset({"[3]"}) == standard_poset(3));
  CHECK(cli::grid_shape({"product", "[1]", "[2]"}) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK_FALSE(cli::grid_shape({"@x.json"}).has_value());
  CHECK_THROWS_AS(cli::parse_poset({"product", "[1]"}), ParseError);
  CHECK(cli::parse_ppset({"[[2]]"}) == Ppset::standard(2));
  CHECK(cli::parse_ppset({"embedded", "0,3@5"}) == Ppset::embedded({0, 3}, 5));
  CHECK_THROWS_AS(cli::parse_ppset({"embedded", "0,3"}), ParseError);

  const auto lit = cli::parse_morphism("chi=[0,1];u=1", 1);
  CHECK(lit.pair_model);
  CHECK(lit.value == functor_F(DeltaTildeMor(1, 1, {0, 1}, 1)));
  CHECK(cli::parse_morphism("f=[0,3];m=2", 0).value == NablaTildeMor(1, 2, {0, 3}));
  CHECK(cli::literal_source("f=[0,3,3]") == 2);
  CHECK_THROWS_AS(cli::parse_morphism("chi=[0,1", 1), ParseError);
}
