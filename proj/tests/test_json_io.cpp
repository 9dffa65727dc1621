#include <doctest.h>

#include <sstream>

#include "ppreal/errors.hpp"
#include "ppreal/json_io.hpp"
#include "ppreal/random.hpp"

using namespace ppreal;

TEST_CASE("poset round trip") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_poset(rng, rng.range(0, 6));
    const auto j = poset_to_json(p);
    CHECK(j["leq"].size() == p.cover_relations().size());
    CHECK(poset_from_json(j) == p);
    CHECK(poset_from_json(Json::parse(j.dump())) == p);
  }
}

TEST_CASE("poset input errors") {
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"]})")), ParseError);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": 3, "leq": []})")), ParseError);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a", "b"], "leq": [[0, 1], [1, 0]]})")),
                  AntisymmetryViolation);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"], "leq": [[0, 1]]})")),
                  IndexOutOfRange);
}

TEST_CASE("nerve level and cell complex") {
  const auto j = nerve_level_to_json(nerve(standard_poset(1)), 1);
  CHECK(j["level"] == 1);
  CHECK(j["simplices"] == Json::parse("[[0,0],[0,1],[1,1]]"));
  const auto c = complex_to_json(cell_complex(product(standard_poset(1), standard_poset(1))));
  CHECK(c["f_vector"] == Json::parse("[4,5,2]"));
  CHECK(c["cells"]["2"].size() == 2);
}

TEST_CASE("OFF export") {
  const auto off = export_off(1, 1);
  std::istringstream in(off);
  std::string header;
  std::size_t v = 0, f = 0, e = 0;
  in >> header >> v >> f >> e;
  CHECK(header == "OFF");
  CHECK(v == 4);
  CHECK(f == 2);

  std::istringstream line(export_off(1, 0));
  line >> header >> v >> f >> e;
  CHECK(v == 2);
  CHECK(f == 1);

  CHECK_NOTHROW(export_off(2, 1));
  CHECK_NOTHROW(export_off(0, 0));
  CHECK_THROWS_AS(export_off(2, 2), UnsupportedExportDimension);
  CHECK_THROWS_AS(export_off(3, 0), UnsupportedExportDimension);
}

TEST_CASE("ppset round trip") {
  const auto s = Ppset::standard(2);
  const auto e = Ppset::embedded({0, 3}, 5, true);
  for (const auto& p : {s, e, Ppset::product(s, e), Ppset::disjoint(s, Ppset::embedded({1}, 4)),
                        Ppset::sub(s, {0, 2})})
    CHECK(ppset_from_json(ppset_to_json(p)) == p);
  CHECK_THROWS_AS(ppset_from_json(Json::parse(R"({"type": "circle"})")), ParseError);
  CHECK_THROWS_AS(ppset_from_json(Json::parse(R"({"type": "embedded", "reps": [2, 1], "period": 3})")),
                  InvalidPpset);
}

TEST_CASE("cyclic point round trip") {
  Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_cyclic_point(rng, random_embedded(rng, 3, 6));
    CHECK(cyclic_point_from_json(Json::parse(cyclic_point_to_json(p).dump())) == p);
  }
  CHECK_THROWS_AS(cyclic_point_from_json(Json::parse(
                      R"({"ppset": {"type": "standard", "n": 0}, "segments": [[0, [0], 1, 0]]})")),
                  ParseError);
}

TEST_CASE("morphism round trips") {
  for (const auto& a : hom_enumerate_delta_tilde(2, 1)) CHECK(delta_from_json(delta_to_json(a)) == a);
  for (const auto& f : hom_enumerate_nabla(1, 2)) CHECK(nabla_from_json(nabla_to_json(f)) == f);
  CHECK_THROWS_AS(delta_from_json(Json::parse(R"({"model": "pair", "n": 1})")), ParseError);
}

TEST_CASE("big integers") {
  const mpz_class small = 42;
  CHECK(integer_to_json(small).is_number_integer());
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  const auto j = integer_to_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(j) == big);
  CHECK(integer_from_json(integer_to_json(-small)) == -small);
  CHECK_THROWS_AS(integer_from_json(Json("12x")), ParseError);
}
