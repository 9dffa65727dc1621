#include "ppreal/json_io.hpp"

#include <sstream>

#include "ppreal/errors.hpp"

namespace ppreal {

namespace {

// Runs a reader, turning the json library's type and key errors into
// ParseError.
template <typename F>
auto parsing(const char* what, F&& read) -> decltype(read()) {
  try {
    return read();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json poset_to_json(const FinitePoset& p) {
  Json leq = Json::array();
  for (const auto& [x, y] : p.cover_relations()) leq.push_back({x, y});
  return {{"elements", p.names()}, {"leq", leq}};
}

FinitePoset poset_from_json(const Json& j) {
  return parsing("poset", [&] {
    auto names = field(j, "elements").get<std::vector<std::string>>();
    std::vector<Relation> relations;
    for (const auto& r : field(j, "leq")) {
      if (!r.is_array() || r.size() != 2)
        throw ParseError("a relation is a pair [i, j]");
      relations.emplace_back(r[0].get<Element>(), r[1].get<Element>());
    }
    const std::size_t size = names.size();
    return FinitePoset::from_relations(size, relations, std::move(names));
  });
}

Json nerve_level_to_json(const NerveSet& s, std::size_t k) {
  Json simplices = Json::array();
  for (const auto& sigma : s.level(k)) simplices.push_back(sigma.values());
  return {{"level", k}, {"simplices", simplices}};
}

Json complex_to_json(const CellComplex& cx) {
  Json cells = Json::object();
  for (std::size_t k = 0; k < cx.cells_by_dim.size(); ++k) {
    Json list = Json::array();
    for (const auto& c : cx.cells_by_dim[k]) list.push_back(c.elements());
    cells[std::to_string(k)] = list;
  }
  return {{"f_vector", cx.f_vector()}, {"cells", cells}};
}

std::string export_off(std::size_t n, std::size_t m) {
  if (n > 2 || m > 2 || n + m > 3)
    throw UnsupportedExportDimension(
        "OFF export covers [n] x [m] with n, m <= 2 and n + m <= 3, got [" +
        std::to_string(n) + "] x [" + std::to_string(m) + "]");
  const FinitePoset q = standard_poset(m);
  const CellComplex cx = cell_complex(product(standard_poset(n), q));
  const std::size_t face_dim = cx.dimension() >= 2 ? 2 : 1;
  const std::vector<Chain> faces =
      cx.dimension() >= 1 ? cx.cells_by_dim[face_dim] : std::vector<Chain>{};

  // sides are at most 2, so i/side is 0, 1/2 or 1
  auto decimal = [](std::size_t a, std::size_t side) {
    if (side == 0 || a == 0) return std::string("0");
    if (a == side) return std::string("1");
    return std::string("0.5");
  };
  std::ostringstream os;
  os << "OFF\n" << cx.cells_by_dim[0].size() << " " << faces.size() << " 0\n";
  for (Element v = 0; v < cx.poset.size(); ++v) {
    const std::size_t i = v / q.size();
    const std::size_t j = v % q.size();
    os << decimal(i, n) << " " << decimal(j, m) << " 0\n";
  }
  for (const auto& f : faces) {
    os << f.length();
    for (auto v : f.elements()) os << " " << v;
    os << "\n";
  }
  return os.str();
}

Json ppset_to_json(const Ppset& p) {
  switch (p.kind()) {
    case Ppset::Kind::standard:
      return {{"type", "standard"}, {"n", p.standard_n()}};
    case Ppset::Kind::embedded: {
      Json j = {{"type", "embedded"}, {"reps", p.reps()}, {"period", p.period()}};
      if (p.reversed()) j["reversed"] = true;
      return j;
    }
    case Ppset::Kind::product:
    case Ppset::Kind::disjoint:
      return {{"type", p.kind() == Ppset::Kind::product ? "product" : "disjoint"},
              {"left", ppset_to_json(p.left())},
              {"right", ppset_to_json(p.right())}};
    case Ppset::Kind::sub:
      return {{"type", "sub"},
              {"parent", ppset_to_json(p.parent())},
              {"orbits", p.sub_orbits()}};
  }
  return {};
}

Ppset ppset_from_json(const Json& j) {
  return parsing("ppset", [&] {
    const auto type = field(j, "type").get<std::string>();
    if (type == "standard") return Ppset::standard(field(j, "n").get<std::size_t>());
    if (type == "embedded")
      return Ppset::embedded(field(j, "reps").get<std::vector<std::int64_t>>(),
                             field(j, "period").get<std::int64_t>(),
                             j.value("reversed", false));
    if (type == "product")
      return Ppset::product(ppset_from_json(field(j, "left")),
                            ppset_from_json(field(j, "right")));
    if (type == "disjoint")
      return Ppset::disjoint(ppset_from_json(field(j, "left")),
                             ppset_from_json(field(j, "right")));
    if (type == "sub")
      return Ppset::sub(ppset_from_json(field(j, "parent")),
                        field(j, "orbits").get<std::vector<std::size_t>>());
    throw ParseError("unknown ppset type \"" + type + "\"");
  });
}

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json cyclic_point_to_json(const CyclicPoint& p) {
  Json segments = Json::array();
  for (const auto& s : p.segments())
    segments.push_back({s.value.orbit, s.value.offset,
                        integer_to_json(s.length.get_num()),
                        integer_to_json(s.length.get_den())});
  return {{"ppset", ppset_to_json(p.ppset())}, {"segments", segments}};
}

CyclicPoint cyclic_point_from_json(const Json& j) {
  return parsing("cyclic point", [&] {
    Ppset ppset = ppset_from_json(field(j, "ppset"));
    std::vector<CyclicSegment> segments;
    for (const auto& s : field(j, "segments")) {
      if (!s.is_array() || s.size() != 4)
        throw ParseError("a segment is [orbit, [offsets], num, den]");
      const mpz_class den = integer_from_json(s[3]);
      if (den == 0) throw ParseError("zero denominator");
      Rational length(integer_from_json(s[2]), den);
      length.canonicalize();
      segments.push_back(
          {{s[0].get<std::size_t>(), s[1].get<Offset>()}, std::move(length)});
    }
    return CyclicPoint(std::move(ppset), std::move(segments));
  });
}

Json delta_to_json(const DeltaTildeMor& a) {
  return {{"model", "pair"}, {"n", a.n()}, {"m", a.m()}, {"chi", a.chi()}, {"u", a.u()}};
}

DeltaTildeMor delta_from_json(const Json& j) {
  return parsing("pair-model morphism", [&] {
    return DeltaTildeMor(field(j, "n").get<std::size_t>(),
                         field(j, "m").get<std::size_t>(),
                         field(j, "chi").get<std::vector<std::size_t>>(),
                         field(j, "u").get<std::size_t>());
  });
}

Json nabla_to_json(const NablaTildeMor& f) {
  return {{"model", "nabla"}, {"n", f.n()}, {"m", f.m()}, {"f", f.values()}};
}

NablaTildeMor nabla_from_json(const Json& j) {
  return parsing("periodic-model morphism", [&] {
    return NablaTildeMor(field(j, "n").get<std::size_t>(),
                         field(j, "m").get<std::size_t>(),
                         field(j, "f").get<std::vector<std::int64_t>>());
  });
}

}  // namespace ppreal
