#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "ppreal/cyclic_category.hpp"
#include "ppreal/cyclic_realization.hpp"
#include "ppreal/nerve.hpp"
#include "ppreal/poset.hpp"
#include "ppreal/ppset.hpp"
#include "ppreal/realization.hpp"

namespace ppreal {

using Json = nlohmann::json;

// Every reader throws ParseError for malformed input; the domain errors of
// the constructors (AntisymmetryViolation, InvalidPpset, ...) pass through.

/// {"elements": [label, ...], "leq": [[i, j], ...]}; the writer emits the
/// covering pairs only.
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

/// {"level": k, "simplices": [[v0, ..., vk], ...]}
Json nerve_level_to_json(const NerveSet& s, std::size_t k);

/// {"f_vector": [...], "cells": {"0": [[v]], "1": [[v, w]], ...}}
Json complex_to_json(const CellComplex& cx);

/// ASCII OFF of the cell complex of [n] x [m], vertex (i, j) placed at
/// (i/n, j/m, 0) (0 when the side is [0]). Faces are the triangles, or the
/// edges when the complex is 1-dimensional. Throws
/// UnsupportedExportDimension unless n, m <= 2 and n + m <= 3.
std::string export_off(std::size_t n, std::size_t m);

/// {"type": "standard", "n": n} | {"type": "embedded", "reps": [...],
/// "period": M, "reversed": bool?} | {"type": "product" | "disjoint",
/// "left": ..., "right": ...} | {"type": "sub", "parent": ..., "orbits": [...]}
Json ppset_to_json(const Ppset& p);
Ppset ppset_from_json(const Json& j);

/// {"ppset": ..., "segments": [[orbit, [offsets...], num, den], ...]}
Json cyclic_point_to_json(const CyclicPoint& p);
CyclicPoint cyclic_point_from_json(const Json& j);

/// {"model": "pair", "n": n, "m": m, "chi": [...], "u": u}
Json delta_to_json(const DeltaTildeMor& a);
DeltaTildeMor delta_from_json(const Json& j);
/// {"model": "nabla", "n": n, "m": m, "f": [...]}
Json nabla_to_json(const NablaTildeMor& f);
NablaTildeMor nabla_from_json(const Json& j);

/// Rationals as integers when they fit, decimal strings otherwise.
Json integer_to_json(const mpz_class& z);
mpz_class integer_from_json(const Json& j);

}  // namespace ppreal
