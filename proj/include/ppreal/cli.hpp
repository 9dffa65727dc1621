#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppreal/cyclic_category.hpp"
#include "ppreal/poset.hpp"
#include "ppreal/ppset.hpp"

namespace ppreal::cli {

/// Runs the command line `args` (program name excluded). Returns the exit
/// status: 0 success, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Object literals. All throw ParseError on malformed input.

/// `[n]`, `product A B`, `@file.json`.
FinitePoset parse_poset(const std::vector<std::string>& tokens);
/// (n, m) when the tokens spell [n] or product [n] [m].
std::optional<std::pair<std::size_t, std::size_t>> grid_shape(
    const std::vector<std::string>& tokens);
/// `[[n]]`, `embedded 0,3@5`, `reversed embedded 0,3@5`, `product A B`,
/// `@file.json`.
Ppset parse_ppset(const std::vector<std::string>& tokens);

/// A cyclic morphism in either textual model: "chi=[..];u=r[;m=k]" or
/// "f=[..][;m=k]". `default_m` is used when m is absent.
struct MorphismLiteral {
  bool pair_model;
  NablaTildeMor value;
};
MorphismLiteral parse_morphism(const std::string& text, std::size_t default_m);
/// The source object [n] of a literal, read without knowing m.
std::size_t literal_source(const std::string& text);

}  // namespace ppreal::cli
