#pragma once

#include <utility>
#include <vector>

#include "ppreal/rational.hpp"

namespace ppreal::detail {

// Walks the common refinement of two segment lists covering [0,1], calling
// visit(value_a, value_b, length) for each piece.
template <typename A, typename B, typename Visit>
void refine(const std::vector<A>& a, const std::vector<B>& b, Visit visit) {
  std::size_t i = 0, j = 0;
  Rational left_a = a.empty() ? Rational(0) : a[0].length;
  Rational left_b = b.empty() ? Rational(0) : b[0].length;
  while (i < a.size() && j < b.size()) {
    const Rational piece = left_a < left_b ? left_a : left_b;
    visit(a[i].value, b[j].value, piece);
    left_a -= piece;
    left_b -= piece;
    if (sgn(left_a) == 0 && ++i < a.size()) left_a = a[i].length;
    if (sgn(left_b) == 0 && ++j < b.size()) left_b = b[j].length;
  }
}

// The segments before and after position `cut`, a segment straddling the
// cut contributing a piece to each side.
template <typename S>
std::pair<std::vector<S>, std::vector<S>> split_at(const std::vector<S>& segs,
                                                   const Rational& cut) {
  std::vector<S> before, after;
  Rational start = 0;
  for (const auto& s : segs) {
    const Rational end = start + s.length;
    if (end <= cut) {
      before.push_back(s);
    } else if (start >= cut) {
      after.push_back(s);
    } else {
      S head = s, tail = s;
      head.length = cut - start;
      tail.length = end - cut;
      before.push_back(std::move(head));
      after.push_back(std::move(tail));
    }
    start = end;
  }
  return {std::move(before), std::move(after)};
}

}  // namespace ppreal::detail
