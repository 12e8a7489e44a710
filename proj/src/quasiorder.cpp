#include "multitree/quasiorder.hpp"

#include <algorithm>
#include <cmath>

#include "multitree/spectrum.hpp"

namespace multitree {

std::optional<int> OrderRelation::witness() const {
  switch (tag) {
    case Tag::StrictlyLess:
      return less_at;
    case Tag::StrictlyGreater:
      return greater_at;
    case Tag::Incomparable:
      return std::min(*less_at, *greater_at);
    case Tag::Equivalent:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(OrderRelation::Tag tag) {
  switch (tag) {
    case OrderRelation::Tag::StrictlyLess:
      return "strictly-less";
    case OrderRelation::Tag::Equivalent:
      return "equivalent";
    case OrderRelation::Tag::StrictlyGreater:
      return "strictly-greater";
    case OrderRelation::Tag::Incomparable:
      return "incomparable";
  }
  return "?";
}

OrderRelation compare(const CoeffVector& c1, const CoeffVector& c2) {
  if (c1.n != c2.n)
    throw OrderMismatchError("comparison requires equal order; got n = " +
                             std::to_string(c1.n) + " and n = " +
                             std::to_string(c2.n));
  OrderRelation rel;
  for (std::size_t k = 0; k < c1.b.size(); ++k) {
    if (c1.b[k] < c2.b[k] && !rel.less_at) rel.less_at = static_cast<int>(k);
    if (c1.b[k] > c2.b[k] && !rel.greater_at)
      rel.greater_at = static_cast<int>(k);
  }
  if (rel.less_at && rel.greater_at)
    rel.tag = OrderRelation::Tag::Incomparable;
  else if (rel.less_at)
    rel.tag = OrderRelation::Tag::StrictlyLess;
  else if (rel.greater_at)
    rel.tag = OrderRelation::Tag::StrictlyGreater;
  else
    rel.tag = OrderRelation::Tag::Equivalent;
  return rel;
}

MonotoneCheck assert_monotone(const WeightedForest& g1,
                              const WeightedForest& g2) {
  MonotoneCheck out;
  out.relation = compare(coeffs(g1), coeffs(g2));
  out.energy1 = energy_eigen(g1);
  out.energy2 = energy_eigen(g2);
  switch (out.relation.tag) {
    case OrderRelation::Tag::StrictlyLess:
      out.pass = out.energy1 < out.energy2 - 1e-12;
      out.detail = out.pass ? "strict domination, strictly smaller energy"
                            : "strict domination but energies not separated";
      break;
    case OrderRelation::Tag::StrictlyGreater:
      out.pass = out.energy2 < out.energy1 - 1e-12;
      out.detail = out.pass ? "strict domination, strictly smaller energy"
                            : "strict domination but energies not separated";
      break;
    case OrderRelation::Tag::Equivalent:
      out.pass = std::abs(out.energy1 - out.energy2) <= 1e-9;
      out.detail = out.pass ? "equal coefficient vectors, equal energies"
                            : "equal coefficient vectors but energies differ";
      break;
    case OrderRelation::Tag::Incomparable:
      out.pass = true;
      out.detail = "incomparable; no energy prediction";
      break;
  }
  return out;
}

}  // namespace multitree
