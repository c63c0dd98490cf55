#ifndef HOPFCELL_PARSE_HPP
#define HOPFCELL_PARSE_HPP

#include "hopfcell/ncpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hopfcell {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Presentation-DSL expression: sums of scalar-weighted generator products.
/// `*` and juxtaposition both mean noncommutative concatenation; `name^k`
/// repeats a generator; `name^-k` resolves to the declared inverse generator;
/// the symbol q denotes the field parameter when the context has one.
NCPoly parse_poly(const std::string& src, AlphabetPtr alph, const FieldCtx& ctx);

/// One summand per `left # right` tensor term, signs folded into the left leg.
std::vector<std::pair<NCPoly, NCPoly>> parse_tensor_terms(const std::string& src,
                                                          AlphabetPtr left,
                                                          AlphabetPtr right,
                                                          const FieldCtx& ctx);

}  // namespace hopfcell

#endif
