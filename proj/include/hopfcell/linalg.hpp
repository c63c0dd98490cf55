#ifndef HOPFCELL_LINALG_HPP
#define HOPFCELL_LINALG_HPP

#include "hopfcell/scalar.hpp"

#include <optional>
#include <vector>

namespace hopfcell {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;  // row-major

/// Exact row reduction over the scalar field.
struct Echelon {
  ScalarMat rows;              // reduced row echelon form
  std::vector<long> pivot_col; // per echelon row
  long rank = 0;
};

Echelon row_reduce(ScalarMat m, const FieldCtx& ctx);
long rank(ScalarMat m, const FieldCtx& ctx);

/// All solutions of A x = 0: a basis of the nullspace.
std::vector<ScalarVec> nullspace(const ScalarMat& a, std::size_t ncols, const FieldCtx& ctx);

/// One solution of A x = b, if any.
std::optional<ScalarVec> solve(const ScalarMat& a, const ScalarVec& b, const FieldCtx& ctx);

}  // namespace hopfcell

#endif
