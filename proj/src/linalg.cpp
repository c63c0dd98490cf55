#include "hopfcell/linalg.hpp"

namespace hopfcell {

namespace {

// Pivot preference: cheap scalars keep the elimination small.  Exactness does
// not depend on the choice.
int scalar_cost(const Scalar& s) {
  switch (s.ctx().kind) {
    case FieldKind::RationalFunction: {
      const auto& f = s.ratfun();
      return f.num.degree() + f.den.degree() + 2;
    }
    case FieldKind::Cyclotomic:
      return static_cast<int>(s.cyc().c.size());
    default:
      return 1;
  }
}

}  // namespace

Echelon row_reduce(ScalarMat m, const FieldCtx& ctx) {
  Echelon e;
  if (m.empty()) return e;
  const std::size_t ncols = m[0].size();
  const Scalar zero = Scalar::integer(ctx, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t best = m.size();
    int best_cost = 0;
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      int cost = scalar_cost(m[r][col]);
      if (best == m.size() || cost < best_cost) {
        best = r;
        best_cost = cost;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < ncols; ++c)
      if (!m[row][c].is_zero()) m[row][c] = inv * m[row][c];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (m[row][c].is_zero()) continue;
        m[r][c] = m[r][c] - f * m[row][c];
      }
    }
    e.pivot_col.push_back(static_cast<long>(col));
    ++row;
  }
  m.resize(row, ScalarVec{});
  e.rows = std::move(m);
  e.rank = static_cast<long>(row);
  return e;
}

long rank(ScalarMat m, const FieldCtx& ctx) { return row_reduce(std::move(m), ctx).rank; }

std::vector<ScalarVec> nullspace(const ScalarMat& a, std::size_t ncols, const FieldCtx& ctx) {
  const Scalar zero = Scalar::integer(ctx, 0);
  const Scalar one = Scalar::integer(ctx, 1);
  if (a.empty()) {
    std::vector<ScalarVec> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
      ScalarVec v(ncols, zero);
      v[j] = one;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Echelon e = row_reduce(a, ctx);
  std::vector<bool> is_pivot(ncols, false);
  for (long c : e.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<ScalarVec> basis;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    ScalarVec v(ncols, zero);
    v[j] = one;
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      v[static_cast<std::size_t>(e.pivot_col[r])] = -e.rows[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVec> solve(const ScalarMat& a, const ScalarVec& b, const FieldCtx& ctx) {
  if (a.empty()) return ScalarVec{};
  const std::size_t ncols = a[0].size();
  ScalarMat aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  Echelon e = row_reduce(std::move(aug), ctx);
  const Scalar zero = Scalar::integer(ctx, 0);
  ScalarVec x(ncols, zero);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    auto col = static_cast<std::size_t>(e.pivot_col[r]);
    if (col == ncols) return std::nullopt;  // pivot in the rhs column: inconsistent
    x[col] = e.rows[r][ncols];
  }
  return x;
}

}  // namespace hopfcell
