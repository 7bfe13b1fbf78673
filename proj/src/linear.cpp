#include "linfty/linear.hpp"

#include "linfty/errors.hpp"

namespace linfty {

Vec LinearMap::apply(const Vec& x) const {
  Vec y;
  for (const auto& [idx, s] : x.coeffs()) {
    if (idx < 0 || idx >= source.size())
      throw UnknownLabel("vector index outside the source basis");
    y += columns.at(idx).scaled(s);
  }
  return y;
}

void LinearMap::validate() const {
  if (static_cast<int>(columns.size()) != source.size())
    throw ValidationError("linear map must have one column per source basis element");
  for (int j = 0; j < source.size(); ++j) {
    if (!columns[j].homogeneous_of(target, source.degree(j) + shift))
      throw DegreeRuleViolation("image of '" + source.label(j) +
                                "' is not homogeneous of the shifted degree");
  }
}

namespace {

// Reduced row echelon form with the deterministic pivot rule: columns left to
// right, pivot on the lowest-index unused row with a nonzero entry. An
// optional right-hand side is carried through the same row operations.
struct Reduction {
  std::vector<std::vector<Scalar>> m;  // rows x cols, dense
  std::vector<int> pivot_row_of_col;   // -1 for free columns
  int rows = 0;
  int cols = 0;
};

Reduction reduce(const LinearMap& map, std::vector<Scalar>* rhs = nullptr) {
  Reduction r;
  r.rows = map.target.size();
  r.cols = map.source.size();
  r.m.assign(r.rows, std::vector<Scalar>(r.cols, Scalar()));
  for (int j = 0; j < r.cols; ++j)
    for (const auto& [i, s] : map.columns.at(j).coeffs()) r.m.at(i).at(j) = s;
  r.pivot_row_of_col.assign(r.cols, -1);

  std::vector<bool> used(r.rows, false);
  for (int j = 0; j < r.cols; ++j) {
    int pivot = -1;
    for (int i = 0; i < r.rows; ++i) {
      if (!used[i] && !r.m[i][j].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    used[pivot] = true;
    r.pivot_row_of_col[j] = pivot;
    Scalar inv = r.m[pivot][j].inverse();
    for (int jj = 0; jj < r.cols; ++jj) r.m[pivot][jj] *= inv;
    if (rhs) (*rhs)[pivot] *= inv;
    for (int i = 0; i < r.rows; ++i) {
      if (i == pivot || r.m[i][j].is_zero()) continue;
      Scalar factor = r.m[i][j];
      for (int jj = 0; jj < r.cols; ++jj) r.m[i][jj] -= factor * r.m[pivot][jj];
      if (rhs) (*rhs)[i] -= factor * (*rhs)[pivot];
    }
  }
  return r;
}

}  // namespace

std::vector<Vec> nullspace(const LinearMap& map) {
  Reduction r = reduce(map);
  std::vector<Vec> basis;
  for (int jf = 0; jf < r.cols; ++jf) {
    if (r.pivot_row_of_col[jf] >= 0) continue;
    Vec v = Vec::unit(jf, Scalar(1));
    for (int jp = 0; jp < r.cols; ++jp) {
      int row = r.pivot_row_of_col[jp];
      if (row < 0) continue;
      v.add_term(jp, -r.m[row][jf]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec solve_preimage(const LinearMap& map, const Vec& y) {
  std::vector<Scalar> rhs(map.target.size(), Scalar());
  for (const auto& [i, s] : y.coeffs()) {
    if (i < 0 || i >= map.target.size())
      throw UnknownLabel("target vector index outside the target basis");
    rhs[i] = s;
  }
  Reduction r = reduce(map, &rhs);
  Vec x;
  for (int j = 0; j < r.cols; ++j) {
    int row = r.pivot_row_of_col[j];
    if (row >= 0) x.add_term(j, rhs[row]);
  }
  if (!(map.apply(x) == y)) throw NotInImage("vector is not in the image of the map");
  return x;
}

}  // namespace linfty
