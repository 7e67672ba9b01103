#include "actioncode/field_matrix.hpp"

namespace actioncode::gf {

FieldMatrix::FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows_ < 0 || cols_ < 0) throw ValidationError("FieldMatrix: negative dimensions");
  e_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
}

FieldMatrix FieldMatrix::identity(int n) {
  FieldMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix mat_mul(const FieldSpec& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("mat_mul: inner dimension mismatch");
  FieldMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      Elem aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        Elem bkj = b.at(k, j);
        if (bkj) c.at(i, j) ^= f.mul(aik, bkj);
      }
    }
  }
  return c;
}

int rank(const FieldSpec& f, FieldMatrix a) {
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = col; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    }
    Elem piv_inv = f.inv(a.at(r, col));
    for (int i = r + 1; i < a.rows(); ++i) {
      Elem factor = f.mul(a.at(i, col), piv_inv);
      if (factor == 0) continue;
      for (int j = col; j < a.cols(); ++j) {
        a.at(i, j) ^= f.mul(factor, a.at(r, j));
      }
    }
    ++r;
  }
  return r;
}

FieldMatrix invert_unitriangular(const FieldSpec& f, const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("invert_unitriangular: matrix not square");
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != 1) throw ValidationError("invert_unitriangular: diagonal entry != 1");
    for (int j = 0; j < i; ++j) {
      if (m.at(i, j) != 0) throw ValidationError("invert_unitriangular: nonzero below diagonal");
    }
  }
  // Back-substitution, rows bottom-up: g[i][j] = delta_ij + sum_{k>i} m[i][k] g[k][j].
  FieldMatrix g = FieldMatrix::identity(n);
  for (int i = n - 2; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      Elem acc = 0;
      for (int k = i + 1; k <= j; ++k) {
        Elem mik = m.at(i, k);
        if (mik && g.at(k, j)) acc ^= f.mul(mik, g.at(k, j));
      }
      g.at(i, j) = acc;
    }
  }
  return g;
}

}  // namespace actioncode::gf
