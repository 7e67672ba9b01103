#ifndef ACTIONCODE_FIELD_MATRIX_HPP
#define ACTIONCODE_FIELD_MATRIX_HPP

#include <vector>

#include "actioncode/gf2m.hpp"

namespace actioncode::gf {

// Dense row-major matrix over GF(2^m).
class FieldMatrix {
 public:
  FieldMatrix() : rows_(0), cols_(0) {}
  FieldMatrix(int rows, int cols);
  static FieldMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const FieldMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Elem> e_;
};

FieldMatrix mat_mul(const FieldSpec& f, const FieldMatrix& a, const FieldMatrix& b);

// Rank via Gaussian elimination.
int rank(const FieldSpec& f, FieldMatrix a);

// Inverse of an upper unitriangular matrix (unit diagonal, zero below) by
// back-substitution; exact, and the result is again upper unitriangular.
// Throws ValidationError if the input is not upper unitriangular.
FieldMatrix invert_unitriangular(const FieldSpec& f, const FieldMatrix& m);

}  // namespace actioncode::gf

#endif
