#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superds/algebra.hpp"
#include "superds/linalg.hpp"
#include "superds/rootsys.hpp"

namespace superds {

// Finite-dimensional super vector space with named operators. Column j of an
// operator holds the image of basis vector j.
struct MatrixSuperModule {
  std::vector<Parity> parity;
  std::map<std::string, Matrix> ops;
  std::set<std::string> odd;

  size_t dim() const { return parity.size(); }
  SuperDim sdim() const;
  bool is_odd(const std::string& op) const { return odd.count(op) > 0; }
  const Matrix& op(const std::string& name) const;
  // Shapes match and every operator respects its declared parity.
  void check() const;
};

// Adds `name` = sum c_i * op_i (all summands of one parity).
MatrixSuperModule with_combination(MatrixSuperModule m, const std::string& name,
                                   const std::vector<std::pair<std::string, Rational>>& terms);
MatrixSuperModule direct_sum(const MatrixSuperModule& a, const MatrixSuperModule& b);
MatrixSuperModule parity_shift(const MatrixSuperModule& m);
// Same module written in another homogeneous basis (g even and invertible).
MatrixSuperModule change_basis(const MatrixSuperModule& m, const Matrix& g);

struct DSResult {
  MatrixSuperModule module;
  std::vector<std::string> dropped;  // operators that do not supercommute with x
};

// ker x / im x with the operators that descend. An explicit `induced` list is
// strict (DoesNotCommute); an empty list tries every other operator and drops
// the ones that fail.
DSResult ds(const MatrixSuperModule& m, const std::string& x,
            const std::vector<std::string>& induced = {});
SuperDim ds_dim(const MatrixSuperModule& m, const std::string& x);

// Operator names: x, y (odd), h (even), with [h,x] = x and [h,y] = -y.
MatrixSuperModule zigzag(int s, int sign);
MatrixSuperModule m4();
// V^+_{2j} + V^-_{2j} with x1 := x, x2 := y.
MatrixSuperModule p2_simple(int j);

struct Lem42Result {
  MatrixSuperModule reduced;  // on the common kernel of the h operators
  SuperDim ds_full;
  SuperDim ds_reduced;
  bool agree;
};
Lem42Result lem42_reduce(const MatrixSuperModule& m, const std::string& x,
                         const std::vector<std::string>& h_names);

struct LemDSXY {
  SuperDim ds_ybar_ds_x;
  SuperDim ds_x_plus_y;
  long j;
};
LemDSXY lemdsxy_check(const MatrixSuperModule& m);

// Submodule generated by homogeneous seed vectors, and the quotient by it.
std::pair<MatrixSuperModule, MatrixSuperModule> generated_submodule(
    const MatrixSuperModule& m, const std::vector<RVec>& seeds);

}  // namespace superds
