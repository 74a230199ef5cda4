#pragma once

// The lattice isometries attached to a derived-natural involution: the 2x2
// involution on NS(S^[n]) and its 3x3 extension to the algebraic Mukai
// lattice, plus generic Gram-form verification helpers.

#include "hilbk3/lattice.hpp"
#include "hilbk3/pell.hpp"

namespace hilbk3 {

// [[2a^2+1, -2(n-1)ab], [2tab, -2a^2-1]] in basis (theta(0,-H,0), theta(1,0,n-1));
// requires a,b > 0 with a^2 - t(n-1) b^2 = -1
Mat2 ns_involution(const Int& t, const Int& n, const PellPair& p);

// [[-a^2, -2tab, -tb^2], [(n-1)ab, 2a^2+1, ab], [-(n-1)^2 tb^2, -2t(n-1)ab, -a^2]]
// in basis (1,0,0), (0,H,0), (0,0,1); fixes v_n = (1,0,1-n)
Mat3 mukai_extension(const Int& t, const Int& n, const PellPair& p);

// columns embed the NS basis into the Mukai lattice:
// theta(0,-H,0) -> (0,-1,0) and theta(1,0,n-1) -> (1,0,n-1)
Mat32 ns_embedding(const Int& n);

// tau restricted along ns_embedding reproduces M: tau * E == E * M
bool restriction_consistent(const Mat3& tau, const Mat2& M, const Int& n);

// true iff M^T G M == G exactly
template <typename DM, typename DG>
bool verify_isometry(const Eigen::MatrixBase<DM>& M, const Eigen::MatrixBase<DG>& G) {
  if (M.rows() != M.cols() || G.rows() != G.cols() || M.rows() != G.rows())
    throw std::invalid_argument("verify_isometry: dimension mismatch");
  return (M.transpose() * G.derived() * M.derived()).eval() == G.derived();
}

// true iff M^2 == identity
template <typename DM>
bool verify_involution(const Eigen::MatrixBase<DM>& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("verify_involution: matrix must be square");
  using Plain = typename DM::PlainObject;
  Plain id = Plain::Identity(M.rows(), M.cols());
  return (M.derived() * M.derived()).eval() == id;
}

}  // namespace hilbk3
