#pragma once

// Super differential operators on polynomial Elements.
//
//   d_x   = 2 sum_j (e`_{2j} d/dx`_{2j-1} - e`_{2j-1} d/dx`_{2j}) - sum_i e_i d/dx_i
//   Delta = 4 sum_j d/dx`_{2j-1} d/dx`_{2j} - sum_i d^2/dx_i^2
//   E     = sum_i x_i d/dx_i + sum_j x`_j d/dx`_j
//   Gamma = x d_x - E,   Delta_LB = (M-2) Gamma - Gamma^2
//
// The left Dirac multiplies generators from the left; the right Dirac acts
// through right fermionic derivatives and multiplies generators from the
// right, with an extra minus sign on its fermionic half.

#include "supercalc/superalgebra.hpp"

namespace supercalc {

enum class OpTag { DiracLeft, DiracRight, Laplace, Euler, GammaOp, LaplaceBeltrami, FermPartial, BosPartial };

struct OperatorKind {
  OpTag tag = OpTag::DiracLeft;
  int index = 0;  // 1-based variable index for the partials

  static OperatorKind dirac_left() { return {OpTag::DiracLeft, 0}; }
  static OperatorKind dirac_right() { return {OpTag::DiracRight, 0}; }
  static OperatorKind laplace() { return {OpTag::Laplace, 0}; }
  static OperatorKind euler() { return {OpTag::Euler, 0}; }
  static OperatorKind gamma() { return {OpTag::GammaOp, 0}; }
  static OperatorKind laplace_beltrami() { return {OpTag::LaplaceBeltrami, 0}; }
  static OperatorKind ferm_partial(int j) { return {OpTag::FermPartial, j}; }
  static OperatorKind bos_partial(int i) { return {OpTag::BosPartial, i}; }
};

Element apply(const OperatorKind& op, const Element& f);

/// d/dx_i, 1-based.
Element bos_partial(const Element& f, int i);
/// Left derivative d/dx`_j; j is 1-based over all anticommuting variables
/// (y`_k is index 2n + k in a doubled space).
Element ferm_partial_left(const Element& f, int j);
/// Right derivative f <-d/dx`_j.
Element ferm_partial_right(const Element& f, int j);

Element dirac_left(const Element& f);
Element dirac_right(const Element& f);
/// Fermionic half 2 sum (e`_{2j} d_{2j-1} - e`_{2j-1} d_{2j}) f.
Element ferm_dirac_left(const Element& f);
/// Right fermionic Dirac F d_{x`} = 2 sum ((F <-d_{2j-1}) e`_{2j} - (F <-d_{2j}) e`_{2j-1}).
Element ferm_dirac_right(const Element& f);
/// Bosonic half sum e_i d_i f.
Element bos_dirac_left(const Element& f);
/// sum (d_i f) e_i.
Element bos_dirac_right(const Element& f);

Element laplace(const Element& f);
/// Bosonic part -sum d_i^2 and fermionic part 4 sum d_{2j-1} d_{2j}.
Element laplace_bosonic(const Element& f);
Element laplace_fermionic(const Element& f);
/// Classical sum d_i^2 (positive sign).
Element classical_laplacian(const Element& f);
Element euler(const Element& f);
Element gamma_op(const Element& f);
Element laplace_beltrami(const Element& f);

/// Some g with d_x g = h. Built by a fermionic-degree sweep that cancels the
/// top fermionic layer of the residual with a bosonic Dirac preimage.
/// Throws NoSolution if h exceeds max_degree.
Element dirac_preimage(const Element& h, int max_degree);

}  // namespace supercalc
