#pragma once

#include <vector>

#include "tlenv/element.hpp"

namespace tlenv {

enum class Pairing { Tau, TauPrime };

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Exact solve of A X = B by elimination with pivots of least degree.
// Throws DegenerateModulusError when A is singular.
ScalarMatrix solve(ScalarMatrix a, ScalarMatrix b);
ScalarMatrix inverse(const ScalarMatrix& a);
Scalar determinant(ScalarMatrix a);

// Tau: normalized trace of y^dagger x.  TauPrime: closure of y^dagger star x.
Scalar inner_product(const GradedElement& x, const GradedElement& y, Pairing p);
ScalarMatrix gram_matrix(const std::vector<TLDiagram>& basis, Pairing p);
ScalarMatrix gram_matrix(const BoxShape& shape, Pairing p);
// Evaluated at delta; returns the least eigenvalue.
double min_gram_eigenvalue(const ScalarMatrix& g, double delta);

// Diagrams of V+_{0,0}(2a, 2b) without through strings: the tensor
// subalgebra's spanning set in that cell.
std::vector<TLDiagram> tensor_basis(int a2, int b2);
// Gram matrix of the closures of non-crossing matchings on r points.
const ScalarMatrix& through_gram(int r);
const ScalarMatrix& through_gram_inverse(int r);

// Trace preserving conditional expectation onto the tensor subalgebra,
// for elements supported on V+_{0,0}(2a, 2b) cells.
GradedElement conditional_expectation(const GradedElement& q);
// Reference route: cell by cell orthogonal projection for a pairing.
GradedElement conditional_expectation_gram(const GradedElement& q, Pairing p);
// Throws DegenerateModulusError when a Gram block used by the
// expectation of q is singular at delta.
void check_modulus(const GradedElement& q, double delta);

struct NumericTerm {
  TLDiagram diagram;
  double value;
};
std::vector<NumericTerm> evaluate(const GradedElement& x, double delta);

}  // namespace tlenv
