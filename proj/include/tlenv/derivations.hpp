#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlenv/element.hpp"

namespace tlenv {

enum class Parity { Odd, Even, Mixed };

const char* parity_name(Parity p);

// Phi_o: V-_{1,0}(odd, even).  Phi_e: V+_{1,0}(even, odd).
bool in_phi_odd(const BoxShape& s);
bool in_phi_even(const BoxShape& s);
// Omega_o: V-_{0,0}(odd, odd).  Omega_e: V+_{0,0}(even, even).
bool in_omega_odd(const BoxShape& s);
bool in_omega_even(const BoxShape& s);
// Throws PreconditionError if some cell lies outside the space.
Parity phi_parity(const GradedElement& q);
Parity omega_parity(const GradedElement& r);

// Elements of Gr_0 must have cells V+_{0,0}(2n, 0).
void require_gr0(const GradedElement& x);

// The derivation attached to Q, before projecting to the tensor subalgebra.
GradedElement delta_tilde(const GradedElement& q, const GradedElement& x);
GradedElement delta_q(const GradedElement& q, const GradedElement& x);

// Bimodule actions of Gr_0 on the tensor cells.
GradedElement left_act(const GradedElement& a, const GradedElement& xi);
GradedElement right_act(const GradedElement& xi, const GradedElement& d);

// Omega -> Phi.
GradedElement rho(const GradedElement& r);

// Recovers R with rho(R) = Q for Q in the kernel of Q -> delta_Q.  The
// kernel condition is verified on all basis diagrams of P_n for
// n <= max_degree first (PreconditionError), then rho(R) == Q is checked
// (ReconstructionMismatch).
GradedElement kernel_reconstruct(const GradedElement& q, int max_degree = 3);
// The reconstruction formula alone, without the checks.
GradedElement reconstruct_formula(const GradedElement& q);

// F with tau_0(F x) = trace of delta_Q(x) for all x; the conjugate
// variable itself is the mirror image of F.
GradedElement conjugate_variable(const GradedElement& q);

// Finite sum of tensors of Gr_0 diagrams.
class TensorElement {
 public:
  using Key = std::vector<TLDiagram>;

  explicit TensorElement(int arity = 2) : arity_(arity) {}
  int arity() const { return arity_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  bool operator==(const TensorElement& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  std::string to_string() const;

 private:
  int arity_;
  std::map<Key, Scalar> terms_;
};

// Coassociative derivation attached to the cup in P_1, scaled by the
// coefficient of the cup in q.
TensorElement partial_coassoc(const GradedElement& x, const GradedElement& q);
TensorElement partial_coassoc(const GradedElement& x);
// Applies the derivation to one slot of each tensor.
TensorElement partial_on_slot(const TensorElement& t, int slot);
// Multiplies slot `slot` of every tensor by x on the left or right.
TensorElement multiply_slot(const GradedElement& x, const TensorElement& t, int slot, bool on_left);
// Splits a diagram without through strings into (top part, bottom part
// turned a half turn).
std::pair<TLDiagram, TLDiagram> split_tensor(const TLDiagram& d);

}  // namespace tlenv
