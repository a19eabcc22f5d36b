#include "tlenv/derivations.hpp"

#include <sstream>

#include "tlenv/algebra.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/gns.hpp"
#include "tlenv/tangle.hpp"

namespace tlenv {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Mixed: return "mixed";
  }
  return "";
}

bool in_phi_odd(const BoxShape& s) {
  return s.left == 1 && s.right == 0 && s.shading == Shading::Minus && s.top % 2 == 1 && s.bottom % 2 == 0;
}
bool in_phi_even(const BoxShape& s) {
  return s.left == 1 && s.right == 0 && s.shading == Shading::Plus && s.top % 2 == 0 && s.bottom % 2 == 1;
}
bool in_omega_odd(const BoxShape& s) {
  return s.left == 0 && s.right == 0 && s.shading == Shading::Minus && s.top % 2 == 1 && s.bottom % 2 == 1;
}
bool in_omega_even(const BoxShape& s) {
  return s.left == 0 && s.right == 0 && s.shading == Shading::Plus && s.top % 2 == 0 && s.bottom % 2 == 0;
}

namespace {

template <typename Odd, typename Even>
Parity parity_of(const GradedElement& e, Odd odd, Even even, const char* what) {
  bool has_odd = false, has_even = false;
  for (const auto& [d, c] : e.terms()) {
    if (odd(d.shape())) {
      has_odd = true;
    } else if (even(d.shape())) {
      has_even = true;
    } else {
      throw PreconditionError(std::string("cell ") + d.shape().to_string() + " is not in " + what);
    }
  }
  if (has_odd && has_even) return Parity::Mixed;
  return has_odd ? Parity::Odd : Parity::Even;
}

}  // namespace

Parity phi_parity(const GradedElement& q) { return parity_of(q, in_phi_odd, in_phi_even, "Phi"); }
Parity omega_parity(const GradedElement& r) {
  return parity_of(r, in_omega_odd, in_omega_even, "Omega");
}

void require_gr0(const GradedElement& x) {
  for (const auto& [d, c] : x.terms()) {
    const BoxShape& s = d.shape();
    if (s.left || s.right || s.bottom || s.top % 2 || s.shading != Shading::Plus)
      throw PreconditionError("expected an element of Gr_0, got cell " + s.to_string());
  }
}

GradedElement delta_tilde(const GradedElement& q, const GradedElement& x) {
  phi_parity(q);
  require_gr0(x);
  GradedElement out;
  for (const auto& [dx, cx] : x.terms()) {
    const int n2 = dx.shape().top;
    for (const auto& [dq, cq] : q.terms()) {
      const int s = dq.shape().top, t = dq.shape().bottom;
      for (int k = in_phi_odd(dq.shape()) ? 0 : 1; k <= n2 - 1; k += 2) {
        const int p = n2 - k - 1;
        Tangle tg;
        int px = tg.add(dx), pq = tg.add(dq);
        tg.wire(tg.at(px, Side::Top, p), tg.at(pq, Side::Left, 0));
        Boundary bd(BoxShape(0, 0, p + s, k + t, Shading::Plus));
        for (int j = 0; j < p; ++j) bd.set(Side::Top, j, tg.at(px, Side::Top, j));
        for (int j = 0; j < s; ++j) bd.set(Side::Top, p + j, tg.at(pq, Side::Top, j));
        for (int j = 0; j < k; ++j) bd.set(Side::Bottom, j, tg.at(px, Side::Top, n2 - 1 - j));
        for (int j = 0; j < t; ++j) bd.set(Side::Bottom, k + j, tg.at(pq, Side::Bottom, j));
        GlueResult r = resolve(tg, bd);
        out.add_term(r.diagram, cx * cq, r.loops);
      }
    }
  }
  return out;
}

GradedElement delta_q(const GradedElement& q, const GradedElement& x) {
  return conditional_expectation(delta_tilde(q, x));
}

GradedElement left_act(const GradedElement& a, const GradedElement& xi) {
  require_gr0(a);
  return v_product(embed_tensor(a, GradedElement::basis(standard::empty())), xi);
}

GradedElement right_act(const GradedElement& xi, const GradedElement& d) {
  require_gr0(d);
  return v_product(embed_tensor(GradedElement::basis(standard::empty()), d), xi);
}

GradedElement rho(const GradedElement& r) {
  omega_parity(r);
  GradedElement out;
  for (const auto& [d, c] : r.terms()) {
    const BoxShape& s = d.shape();
    {
      Tangle tg;
      int pr = tg.add(d), ps = tg.add_string();
      Boundary bd(BoxShape(1, 0, s.top + 1, s.bottom, flip(s.shading)));
      bd.set(Side::Left, 0, Port{ps, 0});
      bd.set(Side::Top, 0, Port{ps, 1});
      for (int j = 0; j < s.top; ++j) bd.set(Side::Top, j + 1, tg.at(pr, Side::Top, j));
      for (int j = 0; j < s.bottom; ++j) bd.set(Side::Bottom, j, tg.at(pr, Side::Bottom, j));
      out.add_term(resolve(tg, bd).diagram, c);
    }
    {
      Tangle tg;
      int pr = tg.add(d), ps = tg.add_string();
      Boundary bd(BoxShape(1, 0, s.top, s.bottom + 1, s.shading));
      bd.set(Side::Left, 0, Port{ps, 0});
      bd.set(Side::Bottom, 0, Port{ps, 1});
      for (int j = 0; j < s.top; ++j) bd.set(Side::Top, j, tg.at(pr, Side::Top, j));
      for (int j = 0; j < s.bottom; ++j) bd.set(Side::Bottom, j + 1, tg.at(pr, Side::Bottom, j));
      out.add_term(resolve(tg, bd).diagram, -c);
    }
  }
  return out;
}

GradedElement reconstruct_formula(const GradedElement& q) {
  phi_parity(q);
  GradedElement out;
  for (const auto& [dq, cq] : q.terms()) {
    const int a = dq.shape().top, b = dq.shape().bottom;
    for (int k = 1; 2 * k <= a; ++k) {
      const int s = a - k, t = b - 1 + k;
      if (s < 1 || t < 1) continue;
      Tangle tg;
      int pq = tg.add(dq);
      for (int i = 0; i < k; ++i) tg.wire(tg.at(pq, Side::Top, i), tg.at(pq, Side::Top, 2 * k - 1 - i));
      Boundary bd(BoxShape(0, 0, s, t, (s % 2) ? Shading::Minus : Shading::Plus));
      for (int j = 0; j < k - 1; ++j) {
        int ps = tg.add_string();
        bd.set(Side::Top, j, Port{ps, 0});
        bd.set(Side::Bottom, j, Port{ps, 1});
      }
      bd.set(Side::Top, k - 1, tg.at(pq, Side::Left, 0));
      for (int m = 0; m < a - 2 * k; ++m) bd.set(Side::Top, k + m, tg.at(pq, Side::Top, 2 * k + m));
      for (int m = 0; m < b; ++m) bd.set(Side::Bottom, k - 1 + m, tg.at(pq, Side::Bottom, m));
      GlueResult r = resolve(tg, bd);
      out.add_term(r.diagram, cq, r.loops);
    }
  }
  return out;
}

GradedElement kernel_reconstruct(const GradedElement& q, int max_degree) {
  phi_parity(q);
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& x : enumerate_matchings(BoxShape(0, 0, 2 * n, 0)))
      if (!delta_q(q, GradedElement::basis(x)).is_zero())
        throw PreconditionError("delta_Q does not vanish on " + x.to_string());
  GradedElement r = reconstruct_formula(q);
  if (rho(r) != q) throw ReconstructionMismatch("rho(R) differs from Q");
  return r;
}

GradedElement conjugate_variable(const GradedElement& q) {
  phi_parity(q);
  GradedElement out;
  for (const auto& [dq, cq] : q.terms()) {
    const int s = dq.shape().top, t = dq.shape().bottom;
    {
      Tangle tg;
      int pq = tg.add(dq);
      Boundary bd(BoxShape(0, 0, t + 1 + s, 0));
      for (int j = 0; j < t; ++j) bd.set(Side::Top, j, tg.at(pq, Side::Bottom, t - 1 - j));
      bd.set(Side::Top, t, tg.at(pq, Side::Left, 0));
      for (int m = 0; m < s; ++m) bd.set(Side::Top, t + 1 + m, tg.at(pq, Side::Top, m));
      GlueResult r = resolve(tg, bd);
      out.add_term(r.diagram, cq, r.loops);
    }
    for (int k = 0; k <= s - 1; ++k) {
      if ((k + t) % 2) continue;
      const int m0 = s - k - 1;
      for (const auto& tl : *noncrossing_matchings(m0)) {
        Tangle tg;
        int pq = tg.add(dq);
        for (int i = 0; i < m0; ++i)
          if (tl[i] > i) tg.wire(tg.at(pq, Side::Top, i), tg.at(pq, Side::Top, tl[i]));
        tg.wire(tg.at(pq, Side::Left, 0), tg.at(pq, Side::Top, m0));
        Boundary bd(BoxShape(0, 0, t + k, 0));
        for (int j = 0; j < t; ++j) bd.set(Side::Top, j, tg.at(pq, Side::Bottom, t - 1 - j));
        for (int m = 0; m < k; ++m) bd.set(Side::Top, t + m, tg.at(pq, Side::Top, m0 + 1 + m));
        GlueResult r = resolve(tg, bd);
        out.add_term(r.diagram, -cq, r.loops);
      }
    }
    for (int k = 0; k <= t - 1; ++k) {
      if ((k + s) % 2) continue;
      const int m0 = t - k - 1;
      for (const auto& tl : *noncrossing_matchings(m0)) {
        Tangle tg;
        int pq = tg.add(dq);
        for (int i = 0; i < m0; ++i)
          if (tl[i] > i) tg.wire(tg.at(pq, Side::Bottom, i), tg.at(pq, Side::Bottom, tl[i]));
        tg.wire(tg.at(pq, Side::Left, 0), tg.at(pq, Side::Bottom, m0));
        Boundary bd(BoxShape(0, 0, k + s, 0));
        for (int j = 0; j < k; ++j) bd.set(Side::Top, j, tg.at(pq, Side::Bottom, t - 1 - j));
        for (int m = 0; m < s; ++m) bd.set(Side::Top, k + m, tg.at(pq, Side::Top, m));
        GlueResult r = resolve(tg, bd);
        out.add_term(r.diagram, -cq, r.loops);
      }
    }
  }
  return out;
}

void TensorElement::add_term(const Key& k, const Scalar& c) {
  if (static_cast<int>(k.size()) != arity_) throw PreconditionError("tensor arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? " (x) " : "*") << k[i].to_string();
  }
  return os.str();
}

std::pair<TLDiagram, TLDiagram> split_tensor(const TLDiagram& d) {
  const BoxShape& s = d.shape();
  if (s.left || s.right || through_strings(d) != 0)
    throw PreconditionError("split needs a diagram without through strings");
  Matching top(s.top), bot(s.bottom);
  for (int p = 0; p < s.top; ++p) top[p] = s.locate(d.at(Side::Top, p)).second;
  // Bottom position q becomes top position (bottom - 1 - q) after the half turn.
  for (int q = 0; q < s.bottom; ++q)
    bot[s.bottom - 1 - q] = s.bottom - 1 - s.locate(d.at(Side::Bottom, q)).second;
  return {TLDiagram(BoxShape(0, 0, s.top, 0), std::move(top)),
          TLDiagram(BoxShape(0, 0, s.bottom, 0), std::move(bot))};
}

TensorElement partial_coassoc(const GradedElement& x, const GradedElement& q) {
  require_gr0(x);
  Scalar qc;
  for (const auto& [d, c] : q.terms()) {
    if (d.shape() != BoxShape(0, 0, 2, 0)) throw PreconditionError("Q must lie in P_1");
    qc = c;
  }
  TensorElement out(2);
  if (qc.is_zero()) return out;
  const TLDiagram cup = standard::cups(1);
  for (const auto& [dx, cx] : x.terms()) {
    const int n2 = dx.shape().top;
    for (int k = 0; 2 * k + 2 <= n2; ++k) {
      const int p = n2 - 2 * k - 2;
      Tangle tg;
      int px = tg.add(dx), pq = tg.add(cup);
      tg.wire(tg.at(px, Side::Top, p), tg.at(pq, Side::Top, 1));
      tg.wire(tg.at(px, Side::Top, p + 1), tg.at(pq, Side::Top, 0));
      Boundary bd(BoxShape(0, 0, p, 2 * k));
      for (int j = 0; j < p; ++j) bd.set(Side::Top, j, tg.at(px, Side::Top, j));
      for (int j = 0; j < 2 * k; ++j) bd.set(Side::Bottom, j, tg.at(px, Side::Top, n2 - 1 - j));
      GlueResult r = resolve(tg, bd);
      GradedElement e =
          conditional_expectation(GradedElement::term(r.diagram, cx * qc * Scalar::delta_pow(r.loops)));
      for (const auto& [d, c] : e.terms()) {
        auto [a, b] = split_tensor(d);
        out.add_term({a, b}, c);
      }
    }
  }
  return out;
}

TensorElement partial_coassoc(const GradedElement& x) {
  return partial_coassoc(x, GradedElement::basis(standard::cups(1)));
}

TensorElement partial_on_slot(const TensorElement& t, int slot) {
  if (slot < 0 || slot >= t.arity()) throw PreconditionError("slot out of range");
  TensorElement out(t.arity() + 1);
  for (const auto& [key, c] : t.terms()) {
    TensorElement d = partial_coassoc(GradedElement::basis(key[slot]));
    for (const auto& [pair, c2] : d.terms()) {
      TensorElement::Key k;
      for (int i = 0; i < t.arity(); ++i) {
        if (i == slot) {
          k.push_back(pair[0]);
          k.push_back(pair[1]);
        } else {
          k.push_back(key[i]);
        }
      }
      out.add_term(k, c * c2);
    }
  }
  return out;
}

TensorElement multiply_slot(const GradedElement& x, const TensorElement& t, int slot, bool on_left) {
  require_gr0(x);
  TensorElement out(t.arity());
  for (const auto& [key, c] : t.terms())
    for (const auto& [dx, cx] : x.terms()) {
      GlueResult r = on_left ? glue_horizontal(dx, key[slot]) : glue_horizontal(key[slot], dx);
      TensorElement::Key k = key;
      k[slot] = r.diagram;
      out.add_term(k, c * cx * Scalar::delta_pow(r.loops));
    }
  return out;
}

}  // namespace tlenv
