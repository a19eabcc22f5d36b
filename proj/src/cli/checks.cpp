#include <random>

#include "tlenv/algebra.hpp"
#include "tlenv/cli.hpp"
#include "tlenv/cob.hpp"
#include "tlenv/derivations.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/gns.hpp"

namespace tlenv {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

TLDiagram random_diagram(const BoxShape& s, std::mt19937_64& rng) {
  auto all = enumerate_matchings(s);
  return all[rng() % all.size()];
}

GradedElement random_element(const BoxShape& s, std::mt19937_64& rng) {
  GradedElement e;
  int terms = draw(rng, 1, 3);
  for (int i = 0; i < terms; ++i) {
    int c = draw(rng, -3, 3);
    e.add_term(random_diagram(s, rng), Scalar(c == 0 ? 1 : c));
  }
  return e;
}

void record(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok && r.passed) {
    r.passed = false;
    r.detail = what;
  }
}

std::vector<BoxShape> shapes_up_to(int max_points) {
  std::vector<BoxShape> out;
  for (int l = 0; l <= max_points; ++l)
    for (int r = 0; l + r <= max_points; ++r)
      for (int t = 0; l + r + t <= max_points; ++t)
        for (int b = 0; l + r + t + b <= max_points; ++b) {
          if ((l + r + t + b) % 2) continue;
          out.emplace_back(l, r, t, b, Shading::Plus);
          out.emplace_back(l, r, t, b, Shading::Minus);
        }
  return out;
}

std::vector<TLDiagram> gr0_basis(int max_n) {
  std::vector<TLDiagram> out;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& d : enumerate_matchings(BoxShape(0, 0, 2 * n, 0))) out.push_back(d);
  return out;
}

BoxShape random_phi(std::mt19937_64& rng, bool odd) {
  int s = draw(rng, 0, 3), t = draw(rng, 0, 3);
  if (odd) {
    if (s % 2 == 0) s += 1;
    if (t % 2) t -= 1;
    return BoxShape(1, 0, s, t, Shading::Minus);
  }
  if (s % 2) s -= 1;
  if (t % 2 == 0) t += 1;
  return BoxShape(1, 0, s, t, Shading::Plus);
}

}  // namespace

std::vector<CheckResult> cob_checks(int max_boundary, unsigned long long seed, int random_pairs) {
  CheckResult yx{"Y(X(v)) = v"}, xy{"X(Y(w)) = w"}, hom{"X(a ^ b) = X(a) * X(b)"},
      adj{"X(a+) = X(a)+"}, tr{"Tr'(X(a)) = Tr(a)"};
  for (const auto& s : shapes_up_to(max_boundary))
    for (const auto& d : enumerate_matchings(s)) {
      GradedElement v = GradedElement::basis(d);
      GradedElement w = GradedElement::basis(d, Flavor::W);
      GradedElement xv = map_X(v);
      record(yx, map_Y(xv) == v, d.to_string());
      record(xy, map_X(map_Y(w)) == w, d.to_string());
      record(adj, map_X(dagger(v)) == dagger(xv), d.to_string());
      if (s.left == s.right) record(tr, w_trace(xv) == v_trace(v), d.to_string());
    }
  std::mt19937_64 rng(seed);
  const int half = std::max(2, max_boundary / 2);
  for (int i = 0; i < random_pairs; ++i) {
    BoxShape a(draw(rng, 0, 2), draw(rng, 0, 2), draw(rng, 0, 3), draw(rng, 0, 3),
               rng() % 2 ? Shading::Minus : Shading::Plus);
    if (a.size() % 2) a.bottom += 1;
    BoxShape b(a.right, draw(rng, 0, 2), draw(rng, 0, 3), draw(rng, 0, 3), flip_if_odd(a.shading, a.top));
    if (b.size() % 2) b.bottom += 1;
    if (a.size() > half + 2 || b.size() > half + 2) {
      --i;
      continue;
    }
    GradedElement x = random_element(a, rng), y = random_element(b, rng);
    record(hom, map_X(v_product(x, y)) == w_product(map_X(x), map_X(y)), x.to_string() + " ; " + y.to_string());
  }
  return {yx, xy, hom, adj, tr};
}

std::vector<CheckResult> derivation_checks(int max_degree, unsigned long long seed, int samples) {
  if (max_degree < 0 || max_degree > kMaxDegreeGuard) throw PreconditionError("max degree out of range");
  CheckResult leibniz{"Leibniz for delta~_Q"}, kernel{"delta_rho(R) = 0"}, recon{"reconstruct(rho(R)) = R"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    GradedElement q = random_element(random_phi(rng, i % 2 == 0), rng);
    GradedElement x = random_element(BoxShape(0, 0, 2 * draw(rng, 0, max_degree), 0), rng);
    GradedElement y = random_element(BoxShape(0, 0, 2 * draw(rng, 0, max_degree), 0), rng);
    record(leibniz,
           delta_tilde(q, v_product(x, y)) == left_act(x, delta_tilde(q, y)) + right_act(delta_tilde(q, x), y),
           q.to_string());
  }
  std::vector<GradedElement> rs;
  for (int s = 1; s <= 7; s += 2)
    for (int t = 1; s + t <= 8; t += 2)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, s, t, Shading::Minus))) rs.push_back(GradedElement::basis(d));
  for (int a = 1; 2 * a <= 6; ++a)
    for (int b = 1; 2 * a + 2 * b <= 8; ++b)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, 2 * a, 2 * b))) {
        GradedElement e = GradedElement::basis(d);
        GradedElement r = e - conditional_expectation(e);
        if (!r.is_zero()) rs.push_back(r);
      }
  auto xs = gr0_basis(max_degree);
  for (const auto& r : rs) {
    GradedElement q = rho(r);
    bool zero = true;
    for (const auto& x : xs) zero = zero && delta_q(q, GradedElement::basis(x)).is_zero();
    record(kernel, zero, r.to_string());
    bool ok = false;
    try {
      ok = reconstruct_formula(q) == r;
    } catch (const Error&) {
    }
    record(recon, ok, r.to_string());
  }
  return {leibniz, kernel, recon};
}

std::vector<CheckResult> conjugate_checks(int max_degree, int max_q_points) {
  if (max_degree < 0 || max_degree > kMaxDegreeGuard) throw PreconditionError("max degree out of range");
  CheckResult pairing{"<delta_Q(x), 1(x)1> = <x, xi_Q>"};
  auto xs = gr0_basis(max_degree);
  const GradedElement one = GradedElement::basis(standard::empty());
  for (int s = 0; 1 + s <= max_q_points; ++s)
    for (int t = 0; 1 + s + t <= max_q_points; ++t) {
      BoxShape shape(1, 0, s, t, s % 2 ? Shading::Minus : Shading::Plus);
      if (!in_phi_odd(shape) && !in_phi_even(shape)) continue;
      for (const auto& dq : enumerate_matchings(shape)) {
        GradedElement q = GradedElement::basis(dq);
        GradedElement xi = dagger(conjugate_variable(q));
        for (const auto& dx : xs) {
          GradedElement x = GradedElement::basis(dx);
          record(pairing,
                 inner_product(delta_q(q, x), one, Pairing::Tau) == inner_product(x, xi, Pairing::Tau),
                 dq.to_string() + " / " + dx.to_string());
        }
      }
    }
  return {pairing};
}

}  // namespace tlenv
