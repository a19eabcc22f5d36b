// One line per acceptance criterion: PASS/FAIL, label, elapsed time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles/oracles.hpp"
#include "tlenv/algebra.hpp"
#include "tlenv/cob.hpp"
#include "tlenv/derivations.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/gns.hpp"
#include "tlenv/meander.hpp"
#include "tlenv/serialize.hpp"
#include "tlenv/spectrum.hpp"

using namespace tlenv;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  long cases = 0;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

GradedElement random_element(const BoxShape& s, std::mt19937_64& rng) {
  GradedElement e;
  int terms = oracle::uniform(rng, 1, 3);
  for (int i = 0; i < terms; ++i) {
    int c = oracle::uniform(rng, -3, 3);
    e.add_term(oracle::random_diagram(s, rng), Scalar(c ? c : 4));
  }
  return e;
}

// A shape whose left side meets x's right side.
BoxShape follower(const BoxShape& x, std::mt19937_64& rng, int max_points, int right = -1) {
  for (;;) {
    BoxShape b(x.right, right >= 0 ? right : oracle::uniform(rng, 0, 3), oracle::uniform(rng, 0, 4),
               oracle::uniform(rng, 0, 4), flip_if_odd(x.shading, x.top));
    if (b.size() % 2) b.bottom += b.bottom ? -1 : 1;
    if (b.size() <= max_points) return b;
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

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome orthogonalization() {
  Outcome o;
  for (const auto& s : shapes_up_to(10))
    for (const auto& d : enumerate_matchings(s)) {
      GradedElement v = GradedElement::basis(d), w = GradedElement::basis(d, Flavor::W);
      GradedElement xv = map_X(v);
      o.expect(map_Y(xv) == v, "YX " + d.to_string());
      o.expect(map_X(map_Y(w)) == w, "XY " + d.to_string());
      o.expect(map_X(dagger(v)) == dagger(xv), "dagger " + d.to_string());
      if (s.left == s.right) o.expect(w_trace(xv) == Scalar(oracle::trace(d)), "trace " + d.to_string());
    }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    BoxShape a = oracle::random_shape(6, rng);
    BoxShape b = follower(a, rng, 6);
    GradedElement x = random_element(a, rng), y = random_element(b, rng);
    o.expect(map_X(v_product(x, y)) == w_product(map_X(x), map_X(y)), "hom " + x.to_string());
  }
  return o;
}

Outcome meanders() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    auto nc = oracle::all_noncrossing(2 * n);
    std::vector<mpz_class> c(n + 1, 0);
    // Loops counted by walking the union of the two matchings.
    for (const auto& up : nc)
      for (const auto& down : nc) {
        std::vector<bool> seen(2 * n, false);
        int loops = 0;
        for (int s = 0; s < 2 * n; ++s) {
          if (seen[s]) continue;
          ++loops;
          for (int p = s; !seen[p];) {
            seen[p] = seen[up[p]] = true;
            p = down[up[p]];
          }
        }
        c[loops] += 1;
      }
    Poly m(c);
    if (n == 1) o.expect(m.to_string('q') == "q", "m_1");
    if (n == 2) o.expect(m.to_string('q') == "2*q + 2*q^2", "m_2");
    o.expect(meander_polynomial(n) == m, "enumeration n=" + std::to_string(n));
    o.expect(trace_moment(n) == Scalar(m), "moment n=" + std::to_string(n));
  }
  return o;
}

Outcome products_and_traces() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    BoxShape a = oracle::random_shape(10, rng);
    if (a.left > 3 || a.right > 3) continue;
    BoxShape b = follower(a, rng, 8), c = follower(b, rng, 8);
    GradedElement x = random_element(a, rng), y = random_element(b, rng), z = random_element(c, rng);
    o.expect(v_product(v_product(x, y), z) == v_product(x, v_product(y, z)), "wedge assoc");
    GradedElement wx = x.with_flavor(Flavor::W), wy = y.with_flavor(Flavor::W), wz = z.with_flavor(Flavor::W);
    o.expect(w_product(w_product(wx, wy), wz) == w_product(wx, w_product(wy, wz)), "star assoc");
    BoxShape back = follower(a, rng, 10, a.left);
    if ((a.top + back.top) % 2) back.top += 1;
    if ((a.bottom + back.bottom) % 2) back.bottom += 1;
    if (back.size() % 2) continue;
    GradedElement u = random_element(back, rng);
    o.expect(v_trace(v_product(x, u)) == v_trace(v_product(u, x)), "Tr tracial");
    GradedElement wu = u.with_flavor(Flavor::W);
    o.expect(w_trace(w_product(wx, wu)) == w_trace(w_product(wu, wx)), "Tr' tracial");
  }
  for (int k = 0; k <= 4; ++k)
    for (Shading s : {Shading::Plus, Shading::Minus}) {
      o.expect(voiculescu_trace(standard::unit_element(k, s)) == Scalar(1), "tau_k(1)");
      o.expect(boxtimes_trace(standard::p_element(k, s)) == Scalar(1), "tau_k (x) tau_k (p_k)");
      for (int i = 0; i < 20; ++i) {
        int n1 = oracle::uniform(rng, 0, 5 - k / 2), n2 = oracle::uniform(rng, 0, 5 - k / 2);
        if (2 * k + 2 * n1 > 10 || 2 * k + 2 * n2 > 10) continue;
        GradedElement x = random_element(BoxShape(k, k, 2 * n1, 0, s), rng);
        GradedElement y = random_element(BoxShape(k, k, 2 * n2, 0, s), rng);
        o.expect(voiculescu_trace(gr_product(x, y)) == voiculescu_trace(gr_product(y, x)), "tau_k tracial");
      }
    }
  return o;
}

Outcome positivity() {
  Outcome o;
  for (const auto& s : shapes_up_to(8)) {
    if (s.shading == Shading::Minus) continue;
    for (Pairing p : {Pairing::Tau, Pairing::TauPrime}) {
      ScalarMatrix g = gram_matrix(s, p);
      for (double d : {2.0, 1.9, 1.6180339887}) {
        double m = min_gram_eigenvalue(g, d);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %s d=%g min=%g", s.to_string().c_str(),
                      p == Pairing::Tau ? "tau" : "tau'", d, m);
        o.expect(m >= -1e-8, buf);
      }
    }
  }
  return o;
}

GradedElement rainbow_cap_top(const GradedElement& q) {
  GradedElement out;
  for (const auto& [d, c] : q.terms()) {
    const BoxShape& s = d.shape();
    TLDiagram cap = transpose(standard::rainbow(s.top / 2));
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < s.bottom; ++i) p.emplace_back(i, 2 * s.bottom - 1 - i);
    out += tl_action(cap, TLDiagram::from_pairs(BoxShape(0, 0, s.bottom, s.bottom), p), GradedElement::term(d, c));
  }
  return out;
}

Outcome expectation() {
  Outcome o;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, 2 * a, 2 * b))) {
        GradedElement q = GradedElement::basis(d);
        GradedElement tau = conditional_expectation_gram(q, Pairing::Tau);
        o.expect(tau == conditional_expectation_gram(q, Pairing::TauPrime), "tau vs tau' " + d.to_string());
        o.expect(conditional_expectation(q) == tau, "factorized " + d.to_string());
        o.expect(conditional_expectation(tau) == tau, "idempotent " + d.to_string());
      }
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, 2 * a, 2 * b))) {
        GradedElement q = GradedElement::basis(d);
        o.expect(rainbow_cap_top(q - conditional_expectation(q)).is_zero(), "capping " + d.to_string());
      }
  return o;
}

BoxShape random_phi(std::mt19937_64& rng, bool odd) {
  int s = oracle::uniform(rng, 0, 3), t = oracle::uniform(rng, 0, 3);
  if (odd) {
    if (s % 2 == 0) s += 1;
    if (t % 2) t -= 1;
    return BoxShape(1, 0, s, t, Shading::Minus);
  }
  if (s % 2) s -= 1;
  if (t % 2 == 0) t += 1;
  return BoxShape(1, 0, s, t, Shading::Plus);
}

Outcome derivations() {
  Outcome o;
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    GradedElement q = random_element(random_phi(rng, i % 2 == 0), rng);
    GradedElement x = random_element(BoxShape(0, 0, 2 * oracle::uniform(rng, 0, 3), 0), rng);
    GradedElement y = random_element(BoxShape(0, 0, 2 * oracle::uniform(rng, 0, 3), 0), rng);
    o.expect(delta_tilde(q, v_product(x, y)) == left_act(x, delta_tilde(q, y)) + right_act(delta_tilde(q, x), y),
             "Leibniz " + q.to_string());
  }
  std::vector<GradedElement> rs;
  for (int s = 1; s <= 7; s += 2)
    for (int t = 1; s + t <= 8; t += 2)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, s, t, Shading::Minus))) rs.push_back(GradedElement::basis(d));
  for (int a = 0; 2 * a <= 8; ++a)
    for (int b = 0; 2 * a + 2 * b <= 8; ++b)
      for (const auto& d : enumerate_matchings(BoxShape(0, 0, 2 * a, 2 * b))) {
        GradedElement e = GradedElement::basis(d);
        GradedElement r = e - conditional_expectation(e);
        if (!r.is_zero()) rs.push_back(r);
      }
  auto xs = gr0_basis(3);
  for (const auto& r : rs) {
    GradedElement q = rho(r);
    for (const auto& x : xs) o.expect(delta_q(q, GradedElement::basis(x)).is_zero(), "kernel " + r.to_string());
    try {
      o.expect(kernel_reconstruct(q, 3) == r, "reconstruct " + r.to_string());
    } catch (const Error& e) {
      o.expect(false, std::string("reconstruct threw: ") + e.what());
    }
  }
  return o;
}

// Trace of the derivation picture, glued and closed by the union-find oracle.
Poly oracle_pairing(const TLDiagram& dq, const TLDiagram& dx) {
  const int n2 = dx.shape().top, s = dq.shape().top, t = dq.shape().bottom;
  const bool odd = dq.shape().shading == Shading::Minus;
  Poly acc;
  for (int k = 0; k < n2; ++k) {
    if ((k % 2 == 0) != odd) continue;
    const int p = n2 - k - 1;
    oracle::Net net;
    int a = net.add(dx), b = net.add(dq);
    net.join(a, Side::Top, p, b, Side::Left, 0);
    for (int j = 0; j < p; ++j) net.expose(Side::Top, j, a, Side::Top, j);
    for (int j = 0; j < s; ++j) net.expose(Side::Top, p + j, b, Side::Top, j);
    for (int j = 0; j < k; ++j) net.expose(Side::Bottom, j, a, Side::Top, n2 - 1 - j);
    for (int j = 0; j < t; ++j) net.expose(Side::Bottom, k + j, b, Side::Bottom, j);
    BoxShape shape(0, 0, p + s, k + t);
    auto [m, loops] = net.resolve(shape);
    acc += oracle::trace(TLDiagram(shape, m)).shifted(loops);
  }
  return acc;
}

Outcome conjugates() {
  Outcome o;
  const GradedElement one = GradedElement::basis(standard::empty());
  auto xs = gr0_basis(3);
  for (int s = 0; s <= 4; ++s)
    for (int t = 0; 1 + s + t <= 5; ++t) {
      BoxShape shape(1, 0, s, t, s % 2 ? Shading::Minus : Shading::Plus);
      if (!in_phi_odd(shape) && !in_phi_even(shape)) continue;
      for (const auto& dq : enumerate_matchings(shape)) {
        GradedElement q = GradedElement::basis(dq);
        GradedElement xi = dagger(conjugate_variable(q));
        for (const auto& dx : xs) {
          GradedElement x = GradedElement::basis(dx);
          Scalar rhs = inner_product(x, xi, Pairing::Tau);
          o.expect(inner_product(delta_q(q, x), one, Pairing::Tau) == rhs, dq.to_string() + " / " + dx.to_string());
          o.expect(Scalar(oracle_pairing(dq, dx)) == rhs, "oracle " + dq.to_string() + " / " + dx.to_string());
        }
      }
    }
  return o;
}

Outcome coassociativity() {
  Outcome o;
  for (const auto& d : gr0_basis(2)) {
    TensorElement t = partial_coassoc(GradedElement::basis(d));
    o.expect(partial_on_slot(t, 0) == partial_on_slot(t, 1), d.to_string());
  }
  return o;
}

Outcome index_arithmetic() {
  Outcome o;
  PrincipalGraph a3 = path_graph(3);
  PFData pf = pf_dimensions(a3);
  IndexValue idx = global_index(a3, pf);
  o.expect(!idx.infinite && std::abs(idx.value - 2) <= 1e-9, "I(A_3)");
  o.expect(std::abs(r_parameter(0, pf.delta, idx.value) - (4 * std::sqrt(2.0) - 3)) <= 1e-9, "r_0(A_3)");
  for (int n = 2; n <= 10; ++n) o.expect(pf_dimensions(path_graph(n)).residual <= 1e-10, "PF residual");
  o.expect(pf.residual <= 1e-10, "PF residual A_3");
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dd(1.0001, 5.0), ii(0.1, 100.0);
  for (int i = 0; i < 100; ++i) {
    double d = dd(rng), I = ii(rng);
    double lhs = phi_omega_balance(d, I), rhs = 1 + 2 * I * (d - 1);
    o.expect(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)), "balance");
    o.expect(std::abs(r_parameter(0, d, I) - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)), "r_0 formula");
  }
  return o;
}

Outcome serialization() {
  Outcome o;
  const fs::path data = TLENV_TEST_DATA;
  int docs = 0;
  for (const auto& entry : fs::directory_iterator(data / "corpus")) {
    std::string text = slurp(entry.path());
    try {
      o.expect(emit_element(parse_element(text, true)) == text, entry.path().filename().string());
    } catch (const Error& e) {
      o.expect(false, entry.path().filename().string() + ": " + e.what());
    }
    ++docs;
  }
  o.expect(docs == 50, "corpus size " + std::to_string(docs));
  for (const char* name : {"crossing.json", "crossing_sides.json"}) {
    bool rejected = false;
    try {
      parse_element(slurp(data / "invalid" / name), false);
    } catch (const SchemaError&) {
      rejected = true;
    }
    o.expect(rejected, name);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "orthogonalization XY = YX = 1, homomorphism, adjoint, trace", 60, orthogonalization},
      {2, "meander moments m_n(d), n = 1..6", 60, meanders},
      {3, "associativity and trace properties", 30, products_and_traces},
      {4, "Gram positivity at d = 2, 1.9, 1.618", 30, positivity},
      {5, "conditional expectation: both pairings, idempotence, capping", 0, expectation},
      {6, "derivations: Leibniz, kernel of rho, reconstruction", 120, derivations},
      {7, "conjugate variable pairing", 0, conjugates},
      {8, "coassociativity of the cup derivation", 0, coassociativity},
      {9, "index arithmetic and r_0", 0, index_arithmetic},
      {10, "serialization corpus round trip", 0, serialization},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.budget == 0 || secs < c.budget;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s  [%2d] %-62s cases=%-7ld %7.2fs", pass ? "PASS" : "FAIL", c.id, c.label, o.cases, secs);
    if (!o.ok) std::printf("  first failure: %s", o.detail.c_str());
    if (!in_time) std::printf("  over the %.0fs budget", c.budget);
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
