#include <doctest.h>

#include <random>

#include "jfock/models.hpp"
#include "jfock/orbit_ideal.hpp"

using namespace jfock;

namespace {

PolyQ random_poly(int nv, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), pick(0, nv - 1);
  PolyQ p(nv);
  for (int t = 0; t < 6; ++t) {
    Mono m;
    int d = int(rng() % (deg + 1));
    for (int j = 0; j < d; ++j) m.e[pick(rng)] += 1;
    p.add_term(m, rat(num(rng), 1 + int(rng() % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("DiffOp composition and commutators: Weyl relation") {
  DiffOpQ d = DiffOpQ::partial(1, 0);
  DiffOpQ x = DiffOpQ::mult(PolyQ::var(1, 0));
  DiffOpQ c = commutator(d, x);
  CHECK(c == DiffOpQ::mult(PolyQ::one(1)));
  std::mt19937_64 rng(3);
  PolyQ p = random_poly(1, 4, rng);
  CHECK(d.compose(x).apply(p) == d.apply(x.apply(p)));
}

TEST_CASE("Bessel operator kills constants and matches V = R closed form") {
  auto R = Algebra::parse("real");
  auto B = bessel_op(*R, rat(5, 3));
  CHECK(B[0].apply(PolyQ::one(1)).is_zero_poly());
  // B = x d^2 + lambda d on x^3
  PolyQ p = PolyQ::var(1, 0).pow(3);
  PolyQ expect = PolyQ::var(1, 0).pow(2) * Rat(6) + PolyQ::var(1, 0).pow(2) * (rat(5, 3) * 3);
  CHECK(B[0].apply(p) == expect);
}

TEST_CASE("B e^{-tr} = (x - lambda e) e^{-tr} via exp-conjugation") {
  for (const char* spec : {"real", "spin:3", "spin:4", "sym:2", "sym:3", "herm:2"}) {
    auto A = Algebra::parse(spec);
    Rat lam = rat(7, 4);
    auto B = bessel_op(*A, lam);
    std::vector<Rat> grad(A->n);
    for (int i = 0; i < A->n; ++i) grad[i] = A->trace_vec[i] / A->gram[i];
    for (int g = 0; g < A->n; ++g) {
      DiffOpQ conj = B[g].conjugate_by_exp(grad);
      PolyQ got = conj.apply(PolyQ::one(A->n));
      PolyQ expect(A->n);
      expect.add_term(mono_var(g), Rat(1));
      expect.add_term(Mono{}, -lam * A->unit.c[g]);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("Bessel product rule, exact on sampled polynomials") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"spin:3", "sym:2", "herm:2"}) {
    auto A = Algebra::parse(spec);
    Rat lam = rat(3, 2);
    auto B = bessel_op(*A, lam);
    auto grad = gradient(*A);
    for (int t = 0; t < 3; ++t) {
      PolyQ f = random_poly(A->n, 3, rng), g = random_poly(A->n, 3, rng);
      std::vector<PolyQ> gf(A->n), gg(A->n);
      for (int i = 0; i < A->n; ++i) {
        gf[i] = grad[i].apply(f);
        gg[i] = grad[i].apply(g);
      }
      auto cross = pmat2_poly(*A, gf, gg);
      for (int comp = 0; comp < A->n; ++comp) {
        PolyQ lhs = B[comp].apply(f * g);
        PolyQ rhs = B[comp].apply(f) * g + cross[comp] * Rat(2) + f * B[comp].apply(g);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("radial Bessel operator: rank-1 form, trace eigenvalue, full agreement") {
  auto R = Algebra::parse("real");
  PolyQ F = PolyQ::var(1, 0).pow(2);
  Rat lam = rat(4, 3);
  PolyQ got = bessel_radial_apply(*R, RadialKind::V, lam, 0, F);
  PolyQ expect = PolyQ::var(1, 0) * Rat(2) + PolyQ::var(1, 0) * (lam * 2);
  CHECK(got == expect);

  for (const char* spec : {"sym:2", "sym:3", "spin:5"}) {
    auto A = Algebra::parse(spec);
    PolyQ tr(A->r);
    for (int i = 0; i < A->r; ++i) tr += PolyQ::var(A->r, i);
    for (int i = 0; i < A->r; ++i) {
      PolyQ out = bessel_radial_apply(*A, RadialKind::V, lam, i, tr);
      CHECK(out == PolyQ::constant(A->r, lam));
    }
  }

  // radial vs full route on Phi_(2,0) for sym:2 at 20 diagonal points
  auto A = Algebra::parse("sym:2");
  const PolyQ& phi = spherical_phi(*A, Partition({{2, 0}}));
  PolyQ F2(A->r);
  for (auto& [m, c] : phi.t) {
    PolyQ term = PolyQ::constant(A->r, c);
    for (int j = 0; j < A->n; ++j)
      for (int k = 0; k < m.e[j]; ++k) {
        PolyQ lin(A->r);
        for (int i = 0; i < A->r; ++i)
          if (!is_zero(A->frame[i].c[j])) lin.add_term(mono_var(i), A->frame[i].c[j]);
        term = term * lin;
      }
    F2 += term;
  }
  auto B = bessel_op(*A, lam);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(1, 9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rat> a = {rat(num(rng) + 10, 2), rat(num(rng), 3)};
    Element x = A->frame_diag(a);
    for (int i = 0; i < A->r; ++i) {
      Rat radial = bessel_radial_apply(*A, RadialKind::V, lam, i, F2).eval(a);
      Rat full(0);
      for (int g = 0; g < A->n; ++g)
        full += A->frame[i].c[g] * A->gram[g] * B[g].apply(phi).eval(x.c);
      // frame vectors have (c_i | c_i) = 1, so no normalization needed
      CHECK(full == radial);
    }
  }
}

TEST_CASE("equivariance of the Bessel operator under Str elements") {
  Rat lam = rat(5, 2);
  {
    auto A = Algebra::parse("sym:2");
    CHECK(equivariance_check(*A, MatQ::identity(A->n), lam, A->minors[1]));
    MatQ g = A->pmat(A->frame_diag({Rat(2), Rat(3)}));
    CHECK(equivariance_check(*A, g, lam, A->minors[1]));
    std::mt19937_64 rng(31);
    CHECK(equivariance_check(*A, g, lam, random_poly(A->n, 3, rng)));
  }
  {
    auto A = Algebra::parse("spin:3");
    MatQ g = MatQ::identity(3);
    g(1, 1) = rat(3, 5);
    g(1, 2) = rat(-4, 5);
    g(2, 1) = rat(4, 5);
    g(2, 2) = rat(3, 5);
    std::mt19937_64 rng(37);
    CHECK(equivariance_check(*A, g, lam, random_poly(3, 3, rng)));
    MatQ bad = MatQ::identity(3);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(equivariance_check(*A, bad, lam, PolyQ::one(3)), NotStructureElement);
  }
}

TEST_CASE("co(V): sl2 triple, antisymmetry, Jacobi, theta") {
  for (const char* spec : {"spin:3", "sym:2", "herm:2", "sym:3"}) {
    auto A = Algebra::parse(spec);
    CoElement E = co_E(*A), F = co_F(*A), H = co_H(*A);
    CHECK(co_equal(co_bracket(E, F), H));
    CHECK(co_equal(co_bracket(H, E), co_scale(E, GRat(2))));
    CHECK(co_equal(co_bracket(H, F), co_scale(F, GRat(-2))));
    auto basis = co_basis(*A);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
      auto& X = basis[rng() % basis.size()];
      auto& Y = basis[rng() % basis.size()];
      auto& Z = basis[rng() % basis.size()];
      CHECK(co_equal(co_bracket(X, Y), co_scale(co_bracket(Y, X), GRat(-1))));
      CoElement j1 = co_bracket(X, co_bracket(Y, Z));
      CoElement j2 = co_bracket(Y, co_bracket(Z, X));
      CoElement j3 = co_bracket(Z, co_bracket(X, Y));
      CHECK(co_equal(co_add(j1, co_add(j2, j3)), co_zero(*A)));
      CHECK(co_equal(cartan_theta(cartan_theta(X)), X));
    }
  }
}

TEST_CASE("Cayley transform: displayed images and Lie homomorphism") {
  for (const char* spec : {"spin:3", "sym:2", "herm:2"}) {
    auto A = Algebra::parse(spec);
    for (auto& D : A->derivation_basis()) {
      MatG Dg(A->n, A->n);
      for (int i = 0; i < A->n; ++i)
        for (int j = 0; j < A->n; ++j) Dg(i, j) = GRat(D(i, j));
      CHECK(co_equal(cayley(co_l(*A, Dg)), co_l(*A, Dg)));
    }
    // E_k^d = (1/2)(e_k, 2i L(e_k), e_k) maps onto (0,0,2 e_k): the image of
    // the p^+ isomorphism u -> (0,0,4u) at u = e_k/2
    for (int k = 1; k <= A->r; ++k) {
      CElement ek = A->to_c(A->ek(k));
      CoElement Ekd = co_zero(*A);
      for (int i = 0; i < A->n; ++i) {
        Ekd.u[i] = ek.c[i] * GRat(rat(1, 2));
        Ekd.v[i] = ek.c[i] * GRat(rat(1, 2));
      }
      Ekd.T = A->lmat(ek) * GRat::i_unit();
      CoElement img = cayley(Ekd);
      CoElement expect = co_zero(*A);
      for (int i = 0; i < A->n; ++i) expect.v[i] = ek.c[i] * GRat(2);
      CHECK(co_equal(img, expect));
    }
    auto basis = co_basis(*A);
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = a + 1; b < basis.size(); ++b) {
        CoElement lhs = cayley(co_bracket(basis[a], basis[b]));
        CoElement rhs = co_bracket(cayley(basis[a]), cayley(basis[b]));
        CHECK(co_equal(lhs, rhs));
      }
  }
}

TEST_CASE("dpi is a Lie algebra homomorphism (continuous lambda, exact)") {
  for (const char* spec : {"spin:3", "sym:2"}) {
    auto A = Algebra::parse(spec);
    Rat lam = rat((A->r - 1) * A->d, 2) + rat(2, 3);
    auto basis = co_basis(*A);
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = a + 1; b < basis.size(); ++b) {
        DiffOpG lhs = commutator(dpi(*A, lam, basis[a]), dpi(*A, lam, basis[b]));
        DiffOpG rhs = dpi(*A, lam, co_bracket(basis[a], basis[b]));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("dpi bracket at discrete lambda holds modulo the orbit ideal") {
  for (const char* spec : {"spin:3", "sym:2", "herm:2", "sym:3"}) {
    auto A = Algebra::parse(spec);
    for (int k = 1; k < A->r; ++k) {
      Rat lam = rat(long(k) * A->d, 2);
      const OrbitIdeal& I = orbit_ideal(*A, k);
      auto basis = co_basis(*A);
      std::mt19937_64 rng(43);
      for (int t = 0; t < 30; ++t) {
        auto& X = basis[rng() % basis.size()];
        auto& Y = basis[rng() % basis.size()];
        DiffOpG diff =
            commutator(dpi(*A, lam, X), dpi(*A, lam, Y)) - dpi(*A, lam, co_bracket(X, Y));
        CHECK(I.annihilates(diff));
      }
    }
  }
}

TEST_CASE("drho: center (e,0,-e) acts on constants by i r lambda") {
  for (const char* spec : {"spin:3", "sym:2", "sym:3", "herm:2"}) {
    auto A = Algebra::parse(spec);
    Rat lam = rat((A->r - 1) * A->d, 2) + rat(1, 2);
    CoElement Z = co_zero(*A);
    for (int i = 0; i < A->n; ++i) {
      Z.u[i] = GRat(A->unit.c[i]);
      Z.v[i] = GRat(-A->unit.c[i]);
    }
    PolyG one = PolyG::one(A->n);
    PolyG got = drho(*A, lam, Z).apply(one);
    PolyG expect = one * (GRat::i_unit() * GRat(Rat(A->r) * lam));
    CHECK(got == expect);
  }
}

TEST_CASE("drho(a,0,a) = (i/2)(a | 4B + z), drho(0,2L(a),0) = (1/2)(a | 4B - z)") {
  auto A = Algebra::parse("sym:2");
  Rat lam = rat(7, 5);
  auto B = bessel_op_c(*A, GRat(lam));
  for (int idx = 0; idx < A->n; ++idx) {
    std::vector<GRat> a(A->n, GRat(0));
    a[idx] = GRat(1);
    CElement ac = A->celem(a);
    PolyG az(A->n);
    az.add_term(mono_var(idx), GRat(A->gram[idx]));
    {
      CoElement X = co_zero(*A);
      X.u = a;
      X.v = a;
      DiffOpG expect = (pair_with(*A, a, B) * GRat(4) + DiffOpG::mult(az)) *
                       (GRat::i_unit() * GRat(rat(1, 2)));
      CHECK(drho(*A, lam, X) == expect);
    }
    {
      CoElement X = co_l(*A, A->lmat(ac) * GRat(2));
      DiffOpG expect = (pair_with(*A, a, B) * GRat(4) - DiffOpG::mult(az)) * GRat(rat(1, 2));
      CHECK(drho(*A, lam, X) == expect);
    }
  }
}

TEST_CASE("drho bracket homomorphism, exact / modulo ideal") {
  auto A = Algebra::parse("spin:3");
  Rat cont = rat(3, 2);
  auto basis = co_basis(*A);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      DiffOpG lhs = commutator(drho(*A, cont, basis[a]), drho(*A, cont, basis[b]));
      DiffOpG rhs = drho(*A, cont, co_bracket(basis[a], basis[b]));
      CHECK(lhs == rhs);
    }
  Rat disc = rat(1, 2);
  const OrbitIdeal& I = orbit_ideal(*A, 1);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      DiffOpG diff = commutator(drho(*A, disc, basis[a]), drho(*A, disc, basis[b])) -
                     drho(*A, disc, co_bracket(basis[a], basis[b]));
      CHECK(I.annihilates(diff));
    }
}

TEST_CASE("Bessel components commute (exactly, and modulo ideal at discrete lambda)") {
  for (const char* spec : {"spin:3", "sym:2", "herm:2"}) {
    auto A = Algebra::parse(spec);
    auto Bc = bessel_op_c(*A, GRat(rat(8, 5)));
    for (int a = 0; a < A->n; ++a)
      for (int b = a + 1; b < A->n; ++b) CHECK(commutator(Bc[a], Bc[b]).is_zero_op());
    for (int k = 1; k < A->r; ++k) {
      auto Bd = bessel_op_c(*A, GRat(rat(long(k) * A->d, 2)));
      const OrbitIdeal& I = orbit_ideal(*A, k);
      for (int a = 0; a < A->n; ++a)
        for (int b = a + 1; b < A->n; ++b) CHECK(I.annihilates(commutator(Bd[a], Bd[b])));
    }
  }
}

TEST_CASE("orbit ideal: Delta_m reduces to zero iff inadmissible") {
  for (const char* spec : {"spin:3", "sym:2", "sym:3", "herm:2"}) {
    auto A = Algebra::parse(spec);
    for (int k = 0; k < A->r; ++k) {
      const OrbitIdeal& I = orbit_ideal(*A, k);
      for (auto& m : partitions_up_to(A->r, 3)) {
        bool vanishes = I.contains(complexify(delta_m(*A, m)));
        CHECK(vanishes == !m.admissible(k));
      }
    }
  }
}

TEST_CASE("tangentiality of B_{kd/2} to orbit ideals") {
  {
    auto A = Algebra::parse("sym:2");
    auto rep = tangentiality_check(*A, 0, 3);
    CHECK(rep.ok());
  }
  {
    auto A = Algebra::parse("spin:3");
    auto rep = tangentiality_check(*A, 1, 4);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
  }
  {
    auto A = Algebra::parse("sym:3");
    auto rep = tangentiality_check(*A, 1, 3);
    CHECK(rep.ok());
  }
  // a perturbed parameter is not tangential
  {
    auto A = Algebra::parse("spin:3");
    const OrbitIdeal& I = orbit_ideal(*A, 1);
    auto B = bessel_op(*A, rat(3, 2));
    bool all_inside = true;
    for (int comp = 0; comp < A->n; ++comp)
      all_inside &= I.contains(complexify(B[comp].apply(A->minors[1])));
    CHECK_FALSE(all_inside);
  }
}

TEST_CASE("DiffOp JSON golden shape") {
  auto R = Algebra::parse("real");
  auto B = bessel_op(*R, Rat(2));
  CHECK(B[0].json() ==
        "{\"nv\":1,\"terms\":[{\"d\":[1],\"coeff\":{\"nv\":1,\"terms\":[{\"e\":[0],\"c\":\"2\"}]}},"
        "{\"d\":[2],\"coeff\":{\"nv\":1,\"terms\":[{\"e\":[1],\"c\":\"1\"}]}}]}");
}
