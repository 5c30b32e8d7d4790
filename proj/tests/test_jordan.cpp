#include <doctest.h>

#include <random>

#include "jfock/algebra.hpp"

using namespace jfock;

namespace {

std::vector<AlgebraPtr> shipped() {
  std::vector<AlgebraPtr> out;
  out.push_back(Algebra::parse("real"));
  for (int k = 3; k <= 6; ++k) out.push_back(Algebra::make(Kind::Spin, k));
  for (int k = 2; k <= 4; ++k) out.push_back(Algebra::make(Kind::SymReal, k));
  for (int k = 2; k <= 3; ++k) out.push_back(Algebra::make(Kind::HermComplex, k));
  return out;
}

Element random_element(const Algebra& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rat> c(A.n);
  for (auto& q : c) q = rat(num(rng), den(rng));
  return A.elem(c);
}

}  // namespace

TEST_CASE("shipped algebras construct and match the catalog table") {
  struct Row { const char* spec; int n, r, d; };
  const Row rows[] = {
      {"real", 1, 1, 0},   {"spin:3", 3, 2, 1}, {"spin:4", 4, 2, 2},
      {"spin:5", 5, 2, 3}, {"spin:6", 6, 2, 4}, {"sym:2", 3, 2, 1},
      {"sym:3", 6, 3, 1},  {"sym:4", 10, 4, 1}, {"herm:2", 4, 2, 2},
      {"herm:3", 9, 3, 2},
  };
  for (auto& row : rows) {
    auto A = Algebra::parse(row.spec);
    CHECK(A->n == row.n);
    CHECK(A->r == row.r);
    CHECK(A->d == row.d);
    CHECK(A->trace(A->unit) == Rat(row.r));
    CHECK(A->det(A->unit) == Rat(1));
  }
}

TEST_CASE("mul: unit, spin closed form, sym matrix oracle") {
  auto S = Algebra::parse("spin:4");
  // (x1,x')*(y1,y') = (x1 y1 + x'.y', x1 y' + y1 x')
  Element x = S->elem({rat(2), rat(1), rat(-1), rat(3)});
  Element y = S->elem({rat(1), rat(2), rat(0), rat(1)});
  Element xy = S->mul(x, y);
  CHECK(xy.c[0] == rat(2 * 1) + rat(1 * 2 + 0 + 3 * 1));
  CHECK(xy.c[1] == rat(2 * 2 + 1 * 1));
  CHECK(xy.c[2] == rat(2 * 0 - 1));
  CHECK(xy.c[3] == rat(2 * 1 + 3));

  auto A = Algebra::parse("sym:2");
  // oracle: direct symmetric matrix arithmetic, x*y = (XY+YX)/2
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Element a = random_element(*A, rng), b = random_element(*A, rng);
    // coordinates (x11, x22, x12)
    auto entry = [&](const Element& v, int i, int j) -> Rat {
      if (i == j) return v.c[i];
      return v.c[2];
    };
    Element ab = A->mul(a, b);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Rat s(0);
        for (int k = 0; k < 2; ++k)
          s += entry(a, i, k) * entry(b, k, j) + entry(b, i, k) * entry(a, k, j);
        CHECK(entry(ab, i, j) == s / 2);
      }
  }
}

TEST_CASE("quadratic representation identities, exact on random rationals") {
  std::mt19937_64 rng(11);
  for (auto& A : shipped()) {
    CHECK(A->pmat(A->unit) == MatQ::identity(A->n));
    int samples = A->n > 6 ? 20 : 100;
    for (int t = 0; t < samples; ++t) {
      Element x = random_element(*A, rng);
      // Tr L(x) = (n/r) tr(x)
      CHECK(A->lmat(x).trace() == rat(A->n, A->r) * A->trace(x));
      Element y = random_element(*A, rng);
      CHECK(A->pmat2(x, x) == A->pmat(x));
      // box identity (x `box` y) z = P(x,z) y on basis vectors
      for (int b = 0; b < A->n; ++b) {
        Element eb = A->zero();
        eb.c[b] = 1;
        auto lhs = A->box(x, y).apply(eb.c);
        auto rhs = A->pmat2(x, eb).apply(y.c);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("Det P(x) = det(x)^(2n/r) for sampled x") {
  std::mt19937_64 rng(13);
  // determinant of the exact matrix via fraction-free elimination on MatQ
  auto detq = [](MatQ m) {
    Rat det(1);
    int nn = m.rows;
    for (int c = 0; c < nn; ++c) {
      int piv = -1;
      for (int i = c; i < nn; ++i)
        if (!is_zero(m(i, c))) { piv = i; break; }
      if (piv < 0) return Rat(0);
      if (piv != c) {
        for (int j = 0; j < nn; ++j) std::swap(m(piv, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      Rat inv = 1 / m(c, c);
      for (int i = c + 1; i < nn; ++i) {
        Rat f = m(i, c) * inv;
        if (is_zero(f)) continue;
        for (int j = c; j < nn; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  };
  for (auto& A : shipped()) {
    if (A->n > 6) continue;  // keep the exact determinant cheap
    for (int t = 0; t < 10; ++t) {
      Element x = random_element(*A, rng);
      Rat dp = detq(A->pmat(x));
      Rat dx = A->det(x);
      Rat pow(1);
      for (int i = 0; i < 2 * A->n / A->r; ++i) pow *= dx;
      CHECK(dp == pow);
    }
  }
}

TEST_CASE("trace/det closed forms: spin and real") {
  auto S = Algebra::parse("spin:5");
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    Element x = random_element(*S, rng);
    Rat expect = x.c[0] * x.c[0];
    for (int i = 1; i < S->n; ++i) expect -= x.c[i] * x.c[i];
    CHECK(S->det(x) == expect);
    CHECK(S->trace(x) == 2 * x.c[0]);
  }
  auto R = Algebra::parse("real");
  CHECK(R->det(R->elem({rat(5, 3)})) == rat(5, 3));
}

TEST_CASE("inner is positive definite on random elements") {
  std::mt19937_64 rng(19);
  for (auto& A : shipped()) {
    for (int t = 0; t < 10; ++t) {
      Element x = random_element(*A, rng);
      Rat q = A->inner(x, x);
      bool nonzero = false;
      for (auto& c : x.c) nonzero |= !is_zero(c);
      if (nonzero) CHECK(sgn(q) > 0);
    }
  }
}

TEST_CASE("inverse and integer powers") {
  std::mt19937_64 rng(23);
  for (auto& A : shipped()) {
    CHECK(A->inverse(A->unit).c == A->unit.c);
    for (int t = 0; t < 8; ++t) {
      Element x = random_element(*A, rng);
      if (is_zero(A->det(x))) continue;
      Element y = A->inverse(x);
      // P(x) x^{-1} = x and x o x^{-1} = e hold for the Jordan inverse
      CHECK(A->pmat(x).apply(y.c) == x.c);
      CHECK(A->mul(x, y).c == A->unit.c);
    }
    // spin closed form: x^{-1} = (x1,-x')/det
    if (A->kind == Kind::Spin) {
      Element x = random_element(*A, rng);
      if (!is_zero(A->det(x))) {
        Element y = A->inverse(x);
        Rat dt = A->det(x);
        CHECK(y.c[0] == x.c[0] / dt);
        for (int i = 1; i < A->n; ++i) CHECK(y.c[i] == -x.c[i] / dt);
      }
    }
  }
  auto R = Algebra::parse("real");
  CHECK_THROWS_AS(R->inverse(R->zero()), SingularElement);
}

TEST_CASE("spectral decomposition reconstructs and sums to trace") {
  std::mt19937_64 rng(29);
  for (auto& A : shipped()) {
    for (int t = 0; t < 6; ++t) {
      Element x = random_element(*A, rng);
      Spectral s = A->spectral(x);
      REQUIRE(int(s.eig.size()) == A->r);
      for (int i = 0; i + 1 < A->r; ++i) CHECK(s.eig[i] >= s.eig[i + 1] - 1e-12);
      Eigen::VectorXd diag = Eigen::VectorXd::Zero(A->n);
      for (int i = 0; i < A->r; ++i) diag += s.eig[i] * A->to_numeric(A->frame[i]);
      Eigen::VectorXd rec = s.rot * diag;
      CHECK((rec - A->to_numeric(x)).norm() <= 1e-10 * (1 + A->to_numeric(x).norm()));
      double esum = 0;
      for (double a : s.eig) esum += a;
      CHECK(esum == doctest::Approx(A->trace(x).get_d()).epsilon(1e-10));
    }
  }
}

TEST_CASE("power: half power squares back, unit fixed") {
  std::mt19937_64 rng(31);
  for (auto& A : shipped()) {
    Element e = A->unit;
    CHECK((A->to_numeric(A->power(e, 0.5)) - A->to_numeric(e)).norm() < 1e-12);
    for (int t = 0; t < 5; ++t) {
      Element x = random_element(*A, rng);
      Element x2 = A->mul(x, x);  // in the closed cone
      Element h = A->power(x2, 0.5);
      CHECK((A->to_numeric(A->mul(h, h)) - A->to_numeric(x2)).norm() <
            1e-8 * (1 + A->to_numeric(x2).norm()));
    }
    // exact integer powers agree with numeric route
    Element x = random_element(*A, rng);
    Element x3 = A->power_int(x, 3);
    CHECK((A->to_numeric(x3) - A->to_numeric(A->mul(x, A->mul(x, x)))).norm() == 0.0);
  }
}

TEST_CASE("Peirce projections: exact idempotent decomposition and dimensions") {
  for (auto& A : shipped()) {
    for (int k = 1; k < A->r; ++k) {
      Element c = A->ek(k);
      auto [p1, ph, p0] = A->peirce(c);
      CHECK(p1 * p1 == p1);
      CHECK(ph * ph == ph);
      CHECK(p0 * p0 == p0);
      CHECK(p1 * ph == MatQ(A->n, A->n));
      CHECK(p1 + ph + p0 == MatQ::identity(A->n));
      int d1 = 0, dh = 0, d0 = 0;
      // ranks via exact elimination
      MatQ m1 = p1, mh = ph, m0 = p0;
      d1 = rank_of(m1);
      dh = rank_of(mh);
      d0 = rank_of(m0);
      int rk = A->r - k;
      CHECK(d1 == k + k * (k - 1) * A->d / 2);
      CHECK(dh == k * rk * A->d);
      CHECK(d0 == rk + rk * (rk - 1) * A->d / 2);
    }
  }
  auto A = Algebra::parse("sym:2");
  CHECK_THROWS_AS(A->peirce(A->elem({rat(1), rat(1), rat(1)})), NotIdempotent);
}

TEST_CASE("spin frame: idempotent, orthogonal, sums to unit") {
  auto S = Algebra::parse("spin:3");
  const Element &c1 = S->frame[0], &c2 = S->frame[1];
  CHECK(S->mul(c1, c1).c == c1.c);
  CHECK(S->mul(c2, c2).c == c2.c);
  CHECK(S->mul(c1, c2).c == S->zero().c);
  Element sum = S->elem({c1.c[0] + c2.c[0], c1.c[1] + c2.c[1], c1.c[2] + c2.c[2]});
  CHECK(sum.c == S->unit.c);
}

TEST_CASE("principal minors: matrix oracle and boundary vanishing") {
  auto A = Algebra::parse("sym:3");
  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    Element x = random_element(*A, rng);
    // oracle: leading minors of the symbolic 3x3 symmetric matrix
    auto E = [&](int i, int j) -> Rat {
      if (i == j) return x.c[i];
      int a = std::min(i, j), b = std::max(i, j);
      int idx = 3 + (a == 0 ? (b - 1) : (a == 1 ? 2 : -1));
      return x.c[idx];
    };
    CHECK(A->principal_minor(1, A->to_c(x)).re == E(0, 0));
    CHECK(A->principal_minor(2, A->to_c(x)).re == E(0, 0) * E(1, 1) - E(0, 1) * E(0, 1));
    CHECK(A->principal_minor(3, A->to_c(x)).re == A->det(x));
  }
  // Delta_{k+1} vanishes on O_k: x = P(g) e_k stays in the orbit closure
  for (auto& Aa : shipped()) {
    for (int k = 1; k < Aa->r; ++k) {
      Element g = random_element(*Aa, rng);
      Element x = Aa->elem(Aa->pmat(g).apply(Aa->ek(k).c));
      for (int j = k + 1; j <= Aa->r; ++j)
        CHECK(is_zero(Aa->principal_minor(j, Aa->to_c(x))));
    }
  }
}

TEST_CASE("derivation algebra has the expected dimension") {
  struct Row { const char* spec; int dim; };
  const Row rows[] = {{"real", 0},  {"spin:3", 1}, {"spin:4", 3}, {"spin:5", 6},
                      {"sym:2", 1}, {"sym:3", 3},  {"herm:2", 3}, {"herm:3", 8}};
  for (auto& row : rows) {
    auto A = Algebra::parse(row.spec);
    CHECK(int(A->derivation_basis().size()) == row.dim);
  }
}

TEST_CASE("algebra mismatch is rejected") {
  auto A = Algebra::parse("sym:2");
  auto B = Algebra::parse("spin:3");
  CHECK_THROWS_AS(A->mul(A->unit, B->unit), AlgebraMismatch);
}

TEST_CASE("catalog JSON round-trips basic fields") {
  auto A = Algebra::parse("spin:4");
  auto s = A->catalog_json();
  CHECK(s.find("\"kind\":\"spin:4\"") != std::string::npos);
  CHECK(s.find("\"n\":4") != std::string::npos);
}
