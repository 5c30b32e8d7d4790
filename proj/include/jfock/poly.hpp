#pragma once

#include <array>
#include <cassert>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "jfock/exact_linalg.hpp"
#include "jfock/rational.hpp"

namespace jfock {

constexpr int kMaxVars = 16;

// Exponent multi-index; lexicographic order gives the canonical term order.
struct Mono {
  std::array<uint8_t, kMaxVars> e{};

  int deg() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator<(const Mono& o) const { return e < o.e; }
  bool operator==(const Mono& o) const { return e == o.e; }
};

inline Mono mono_var(int i) {
  Mono m;
  m.e[i] = 1;
  return m;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = uint8_t(a.e[i] + b.e[i]);
  return m;
}

// Sparse multivariate polynomial with exact coefficients (T = Rat or GRat).
template <class T>
struct Poly {
  int nv = 0;
  std::map<Mono, T> t;

  Poly() = default;
  explicit Poly(int nvars) : nv(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const T& c) {
    Poly p(nvars);
    if (!is_zero(c)) p.t[Mono{}] = c;
    return p;
  }
  static Poly one(int nvars) { return constant(nvars, T(1)); }
  static Poly var(int nvars, int i) {
    Poly p(nvars);
    p.t[mono_var(i)] = T(1);
    return p;
  }

  bool is_zero_poly() const { return t.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [m, c] : t) d = std::max(d, m.deg());
    return d;
  }

  void add_term(const Mono& m, const T& c) {
    if (is_zero(c)) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) t.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.t) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.t) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly p(nv);
    for (auto& [m, c] : t) p.t[m] = -c;
    return p;
  }
  Poly operator*(const T& s) const {
    Poly p(nv);
    if (is_zero(s)) return p;
    for (auto& [m, c] : t) p.t[m] = c * s;
    return p;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p(a.nv);
    for (auto& [ma, ca] : a.t)
      for (auto& [mb, cb] : b.t) p.add_term(mono_mul(ma, mb), ca * cb);
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }

  Poly pow(int k) const {
    Poly r = one(nv);
    Poly base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  Poly derivative(int i) const {
    Poly p(nv);
    for (auto& [m, c] : t) {
      if (m.e[i] == 0) continue;
      Mono m2 = m;
      m2.e[i] -= 1;
      p.add_term(m2, c * T(int(m.e[i])));
    }
    return p;
  }

  Poly homogeneous_part(int d) const {
    Poly p(nv);
    for (auto& [m, c] : t)
      if (m.deg() == d) p.t[m] = c;
    return p;
  }

  Poly conj() const {
    Poly p(nv);
    for (auto& [m, c] : t) p.t[m] = conj_of(c);
    return p;
  }

  // Substitute x_i -> sum_j M(i,j) x_j + b_i (affine when b given).
  Poly subst(const Mat<T>& M, const std::vector<T>* b = nullptr) const {
    assert(M.rows == nv && M.cols == nv);
    std::vector<Poly> lin(nv, Poly(nv));
    for (int i = 0; i < nv; ++i) {
      Poly li(nv);
      for (int j = 0; j < nv; ++j)
        if (!is_zero(M(i, j))) li.add_term(mono_var(j), M(i, j));
      if (b && !is_zero((*b)[i])) li.add_term(Mono{}, (*b)[i]);
      lin[i] = std::move(li);
    }
    // power tables up to the needed exponent per variable
    std::vector<std::vector<Poly>> pw(nv);
    for (int i = 0; i < nv; ++i) pw[i].push_back(one(nv));
    Poly out(nv);
    for (auto& [m, c] : t) {
      Poly term = constant(nv, c);
      for (int i = 0; i < nv; ++i) {
        while (int(pw[i].size()) <= m.e[i]) pw[i].push_back(pw[i].back() * lin[i]);
        if (m.e[i]) term = term * pw[i][m.e[i]];
      }
      out += term;
    }
    return out;
  }

  // Shift x -> x + a.
  Poly shift(const std::vector<T>& a) const {
    Mat<T> id = Mat<T>::identity(nv);
    return subst(id, &a);
  }

  template <class S>
  S eval(const std::vector<S>& x) const {
    assert(int(x.size()) == nv);
    S acc(0);
    for (auto& [m, c] : t) {
      S term = coeff_cast<S>(c);
      for (int i = 0; i < nv; ++i)
        for (int k = 0; k < m.e[i]; ++k) term *= x[i];
      acc += term;
    }
    return acc;
  }

  template <class S>
  static S coeff_cast(const T& c);

  std::string json() const;
};

template <>
template <>
inline double Poly<Rat>::coeff_cast<double>(const Rat& c) { return c.get_d(); }
template <>
template <>
inline std::complex<double> Poly<Rat>::coeff_cast<std::complex<double>>(const Rat& c) {
  return {c.get_d(), 0.0};
}
template <>
template <>
inline Rat Poly<Rat>::coeff_cast<Rat>(const Rat& c) { return c; }
template <>
template <>
inline GRat Poly<Rat>::coeff_cast<GRat>(const Rat& c) { return GRat(c); }
template <>
template <>
inline std::complex<double> Poly<GRat>::coeff_cast<std::complex<double>>(const GRat& c) {
  return to_complex(c);
}
template <>
template <>
inline GRat Poly<GRat>::coeff_cast<GRat>(const GRat& c) { return c; }

using PolyQ = Poly<Rat>;
using PolyG = Poly<GRat>;

inline PolyG complexify(const PolyQ& p) {
  PolyG q(p.nv);
  for (auto& [m, c] : p.t) q.t[m] = GRat(c);
  return q;
}

inline PolyQ real_part(const PolyG& p) {
  PolyQ q(p.nv);
  for (auto& [m, c] : p.t)
    if (!is_zero(c.re)) q.t[m] = c.re;
  return q;
}

inline bool is_real(const PolyG& p) {
  for (auto& [m, c] : p.t)
    if (!is_zero(c.im)) return false;
  return true;
}

// Canonical JSON: terms sorted by exponent key, rationals as "p/q" strings.
template <>
inline std::string Poly<Rat>::json() const {
  std::ostringstream os;
  os << "{\"nv\":" << nv << ",\"terms\":[";
  bool first = true;
  for (auto& [m, c] : t) {
    if (!first) os << ",";
    first = false;
    os << "{\"e\":[";
    for (int i = 0; i < nv; ++i) os << (i ? "," : "") << int(m.e[i]);
    os << "],\"c\":\"" << c.get_str() << "\"}";
  }
  os << "]}";
  return os.str();
}

template <>
inline std::string Poly<GRat>::json() const {
  std::ostringstream os;
  os << "{\"nv\":" << nv << ",\"terms\":[";
  bool first = true;
  for (auto& [m, c] : t) {
    if (!first) os << ",";
    first = false;
    os << "{\"e\":[";
    for (int i = 0; i < nv; ++i) os << (i ? "," : "") << int(m.e[i]);
    os << "],\"re\":\"" << c.re.get_str() << "\",\"im\":\"" << c.im.get_str() << "\"}";
  }
  os << "]}";
  return os.str();
}

// Dense coefficient vector over the (sorted) monomials of fixed degree.
struct MonoIndex {
  std::vector<Mono> monos;
  std::map<Mono, int> index;

  static MonoIndex of_degree(int nv, int d) {
    MonoIndex mi;
    Mono cur;
    enumerate(nv, d, 0, cur, mi.monos);
    for (int i = 0; i < int(mi.monos.size()); ++i) mi.index[mi.monos[i]] = i;
    return mi;
  }
  static void enumerate(int nv, int rem, int pos, Mono& cur, std::vector<Mono>& out) {
    if (pos == nv - 1) {
      cur.e[pos] = uint8_t(rem);
      out.push_back(cur);
      cur.e[pos] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[pos] = uint8_t(k);
      enumerate(nv, rem - k, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
  }
  int size() const { return int(monos.size()); }

  template <class T>
  std::vector<T> to_vec(const Poly<T>& p) const {
    std::vector<T> v(monos.size(), T(0));
    for (auto& [m, c] : p.t) {
      auto it = index.find(m);
      assert(it != index.end());
      v[it->second] = c;
    }
    return v;
  }
  template <class T>
  Poly<T> to_poly(const std::vector<T>& v, int nv) const {
    Poly<T> p(nv);
    for (int i = 0; i < size(); ++i)
      if (!is_zero(v[i])) p.t[monos[i]] = v[i];
    return p;
  }
};

}  // namespace jfock
