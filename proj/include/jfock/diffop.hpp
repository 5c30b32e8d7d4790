#pragma once

#include <sstream>

#include "jfock/poly.hpp"

namespace jfock {

// Polynomial-coefficient differential operator sum_a c_a(x) d^a, normal
// form with all derivatives to the right of the coefficients.
template <class T>
struct DiffOp {
  int nv = 0;
  std::map<Mono, Poly<T>> terms;  // derivative multi-index -> coefficient

  DiffOp() = default;
  explicit DiffOp(int nvars) : nv(nvars) {}

  static DiffOp zero(int nvars) { return DiffOp(nvars); }
  static DiffOp mult(const Poly<T>& p) {
    DiffOp d(p.nv);
    if (!p.is_zero_poly()) d.terms[Mono{}] = p;
    return d;
  }
  static DiffOp partial(int nvars, int i) {
    DiffOp d(nvars);
    d.terms[mono_var(i)] = Poly<T>::one(nvars);
    return d;
  }

  bool is_zero_op() const { return terms.empty(); }

  void add_term(const Mono& deriv, const Poly<T>& coeff) {
    if (coeff.is_zero_poly()) return;
    auto it = terms.find(deriv);
    if (it == terms.end()) {
      terms.emplace(deriv, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero_poly()) terms.erase(it);
    }
  }

  DiffOp& operator+=(const DiffOp& o) {
    for (auto& [d, c] : o.terms) add_term(d, c);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    for (auto& [d, c] : o.terms) add_term(d, -c);
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator*(const T& s) const {
    DiffOp d(nv);
    if (is_zero(s)) return d;
    for (auto& [de, c] : terms) d.terms[de] = c * s;
    return d;
  }
  DiffOp operator-() const { return *this * T(-1); }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms == b.terms; }

  Poly<T> apply(const Poly<T>& p) const {
    Poly<T> out(nv);
    for (auto& [de, c] : terms) {
      Poly<T> q = p;
      for (int i = 0; i < nv && !q.is_zero_poly(); ++i)
        for (int k = 0; k < de.e[i]; ++k) q = q.derivative(i);
      out += c * q;
    }
    return out;
  }

  // Composition (this after other) in normal form, via Leibniz.
  DiffOp compose(const DiffOp& o) const {
    DiffOp out(nv);
    for (auto& [da, ca] : terms)
      for (auto& [db, cb] : o.terms) {
        // d^da (cb d^db) = sum_{g <= da} binom(da, g) (d^g cb) d^{da - g + db}
        std::vector<std::pair<Mono, T>> gs;
        gs.push_back({Mono{}, T(1)});
        for (int i = 0; i < nv; ++i) {
          if (da.e[i] == 0) continue;
          std::vector<std::pair<Mono, T>> next;
          for (auto& [g, w] : gs) {
            for (int k = 0; k <= da.e[i]; ++k) {
              Mono g2 = g;
              g2.e[i] = uint8_t(k);
              Rat bk(1);
              for (int j = 0; j < k; ++j) bk = bk * (da.e[i] - j) / (j + 1);
              next.push_back({g2, w * T(bk)});
            }
          }
          gs = std::move(next);
        }
        for (auto& [g, w] : gs) {
          Poly<T> dcb = cb;
          for (int i = 0; i < nv && !dcb.is_zero_poly(); ++i)
            for (int k = 0; k < g.e[i] && !dcb.is_zero_poly(); ++k) dcb = dcb.derivative(i);
          if (dcb.is_zero_poly()) continue;
          Mono rest;
          for (int i = 0; i < kMaxVars; ++i) rest.e[i] = uint8_t(da.e[i] - g.e[i] + db.e[i]);
          out.add_term(rest, (ca * dcb) * w);
        }
      }
    return out;
  }

  // Conjugation e^{l} D e^{-l} for a linear form l(x) = sum grad_i x_i:
  // substitute d_i -> d_i - grad_i (the shifted derivatives commute).
  DiffOp conjugate_by_exp(const std::vector<T>& grad) const {
    DiffOp out(nv);
    for (auto& [de, c] : terms) {
      std::vector<std::pair<Mono, T>> acc;
      acc.push_back({Mono{}, T(1)});
      for (int i = 0; i < nv; ++i) {
        if (de.e[i] == 0) continue;
        std::vector<std::pair<Mono, T>> next;
        for (auto& [g, w] : acc) {
          for (int k = 0; k <= de.e[i]; ++k) {
            // (d - s)^e = sum_k binom(e,k) d^k (-s)^{e-k}
            Mono g2 = g;
            g2.e[i] = uint8_t(k);
            Rat bk(1);
            for (int j = 0; j < k; ++j) bk = bk * (de.e[i] - j) / (j + 1);
            T spow(1);
            for (int j = 0; j < de.e[i] - k; ++j) spow *= -grad[i];
            next.push_back({g2, w * T(bk) * spow});
          }
        }
        acc = std::move(next);
      }
      for (auto& [g, w] : acc) out.add_term(g, c * w);
    }
    return out;
  }

  std::string json() const {
    std::ostringstream os;
    os << "{\"nv\":" << nv << ",\"terms\":[";
    bool first = true;
    for (auto& [de, c] : terms) {
      if (!first) os << ",";
      first = false;
      os << "{\"d\":[";
      for (int i = 0; i < nv; ++i) os << (i ? "," : "") << int(de.e[i]);
      os << "],\"coeff\":" << c.json() << "}";
    }
    os << "]}";
    return os.str();
  }
};

using DiffOpQ = DiffOp<Rat>;
using DiffOpG = DiffOp<GRat>;

inline DiffOpG complexify(const DiffOpQ& d) {
  DiffOpG out(d.nv);
  for (auto& [de, c] : d.terms) out.terms[de] = complexify(c);
  return out;
}

template <class T>
DiffOp<T> commutator(const DiffOp<T>& a, const DiffOp<T>& b) {
  return a.compose(b) - b.compose(a);
}

}  // namespace jfock
