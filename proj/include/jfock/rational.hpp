#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace jfock {

using Rat = mpq_class;

// Canonicalizing constructor; mpq_class(n,d) alone does not reduce.
inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline std::string rat_str(const Rat& q) { return q.get_str(); }
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline Rat conj_of(const Rat& q) { return q; }
inline Rat re_part(const Rat& q) { return q; }

// Gaussian rational re + i*im. The exact scalar for everything touching
// the complexified algebra (Cayley transform, dpi^C, complex minors).
struct GRat {
  Rat re, im;
  GRat() : re(0), im(0) {}
  GRat(int v) : re(v), im(0) {}
  GRat(const Rat& r) : re(r), im(0) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i_unit() { return GRat(Rat(0), Rat(1)); }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(const GRat& a, const GRat& b) {
    Rat n2 = b.re * b.re + b.im * b.im;
    return GRat((a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2);
  }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

inline bool is_zero(const GRat& z) { return is_zero(z.re) && is_zero(z.im); }
inline GRat conj_of(const GRat& z) { return GRat(z.re, -z.im); }
inline Rat re_part(const GRat& z) { return z.re; }
inline Rat norm2(const GRat& z) { return z.re * z.re + z.im * z.im; }
inline std::complex<double> to_complex(const GRat& z) { return {z.re.get_d(), z.im.get_d()}; }
inline std::complex<double> to_complex(const Rat& q) { return {q.get_d(), 0.0}; }

inline std::string grat_str(const GRat& z) {
  return z.re.get_str() + (sgn(z.im) >= 0 ? "+" : "") + z.im.get_str() + "i";
}

// Classical Pochhammer (a)_n over rationals.
inline Rat poch1(const Rat& a, int n) {
  Rat p(1);
  for (int j = 0; j < n; ++j) p *= a + j;
  return p;
}

inline Rat factorial_rat(int n) {
  Rat p(1);
  for (int j = 2; j <= n; ++j) p *= j;
  return p;
}

}  // namespace jfock
