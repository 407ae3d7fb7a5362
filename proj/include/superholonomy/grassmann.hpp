#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace superholonomy {

/// Bit set over the Grassmann generators; bit i stands for theta_{i+1}.
using Monomial = std::uint32_t;

inline constexpr int kMaxGenerators = 16;
inline constexpr double kDropTolerance = 1e-14;

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int as_int(Parity p) { return static_cast<int>(p); }

/// Sign picked up when the ordered product theta_x * theta_y is rewritten as
/// the increasing monomial x|y. Zero if the monomials share a generator.
int merge_sign(Monomial x, Monomial y);

inline int degree(Monomial m) { return __builtin_popcount(m); }

/// Element of the real Grassmann algebra B_N.
///
/// Terms are kept sorted by monomial with no coefficient below
/// kDropTolerance, so equal elements have identical term lists.
class GrassmannElement {
 public:
  using Term = std::pair<Monomial, double>;

  GrassmannElement() = default;
  explicit GrassmannElement(int generators);
  GrassmannElement(int generators, double scalar);
  GrassmannElement(int generators, std::vector<Term> terms);

  /// theta_i with 1-based index i.
  static GrassmannElement generator(int generators, int index);
  /// c * theta_{i1} ... theta_{ik}, indices 1-based in any order.
  static GrassmannElement monomial(int generators, std::initializer_list<int> indices,
                                   double coeff = 1.0);

  int generators() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  double body() const;
  double coeff(Monomial m) const;
  GrassmannElement soul() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;
  bool is_odd() const;
  /// Largest absolute coefficient; zero for the zero element.
  double max_abs() const;
  /// Sum of absolute coefficients.
  double l1_norm() const;
  /// Terms of exactly the given Grassmann degree.
  GrassmannElement degree_part(int d) const;
  /// Lowest degree carrying a nonzero coefficient, or -1 for zero.
  int lowest_degree() const;

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(double s);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, double s) { return a *= s; }
  friend GrassmannElement operator*(double s, GrassmannElement a) { return a *= s; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void canonicalize();

  int n_ = 0;
  std::vector<Term> terms_;
};

GrassmannElement ga_mul(const GrassmannElement& x, const GrassmannElement& y);

/// Inverse through the terminating geometric series in the soul.
/// Throws NotInvertibleError when the body vanishes.
GrassmannElement ga_invert(const GrassmannElement& x);

std::ostream& operator<<(std::ostream& os, const GrassmannElement& x);

}  // namespace superholonomy
