#include "superholonomy/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "superholonomy/errors.hpp"

namespace superholonomy {

namespace {

void check_generators(int n) {
  if (n < 0 || n > kMaxGenerators) {
    throw DimensionError("Grassmann generator count must lie in [0, " +
                         std::to_string(kMaxGenerators) + "], got " + std::to_string(n));
  }
}

void check_same(const GrassmannElement& x, const GrassmannElement& y) {
  if (x.generators() != y.generators()) {
    throw DimensionError("Grassmann operands over different generator counts (" +
                         std::to_string(x.generators()) + " vs " +
                         std::to_string(y.generators()) + ")");
  }
}

}  // namespace

int merge_sign(Monomial x, Monomial y) {
  if (x & y) return 0;
  // Each generator of y has to hop over every generator of x with a larger index.
  int swaps = 0;
  for (Monomial rest = y; rest; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    swaps += __builtin_popcount(x >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int generators) : n_(generators) {
  check_generators(generators);
}

GrassmannElement::GrassmannElement(int generators, double scalar) : n_(generators) {
  check_generators(generators);
  terms_.emplace_back(0u, scalar);
  canonicalize();
}

GrassmannElement::GrassmannElement(int generators, std::vector<Term> terms)
    : n_(generators), terms_(std::move(terms)) {
  check_generators(generators);
  const Monomial full = generators == 32 ? ~0u : ((1u << generators) - 1u);
  for (const auto& [m, c] : terms_) {
    if (m & ~full) throw DimensionError("monomial references a generator beyond N");
  }
  canonicalize();
}

GrassmannElement GrassmannElement::generator(int generators, int index) {
  return monomial(generators, {index});
}

GrassmannElement GrassmannElement::monomial(int generators, std::initializer_list<int> indices,
                                            double coeff) {
  check_generators(generators);
  GrassmannElement result(generators, coeff);
  for (int i : indices) {
    if (i < 1 || i > generators) {
      throw DimensionError("generator index " + std::to_string(i) + " outside 1.." +
                           std::to_string(generators));
    }
    result = result * GrassmannElement(generators, {{Monomial{1u} << (i - 1), 1.0}});
  }
  return result;
}

void GrassmannElement::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return std::abs(t.second) < kDropTolerance; });
  terms_ = std::move(merged);
}

double GrassmannElement::body() const { return coeff(0u); }

double GrassmannElement::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.first < key; });
  return (it != terms_.end() && it->first == m) ? it->second : 0.0;
}

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement s(n_);
  for (const auto& t : terms_) {
    if (t.first != 0u) s.terms_.push_back(t);
  }
  return s;
}

bool GrassmannElement::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return degree(t.first) % 2 == 0; });
}

bool GrassmannElement::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return degree(t.first) % 2 == 1; });
}

double GrassmannElement::max_abs() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.second));
  return m;
}

double GrassmannElement::l1_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.second);
  return s;
}

GrassmannElement GrassmannElement::degree_part(int d) const {
  GrassmannElement r(n_);
  for (const auto& t : terms_) {
    if (degree(t.first) == d) r.terms_.push_back(t);
  }
  return r;
}

int GrassmannElement::lowest_degree() const {
  int best = -1;
  for (const auto& t : terms_) {
    const int d = degree(t.first);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  check_same(*this, o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  check_same(*this, o);
  for (const auto& t : o.terms_) terms_.emplace_back(t.first, -t.second);
  canonicalize();
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(double s) {
  for (auto& t : terms_) t.second *= s;
  canonicalize();
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  check_same(a, b);
  GrassmannElement r(a.n_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int s = merge_sign(ma, mb);
      if (s != 0) r.terms_.emplace_back(ma | mb, s * ca * cb);
    }
  }
  r.canonicalize();
  return r;
}

GrassmannElement ga_mul(const GrassmannElement& x, const GrassmannElement& y) { return x * y; }

GrassmannElement ga_invert(const GrassmannElement& x) {
  const double b = x.body();
  if (b == 0.0) throw NotInvertibleError("Grassmann element with zero body is not invertible");
  // x = b (1 + u) with u nilpotent, so x^{-1} = b^{-1} sum_k (-u)^k; u^{N+1} = 0.
  const GrassmannElement minus_u = x.soul() * (-1.0 / b);
  GrassmannElement sum(x.generators(), 1.0);
  GrassmannElement power(x.generators(), 1.0);
  for (int k = 1; k <= x.generators(); ++k) {
    power = power * minus_u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * (1.0 / b);
}

std::ostream& operator<<(std::ostream& os, const GrassmannElement& x) {
  if (x.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const double a = std::abs(c);
    if (m == 0u || a != 1.0) os << a;
    for (int i = 0; i < x.generators(); ++i) {
      if (m & (1u << i)) os << "t" << (i + 1);
    }
  }
  return os;
}

}  // namespace superholonomy
