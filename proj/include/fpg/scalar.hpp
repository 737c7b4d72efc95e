#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace fpg {

using Rat = mpq_class;

// v + sum_k d[k] e_k with e_k e_l = 0.  Jet<Jet<Rat>> carries the mixed
// second derivatives needed for Schouten brackets.  Empty d = constant.
template <class S>
struct Jet {
  S v;
  std::vector<S> d;

  Jet() : v(0) {}
  Jet(int x) : v(x) {}
  Jet(const S& x) : v(x) {}
  template <class T>
    requires(std::is_same_v<T, Rat> && !std::is_same_v<S, Rat>)
  Jet(const T& x) : v(x) {}
  Jet(S x, std::vector<S> dd) : v(std::move(x)), d(std::move(dd)) {}

  static Jet var(const S& x, std::size_t k, std::size_t n) {
    Jet j(x);
    j.d.assign(n, S(0));
    j.d[k] = S(1);
    return j;
  }
  S deriv(std::size_t k) const { return k < d.size() ? d[k] : S(0); }
};

template <class S> struct is_jet : std::false_type {};
template <class S> struct is_jet<Jet<S>> : std::true_type {};
template <class S> inline constexpr bool is_jet_v = is_jet<S>::value;

inline const Rat& base(const Rat& x) { return x; }
template <class S> const Rat& base(const Jet<S>& x) { return base(x.v); }

// decisions (pivots, cells) are taken on the base value only
template <class S> bool is_zero(const S& x) { return sgn(base(x)) == 0; }

inline bool is_zero_exact(const Rat& x) { return sgn(x) == 0; }
template <class S> bool is_zero_exact(const Jet<S>& x);

inline Rat inv(const Rat& x) {
  if (sgn(x) == 0) throw std::domain_error("division by zero");
  return Rat(1) / x;
}

template <class S> Jet<S> operator+(const Jet<S>& a, const Jet<S>& b) {
  if (a.d.empty()) return Jet<S>(S(a.v + b.v), b.d);
  if (b.d.empty()) return Jet<S>(S(a.v + b.v), a.d);
  std::size_t n = std::max(a.d.size(), b.d.size());
  std::vector<S> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = a.deriv(k) + b.deriv(k);
  return Jet<S>(S(a.v + b.v), std::move(d));
}
template <class S> Jet<S> operator-(const Jet<S>& a) {
  std::vector<S> d(a.d.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = -a.d[k];
  return Jet<S>(S(-a.v), std::move(d));
}
template <class S> Jet<S> operator-(const Jet<S>& a, const Jet<S>& b) {
  if (b.d.empty()) return Jet<S>(S(a.v - b.v), a.d);
  std::size_t n = std::max(a.d.size(), b.d.size());
  std::vector<S> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = a.deriv(k) - b.deriv(k);
  return Jet<S>(S(a.v - b.v), std::move(d));
}

template <class S> Jet<S> operator*(const Jet<S>& a, const Jet<S>& b) {
  if (a.d.empty() && b.d.empty()) return Jet<S>(S(a.v * b.v));
  bool az = is_zero_exact(a.v), bz = is_zero_exact(b.v);
  std::size_t n = std::max(a.d.size(), b.d.size());
  std::vector<S> d(n);
  for (std::size_t k = 0; k < n; ++k) {
    S x(0);
    if (!az && k < b.d.size() && !is_zero_exact(b.d[k])) x = a.v * b.d[k];
    if (!bz && k < a.d.size() && !is_zero_exact(a.d[k])) x = x + a.d[k] * b.v;
    d[k] = std::move(x);
  }
  return Jet<S>(S(a.v * b.v), std::move(d));
}

template <class S> Jet<S> inv(const Jet<S>& a) {
  S iv = inv(a.v);
  S m = -(iv * iv);
  std::vector<S> d(a.d.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.d[k] * m;
  return Jet<S>(iv, std::move(d));
}
template <class S> Jet<S> operator/(const Jet<S>& a, const Jet<S>& b) { return a * inv(b); }

template <class S> Jet<S>& operator+=(Jet<S>& a, const Jet<S>& b) { return a = a + b; }
template <class S> Jet<S>& operator-=(Jet<S>& a, const Jet<S>& b) { return a = a - b; }
template <class S> Jet<S>& operator*=(Jet<S>& a, const Jet<S>& b) { return a = a * b; }

template <class S> bool is_zero_exact(const Jet<S>& x) {
  if (!is_zero_exact(x.v)) return false;
  for (const auto& y : x.d)
    if (!is_zero_exact(y)) return false;
  return true;
}

template <class S> bool operator==(const Jet<S>& a, const Jet<S>& b) { return is_zero_exact(a - b); }

// strip one jet level
template <class S> const S& value(const Jet<S>& x) { return x.v; }

Rat parse_rat(const std::string& s);
inline std::string to_str(const Rat& x) { return x.get_str(); }

// integer power with sign, exact
Rat rpow(const Rat& x, long e);

}  // namespace fpg
