// Adapted processes (one scalar per node) and the two arithmetic modes.
// Exact mode computes in rationals and compares with true equality. Float
// mode computes in doubles; the envelope hit test there is one-sided,
// W - X <= tol, because the envelope dominates by construction.
#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "dyngame/errors.hpp"
#include "dyngame/rational.hpp"
#include "dyngame/tree.hpp"

namespace dyngame {

template <class S>
struct AdaptedProcess {
  std::vector<S> values;

  const S& operator[](NodeId v) const { return values[v]; }
  S& operator[](NodeId v) { return values[v]; }
  int size() const { return static_cast<int>(values.size()); }

  friend bool operator==(const AdaptedProcess&, const AdaptedProcess&) = default;
};

template <class S>
void require_complete(const FiltrationTree& tree, const AdaptedProcess<S>& proc,
                      const char* name) {
  if (proc.size() != tree.node_count())
    throw IncompleteProcessError(std::string(name) + ": process carries " +
                                 std::to_string(proc.size()) + " values for " +
                                 std::to_string(tree.node_count()) + " nodes");
}

template <class S>
S from_rational(const Rational& r);
template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
inline double from_rational<double>(const Rational& r) {
  return r.get_d();
}

inline std::string shortest_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

// Scalar comparison policy per mode.
template <class S>
struct Num;

template <>
struct Num<Rational> {
  static bool hit(const Rational& w, const Rational& x, double) { return w == x; }
  static bool eq(const Rational& a, const Rational& b, double) { return a == b; }
  static std::string str(const Rational& v) { return format_rational(v); }
};

template <>
struct Num<double> {
  static bool hit(double w, double x, double tol) { return w - x <= tol; }
  static bool eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
  static std::string str(double v) { return shortest_double(v); }
};

inline AdaptedProcess<double> to_float(const AdaptedProcess<Rational>& proc) {
  AdaptedProcess<double> out;
  out.values.reserve(proc.values.size());
  for (const Rational& r : proc.values) out.values.push_back(r.get_d());
  return out;
}

template <class S>
std::vector<S> path_probabilities_as(const FiltrationTree& tree) {
  auto exact = tree.path_probabilities();
  std::vector<S> out;
  out.reserve(exact.size());
  for (const Rational& r : exact) out.push_back(from_rational<S>(r));
  return out;
}

}  // namespace dyngame
