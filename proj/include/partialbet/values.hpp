/*
 * Copyright 2026 The partialbet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*!
  \file values.hpp
  \brief Real pairs, partial probability values and their order.

  Every quantity that lives in R^2 (probability values, betting quotients,
  stakes, payoffs, embedded truth values) goes through RPair. PartialValue
  is the constrained subset {(x,y) in [0,1]^2 : x + y <= 1}.

  The order on R^2 reverses the second coordinate:
  (x,y) <= (w,z) iff x <= w and z <= y.
*/

#pragma once

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "partialbet/error.hpp"

namespace partialbet {

/// Uniform comparison tolerance for every real-valued check.
inline constexpr double kEpsilon = 1e-9;

inline bool approx_equal(double a, double b, double eps = kEpsilon) {
  return std::fabs(a - b) <= eps;
}

struct RPair {
  double u = 0.0;
  double v = 0.0;

  constexpr RPair() = default;
  constexpr RPair(double u_, double v_) : u(u_), v(v_) {}

  RPair& operator+=(const RPair& o) {
    u += o.u;
    v += o.v;
    return *this;
  }
  RPair& operator-=(const RPair& o) {
    u -= o.u;
    v -= o.v;
    return *this;
  }

  friend RPair operator+(RPair a, const RPair& b) { return a += b; }
  friend RPair operator-(RPair a, const RPair& b) { return a -= b; }
  friend RPair operator-(const RPair& a) { return {-a.u, -a.v}; }
  /// Pointwise product.
  friend RPair operator*(const RPair& a, const RPair& b) {
    return {a.u * b.u, a.v * b.v};
  }
  friend RPair operator*(double s, const RPair& a) { return {s * a.u, s * a.v}; }

  friend bool operator==(const RPair&, const RPair&) = default;

  bool finite() const { return std::isfinite(u) && std::isfinite(v); }
};

inline bool approx_equal(const RPair& a, const RPair& b, double eps = kEpsilon) {
  return approx_equal(a.u, b.u, eps) && approx_equal(a.v, b.v, eps);
}

/// The (reversed-second-coordinate) order on R^2, within tolerance.
inline bool pair_leq(const RPair& a, const RPair& b, double eps = kEpsilon) {
  return a.u <= b.u + eps && b.v <= a.v + eps;
}

/// Strict version: pair_leq and not approximately equal.
inline bool pair_less(const RPair& a, const RPair& b, double eps = kEpsilon) {
  return pair_leq(a, b, eps) && !approx_equal(a, b, eps);
}

inline bool comparable(const RPair& a, const RPair& b, double eps = kEpsilon) {
  return pair_leq(a, b, eps) || pair_leq(b, a, eps);
}

inline std::string format_number(double d) {
  std::ostringstream os;
  os.precision(12);
  os << (d == 0.0 ? 0.0 : d);
  return os.str();
}

inline std::string to_string(const RPair& p) {
  return "(" + format_number(p.u) + "," + format_number(p.v) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RPair& p) {
  return os << to_string(p);
}

/// A point of T. Coordinates within kEpsilon outside [0,1] are snapped onto
/// the boundary; anything further out is rejected.
class PartialValue {
 public:
  constexpr PartialValue() = default;

  PartialValue(double x, double y) : x_(snap(x, "x")), y_(snap(y, "y")) {
    if (x_ + y_ > 1.0 + kEpsilon) {
      throw Error(ErrorKind::InvalidValue,
                  "partial value " + to_string(RPair{x, y}) +
                      " has x + y > 1");
    }
  }

  static PartialValue top() { return {1.0, 0.0}; }
  static PartialValue bottom() { return {0.0, 1.0}; }
  static PartialValue zero() { return {0.0, 0.0}; }

  double x() const { return x_; }
  double y() const { return y_; }

  RPair pair() const { return {x_, y_}; }
  operator RPair() const { return pair(); }

  friend bool operator==(const PartialValue&, const PartialValue&) = default;

 private:
  static double snap(double c, const char* name) {
    if (!std::isfinite(c) || c < -kEpsilon || c > 1.0 + kEpsilon) {
      throw Error(ErrorKind::InvalidValue,
                  std::string("partial value coordinate ") + name + " = " +
                      format_number(c) + " outside [0,1]");
    }
    if (c < 0.0) return 0.0;
    if (c > 1.0) return 1.0;
    return c;
  }

  double x_ = 0.0;
  double y_ = 0.0;
};

inline bool approx_equal(const PartialValue& a, const PartialValue& b,
                         double eps = kEpsilon) {
  return approx_equal(a.pair(), b.pair(), eps);
}

inline bool pv_leq(const PartialValue& a, const PartialValue& b) {
  return pair_leq(a.pair(), b.pair());
}

/// Swap map (x,y) -> (y,x); models negation at the value level.
inline PartialValue sigma(const PartialValue& a) { return {a.y(), a.x()}; }
inline RPair sigma(const RPair& a) { return {a.v, a.u}; }

inline std::string to_string(const PartialValue& p) { return to_string(p.pair()); }

inline std::ostream& operator<<(std::ostream& os, const PartialValue& p) {
  return os << to_string(p);
}

}  // namespace partialbet
