#pragma once

// Numerical intersection theory on bielliptic surfaces X = (E x F)/G.
//
// With mu = lcm of the singular-fibre multiplicities and gamma = |G|, the
// classes E/mu and (mu/gamma) F form a basis of Num(X). A class (a, b)
// stands for a E/mu + b (mu/gamma) F. Since E^2 = F^2 = 0 and E.F = gamma,
// (a1, b1).(a2, b2) = a1 b2 + a2 b1.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seshadri/exact_math.hpp"

namespace seshadri {

struct SurfaceKind {
  int type_index;
  std::string group;  ///< e.g. "Z2xZ2"
  int group_order;    ///< gamma
  std::vector<int> fiber_multiplicities;
  int mu;

  /// gamma/mu, the F-coordinate of the class of F. Always 1, 2 or 3.
  int fiber_index() const { return group_order / mu; }
  /// Basis labels as printed in the classification table: "E/mu", "F" or "F/k".
  std::string basis_e() const;
  std::string basis_f() const;
};

/// The seven types, in table order.
std::span<const SurfaceKind> surface_kinds();

/// Throws std::invalid_argument unless 1 <= type_index <= 7.
const SurfaceKind& surface_kind(int type_index);

struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
};

/// Parses "a,b".
DivisorClass parse_divisor_class(const std::string& text);

DivisorClass class_of_e(const SurfaceKind& kind);
DivisorClass class_of_f(const SurfaceKind& kind);

std::int64_t intersect(const SurfaceKind& kind, const DivisorClass& c1, const DivisorClass& c2);

/// 2ab.
std::int64_t self_int(const DivisorClass& c);

struct FiberDegrees {
  std::int64_t deg_e;  ///< L.E = mu b
  std::int64_t deg_f;  ///< L.F = (gamma/mu) a
};

FiberDegrees fiber_degrees(const SurfaceKind& kind, const DivisorClass& l);

/// (0, b) is effective iff b (mu/gamma) is a non-negative integer.
bool is_effective_vertical(const SurfaceKind& kind, std::int64_t b);

/// a >= 1 and b >= 1. A numerical convention for validating input, not a
/// full ampleness criterion.
bool is_ample_numeric(const DivisorClass& c);

/// C^2 >= 2 + sum m_i(m_i - 1). Multiplicities below 2 are rejected.
bool star_check_irreducible(std::int64_t c2, std::span<const std::int64_t> mults);

/// C^2 >= 2r + sum m_i(m_i - 1) for a reduced curve with r components.
bool star_check_reducible(std::int64_t c2, std::int64_t r, std::span<const std::int64_t> mults);

/// 1, 2, ..., floor(sqrt(N)): the values a Seshadri constant computed by an
/// elliptic curve can take on an abelian surface.
std::vector<std::int64_t> elliptic_values(std::int64_t n);

/// (L.C)/m. L must pass is_ample_numeric, m >= 1.
Rat seshadri_ratio(const SurfaceKind& kind, const DivisorClass& l, const DivisorClass& c, std::int64_t m);

}  // namespace seshadri
