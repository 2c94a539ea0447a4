#include "seshadri/bielliptic.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace seshadri {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("intersection number overflows 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("intersection number overflows 64 bits");
  return r;
}

// Serrano's classification. Only the numerical invariants are kept.
const std::array<SurfaceKind, 7> kKinds{{
    {1, "Z2", 2, {2, 2, 2, 2}, 2},
    {2, "Z2xZ2", 4, {2, 2, 2, 2}, 2},
    {3, "Z4", 4, {2, 4, 4}, 4},
    {4, "Z4xZ2", 8, {2, 4, 4}, 4},
    {5, "Z3", 3, {3, 3, 3}, 3},
    {6, "Z3xZ3", 9, {3, 3, 3}, 3},
    {7, "Z6", 6, {2, 3, 6}, 6},
}};

std::int64_t singular_sum(std::span<const std::int64_t> mults) {
  std::int64_t sum = 0;
  for (const std::int64_t m : mults) {
    if (m < 2) throw std::invalid_argument("multiplicities must be >= 2, got " + std::to_string(m));
    sum = checked_add(sum, checked_mul(m, m - 1));
  }
  return sum;
}

}  // namespace

std::string SurfaceKind::basis_e() const { return "E/" + std::to_string(mu); }

std::string SurfaceKind::basis_f() const {
  const int k = fiber_index();
  return k == 1 ? "F" : "F/" + std::to_string(k);
}

std::span<const SurfaceKind> surface_kinds() { return kKinds; }

const SurfaceKind& surface_kind(int type_index) {
  if (type_index < 1 || type_index > 7)
    throw std::invalid_argument("bielliptic type must be in 1..7, got " + std::to_string(type_index));
  const SurfaceKind& kind = kKinds[static_cast<std::size_t>(type_index - 1)];
  if (kind.group_order % kind.mu != 0) throw std::logic_error("corrupted surface data: mu does not divide gamma");
  return kind;
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

DivisorClass parse_divisor_class(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("divisor class must be 'a,b', got '" + text + "'");
  auto parse = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed divisor class '" + text + "'");
    return v;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, comma)), parse(view.substr(comma + 1))};
}

DivisorClass class_of_e(const SurfaceKind& kind) { return {kind.mu, 0}; }

DivisorClass class_of_f(const SurfaceKind& kind) { return {0, kind.fiber_index()}; }

std::int64_t intersect(const SurfaceKind& /*kind*/, const DivisorClass& c1, const DivisorClass& c2) {
  return checked_add(checked_mul(c1.a, c2.b), checked_mul(c2.a, c1.b));
}

std::int64_t self_int(const DivisorClass& c) { return checked_mul(2, checked_mul(c.a, c.b)); }

FiberDegrees fiber_degrees(const SurfaceKind& kind, const DivisorClass& l) {
  if (kind.group_order % kind.mu != 0) throw std::logic_error("corrupted surface data: mu does not divide gamma");
  return {checked_mul(kind.mu, l.b), checked_mul(kind.fiber_index(), l.a)};
}

bool is_effective_vertical(const SurfaceKind& kind, std::int64_t b) {
  return b >= 0 && checked_mul(b, kind.mu) % kind.group_order == 0;
}

bool is_ample_numeric(const DivisorClass& c) { return c.a >= 1 && c.b >= 1; }

bool star_check_irreducible(std::int64_t c2, std::span<const std::int64_t> mults) {
  return c2 >= checked_add(2, singular_sum(mults));
}

bool star_check_reducible(std::int64_t c2, std::int64_t r, std::span<const std::int64_t> mults) {
  if (r < 1) throw std::invalid_argument("number of components r must be >= 1");
  return c2 >= checked_add(checked_mul(2, r), singular_sum(mults));
}

std::vector<std::int64_t> elliptic_values(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("elliptic_values: N must be >= 1");
  const std::int64_t root = isqrt(BigInt(static_cast<long>(n))).get_si();
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(root));
  for (std::int64_t k = 1; k <= root; ++k) out.push_back(k);
  return out;
}

Rat seshadri_ratio(const SurfaceKind& kind, const DivisorClass& l, const DivisorClass& c, std::int64_t m) {
  if (!is_ample_numeric(l)) throw std::invalid_argument("seshadri_ratio: L is not ample");
  if (m < 1) throw std::invalid_argument("seshadri_ratio: multiplicity must be >= 1");
  return Rat(BigInt(static_cast<long>(intersect(kind, l, c))), BigInt(static_cast<long>(m)));
}

}  // namespace seshadri
