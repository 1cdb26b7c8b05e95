#pragma once

#include <gmpxx.h>

#include <string>

#include "ybx/errors.hpp"

namespace ybx {

/// The base exact field Q: arbitrary-precision rationals, always canonical
/// (reduced, positive denominator — maintained by GMP).
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

inline Rat inverse(const Rat& x) {
  if (is_zero(x)) throw DivisionByZeroError("inverse of 0 in Q");
  return Rat(1) / x;
}

/// Pivot-selection weight: smaller means cheaper to eliminate with.
inline long complexity(const Rat& x) {
  return static_cast<long>(mpz_size(x.get_num_mpz_t()) + mpz_size(x.get_den_mpz_t()));
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// Parses "a", "-a", "a/b" (decimal). Throws ValidationError on anything else.
Rat rat_parse(const std::string& s);

enum class FieldTag { Q, Qi, Qq };

std::string field_tag_name(FieldTag t);
FieldTag field_tag_from_name(const std::string& name);

template <class F>
struct FieldInfo;  // specialized per field: static constexpr FieldTag tag

template <>
struct FieldInfo<Rat> {
  static constexpr FieldTag tag = FieldTag::Q;
};

template <class F>
std::string field_name() {
  return field_tag_name(FieldInfo<F>::tag);
}

}  // namespace ybx
