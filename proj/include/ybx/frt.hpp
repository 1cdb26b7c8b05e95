#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/tensor.hpp"

namespace ybx {

// Quadratic relation extraction for the FRT bialgebra on generators t_ij:
// the entries of R T1 T2 - T2 T1 R with T1 = T (x) I, T2 = I (x) T span a
// subspace of the degree-2 component of the free algebra on the t_ij.
//
// Monomial order: generators t_ij sorted lexicographically by (i,j); degree-2
// monomials t_ab t_cd sorted lexicographically by factor pair, flat index
// (a*n+b)*n^2 + (c*n+d). Golden outputs depend on this order.

/// A quadratic form in the t_ij: coefficient vector over the n^4 ordered
/// degree-2 monomials.
template <class F>
struct NCQuadratic {
  size_t n = 0;
  std::vector<F> coeff;  // length n^4

  static size_t mono_index(size_t n, size_t a, size_t b, size_t c, size_t d) {
    return (a * n + b) * n * n + (c * n + d);
  }
};

/// Row-reduced canonical basis of a subspace of degree-2 relations.
template <class F>
struct RelationSet {
  size_t n = 0;
  std::vector<std::vector<F>> rows;  // RREF, pairwise distinct leading monomials

  size_t rank() const { return rows.size(); }
};

namespace frt_detail {
template <class F>
RelationSet<F> row_reduce(size_t n, const std::vector<std::vector<F>>& rows) {
  size_t width = n * n * n * n;
  Matrix<F> m(rows.size(), width);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw DimensionError("relation row width mismatch");
    for (size_t c = 0; c < width; ++c) m.at(r, c) = rows[r][c];
  }
  std::vector<size_t> pivots = m.rref();
  RelationSet<F> out;
  out.n = n;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<F> row(width, F(0));
    for (size_t c = 0; c < width; ++c) row[c] = m.at(r, c);
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Reduces v against RREF rows; returns the (possibly nonzero) remainder.
template <class F>
std::vector<F> reduce_against(const RelationSet<F>& s, std::vector<F> v) {
  for (const auto& row : s.rows) {
    size_t lead = 0;
    while (lead < row.size() && is_zero(row[lead])) ++lead;
    if (lead == row.size()) continue;
    if (is_zero(v[lead])) continue;
    F f = v[lead];  // pivot is 1 in RREF
    for (size_t c = lead; c < row.size(); ++c) {
      if (is_zero(row[c])) continue;
      v[c] = v[c] - f * row[c];
    }
  }
  return v;
}
}  // namespace frt_detail

/// Entries of R T1 T2 - T2 T1 R as quadratic forms, assembled into the
/// canonical row-reduced relation basis.
template <class F>
RelationSet<F> frt_relations(const Operator<F>& r) {
  size_t n = r.dim;
  size_t width = n * n * n * n;
  std::vector<std::vector<F>> rows;
  rows.reserve(width);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) {
          std::vector<F> q(width, F(0));
          // (R T1 T2)_{(ik),(jl)} = sum_{m,p} R[(ik),(mp)] t_mj t_pl
          for (size_t m = 0; m < n; ++m)
            for (size_t p = 0; p < n; ++p) {
              const F& c = r.mat.at(i * n + k, m * n + p);
              if (is_zero(c)) continue;
              q[NCQuadratic<F>::mono_index(n, m, j, p, l)] += c;
            }
          // (T2 T1 R)_{(ik),(jl)} = sum_{m,p} t_kp t_im R[(mp),(jl)]
          for (size_t m = 0; m < n; ++m)
            for (size_t p = 0; p < n; ++p) {
              const F& c = r.mat.at(m * n + p, j * n + l);
              if (is_zero(c)) continue;
              q[NCQuadratic<F>::mono_index(n, k, p, i, m)] -= c;
            }
          rows.push_back(std::move(q));
        }
  return frt_detail::row_reduce(n, rows);
}

/// The classified two-dimensional R-matrix family, rows as conventionally
/// printed: (1,0,0,0), (0,1,0,0), (0,1-q,q,0), (eta,0,0,-q); eta in {0,1},
/// q nonzero.
template <class F>
Operator<F> reference_rmatrix(const F& q, int eta) {
  if (is_zero(q)) throw QZeroError("q must be nonzero");
  if (eta != 0 && eta != 1) throw ValidationError("eta must be 0 or 1");
  Matrix<F> m(4, 4);
  m.at(0, 0) = F(1);
  m.at(1, 1) = F(1);
  m.at(2, 1) = F(1) - q;
  m.at(2, 2) = q;
  m.at(3, 0) = F(eta);
  m.at(3, 3) = -q;
  return Operator<F>{2, std::move(m)};
}

namespace frt_detail {
/// Raw relation rows for the reference matrix, generators a=t00, b=t01,
/// c=t10, d=t11, each encoded as lhs - rhs.
template <class F>
std::vector<std::vector<F>> reference_relation_rows(const F& q, int eta) {
  const size_t width = 16;
  auto mono = [&](size_t g1, size_t g2) {  // generator flat ids 0..3
    return g1 * 4 + g2;
  };
  const size_t A = 0, B = 1, C = 2, D = 3;
  std::vector<std::vector<F>> rows;
  auto add = [&](std::initializer_list<std::pair<std::pair<size_t, size_t>, F>> terms) {
    std::vector<F> v(width, F(0));
    for (const auto& t : terms) v[mono(t.first.first, t.first.second)] += t.second;
    rows.push_back(std::move(v));
  };
  F one(1), qn = q;
  if (eta == 0) {
    add({{{B, A}, one}, {{A, B}, -qn}});                                    // ba = q ab
    add({{{A, C}, one}, {{C, A}, -one}});                                   // ac = ca
    add({{{A, D}, one}, {{D, A}, -one}, {{C, B}, F(qn - one)}});            // ad - da = (1-q) cb
    add({{{B, B}, F(one + qn)}});                                           // (1+q) b^2 = 0
    add({{{B, C}, one}, {{C, B}, -qn}});                                    // bc = q cb
    add({{{B, D}, one}, {{D, B}, qn}});                                     // bd = -q db
    add({{{C, C}, F(one + qn)}});                                           // (1+q) c^2 = 0
    add({{{D, C}, one}, {{C, D}, one}});                                    // dc = -cd
  } else {
    add({{{B, A}, one}, {{A, B}, -qn}});                                    // ba = q ab
    add({{{A, B}, one}, {{D, C}, -one}, {{C, D}, -one}});                   // ab = dc + cd
    add({{{A, C}, one}, {{C, A}, -one}, {{D, B}, -one}});                   // ac - ca = db
    add({{{A, A}, one}, {{D, D}, -one}, {{C, C}, F(-(one + qn))}});         // a^2 - d^2 = (1+q)c^2
    add({{{A, D}, one}, {{D, A}, -one}, {{C, B}, F(qn - one)}});            // ad - da = (1-q) cb
    add({{{B, B}, one}});                                                   // b^2 = 0
    add({{{B, C}, one}, {{C, B}, -qn}});                                    // bc = q cb
    add({{{B, D}, one}, {{D, B}, qn}});                                     // bd = -q db
  }
  return rows;
}
}  // namespace frt_detail

/// The published commutation-relation lists for the reference matrix, as a
/// canonical RelationSet; the rank equals the list length exactly when the
/// listed relations are linearly independent.
template <class F>
RelationSet<F> reference_relations(const F& q, int eta) {
  if (is_zero(q)) throw QZeroError("q must be nonzero");
  if (eta != 0 && eta != 1) throw ValidationError("eta must be 0 or 1");
  return frt_detail::row_reduce(size_t{2}, frt_detail::reference_relation_rows(q, eta));
}

enum class SpanRelation { Equal, FirstInsideSecond, SecondInsideFirst, Incomparable };

template <class F>
struct SpanCompareResult {
  SpanRelation relation = SpanRelation::Incomparable;
  // Witnesses: a basis row of one set outside the span of the other.
  std::optional<size_t> row_of_first_outside_second;
  std::optional<size_t> row_of_second_outside_first;
};

inline const char* span_relation_name(SpanRelation r) {
  switch (r) {
    case SpanRelation::Equal:
      return "equal";
    case SpanRelation::FirstInsideSecond:
      return "first_inside_second";
    case SpanRelation::SecondInsideFirst:
      return "second_inside_first";
    case SpanRelation::Incomparable:
      return "incomparable";
  }
  return "?";
}

template <class F>
SpanCompareResult<F> compare_spans(const RelationSet<F>& s1, const RelationSet<F>& s2) {
  if (s1.n != s2.n) throw DimensionError("relation sets over different generator counts");
  SpanCompareResult<F> out;
  bool first_in_second = true, second_in_first = true;
  for (size_t r = 0; r < s1.rows.size(); ++r) {
    std::vector<F> rem = frt_detail::reduce_against(s2, s1.rows[r]);
    bool zero = true;
    for (const auto& x : rem)
      if (!is_zero(x)) {
        zero = false;
        break;
      }
    if (!zero) {
      first_in_second = false;
      out.row_of_first_outside_second = r;
      break;
    }
  }
  for (size_t r = 0; r < s2.rows.size(); ++r) {
    std::vector<F> rem = frt_detail::reduce_against(s1, s2.rows[r]);
    bool zero = true;
    for (const auto& x : rem)
      if (!is_zero(x)) {
        zero = false;
        break;
      }
    if (!zero) {
      second_in_first = false;
      out.row_of_second_outside_first = r;
      break;
    }
  }
  if (first_in_second && second_in_first)
    out.relation = SpanRelation::Equal;
  else if (first_in_second)
    out.relation = SpanRelation::FirstInsideSecond;
  else if (second_in_first)
    out.relation = SpanRelation::SecondInsideFirst;
  else
    out.relation = SpanRelation::Incomparable;
  return out;
}

/// Human-readable rendering; generators named a,b,c,d when n = 2, t_ij otherwise.
template <class F>
std::string relation_to_string(size_t n, const std::vector<F>& row) {
  auto gen_name = [&](size_t flat) {
    if (n == 2) {
      static const char* names[] = {"a", "b", "c", "d"};
      return std::string(names[flat]);
    }
    return "t" + std::to_string(flat / n + 1) + std::to_string(flat % n + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (size_t m = 0; m < row.size(); ++m) {
    if (is_zero(row[m])) continue;
    std::string c = to_string(row[m]);
    if (!first) out << " + ";
    out << "(" << c << ")" << gen_name(m / (n * n)) << gen_name(m % (n * n));
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace ybx
