#pragma once

#include <string>
#include <vector>

#include "ybx/algebra.hpp"

namespace ybx {
namespace catalog {

// Small library of structures over Q with documented bases.

/// k[x]/(x^2), basis {1, x}.
AssocAlgebra<Rat> dual_numbers();
/// k[x]/(x^2-1), basis {1, x}.
AssocAlgebra<Rat> split();
/// Group algebra kC2, basis {1, g}, g^2 = 1.
AssocAlgebra<Rat> group_c2();
/// 2x2 matrices, basis {E11, E12, E21, E22}.
AssocAlgebra<Rat> mat2();
/// The ground field as a 1-dimensional algebra.
AssocAlgebra<Rat> k1();

/// sl2, basis {e, f, h}: [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebra<Rat> sl2();
/// Heisenberg algebra, basis {x, y, z}: [x,y]=z.
LieAlgebra<Rat> heisenberg3();
/// Abelian Lie algebra of the given dimension.
LieAlgebra<Rat> abelian(size_t n);

/// gl(1|1): Z2-graded with even {E11, E22}, odd {E12, E21}, supercommutator
/// brackets, theta(a,b) = (-1)^{ab}.
GradedLieAlgebra<Rat> gl11();

/// M2(Q) with the commutator bracket.
PoissonAlgebra<Rat> mat2_poisson();

/// All catalog names ("abelian<n>" is parametric; listed as abelian3).
std::vector<std::string> names();

enum class Kind { Assoc, Lie, GradedLie, Poisson };

struct Entry {
  Kind kind;
  AssocAlgebra<Rat> assoc;
  LieAlgebra<Rat> lie;
  GradedLieAlgebra<Rat> graded;
  PoissonAlgebra<Rat> poisson;
};

/// Look up by name; throws ValidationError for unknown names.
Entry get(const std::string& name);

}  // namespace catalog
}  // namespace ybx
