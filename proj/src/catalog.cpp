#include "ybx/catalog.hpp"

#include <cctype>

namespace ybx {
namespace catalog {

namespace {

AssocAlgebra<Rat> make_assoc(size_t n) {
  return AssocAlgebra<Rat>{n, std::vector<Rat>(n * n * n, Rat(0)), std::vector<Rat>(n, Rat(0))};
}

LieAlgebra<Rat> make_lie(size_t n) { return LieAlgebra<Rat>{n, std::vector<Rat>(n * n * n, Rat(0))}; }

/// Sets [e_i, e_j] += v e_k and the antisymmetric counterpart.
void set_bracket(LieAlgebra<Rat>& l, size_t i, size_t j, size_t k, const Rat& v) {
  l.bracket_ref(i, j, k) += v;
  l.bracket_ref(j, i, k) -= v;
}

}  // namespace

AssocAlgebra<Rat> dual_numbers() {
  AssocAlgebra<Rat> a = make_assoc(2);
  a.prod_ref(0, 0, 0) = 1;  // 1*1 = 1
  a.prod_ref(0, 1, 1) = 1;  // 1*x = x
  a.prod_ref(1, 0, 1) = 1;  // x*1 = x
  // x*x = 0
  a.unit = {Rat(1), Rat(0)};
  return a;
}

AssocAlgebra<Rat> split() {
  AssocAlgebra<Rat> a = make_assoc(2);
  a.prod_ref(0, 0, 0) = 1;
  a.prod_ref(0, 1, 1) = 1;
  a.prod_ref(1, 0, 1) = 1;
  a.prod_ref(1, 1, 0) = 1;  // x*x = 1
  a.unit = {Rat(1), Rat(0)};
  return a;
}

AssocAlgebra<Rat> group_c2() { return split(); }  // kC2 = k[g]/(g^2-1), same table

AssocAlgebra<Rat> mat2() {
  // basis E11, E12, E21, E22 at indices 0..3; E_{ab} E_{cd} = delta_{bc} E_{ad}
  AssocAlgebra<Rat> a = make_assoc(4);
  auto ix = [](size_t r, size_t c) { return r * 2 + c; };
  for (size_t r = 0; r < 2; ++r)
    for (size_t b = 0; b < 2; ++b)
      for (size_t c = 0; c < 2; ++c)
        for (size_t d = 0; d < 2; ++d)
          if (b == c) a.prod_ref(ix(r, b), ix(c, d), ix(r, d)) = 1;
  a.unit = {Rat(1), Rat(0), Rat(0), Rat(1)};
  return a;
}

AssocAlgebra<Rat> k1() {
  AssocAlgebra<Rat> a = make_assoc(1);
  a.prod_ref(0, 0, 0) = 1;
  a.unit = {Rat(1)};
  return a;
}

LieAlgebra<Rat> sl2() {
  // basis e, f, h at indices 0, 1, 2
  LieAlgebra<Rat> l = make_lie(3);
  set_bracket(l, 0, 1, 2, Rat(1));   // [e,f] = h
  set_bracket(l, 2, 0, 0, Rat(2));   // [h,e] = 2e
  set_bracket(l, 2, 1, 1, Rat(-2));  // [h,f] = -2f
  return l;
}

LieAlgebra<Rat> heisenberg3() {
  // basis x, y, z at indices 0, 1, 2
  LieAlgebra<Rat> l = make_lie(3);
  set_bracket(l, 0, 1, 2, Rat(1));  // [x,y] = z
  return l;
}

LieAlgebra<Rat> abelian(size_t n) { return make_lie(n); }

GradedLieAlgebra<Rat> gl11() {
  // basis E11, E22 (even), E12, E21 (odd) at indices 0..3;
  // <A,B> = AB - (-1)^{|A||B|} BA
  GradedLieAlgebra<Rat> g;
  g.dim = 4;
  g.f.assign(64, Rat(0));
  g.group = AbelianGroup{{2}};
  g.degree = {{0}, {0}, {1}, {1}};
  g.theta_gen = {Rat(-1)};  // theta(1,1) = -1, bicharacter extension gives (-1)^{ab}

  auto set = [&](size_t i, size_t j, size_t k, int v) { g.bracket_ref(i, j, k) = Rat(v); };
  // even-odd commutators
  set(0, 2, 2, 1);   // [E11, E12] = E12
  set(2, 0, 2, -1);
  set(0, 3, 3, -1);  // [E11, E21] = -E21
  set(3, 0, 3, 1);
  set(1, 2, 2, -1);  // [E22, E12] = -E12
  set(2, 1, 2, 1);
  set(1, 3, 3, 1);   // [E22, E21] = E21
  set(3, 1, 3, -1);
  // odd-odd anticommutators: <E12, E21> = E11 + E22, symmetric in its arguments
  set(2, 3, 0, 1);
  set(2, 3, 1, 1);
  set(3, 2, 0, 1);
  set(3, 2, 1, 1);
  return g;
}

PoissonAlgebra<Rat> mat2_poisson() {
  AssocAlgebra<Rat> a = mat2();
  size_t n = a.dim;
  std::vector<Rat> br(n * n * n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) br[(i * n + j) * n + k] = Rat(a.prod(i, j, k) - a.prod(j, i, k));
  return PoissonAlgebra<Rat>{std::move(a), std::move(br)};
}

std::vector<std::string> names() {
  return {"k1",  "dual_numbers", "split",       "group_c2", "mat2",
          "sl2", "heisenberg3",  "abelian3",    "gl11",     "mat2_poisson"};
}

Entry get(const std::string& name) {
  Entry e{};
  if (name == "dual_numbers") {
    e.kind = Kind::Assoc;
    e.assoc = dual_numbers();
  } else if (name == "split") {
    e.kind = Kind::Assoc;
    e.assoc = split();
  } else if (name == "group_c2") {
    e.kind = Kind::Assoc;
    e.assoc = group_c2();
  } else if (name == "mat2") {
    e.kind = Kind::Assoc;
    e.assoc = mat2();
  } else if (name == "k1") {
    e.kind = Kind::Assoc;
    e.assoc = k1();
  } else if (name == "sl2") {
    e.kind = Kind::Lie;
    e.lie = sl2();
  } else if (name == "heisenberg3") {
    e.kind = Kind::Lie;
    e.lie = heisenberg3();
  } else if (name.rfind("abelian", 0) == 0) {
    std::string suffix = name.substr(7);
    if (suffix.empty()) throw ValidationError("abelian<n> needs a dimension, e.g. abelian3");
    for (char ch : suffix)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ValidationError("unknown catalog name: " + name);
    e.kind = Kind::Lie;
    e.lie = abelian(static_cast<size_t>(std::stoul(suffix)));
  } else if (name == "gl11") {
    e.kind = Kind::GradedLie;
    e.graded = gl11();
  } else if (name == "mat2_poisson") {
    e.kind = Kind::Poisson;
    e.poisson = mat2_poisson();
  } else {
    throw ValidationError("unknown catalog name: " + name);
  }
  return e;
}

}  // namespace catalog
}  // namespace ybx
