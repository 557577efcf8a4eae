#include "gcodim/builtin_specs.hpp"

namespace gcodim::builtin {

namespace {

using Product = GradedAlgebraSpec::Product;

Product prod(std::size_t i, std::size_t j, std::size_t m) { return {i, j, {{m, Rational(1)}}}; }

std::vector<Rational> basis_vector(std::size_t dim, std::initializer_list<std::size_t> ones) {
  std::vector<Rational> v(dim);
  for (auto i : ones) v[i] = 1;
  return v;
}

}  // namespace

GradedAlgebraSpec field() {
  return GradedAlgebraSpec(GroupTable::trivial(), {"1"}, {GroupElement{0}}, {prod(0, 0, 0)},
                           basis_vector(1, {0}));
}

GradedAlgebraSpec group_algebra_z2() {
  return GradedAlgebraSpec(GroupTable::cyclic(2), {"1", "u"}, {GroupElement{0}, GroupElement{1}},
                           {prod(0, 0, 0), prod(0, 1, 1), prod(1, 0, 1), prod(1, 1, 0)},
                           basis_vector(2, {0}));
}

GradedAlgebraSpec upper_triangular_z2() {
  // 0 = e11, 1 = e12, 2 = e22
  return GradedAlgebraSpec(GroupTable::cyclic(2), {"e11", "e12", "e22"},
                           {GroupElement{0}, GroupElement{1}, GroupElement{0}},
                           {prod(0, 0, 0), prod(0, 1, 1), prod(1, 2, 1), prod(2, 2, 2)},
                           basis_vector(3, {0, 2}));
}

GradedAlgebraSpec nilpotent_index3() {
  return GradedAlgebraSpec(GroupTable::trivial(), {"b1", "b2"}, {GroupElement{0}, GroupElement{0}},
                           {prod(0, 0, 1)});
}

GradedAlgebraSpec upper_corner() {
  return GradedAlgebraSpec(GroupTable::trivial(), {"e11", "e12"},
                           {GroupElement{0}, GroupElement{0}}, {prod(0, 0, 0), prod(0, 1, 1)});
}

GradedAlgebraSpec matrix_m2() {
  // e_{ab} -> index 2a + b
  std::vector<Product> products;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t d = 0; d < 2; ++d) products.push_back(prod(2 * a + b, 2 * b + d, 2 * a + d));
    }
  }
  std::vector<GroupElement> grading(4, GroupElement{0});
  return GradedAlgebraSpec(GroupTable::trivial(), {"e11", "e12", "e21", "e22"}, grading,
                           std::move(products), basis_vector(4, {0, 3}));
}

}  // namespace gcodim::builtin
