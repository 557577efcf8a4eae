#pragma once

#include "gcodim/algebra.hpp"

namespace gcodim::builtin {

/// The ground field as a one-dimensional algebra, trivially graded.
GradedAlgebraSpec field();

/// F[Z_2] = span{1, u}, u^2 = 1, graded by Z_2 with u in the g-component.
GradedAlgebraSpec group_algebra_z2();

/// Upper triangular 2x2 matrices {e11, e12, e22} with the Z_2-grading that
/// puts e12 in the g-component. Unital.
GradedAlgebraSpec upper_triangular_z2();

/// {b1, b2} with b1*b1 = b2 and every other product zero; J^3 = 0.
GradedAlgebraSpec nilpotent_index3();

/// span{e11, e12} inside the upper triangular matrices; non-unital and not
/// nilpotent. Trivially graded.
GradedAlgebraSpec upper_corner();

/// Full 2x2 matrix algebra, trivially graded.
GradedAlgebraSpec matrix_m2();

}  // namespace gcodim::builtin
