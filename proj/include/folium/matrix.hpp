#ifndef FOLIUM_MATRIX_HPP
#define FOLIUM_MATRIX_HPP

#include <vector>

#include "folium/rational.hpp"

namespace folium {

/// Dense matrix of rationals. Elimination is fraction-free (Bareiss) on an
/// integer-cleared copy, so intermediate swell stays polynomial.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    static RatMatrix identity(int n);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct LinearSolveResult {
    int rank = 0;
    /// Primitive integer vectors spanning the null space, first nonzero entry positive,
    /// ordered by their free column.
    std::vector<std::vector<Rational>> nullspace;
};

LinearSolveResult solve_linear(const RatMatrix& m);

Rational det(const RatMatrix& m);

}  // namespace folium

#endif
