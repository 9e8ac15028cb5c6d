// Arithmetic in the quantum torus of a Cauchon-Le diagram: one invertible
// generator t_{i,j} per white box, generators in the same row or column
// q-commute (lex-smaller on the left gains q), all other pairs commute.
// Also the path matrix, its pseudo quantum minors, the LGV identity and the
// restoration recursion of the deleting-derivations algorithm.
#pragma once

#include "qgr/laurent.hpp"
#include "qgr/shapes.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgr {

class PostnikovGraph;

// Normal-ordered monomial prod t_{i,j}^{e_{i,j}} with factors in ascending
// box-lex order; zero exponents are never stored.
class TorusMonomial {
public:
    TorusMonomial() = default;  // the empty monomial 1
    static TorusMonomial generator(Box b, int exponent = 1);

    [[nodiscard]] bool is_one() const { return exps_.empty(); }
    [[nodiscard]] const std::map<Box, int>& exps() const { return exps_; }

    void set_exponent(Box b, int e);
    [[nodiscard]] int exponent(Box b) const;

    auto operator<=>(const TorusMonomial&) const = default;

    [[nodiscard]] std::string to_string() const;  // "t[1,4]^-1t[1,3]", "1"

private:
    std::map<Box, int> exps_;
};

// Finite Z[q^{+-1}]-combination of normal-ordered torus monomials. Distinct
// monomials are linearly independent, so structural equality is equality.
class TorusElement {
public:
    TorusElement() = default;  // zero
    explicit TorusElement(LaurentInt scalar);
    TorusElement(LaurentInt coeff, TorusMonomial mono);

    static TorusElement one() { return TorusElement(LaurentInt(1)); }
    static TorusElement generator(Box b, int exponent = 1);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<TorusMonomial, LaurentInt>& terms() const { return terms_; }

    TorusElement operator+(const TorusElement& rhs) const;
    TorusElement operator-(const TorusElement& rhs) const;
    TorusElement operator*(const TorusElement& rhs) const;  // normal-ordered product
    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& rhs);
    TorusElement& operator*=(const TorusElement& rhs);

    bool operator==(const TorusElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const TorusElement& rhs) const { return !(*this == rhs); }

    void add_term(const TorusMonomial& mono, const LaurentInt& coeff);

    // every box with a nonzero exponent anywhere in the element
    [[nodiscard]] std::set<Box> support() const;

    [[nodiscard]] std::string to_string() const;

private:
    std::map<TorusMonomial, LaurentInt> terms_;
};

// Ordered product of generators, e.g. t_{2,2} t_{3,2}^{-1} t_{3,1} written
// left to right as {(2,2),+1},{(3,2),-1},{(3,1),+1}.
TorusElement ordered_product(const std::vector<std::pair<Box, int>>& factors);

// Checked product: both operands must be supported on white boxes of the
// diagram.
TorusElement torus_mul(const LeDiagram& diagram, const TorusElement& a, const TorusElement& b);

using TorusMatrix = std::vector<std::vector<TorusElement>>;

// M_C[i,j] = sum of path weights r_i => c_j; c x d with c = rows(lambda),
// d = lambda_1; entries outside Y_lambda are zero.
TorusMatrix path_matrix(const LeDiagram& diagram);

// Row-form pseudo quantum minor of a path matrix:
//   sum_sigma (-q)^{l(sigma)} M[i_1,j_sigma(1)] ... M[i_t,j_sigma(t)].
TorusElement path_matrix_minor(const TorusMatrix& M, const IndexSet& rows, const IndexSet& cols);

// Column form:
//   sum_sigma (-q)^{l(sigma)} M[i_sigma(1),j_1] ... M[i_sigma(t),j_t].
TorusElement path_matrix_minor_column_form(const TorusMatrix& M, const IndexSet& rows,
                                           const IndexSet& cols);

// (-q)^{l(sigma_{(I,J)})} sum over vertex-disjoint R_{(I,J)}-path systems of
// their weights; zero when no such system exists.
TorusElement lgv_rhs(const LeDiagram& diagram, const IndexSet& rows, const IndexSet& cols);

// Deleting-derivations restoration: chi_{i,j} := t_{i,j} on white boxes and
// 0 on black ones, then for each box (a,b) of Y_lambda in ascending lex
// order, if (a,b) is white, chi_{i,j} += chi_{i,b} t_{a,b}^{-1} t_{a,j} for
// all i < a, j < b. The final c x d matrix equals the path matrix.
TorusMatrix restore_entries(const LeDiagram& diagram);

// true iff the row-form pseudo minor of the path matrix vanishes.
bool minor_vanishes(const LeDiagram& diagram, const IndexSet& rows, const IndexSet& cols);


}  // namespace qgr
