// PBW normal-form engine for quantum matrix algebras and their partition
// subalgebras: pseudo quantum minors, Laplace expansions, leading monomials,
// quantum Pluecker / Muir relations and the Ore identity check.
#pragma once

#include "qgr/laurent.hpp"
#include "qgr/shapes.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgr {

// Whether the deformation parameter of the ambient algebra is q or q^{-1};
// q_inverse swaps q and q^{-1} in the defining relations and minor signs.
enum class QConvention { q, q_inverse };

// Ambient algebra: full m x n quantum matrices, or the partition subalgebra
// on a shape inside that rectangle (generators outside the shape are zero).
struct Ambient {
    int m = 0;
    int n = 0;
    std::optional<Partition> shape;
    QConvention convention = QConvention::q;

    [[nodiscard]] bool in_shape(Box b) const {
        if (b.row < 1 || b.row > m || b.col < 1 || b.col > n) return false;
        return !shape || shape->contains(b);
    }
    bool operator==(const Ambient&) const = default;
};

Ambient full_matrix_algebra(int m, int n, QConvention conv = QConvention::q);
Ambient partition_subalgebra(int m, int n, Partition shape, QConvention conv = QConvention::q);

// Exponent matrix of a lexicographic monomial prod x_{i,j}^{e_{i,j}} with
// factors in ascending (i,j) order; exponents nonnegative, zeros unstored.
class PbwMonomial {
public:
    PbwMonomial() = default;
    static PbwMonomial generator(Box b, int exponent = 1);

    [[nodiscard]] bool is_one() const { return exps_.empty(); }
    [[nodiscard]] const std::map<Box, int>& exps() const { return exps_; }
    [[nodiscard]] int exponent(Box b) const;
    void set_exponent(Box b, int e);
    [[nodiscard]] int total_degree() const;

    bool operator==(const PbwMonomial&) const = default;

    // entrywise <= ("x^M occurs in x^N")
    [[nodiscard]] bool occurs_in(const PbwMonomial& other) const;

    [[nodiscard]] std::string to_string() const;  // "x[1,1]^2 x[2,3]", "1"

private:
    std::map<Box, int> exps_;
};

// Matrix lexicographic order: the least box where the exponent matrices
// differ decides. Returns <0, 0, >0.
int matrix_lex_compare(const PbwMonomial& a, const PbwMonomial& b);

struct MatrixLexLess {
    bool operator()(const PbwMonomial& a, const PbwMonomial& b) const {
        return matrix_lex_compare(a, b) < 0;
    }
};

// Sparse Z[q^{+-1}]-combination of PBW monomials over a fixed ambient.
class PbwElement {
public:
    PbwElement() = default;  // zero over a default ambient; set via ctor below
    explicit PbwElement(Ambient amb);
    PbwElement(Ambient amb, LaurentInt scalar);
    PbwElement(Ambient amb, LaurentInt coeff, PbwMonomial mono);

    [[nodiscard]] const Ambient& ambient() const { return amb_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<PbwMonomial, LaurentInt, MatrixLexLess>& terms() const {
        return terms_;
    }

    void add_term(const PbwMonomial& mono, const LaurentInt& coeff);

    PbwElement operator+(const PbwElement& rhs) const;
    PbwElement operator-(const PbwElement& rhs) const;
    PbwElement operator-() const;
    PbwElement& operator+=(const PbwElement& rhs);

    bool operator==(const PbwElement& rhs) const {
        return amb_ == rhs.amb_ && terms_ == rhs.terms_;
    }
    bool operator!=(const PbwElement& rhs) const { return !(*this == rhs); }

    // "1*q^0 * x[1,1] x[2,2] + -1*q^1 * x[1,2] x[2,1]", monomials in
    // descending matrix-lex order; "0" for zero
    [[nodiscard]] std::string to_string() const;
    static std::optional<PbwElement> parse(const Ambient& amb, std::string_view text);

private:
    Ambient amb_;
    std::map<PbwMonomial, LaurentInt, MatrixLexLess> terms_;
};

// generator as an element (zero if outside the ambient shape)
PbwElement pbw_generator(const Ambient& amb, Box b);

// scalar multiple
PbwElement scale(const PbwElement& e, const LaurentInt& c);

// Exact product in PBW normal form; throws on mixed ambients. Termination
// by the strict matrix-lex decrease of the nasty-relation substitution.
PbwElement pbw_mul(const PbwElement& a, const PbwElement& b);

// Alternative rewrite strategy (right-insertion); used to cross-check
// confluence of the normal form.
PbwElement pbw_mul_right_strategy(const PbwElement& a, const PbwElement& b);

// Pseudo quantum minor sum_sigma (-q)^{l(sigma)} x_{i_1 j_sigma(1)} ...;
// terms touching a generator outside the shape are dropped.
PbwElement pseudo_minor(const Ambient& amb, const IndexSet& rows, const IndexSet& cols);

enum class LaplaceMode {
    row_first_left,   // first row on the left of the complementary minors
    row_last_right,   // last row on the right
    col_expression,   // the column-ordered signed permutation sum
    col_first_left,   // first column on the left
    col_last_right,   // last column on the right
};

PbwElement laplace_expand(const Ambient& amb, const IndexSet& rows, const IndexSet& cols,
                          LaplaceMode mode);

// greatest monomial under matrix-lex with its coefficient; throws on zero
std::pair<PbwMonomial, LaurentInt> leading_monomial(const PbwElement& a);

// If x^M occurs in x^N: the q-power c with x^N - c * x^{N-M} * x^M having
// only matrix-lex-smaller terms, plus the remainder monomial N - M.
std::optional<std::pair<LaurentInt, PbwMonomial>> occurs_factorization(const Ambient& amb,
                                                                       const PbwMonomial& M,
                                                                       const PbwMonomial& N);

// Maximal minor [1..m | J] in the full m x n algebra.
PbwElement plucker(int m, int n, const IndexSet& cols, QConvention conv = QConvention::q);

// l(I;J) = #{(i,j) in I x J : i > j}
int ell(const std::vector<int>& I, const std::vector<int>& J);

// Left-hand side of the generalised quantum Pluecker relation; the
// expansion must be zero. Summands whose Pluecker symbols repeat an index
// are dropped. Throws unless |K| = 2m - |J1| - |J2| > m.
PbwElement plucker_relation_lhs(int m, int n, const IndexSet& J1, const IndexSet& J2,
                                const IndexSet& K, QConvention conv = QConvention::q);

struct PluckerTerm {
    LaurentInt coeff;
    IndexSet I;
    IndexSet J;
};

// Quantum Muir law of extensible minors: sum_s c_s [I_s + D][J_s + D] in the (m + |D|) x n
// algebra; zero when the input relation is zero. Throws if D meets any I_s
// or J_s.
PbwElement muir_lift(const std::vector<PluckerTerm>& relation, const IndexSet& D, int m_new,
                     int n, QConvention conv = QConvention::q);

// Checks x_{ij} x_{kl}^{d+1} = x_{kl}^d (x_{ij} x_{kl} + (q^{2d+1} - q)
// x_{il} x_{kj}) by full PBW expansion; (i,j) strictly NW of (k,l), d >= 0.
bool ore_identity_holds(int i, int j, int k, int l, int d);

}  // namespace qgr
