#include "qgr/qtorus.hpp"

#include "qgr/postnikov.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgr {

TorusMonomial TorusMonomial::generator(Box b, int exponent) {
    TorusMonomial m;
    if (exponent != 0) m.exps_[b] = exponent;
    return m;
}

void TorusMonomial::set_exponent(Box b, int e) {
    if (e == 0)
        exps_.erase(b);
    else
        exps_[b] = e;
}

int TorusMonomial::exponent(Box b) const {
    auto it = exps_.find(b);
    return it == exps_.end() ? 0 : it->second;
}

std::string TorusMonomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    for (const auto& [b, e] : exps_) {
        os << "t[" << b.row << "," << b.col << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

TorusElement::TorusElement(LaurentInt scalar) {
    if (!scalar.is_zero()) terms_.emplace(TorusMonomial(), std::move(scalar));
}

TorusElement::TorusElement(LaurentInt coeff, TorusMonomial mono) {
    if (!coeff.is_zero()) terms_.emplace(std::move(mono), std::move(coeff));
}

TorusElement TorusElement::generator(Box b, int exponent) {
    return TorusElement(LaurentInt(1), TorusMonomial::generator(b, exponent));
}

void TorusElement::add_term(const TorusMonomial& mono, const LaurentInt& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

TorusElement TorusElement::operator+(const TorusElement& rhs) const {
    TorusElement r = *this;
    r += rhs;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& rhs) const {
    TorusElement r = *this;
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

bool same_row_or_col(Box a, Box b) { return a.row == b.row || a.col == b.col; }

// t^M * t^N = q^{-s} t^{M+N} where s counts, over pairs x in supp(M),
// y in supp(N) with y <lex x in the same row or column, M_x * N_y
// (each transposition t_x^a t_y^b = q^{-ab} t_y^b t_x^a).
void mono_mul(const TorusMonomial& a, const TorusMonomial& b, TorusMonomial& prod_out,
              int& qexp_out) {
    int s = 0;
    for (const auto& [x, ex] : a.exps()) {
        for (const auto& [y, ey] : b.exps()) {
            if (y < x && same_row_or_col(x, y)) s += ex * ey;
        }
    }
    TorusMonomial prod = a;
    for (const auto& [y, ey] : b.exps()) prod.set_exponent(y, prod.exponent(y) + ey);
    prod_out = std::move(prod);
    qexp_out = -s;
}

}  // namespace

TorusElement TorusElement::operator*(const TorusElement& rhs) const {
    TorusElement r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            TorusMonomial prod;
            int qexp = 0;
            mono_mul(ma, mb, prod, qexp);
            r.add_term(prod, ca * cb * LaurentInt::q_power(qexp));
        }
    }
    return r;
}

TorusElement& TorusElement::operator*=(const TorusElement& rhs) {
    *this = *this * rhs;
    return *this;
}

std::set<Box> TorusElement::support() const {
    std::set<Box> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [b, e] : m.exps()) s.insert(b);
    return s;
}

std::string TorusElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        if (c.is_single_term())
            os << c.to_string();
        else
            os << "(" << c.to_string() << ")";
        os << " * " << m.to_string();
        first = false;
    }
    return os.str();
}

TorusElement ordered_product(const std::vector<std::pair<Box, int>>& factors) {
    TorusElement r = TorusElement::one();
    for (const auto& [b, e] : factors) r *= TorusElement::generator(b, e);
    return r;
}

TorusElement torus_mul(const LeDiagram& diagram, const TorusElement& a, const TorusElement& b) {
    for (const TorusElement* e : {&a, &b})
        for (const Box& box : e->support())
            if (!diagram.is_white(box))
                throw std::invalid_argument("torus_mul: operand not over this diagram's white boxes");
    return a * b;
}

TorusMatrix path_matrix(const LeDiagram& diagram) {
    PostnikovGraph g(diagram);
    int c = diagram.shape().rows();
    int d = diagram.shape().cols();
    TorusMatrix M(c, std::vector<TorusElement>(d));
    for (int i = 1; i <= c; ++i) {
        for (int j = 1; j <= d; ++j) {
            TorusElement sum;
            for (const Path& p : enumerate_paths(g, i, j)) sum += path_weight(g, p);
            M[i - 1][j - 1] = std::move(sum);
        }
    }
    return M;
}

namespace {

void check_minor_index(const TorusMatrix& M, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("path matrix minor: |rows| != |cols|");
    int c = static_cast<int>(M.size());
    int d = c == 0 ? 0 : static_cast<int>(M[0].size());
    if (rows.size() > 0 && (rows.elems().back() > c || cols.elems().back() > d))
        throw std::invalid_argument("path matrix minor: index out of range");
}

// visit all permutations of [0,t); callback gets one-line form
template <typename F>
void for_each_permutation(int t, F&& f) {
    std::vector<int> perm(t);
    for (int i = 0; i < t; ++i) perm[i] = i;
    do {
        f(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

TorusElement path_matrix_minor(const TorusMatrix& M, const IndexSet& rows, const IndexSet& cols) {
    check_minor_index(M, rows, cols);
    int t = rows.size();
    TorusElement result;
    for_each_permutation(t, [&](const std::vector<int>& perm) {
        TorusElement prod = TorusElement::one();
        for (int k = 0; k < t; ++k) prod *= M[rows[k] - 1][cols[perm[k]] - 1];
        result += TorusElement(LaurentInt::neg_q_power(inversion_count(perm))) * prod;
    });
    return result;
}

TorusElement path_matrix_minor_column_form(const TorusMatrix& M, const IndexSet& rows,
                                           const IndexSet& cols) {
    check_minor_index(M, rows, cols);
    int t = rows.size();
    TorusElement result;
    for_each_permutation(t, [&](const std::vector<int>& perm) {
        TorusElement prod = TorusElement::one();
        for (int k = 0; k < t; ++k) prod *= M[rows[perm[k]] - 1][cols[k] - 1];
        result += TorusElement(LaurentInt::neg_q_power(inversion_count(perm))) * prod;
    });
    return result;
}

TorusElement lgv_rhs(const LeDiagram& diagram, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("lgv_rhs: |rows| != |cols|");
    PostnikovGraph g(diagram);
    std::vector<PathSystem> systems = enumerate_disjoint_systems(g, rows, cols);
    if (systems.empty()) return TorusElement();
    TorusElement sum;
    for (const PathSystem& s : systems) sum += s.weight;
    int ell = inversion_count(systems.front().permutation);
    return TorusElement(LaurentInt::neg_q_power(ell)) * sum;
}

TorusMatrix restore_entries(const LeDiagram& diagram) {
    const Partition& shape = diagram.shape();
    int c = shape.rows();
    int d = shape.cols();
    TorusMatrix chi(c, std::vector<TorusElement>(d));
    for (const Box& b : shape.boxes())
        if (diagram.is_white(b)) chi[b.row - 1][b.col - 1] = TorusElement::generator(b);
    // ascending lex sweep; the update at (a,b) reads only column-b entries
    // and writes only columns < b, so in-place updates do not interfere
    for (const Box& ab : shape.boxes()) {
        if (!diagram.is_white(ab)) continue;
        for (int i = 1; i < ab.row; ++i) {
            for (int j = 1; j < ab.col; ++j) {
                if (!diagram.is_white({ab.row, j})) continue;  // t_{a,j} = 0
                TorusElement update = chi[i - 1][ab.col - 1] *
                                      TorusElement::generator(ab, -1) *
                                      TorusElement::generator({ab.row, j});
                chi[i - 1][j - 1] += update;
            }
        }
    }
    return chi;
}

bool minor_vanishes(const LeDiagram& diagram, const IndexSet& rows, const IndexSet& cols) {
    return path_matrix_minor(path_matrix(diagram), rows, cols).is_zero();
}

}  // namespace qgr
