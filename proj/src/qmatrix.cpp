#include "qgr/qmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qgr {

Ambient full_matrix_algebra(int m, int n, QConvention conv) {
    if (m < 1 || n < 1) throw std::invalid_argument("full_matrix_algebra: need m,n >= 1");
    return Ambient{m, n, std::nullopt, conv};
}

Ambient partition_subalgebra(int m, int n, Partition shape, QConvention conv) {
    if (!shape.fits_in_box(m, n))
        throw std::invalid_argument("partition_subalgebra: shape exceeds the m x n box");
    return Ambient{m, n, std::move(shape), conv};
}

PbwMonomial PbwMonomial::generator(Box b, int exponent) {
    PbwMonomial m;
    if (exponent != 0) m.exps_[b] = exponent;
    return m;
}

int PbwMonomial::exponent(Box b) const {
    auto it = exps_.find(b);
    return it == exps_.end() ? 0 : it->second;
}

void PbwMonomial::set_exponent(Box b, int e) {
    if (e < 0) throw std::invalid_argument("PbwMonomial: exponents must be nonnegative");
    if (e == 0)
        exps_.erase(b);
    else
        exps_[b] = e;
}

int PbwMonomial::total_degree() const {
    int d = 0;
    for (const auto& [b, e] : exps_) d += e;
    return d;
}

bool PbwMonomial::occurs_in(const PbwMonomial& other) const {
    for (const auto& [b, e] : exps_)
        if (e > other.exponent(b)) return false;
    return true;
}

std::string PbwMonomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, e] : exps_) {
        if (!first) os << " ";
        os << "x[" << b.row << "," << b.col << "]";
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

int matrix_lex_compare(const PbwMonomial& a, const PbwMonomial& b) {
    auto ia = a.exps().begin(), ib = b.exps().begin();
    while (ia != a.exps().end() || ib != b.exps().end()) {
        if (ia == a.exps().end()) return 0 < ib->second ? -1 : 1;
        if (ib == b.exps().end()) return ia->second < 0 ? -1 : 1;
        if (ia->first != ib->first) {
            // the lex-smaller box is present in only one monomial; there the
            // other monomial has exponent 0
            if (ia->first < ib->first) return ia->second < 0 ? -1 : 1;
            return 0 < ib->second ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    return 0;
}

PbwElement::PbwElement(Ambient amb) : amb_(std::move(amb)) {}

PbwElement::PbwElement(Ambient amb, LaurentInt scalar) : amb_(std::move(amb)) {
    if (!scalar.is_zero()) terms_.emplace(PbwMonomial(), std::move(scalar));
}

PbwElement::PbwElement(Ambient amb, LaurentInt coeff, PbwMonomial mono) : amb_(std::move(amb)) {
    if (!coeff.is_zero()) terms_.emplace(std::move(mono), std::move(coeff));
}

void PbwElement::add_term(const PbwMonomial& mono, const LaurentInt& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PbwElement& PbwElement::operator+=(const PbwElement& rhs) {
    if (!(amb_ == rhs.amb_)) throw std::invalid_argument("PbwElement: mixed ambient algebras");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

PbwElement PbwElement::operator+(const PbwElement& rhs) const {
    PbwElement r = *this;
    r += rhs;
    return r;
}

PbwElement PbwElement::operator-(const PbwElement& rhs) const {
    if (!(amb_ == rhs.amb_)) throw std::invalid_argument("PbwElement: mixed ambient algebras");
    PbwElement r = *this;
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
    return r;
}

PbwElement PbwElement::operator-() const {
    PbwElement r(amb_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

std::string PbwElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        if (it->second.is_single_term())
            os << it->second.to_string();
        else
            os << "(" << it->second.to_string() << ")";
        os << " * " << it->first.to_string();
        first = false;
    }
    return os.str();
}

PbwElement pbw_generator(const Ambient& amb, Box b) {
    if (!amb.in_shape(b)) return PbwElement(amb);
    return PbwElement(amb, LaurentInt(1), PbwMonomial::generator(b));
}

PbwElement scale(const PbwElement& e, const LaurentInt& c) {
    PbwElement out(e.ambient());
    for (const auto& [mono, coeff] : e.terms()) out.add_term(mono, coeff * c);
    return out;
}

// ---------------------------------------------------------------------------
// Normal form. The primitive is left multiplication of a normal monomial by
// one generator; products fold over it. Every relation below preserves the
// rectangle hull of the boxes involved, so partition subalgebras need no
// extra handling here.

namespace {

struct Rewriter {
    LaurentInt q_plus;      // q (or q^{-1} in the inverse convention)
    LaurentInt q_minus;     // q^{-1} (or q)
    LaurentInt nasty_coef;  // q - q^{-1} (or q^{-1} - q)

    explicit Rewriter(QConvention conv) {
        int s = conv == QConvention::q ? 1 : -1;
        q_plus = LaurentInt::q_power(s);
        q_minus = LaurentInt::q_power(-s);
        nasty_coef = LaurentInt::q_power(s) - LaurentInt::q_power(-s);
    }

    using Terms = std::map<PbwMonomial, LaurentInt, MatrixLexLess>;

    static void add(Terms& t, const PbwMonomial& m, const LaurentInt& c) {
        if (c.is_zero()) return;
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    static void add_scaled(Terms& into, const Terms& from, const LaurentInt& scale) {
        for (const auto& [m, c] : from) add(into, m, c * scale);
    }

    // x_g * x^N with every box of N >= (given) min context handled by the
    // recursion itself; result monomials never dip below min(g, min N).
    Terms left_mul(Box g, const PbwMonomial& N) const {
        Terms result;
        // least box of N smaller than g, if any
        const auto& exps = N.exps();
        if (exps.empty() || !(exps.begin()->first < g)) {
            PbwMonomial out = N;
            out.set_exponent(g, out.exponent(g) + 1);
            add(result, out, LaurentInt(1));
            return result;
        }
        Box h = exps.begin()->first;  // h < g
        PbwMonomial rest = N;
        rest.set_exponent(h, rest.exponent(h) - 1);
        if (h.row == g.row || h.col == g.col) {
            // x_g x_h = q^{-1} x_h x_g
            Terms inner = left_mul(g, rest);
            add_scaled(result, prepend(h, inner), q_minus);
        } else if (h.col > g.col) {
            // anti-diagonal pair commutes
            Terms inner = left_mul(g, rest);
            add_scaled(result, prepend(h, inner), LaurentInt(1));
        } else {
            // h strictly NW of g: x_g x_h = x_h x_g - (q - q^{-1}) x_{h.row,g.col} x_{g.row,h.col}
            Terms straight = left_mul(g, rest);
            add_scaled(result, prepend(h, straight), LaurentInt(1));
            Terms corner_inner = left_mul({g.row, h.col}, rest);
            Terms corner = left_mul_elem({h.row, g.col}, corner_inner);
            add_scaled(result, corner, -nasty_coef);
        }
        return result;
    }

    Terms left_mul_elem(Box g, const Terms& e) const {
        Terms result;
        for (const auto& [m, c] : e) add_scaled(result, left_mul(g, m), c);
        return result;
    }

    // prefix a box that is <= every box occurring in e
    static Terms prepend(Box h, const Terms& e) {
        Terms result;
        for (const auto& [m, c] : e) {
            PbwMonomial out = m;
            out.set_exponent(h, out.exponent(h) + 1);
            result.emplace(std::move(out), c);
        }
        return result;
    }

    // symmetric right-insertion strategy: x^N * x_g
    Terms right_mul(const PbwMonomial& N, Box g) const {
        Terms result;
        const auto& exps = N.exps();
        if (exps.empty() || !(g < exps.rbegin()->first)) {
            PbwMonomial out = N;
            out.set_exponent(g, out.exponent(g) + 1);
            add(result, out, LaurentInt(1));
            return result;
        }
        Box h = exps.rbegin()->first;  // h > g
        PbwMonomial rest = N;
        rest.set_exponent(h, rest.exponent(h) - 1);
        if (h.row == g.row || h.col == g.col) {
            // x_h x_g = q^{-1} x_g x_h
            Terms inner = right_mul(rest, g);
            add_scaled(result, append(inner, h), q_minus);
        } else if (h.col < g.col) {
            Terms inner = right_mul(rest, g);
            add_scaled(result, append(inner, h), LaurentInt(1));
        } else {
            // g strictly NW of h: x_h x_g = x_g x_h - (q - q^{-1}) x_{g.row,h.col} x_{h.row,g.col}
            Terms straight = right_mul(rest, g);
            add_scaled(result, append(straight, h), LaurentInt(1));
            Terms corner_inner = right_mul(rest, {g.row, h.col});
            Terms corner = right_mul_elem(corner_inner, {h.row, g.col});
            add_scaled(result, corner, -nasty_coef);
        }
        return result;
    }

    Terms right_mul_elem(const Terms& e, Box g) const {
        Terms result;
        for (const auto& [m, c] : e) add_scaled(result, right_mul(m, g), c);
        return result;
    }

    static Terms append(const Terms& e, Box h) {
        Terms result;
        for (const auto& [m, c] : e) {
            PbwMonomial out = m;
            out.set_exponent(h, out.exponent(h) + 1);
            result.emplace(std::move(out), c);
        }
        return result;
    }
};

std::vector<Box> descending_factors(const PbwMonomial& m) {
    std::vector<Box> out;
    for (auto it = m.exps().rbegin(); it != m.exps().rend(); ++it)
        for (int k = 0; k < it->second; ++k) out.push_back(it->first);
    return out;
}

std::vector<Box> ascending_factors(const PbwMonomial& m) {
    std::vector<Box> out;
    for (const auto& [b, e] : m.exps())
        for (int k = 0; k < e; ++k) out.push_back(b);
    return out;
}

}  // namespace

PbwElement pbw_mul(const PbwElement& a, const PbwElement& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("pbw_mul: mixed ambient algebras");
    Rewriter rw(a.ambient().convention);
    PbwElement result(a.ambient());
    for (const auto& [ma, ca] : a.terms()) {
        Rewriter::Terms cur;
        for (const auto& [mb, cb] : b.terms()) Rewriter::add(cur, mb, cb);
        for (Box g : descending_factors(ma)) cur = rw.left_mul_elem(g, cur);
        for (const auto& [m, c] : cur) result.add_term(m, c * ca);
    }
    return result;
}

PbwElement pbw_mul_right_strategy(const PbwElement& a, const PbwElement& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("pbw_mul: mixed ambient algebras");
    Rewriter rw(a.ambient().convention);
    PbwElement result(a.ambient());
    for (const auto& [mb, cb] : b.terms()) {
        Rewriter::Terms cur;
        for (const auto& [ma, ca] : a.terms()) Rewriter::add(cur, ma, ca);
        for (Box g : ascending_factors(mb)) cur = rw.right_mul_elem(cur, g);
        for (const auto& [m, c] : cur) result.add_term(m, c * cb);
    }
    return result;
}

namespace {

LaurentInt minus_q(const Ambient& amb, int exponent) {
    // (-q)^e, or (-q^{-1})^e in the inverse convention
    int s = amb.convention == QConvention::q ? 1 : -1;
    return LaurentInt::monomial(exponent % 2 == 0 ? 1 : -1, s * exponent);
}

void check_index_pair(const Ambient& amb, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("pseudo_minor: |rows| != |cols|");
    if (rows.size() > 0 && (rows.elems().back() > amb.m || cols.elems().back() > amb.n))
        throw std::invalid_argument("pseudo_minor: index outside the m x n bounds");
}

}  // namespace

PbwElement pseudo_minor(const Ambient& amb, const IndexSet& rows, const IndexSet& cols) {
    check_index_pair(amb, rows, cols);
    int t = rows.size();
    PbwElement result(amb);
    std::vector<int> perm(t);
    for (int i = 0; i < t; ++i) perm[i] = i;
    do {
        // row indices strictly increase, so the factors are already in
        // ascending lex order
        PbwMonomial mono;
        bool dropped = false;
        for (int k = 0; k < t && !dropped; ++k) {
            Box b{rows[k], cols[perm[k]]};
            if (!amb.in_shape(b))
                dropped = true;
            else
                mono.set_exponent(b, mono.exponent(b) + 1);
        }
        if (!dropped) result.add_term(mono, minus_q(amb, inversion_count(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

namespace {

IndexSet erase_at(const IndexSet& s, int pos) {  // 0-based position
    std::vector<int> v = s.elems();
    v.erase(v.begin() + pos);
    return IndexSet(v);
}

}  // namespace

PbwElement laplace_expand(const Ambient& amb, const IndexSet& rows, const IndexSet& cols,
                          LaplaceMode mode) {
    check_index_pair(amb, rows, cols);
    int l = rows.size();
    if (l == 0) return PbwElement(amb, LaurentInt(1));  // empty minor convention
    PbwElement result(amb);
    switch (mode) {
        case LaplaceMode::row_first_left: {
            IndexSet tail_rows = erase_at(rows, 0);
            for (int p = 0; p < l; ++p) {
                PbwElement term = pbw_mul(pbw_generator(amb, {rows[0], cols[p]}),
                                          pseudo_minor(amb, tail_rows, erase_at(cols, p)));
                result += scale(term, minus_q(amb, p));
            }
            break;
        }
        case LaplaceMode::row_last_right: {
            IndexSet head_rows = erase_at(rows, l - 1);
            for (int p = 0; p < l; ++p) {
                PbwElement term = pbw_mul(pseudo_minor(amb, head_rows, erase_at(cols, p)),
                                          pbw_generator(amb, {rows[l - 1], cols[p]}));
                result += scale(term, minus_q(amb, l - 1 - p));
            }
            break;
        }
        case LaplaceMode::col_expression: {
            std::vector<int> perm(l);
            for (int i = 0; i < l; ++i) perm[i] = i;
            do {
                PbwElement prod(amb, LaurentInt(1));
                for (int k = 0; k < l; ++k)
                    prod = pbw_mul(prod, pbw_generator(amb, {rows[perm[k]], cols[k]}));
                result += scale(prod, minus_q(amb, inversion_count(perm)));
            } while (std::next_permutation(perm.begin(), perm.end()));
            break;
        }
        case LaplaceMode::col_first_left: {
            IndexSet tail_cols = erase_at(cols, 0);
            for (int p = 0; p < l; ++p) {
                PbwElement term = pbw_mul(pbw_generator(amb, {rows[p], cols[0]}),
                                          pseudo_minor(amb, erase_at(rows, p), tail_cols));
                result += scale(term, minus_q(amb, p));
            }
            break;
        }
        case LaplaceMode::col_last_right: {
            IndexSet head_cols = erase_at(cols, l - 1);
            for (int p = 0; p < l; ++p) {
                PbwElement term = pbw_mul(pseudo_minor(amb, erase_at(rows, p), head_cols),
                                          pbw_generator(amb, {rows[p], cols[l - 1]}));
                result += scale(term, minus_q(amb, l - 1 - p));
            }
            break;
        }
    }
    return result;
}

std::pair<PbwMonomial, LaurentInt> leading_monomial(const PbwElement& a) {
    if (a.is_zero()) throw std::invalid_argument("leading_monomial: zero element");
    auto it = a.terms().rbegin();
    return {it->first, it->second};
}

std::optional<std::pair<LaurentInt, PbwMonomial>> occurs_factorization(const Ambient& amb,
                                                                       const PbwMonomial& M,
                                                                       const PbwMonomial& N) {
    if (!M.occurs_in(N)) return std::nullopt;
    PbwMonomial rem;
    for (const auto& [b, e] : N.exps()) {
        int r = e - M.exponent(b);
        if (r != 0) rem.set_exponent(b, r);
    }
    PbwElement prod = pbw_mul(PbwElement(amb, LaurentInt(1), rem),
                              PbwElement(amb, LaurentInt(1), M));
    auto [lm, lc] = leading_monomial(prod);
    if (!(lm == N) || !lc.is_single_term() || lc.terms().begin()->second != 1)
        throw std::logic_error("occurs_factorization: leading term not a pure q-power on x^N");
    int a_exp = lc.terms().begin()->first;
    return std::make_pair(LaurentInt::q_power(-a_exp), rem);
}

PbwElement plucker(int m, int n, const IndexSet& cols, QConvention conv) {
    if (cols.size() != m) throw std::invalid_argument("plucker: |J| must equal m");
    std::vector<int> rows(m);
    for (int i = 0; i < m; ++i) rows[i] = i + 1;
    return pseudo_minor(full_matrix_algebra(m, n, conv), IndexSet(rows), cols);
}

int ell(const std::vector<int>& I, const std::vector<int>& J) {
    int count = 0;
    for (int i : I)
        for (int j : J)
            if (i > j) ++count;
    return count;
}

namespace {

// all subsets of `universe` of the given size, in lex order
void subsets_of_size(const std::vector<int>& universe, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (size_t k = next; k < universe.size(); ++k) {
            if (universe.size() - k < size - cur.size()) break;
            cur.push_back(universe[k]);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

std::optional<IndexSet> disjoint_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) return std::nullopt;
    return IndexSet(merged);
}

}  // namespace

PbwElement plucker_relation_lhs(int m, int n, const IndexSet& J1, const IndexSet& J2,
                                const IndexSet& K, QConvention conv) {
    if (J1.size() > m || J2.size() > m)
        throw std::invalid_argument("plucker_relation_lhs: |J1|, |J2| must be <= m");
    if (K.size() != 2 * m - J1.size() - J2.size() || K.size() <= m)
        throw std::invalid_argument("plucker_relation_lhs: need |K| = 2m - |J1| - |J2| > m");
    Ambient amb = full_matrix_algebra(m, n, conv);
    PbwElement result(amb);
    std::vector<std::vector<int>> choices;
    subsets_of_size(K.elems(), m - J1.size(), choices);
    for (const auto& Kp : choices) {
        std::vector<int> Kpp;
        std::set_difference(K.elems().begin(), K.elems().end(), Kp.begin(), Kp.end(),
                            std::back_inserter(Kpp));
        auto left = disjoint_union(J1.elems(), Kp);
        auto right = disjoint_union(Kpp, J2.elems());
        if (!left || !right) continue;  // repeated index: the symbol is zero
        int e = ell(J1.elems(), Kp) + ell(Kp, Kpp) + ell(Kpp, J2.elems());
        PbwElement prod = pbw_mul(plucker(m, n, *left, conv), plucker(m, n, *right, conv));
        result += scale(prod, minus_q(amb, e));
    }
    return result;
}

PbwElement muir_lift(const std::vector<PluckerTerm>& relation, const IndexSet& D, int m_new,
                     int n, QConvention conv) {
    PbwElement result(full_matrix_algebra(m_new, n, conv));
    for (const PluckerTerm& term : relation) {
        for (int d : D.elems())
            if (term.I.contains(d) || term.J.contains(d))
                throw std::invalid_argument("muir_lift: D overlaps a relation index set");
        auto lifted_I = disjoint_union(term.I.elems(), D.elems());
        auto lifted_J = disjoint_union(term.J.elems(), D.elems());
        PbwElement prod =
            pbw_mul(plucker(m_new, n, *lifted_I, conv), plucker(m_new, n, *lifted_J, conv));
        result += scale(prod, term.coeff);
    }
    return result;
}

bool ore_identity_holds(int i, int j, int k, int l, int d) {
    if (!(i < k && j < l))
        throw std::invalid_argument("ore_identity_holds: (i,j) must be strictly NW of (k,l)");
    if (d < 0) throw std::invalid_argument("ore_identity_holds: d must be >= 0");
    Ambient amb = full_matrix_algebra(k, l);
    PbwElement xij = pbw_generator(amb, {i, j});
    PbwElement xkl = pbw_generator(amb, {k, l});
    PbwElement xil = pbw_generator(amb, {i, l});
    PbwElement xkj = pbw_generator(amb, {k, j});
    auto power = [&](const PbwElement& base, int e) {
        PbwElement acc(amb, LaurentInt(1));
        for (int s = 0; s < e; ++s) acc = pbw_mul(acc, base);
        return acc;
    };
    PbwElement lhs = pbw_mul(xij, power(xkl, d + 1));
    LaurentInt coef = LaurentInt::q_power(2 * d + 1) - LaurentInt::q_power(1);
    PbwElement inner = pbw_mul(xij, xkl) + scale(pbw_mul(xil, xkj), coef);
    PbwElement rhs = pbw_mul(power(xkl, d), inner);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Text parsing ("1*q^0 * x[1,1] x[2,2] + ...").

namespace {

void skip_spaces(std::string_view s, size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

bool parse_int(std::string_view s, size_t& pos, int& out) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return false;
    }
    out = std::stoi(std::string(s.substr(start, pos - start)));
    return true;
}

}  // namespace

std::optional<PbwElement> PbwElement::parse(const Ambient& amb, std::string_view text) {
    size_t pos = 0;
    skip_spaces(text, pos);
    if (text.substr(pos) == "0") return PbwElement(amb);
    PbwElement result(amb);
    while (true) {
        LaurentInt coeff;
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '(') {
            size_t close = text.find(')', pos);
            if (close == std::string_view::npos) return std::nullopt;
            auto parsed = LaurentInt::parse(text.substr(pos + 1, close - pos - 1));
            if (!parsed) return std::nullopt;
            coeff = *parsed;
            pos = close + 1;
        } else {
            // single term c*q^k
            size_t end = text.find(" * ", pos);
            if (end == std::string_view::npos) return std::nullopt;
            auto parsed = LaurentInt::parse(text.substr(pos, end - pos));
            if (!parsed) return std::nullopt;
            coeff = *parsed;
            pos = end;
        }
        skip_spaces(text, pos);
        if (text.substr(pos, 1) != "*") return std::nullopt;
        ++pos;
        skip_spaces(text, pos);
        PbwMonomial mono;
        if (pos < text.size() && text[pos] == '1' &&
            (pos + 1 == text.size() || text[pos + 1] == ' ')) {
            ++pos;  // the empty monomial
        } else {
            while (pos < text.size() && text[pos] == 'x') {
                if (text.substr(pos, 2) != "x[") return std::nullopt;
                pos += 2;
                int row = 0, col = 0, e = 1;
                if (!parse_int(text, pos, row)) return std::nullopt;
                if (pos >= text.size() || text[pos] != ',') return std::nullopt;
                ++pos;
                if (!parse_int(text, pos, col)) return std::nullopt;
                if (pos >= text.size() || text[pos] != ']') return std::nullopt;
                ++pos;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    if (!parse_int(text, pos, e)) return std::nullopt;
                }
                Box b{row, col};
                mono.set_exponent(b, mono.exponent(b) + e);
                skip_spaces(text, pos);
            }
        }
        result.add_term(mono, coeff);
        skip_spaces(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != '+') return std::nullopt;
        ++pos;
    }
    return result;
}

}  // namespace qgr
