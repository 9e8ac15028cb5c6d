#include "qgr/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qgr {

LaurentInt::LaurentInt(long constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentInt::LaurentInt(const BigInt& constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentInt LaurentInt::monomial(BigInt c, int k) {
    LaurentInt r;
    if (c != 0) r.terms_[k] = std::move(c);
    return r;
}

LaurentInt LaurentInt::q_power(int k) { return monomial(1, k); }

LaurentInt LaurentInt::neg_q_power(int k) {
    if (k < 0) throw std::invalid_argument("neg_q_power: exponent must be nonnegative");
    return monomial(k % 2 == 0 ? 1 : -1, k);
}

bool LaurentInt::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void LaurentInt::add_term(int exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentInt LaurentInt::operator+(const LaurentInt& rhs) const {
    LaurentInt r = *this;
    r += rhs;
    return r;
}

LaurentInt LaurentInt::operator-(const LaurentInt& rhs) const {
    LaurentInt r = *this;
    r -= rhs;
    return r;
}

LaurentInt LaurentInt::operator*(const LaurentInt& rhs) const {
    LaurentInt r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BigInt LaurentInt::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

std::string LaurentInt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << c.str() << "*q^" << k;
        first = false;
    }
    return os.str();
}

namespace {

void skip_ws(std::string_view s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// [-]digits, at least one digit
bool parse_integer(std::string_view s, size_t& pos, std::string& out) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return false;
    }
    out.assign(s.substr(start, pos - start));
    return true;
}

}  // namespace

std::optional<LaurentInt> LaurentInt::parse(std::string_view text) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return LaurentInt();
    LaurentInt result;
    while (true) {
        std::string coeff_str;
        if (!parse_integer(text, pos, coeff_str)) return std::nullopt;
        if (pos >= text.size() || text[pos] != '*') return std::nullopt;
        ++pos;
        if (pos + 1 >= text.size() || text[pos] != 'q' || text[pos + 1] != '^') return std::nullopt;
        pos += 2;
        std::string exp_str;
        if (!parse_integer(text, pos, exp_str)) return std::nullopt;
        result.add_term(std::stoi(exp_str), BigInt(coeff_str));
        skip_ws(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != '+') return std::nullopt;
        ++pos;
        skip_ws(text, pos);
    }
    return result;
}

LaurentInt arith(const LaurentInt& a, const LaurentInt& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
    }
    throw std::invalid_argument("arith: unknown kind");
}

}  // namespace qgr
