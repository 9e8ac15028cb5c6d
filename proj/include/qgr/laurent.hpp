// Exact arithmetic in the commutative Laurent ring Z[q^{+-1}], the
// coefficient ring used by every other module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qgr {

using BigInt = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in q with arbitrary-precision integer
// coefficients. Canonical form: no zero coefficient is ever stored, so
// structural equality is ring equality.
class LaurentInt {
public:
    LaurentInt() = default;                 // zero
    LaurentInt(long constant);              // constant * q^0
    explicit LaurentInt(const BigInt& constant);

    // c * q^k
    static LaurentInt monomial(BigInt c, int k);
    // q^k
    static LaurentInt q_power(int k);
    // (-q)^k for k >= 0, i.e. (-1)^k on exponent k
    static LaurentInt neg_q_power(int k);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_one() const;

    // true iff exactly one term is stored
    [[nodiscard]] bool is_single_term() const { return terms_.size() == 1; }

    LaurentInt operator+(const LaurentInt& rhs) const;
    LaurentInt operator-(const LaurentInt& rhs) const;
    LaurentInt operator*(const LaurentInt& rhs) const;
    LaurentInt operator-() const;
    LaurentInt& operator+=(const LaurentInt& rhs);
    LaurentInt& operator-=(const LaurentInt& rhs);
    LaurentInt& operator*=(const LaurentInt& rhs);

    bool operator==(const LaurentInt& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentInt& rhs) const { return !(*this == rhs); }
    // arbitrary total order, used when LaurentInt keys a map
    bool operator<(const LaurentInt& rhs) const { return terms_ < rhs.terms_; }

    // substitution q = 1 (ring homomorphism onto Z)
    [[nodiscard]] BigInt eval_at_one() const;

    // "-1*q^-1 + 1*q^3" in ascending exponent order; "0" for zero
    [[nodiscard]] std::string to_string() const;
    static std::optional<LaurentInt> parse(std::string_view text);

    [[nodiscard]] const std::map<int, BigInt>& terms() const { return terms_; }

private:
    void add_term(int exponent, const BigInt& coeff);

    std::map<int, BigInt> terms_;  // exponent -> nonzero coefficient
};

enum class ArithKind { add, sub, mul };

// Dispatch helper; the operators above are the normal interface.
LaurentInt arith(const LaurentInt& a, const LaurentInt& b, ArithKind kind);

}  // namespace qgr
