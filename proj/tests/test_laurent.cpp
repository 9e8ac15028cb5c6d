#include <doctest.h>

#include "qgr/laurent.hpp"

#include <random>
#include <vector>

using namespace qgr;

namespace {

// Independent oracle: dense term-by-term expansion over exponent arrays.
struct DensePoly {
    int min_exp = 0;
    std::vector<long> coeffs;  // coeffs[k] is the coefficient of q^{min_exp + k}

    static DensePoly from(const LaurentInt& a) {
        DensePoly p;
        if (a.is_zero()) return p;
        p.min_exp = a.terms().begin()->first;
        int max_exp = a.terms().rbegin()->first;
        p.coeffs.assign(max_exp - p.min_exp + 1, 0);
        for (const auto& [k, c] : a.terms())
            p.coeffs[k - p.min_exp] = static_cast<long>(c);
        return p;
    }

    LaurentInt to_laurent() const {
        LaurentInt out;
        for (size_t k = 0; k < coeffs.size(); ++k)
            out += LaurentInt::monomial(coeffs[k], min_exp + static_cast<int>(k));
        return out;
    }
};

LaurentInt oracle_mul(const LaurentInt& a, const LaurentInt& b) {
    DensePoly pa = DensePoly::from(a), pb = DensePoly::from(b);
    DensePoly prod;
    prod.min_exp = pa.min_exp + pb.min_exp;
    if (!pa.coeffs.empty() && !pb.coeffs.empty())
        prod.coeffs.assign(pa.coeffs.size() + pb.coeffs.size() - 1, 0);
    for (size_t i = 0; i < pa.coeffs.size(); ++i)
        for (size_t j = 0; j < pb.coeffs.size(); ++j)
            prod.coeffs[i + j] += pa.coeffs[i] * pb.coeffs[j];
    return prod.to_laurent();
}

LaurentInt random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coeff(-9, 9);
    LaurentInt out;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) out += LaurentInt::monomial(coeff(rng), exp(rng));
    return out;
}

const LaurentInt q = LaurentInt::q_power(1);
const LaurentInt qinv = LaurentInt::q_power(-1);

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("additive inverse and identity") {
    CHECK((q - qinv) + (qinv - q) == LaurentInt());
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentInt x = random_laurent(rng);
        CHECK(LaurentInt::q_power(0) * x == x);
        CHECK(x + LaurentInt() == x);
    }
}

TEST_CASE("product expansion matches the dense oracle") {
    // (q - q^-1)(q + q^-1) = q^2 - q^-2, frozen from the oracle
    LaurentInt expected = oracle_mul(q - qinv, q + qinv);
    CHECK(expected == LaurentInt::q_power(2) - LaurentInt::q_power(-2));
    CHECK((q - qinv) * (q + qinv) == expected);

    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentInt a = random_laurent(rng), b = random_laurent(rng);
        CHECK(a * b == oracle_mul(a, b));
    }
}

TEST_CASE("neg_q_power") {
    CHECK(LaurentInt::neg_q_power(0) == LaurentInt(1));
    CHECK(LaurentInt::neg_q_power(1) == -q);
    CHECK(LaurentInt::neg_q_power(2) == LaurentInt::q_power(2));
    for (int j = 0; j <= 6; ++j)
        for (int k = 0; k <= 6; ++k)
            CHECK(LaurentInt::neg_q_power(j) * LaurentInt::neg_q_power(k) ==
                  LaurentInt::neg_q_power(j + k));
    CHECK_THROWS_AS(LaurentInt::neg_q_power(-1), std::invalid_argument);
}

TEST_CASE("eval_at_one") {
    CHECK((q - qinv).eval_at_one() == 0);
    CHECK((LaurentInt(1) + LaurentInt::q_power(3)).eval_at_one() == 2);
    LaurentInt a = -q + LaurentInt::q_power(2) - LaurentInt::q_power(3);
    CHECK(a.eval_at_one() == -1);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentInt x = random_laurent(rng), y = random_laurent(rng);
        CHECK((x * y).eval_at_one() == x.eval_at_one() * y.eval_at_one());
        CHECK((x + y).eval_at_one() == x.eval_at_one() + y.eval_at_one());
    }
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentInt a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("text format round trip") {
    LaurentInt a = -qinv + LaurentInt::q_power(3);
    CHECK(a.to_string() == "-1*q^-1 + 1*q^3");
    CHECK(LaurentInt().to_string() == "0");
    CHECK(LaurentInt::parse("0").value() == LaurentInt());
    CHECK(LaurentInt::parse("-1*q^-1 + 1*q^3").value() == a);
    CHECK_FALSE(LaurentInt::parse("garbage").has_value());

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentInt x = random_laurent(rng);
        auto back = LaurentInt::parse(x.to_string());
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("arith dispatch") {
    LaurentInt a = q, b = qinv;
    CHECK(arith(a, b, ArithKind::add) == a + b);
    CHECK(arith(a, b, ArithKind::sub) == a - b);
    CHECK(arith(a, b, ArithKind::mul) == a * b);
}

}  // TEST_SUITE
