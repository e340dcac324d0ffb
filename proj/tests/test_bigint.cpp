#include <doctest.h>

#include "cgt/bigint.hpp"
#include "cgt/random.hpp"

using cgt::BigUint;

TEST_CASE("construction and printing") {
  CHECK(BigUint().to_string() == "0");
  CHECK(BigUint(1).to_string() == "1");
  CHECK(BigUint(16609443840ULL).to_string() == "16609443840");
  CHECK(BigUint::from_decimal("16609443840") == BigUint(16609443840ULL));
  CHECK(BigUint::from_decimal("137936812337056972800").to_string() == "137936812337056972800");
}

TEST_CASE("the squared order halved") {
  // 16609443840^2 / 2 = 2^41 * 7920^2
  BigUint g(16609443840ULL);
  CHECK(((g * g) / BigUint(2)).to_string() == "137936812337056972800");
  CHECK(g * g == BigUint::from_decimal("275873624674113945600"));
  CHECK(BigUint(33218887680ULL) / BigUint(16609443840ULL) == BigUint(2));
}

TEST_CASE("arithmetic agrees with 64-bit arithmetic in range") {
  cgt::RandomStream rng(5);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t a = rng.next() >> 33;
    std::uint64_t b = (rng.next() >> 33) + 1;
    CHECK((BigUint(a) * BigUint(b)).to_string() == std::to_string(a * b));
    CHECK((BigUint(a) + BigUint(b)).to_string() == std::to_string(a + b));
    BigUint q, r;
    BigUint::divmod(BigUint(a), BigUint(b), q, r);
    CHECK(q == BigUint(a / b));
    CHECK(r == BigUint(a % b));
    CHECK((BigUint(a) <=> BigUint(b)) == (a <=> b));
  }
}

TEST_CASE("multi-limb divmod reconstructs the dividend") {
  cgt::RandomStream rng(9);
  for (int i = 0; i < 200; ++i) {
    BigUint a = BigUint(rng.next()) * BigUint(rng.next()) + BigUint(rng.next());
    BigUint b = BigUint(rng.next() | 1);
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r < b);
  }
}

TEST_CASE("subtraction and comparisons") {
  BigUint a = BigUint::from_decimal("340282366920938463463374607431768211456");  // 2^128
  BigUint b = BigUint::from_decimal("18446744073709551616");                     // 2^64
  CHECK((a - b).to_string() == "340282366920938463444927863358058659840");
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a - a == BigUint());
  CHECK_THROWS(b - a);
}

TEST_CASE("u64 round trip and overflow") {
  CHECK(BigUint(0xFFFFFFFFFFFFFFFFULL).to_u64() == 0xFFFFFFFFFFFFFFFFULL);
  CHECK(BigUint(12345).fits_u64());
  BigUint big = BigUint::from_decimal("137936772490375987200");
  CHECK_FALSE(big.fits_u64());
  CHECK_THROWS(big.to_u64());
}
