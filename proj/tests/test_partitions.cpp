#include <random>

#include "doctest.h"
#include "partzeta/partitions.hpp"
#include "test_util.hpp"

using namespace pz;

namespace {

Partition P(std::vector<unsigned long> parts) { return Partition{std::move(parts)}; }

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("enumerate small cases") {
    auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].length() == 0);
    CHECK(zero[0].norm() == 1);

    auto four = enumerate_partitions(4);
    std::vector<Partition> expect{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
    CHECK(four == expect);

    auto even = enumerate_partitions(6, PartSet::parse("2N"));
    CHECK(even == std::vector<Partition>{P({6}), P({4, 2}), P({2, 2, 2})});
  }

  TEST_CASE("enumerate against the generating function") {
    const unsigned T = 30;
    auto gf = product_sum_expand([](unsigned long) { return Rational(1); }, T);
    for (unsigned n = 0; n <= T; ++n) CHECK(Rational(static_cast<long>(enumerate_partitions(n).size())) == gf[n]);
    for (unsigned n = 0; n <= 20; ++n) {
      std::size_t total = 0;
      for (std::size_t len = 0; len <= n; ++len) total += enumerate_partitions(n, {}, len).size();
      CHECK(total == enumerate_partitions(n).size());
    }
    // odd parts and distinct parts are equinumerous
    for (unsigned n = 0; n <= 25; ++n)
      CHECK(enumerate_partitions(n, PartSet::parse("1+2N|finite:{1}")).size() ==
            enumerate_partitions(n, PartSet::parse("distinct")).size());
  }

  TEST_CASE("enumeration respects ones limits") {
    auto parts = enumerate_partitions(4, PartSet::parse("N|ones:1"));
    CHECK(parts == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
    auto distinct = enumerate_partitions(6, PartSet::parse("distinct"));
    CHECK(distinct == std::vector<Partition>{P({6}), P({5, 1}), P({4, 2}), P({3, 2, 1})});
  }

  TEST_CASE("product_sum_expand examples") {
    auto ones = product_sum_expand([](unsigned long) { return Rational(1); }, 5);
    const long p[] = {1, 1, 2, 3, 5, 7};
    for (unsigned n = 0; n <= 5; ++n) CHECK(ones[n] == p[n]);

    auto zeros = product_sum_expand([](unsigned long) { return Rational(0); }, 5);
    CHECK(zeros[0] == 1);
    for (unsigned n = 1; n <= 5; ++n) CHECK(zeros[n] == 0);

    auto inv = product_sum_expand([](unsigned long n) { return Rational(1, static_cast<long>(n)); }, 4);
    CHECK(inv[4] == Rational(7, 3));
  }

  TEST_CASE("product_sum_expand with random rational weights") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rational> f(31);
    for (auto& v : f) v = Rational(d(rng), 1 + (d(rng) + 5));
    auto series = product_sum_expand([&](unsigned long n) { return f[n]; }, 30);
    for (unsigned n = 0; n <= 30; n += 5) {
      Rational direct = 0;
      for (const auto& lam : enumerate_partitions(n)) {
        Rational term = 1;
        for (auto part : lam.parts) term *= f[part];
        direct += term;
      }
      CHECK(direct == series[n]);
    }
  }

  TEST_CASE("brute_zeta examples") {
    const HPReal half_pi = pi_hp() / 2;
    auto even = brute_zeta(PartSet::parse("2N"), HPReal(2), 40, 12);
    CHECK(even.value < half_pi);
    CHECK(half_pi - even.value < HPReal("0.03"));
    CHECK_FALSE(even.truncation_note.empty());

    auto distinct = brute_zeta(PartSet::parse("distinct"), HPReal(2), 60, 10);
    const HPReal target = sinh(pi_hp()) / pi_hp();
    CHECK(distinct.value < target);
    // parts above 60 contribute a factor of about exp(1/60)
    CHECK(target - distinct.value < HPReal("0.07"));
    CHECK(target - brute_zeta(PartSet::parse("distinct"), HPReal(2), 120, 12).value < target - distinct.value);

    CHECK(brute_zeta(PartSet::parse("2N"), HPReal(2), 1, 0).value == 1);
    CHECK_THROWS_AS(brute_zeta(PartSet::parse("N"), HPReal(2), 10, 3), DomainError);
  }

  TEST_CASE("brute_zeta is monotone in both bounds") {
    const PartSet spec = PartSet::parse("geq:2");
    HPReal prev = 0;
    for (unsigned long b = 2; b <= 20; b += 3) {
      HPReal row_prev = 0;
      for (unsigned long len = 1; len <= 5; ++len) {
        HPReal v = brute_zeta(spec, HPReal(3), b, len).value;
        CHECK(v >= row_prev);
        row_prev = v;
      }
      CHECK(row_prev >= prev);
      prev = row_prev;
    }
  }

  TEST_CASE("adjoining ones multiplies the sum") {
    for (unsigned long m : {1UL, 2UL, 5UL}) {
      PartSet with_ones = PartSet::parse("N|ones:" + std::to_string(m));
      HPReal a = brute_zeta(with_ones, HPReal(2), 12, 4).value;
      HPReal b = brute_zeta(PartSet::parse("geq:2"), HPReal(2), 12, 4).value;
      CHECK(abs(a - HPReal(m + 1) * b) < pow2_neg(230));
    }
  }

  TEST_CASE("multiplicative_partition_count") {
    const PartSet ge2 = PartSet::parse("geq:2");
    CHECK(multiplicative_partition_count(1, ge2) == 1);
    CHECK(multiplicative_partition_count(12, ge2) == 4);
    for (unsigned long p : {2UL, 3UL, 13UL, 101UL}) CHECK(multiplicative_partition_count(p, ge2) == 1);
    CHECK(multiplicative_partition_count(16, ge2) == 5);
    CHECK_THROWS_AS(multiplicative_partition_count(6, PartSet::parse("N")), DomainError);
  }

  TEST_CASE("partial sums are dominated by the truncated product") {
    const PartSet ge2 = PartSet::parse("geq:2");
    const HPReal s(2);
    for (unsigned long X : {10UL, 50UL, 200UL}) {
      HPReal sum = 0;
      for (unsigned long n = 1; n <= X; ++n) sum += to_hp(multiplicative_partition_count(n, ge2)) / pow(HPReal(n), s);
      HPReal prod = 1;
      for (unsigned long k = 2; k <= X; ++k) prod /= 1 - pow(HPReal(k), -s);
      CHECK(sum <= prod);
    }
  }

  TEST_CASE("PartSet parsing and membership") {
    PartSet s = PartSet::parse("1+4N");
    CHECK_FALSE(s.contains(1));
    CHECK(s.contains(5));
    CHECK(s.contains(9));
    CHECK_FALSE(s.contains(7));
    CHECK(PartSet::parse("N").divergent());
    CHECK_FALSE(PartSet::parse("2N").divergent());
    CHECK_FALSE(PartSet::parse("distinct").divergent());
    CHECK(PartSet::parse("finite:{2,3,7}").members_upto(10) == std::vector<unsigned long>{2, 3, 7});
    CHECK(PartSet::parse(PartSet::parse("3N|geq:4|ones:2").to_string()).members_upto(20) ==
          PartSet::parse("3N|geq:4|ones:2").members_upto(20));
    CHECK_THROWS_AS(PartSet::parse("bogus"), DomainError);
  }
}
