#include "doctest.h"
#include "modcurve/errors.hpp"
#include "modcurve/level_arith.hpp"

using namespace modcurve;
using K = SubgroupKind;

namespace {

LevelStructure make(K k3, K k5, K k7) {
  LevelStructure ls;
  ls.set(3, k3);
  ls.set(5, k5);
  ls.set(7, k7);
  return ls;
}

// |GL2(F_p)| by counting invertible matrices, for small p
Int count_gl2(Int p) {
  Int n = 0;
  for (Int a = 0; a < p; ++a)
    for (Int b = 0; b < p; ++b)
      for (Int c = 0; c < p; ++c)
        for (Int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p != 0) ++n;
  return n;
}

// upper triangular invertible matrices
Int count_borel(Int p) { return (p - 1) * (p - 1) * p; }

}  // namespace

TEST_SUITE("level_arith") {

TEST_CASE("group orders against brute force") {
  for (Int p : {2, 3, 5, 7}) {
    CHECK(group_order(p, K::Full) == count_gl2(p));
    CHECK(group_order(p, K::Borel) == count_borel(p));
    CHECK(local_index(p, K::Borel) == p + 1);
    CHECK(local_index(p, K::SplitCartanNormalizer) == p * (p + 1) / 2);
    CHECK(local_index(p, K::NonsplitCartanNormalizer) == p * (p - 1) / 2);
  }
  CHECK(group_order(7, K::E7) == 48);
  CHECK(local_index(7, K::E7) == 42);
}

TEST_CASE("e7 only at 7") {
  CHECK_THROWS_AS(check_kind_at(5, K::E7), DataError);
  CHECK_THROWS_AS(check_kind_at(9, K::Borel), DataError);
  LevelStructure ls;
  ls.set(3, K::Borel);
  CHECK_THROWS_AS(ls.set(3, K::Borel), DataError);
}

TEST_CASE("five level structures") {
  CHECK(psl2_index(make(K::Borel, K::Borel, K::Borel)) == 192);
  CHECK(psl2_index(make(K::SplitCartanNormalizer, K::Borel, K::Borel)) == 288);
  CHECK(psl2_index(make(K::Borel, K::Borel, K::NonsplitCartanNormalizer)) == 504);
  CHECK(psl2_index(make(K::Borel, K::Borel, K::E7)) == 1008);
  CHECK(psl2_index(make(K::SplitCartanNormalizer, K::Borel, K::E7)) == 1512);
}

TEST_CASE("index is multiplicative and trivial when empty") {
  CHECK(psl2_index(LevelStructure{}) == 1);
  LevelStructure b3;
  b3.set(3, K::Borel);
  CHECK(psl2_index(b3) == 4);
  const auto all = make(K::SplitCartanNormalizer, K::Borel, K::E7);
  Int prod = 1;
  for (auto [p, k] : all.entries()) prod *= local_index(p, k);
  CHECK(psl2_index(all) == prod);
}

TEST_CASE("tags") {
  CHECK(make(K::SplitCartanNormalizer, K::Borel, K::E7).tags() == "s3,b5,e7");
  CHECK(make(K::Borel, K::Borel, K::NonsplitCartanNormalizer).tags() == "b3,b5,ns7");
}

}
