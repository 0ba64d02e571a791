#include <doctest.h>

#include "properties.hpp"

TEST_CASE("property: factorization uniqueness") {
  std::string err = props::factorizationUniqueness();
  CHECK_MESSAGE(err.empty(), err);
}

TEST_CASE("property: swap confluence") {
  std::string err = props::swapConfluence();
  CHECK_MESSAGE(err.empty(), err);
}

TEST_CASE("property: canonical point soundness") {
  std::string err = props::canonicalPointSoundness();
  CHECK_MESSAGE(err.empty(), err);
}

TEST_CASE("property: unique path lifting") {
  std::string err = props::uniquePathLifting();
  CHECK_MESSAGE(err.empty(), err);
}

TEST_CASE("property: induced map functor laws") {
  std::string err = props::inducedMapFunctorLaws();
  CHECK_MESSAGE(err.empty(), err);
}

TEST_CASE("property: the collapsing witness") {
  std::string err = props::counterexampleWitness();
  CHECK_MESSAGE(err.empty(), err);
}
