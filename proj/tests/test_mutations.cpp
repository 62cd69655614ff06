#include <gtest/gtest.h>

#include "mutations.hpp"

using namespace hopfc;

TEST(Mutations, SuiteIsLargeEnough) { EXPECT_GE(mutation::mutation_suite().size(), 12u); }

TEST(Mutations, EveryMutationTripsACheck) {
  for (const auto& m : mutation::mutation_suite(3)) {
    const auto tripped = m.tripped();
    EXPECT_FALSE(tripped.empty()) << m.name;
  }
}

TEST(Mutations, UnmutatedCatalogTripsNothing) {
  for (const auto& name : catalog::presentation_names()) {
    EXPECT_TRUE(mutation::run_checks(catalog::presentation(name, 3), name, 3).empty()) << name;
  }
}
