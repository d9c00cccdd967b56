#include <gtest/gtest.h>

#include "properties.hpp"

using namespace minorb;


TEST(Properties, AllHold)
{
  for (const auto& o : props::all(20240611)) {
    EXPECT_TRUE(o.pass) << o.name << ": " << o.detail;
    EXPECT_GT(o.cases, 0) << o.name;
  }
}
