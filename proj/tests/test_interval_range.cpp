#include "doctest.h"

TEST_SUITE("interval_range") {}
