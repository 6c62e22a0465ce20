#include "doctest.h"

TEST_SUITE("bivar") {}
