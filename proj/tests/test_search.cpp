#include <doctest.h>
TEST_SUITE("search") {}
