#include <iostream>

#include "toricsod/selftest.hpp"

int main() { return toricsod::run_selftest(std::cout) ? 0 : 1; }
