#include "coxcomb/scalar.hpp"
int main() { return 0; }
