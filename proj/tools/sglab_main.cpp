#include <cstdio>
int main(){ std::puts("sglab placeholder"); return 0; }
