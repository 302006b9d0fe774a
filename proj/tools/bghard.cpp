#include <cstdio>
int main() { std::puts("bghard"); return 0; }
