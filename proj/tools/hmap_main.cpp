#include <cstdio>
int main() { std::puts("hmap: under construction"); return 2; }
