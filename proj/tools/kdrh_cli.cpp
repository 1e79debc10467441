#include <cstdio>
int main(){ std::puts("kdrh"); return 0; }
