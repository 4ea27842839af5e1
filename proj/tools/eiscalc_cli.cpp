#include <cstdio>

int main() {
    std::puts("eiscalc placeholder");
    return 0;
}
