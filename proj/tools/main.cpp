#include <iostream>

int main() {
    std::cout << "phasepath stub\n";
    return 0;
}
