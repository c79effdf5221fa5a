#include "pentaforge/families.hpp"
#include "pentaforge/graph.hpp"

#include <iostream>

int main() {
    using namespace pentaforge;
    int bad = 0;
    for (const auto& b : base_library()) {
        auto classes = true_twin_classes(b.graph);
        if (static_cast<int>(classes.size()) != b.graph.n()) {
            std::cerr << "base " << b.name << " has true twins\n";
            ++bad;
        }
    }
    if (bad) return 1;
    std::cout << "all " << base_library().size() << " bases are twin-free\n";
    return 0;
}
