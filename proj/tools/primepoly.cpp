#include "primepoly/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
    try {
        return primepoly::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
    } catch (const std::exception& ex) {
        std::cerr << "fatal: " << ex.what() << '\n';
        return 3;
    }
}
