#include <iostream>
#include <string>

#include "pillow/cli.hpp"

int main(int argc, char** argv) {
    std::string out, err;
    const int code = pillow::cli::run(argc, argv, out, err);
    std::cout << out << std::flush;
    std::cerr << err << std::flush;
    return code;
}
