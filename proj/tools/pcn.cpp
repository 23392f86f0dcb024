#include <pcn/cli.hpp>

#include <exception>
#include <iostream>

int main(int argc, char ** argv)
{
    try {
        return pcn::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
}
