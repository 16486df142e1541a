#include <string>
#include <vector>

#include "rcnorm/io.hpp"

int main(int argc, char** argv) {
    return rcnorm::cli_simulate(std::vector<std::string>(argv + 1, argv + argc));
}
