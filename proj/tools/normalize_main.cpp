#include <string>
#include <vector>

#include "rcnorm/io.hpp"

int main(int argc, char** argv) {
    return rcnorm::cli_normalize(std::vector<std::string>(argv + 1, argv + argc));
}
