#include "ccsg/cli.hpp"

int main(int argc, char** argv) {
    return ccsg::cli::run(argc, argv);
}
