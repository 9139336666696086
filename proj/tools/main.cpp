#include "ctxwit/commands.hpp"

int main(int argc, char** argv) {
    return ctxwit::cli::run(argc, argv);
}
