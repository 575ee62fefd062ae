#include <cstdlib>
#include <iostream>

#include "cli.hpp"

extern char** environ;

int main(int argc, char** argv) {
    congrlab::cli::Environment env;
    for (char** e = environ; *e != nullptr; ++e) {
        const std::string kv(*e);
        const auto eq = kv.find('=');
        if (eq != std::string::npos) env.emplace(kv.substr(0, eq), kv.substr(eq + 1));
    }
    const std::vector<std::string> args(argv + 1, argv + argc);
    return congrlab::cli::run(args, env, std::cout, std::cerr);
}
