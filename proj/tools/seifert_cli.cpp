#include "seifert/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_seed;
    if (const char* s = std::getenv("SEIFERT_SEED")) env_seed = s;

    const auto result = seifert::cli::run(args, env_seed);
    if (result.status == seifert::cli::Status::Ok)
        std::cout << result.output;
    else
        std::cerr << result.output;
    return result.exit_code;
}
