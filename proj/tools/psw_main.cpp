#include <iostream>
#include <string>
#include <vector>

#include "psw/cli.hpp"

int main(int argc, char** argv)
{
	std::vector<std::string> args(argv, argv + argc);
	return psw::cli::run(args, std::cout, std::cerr);
}
