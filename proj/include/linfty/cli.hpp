#pragma once

#include <iostream>

namespace linfty {

// Command-line front end. Exit codes: 0 success / all relations pass,
// 1 a relation check found violations, 2 input or validation error.
int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace linfty
