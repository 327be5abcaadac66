// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <iostream>

#include "mdgabor_cli/app.hpp"

int main(int argc, char** argv) { return mdg::cli::run(argc, argv, std::cout, std::cerr); }
