#pragma once

#include <string>
#include <vector>

namespace ffm::cli {

// Runs one command line. Returns 0 on completion, 2 when a minor budget ran
// out, 1 on error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

// Parses "x2-x+2" or "x^2 - x + 2" into coefficients mod p, constant first.
std::vector<std::uint32_t> parse_model(const std::string& text, std::uint32_t p);

}  // namespace ffm::cli
