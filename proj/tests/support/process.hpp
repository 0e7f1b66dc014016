#ifndef ALTSUM_TESTS_PROCESS_HPP
#define ALTSUM_TESTS_PROCESS_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testproc {

struct Result {
    int exit_code = -1;
    std::string out;
};

/// Runs a shell command, capturing stdout; stderr is discarded.
inline Result run(const std::string& command) {
    const std::string full = command + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for " + command);
    Result result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testproc

#endif // ALTSUM_TESTS_PROCESS_HPP
