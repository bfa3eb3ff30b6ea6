#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace testutil {

struct ProcessResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout; stderr is discarded so expected
// usage errors stay quiet in the test log.
inline ProcessResult run_process(const std::string& command)
{
    const std::string wrapped = command + " 2>/dev/null";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (pipe == nullptr)
        return {};

    ProcessResult result;
    char buffer[4096];
    for (;;) {
        const std::size_t got = fread(buffer, 1, sizeof buffer, pipe);
        if (got == 0)
            break;
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace testutil
