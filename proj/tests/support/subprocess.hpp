#ifndef SPECSHARE_TESTS_SUBPROCESS_HPP
#define SPECSHARE_TESTS_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs a shell command, capturing stdout/stderr and the exit code.
inline Result run(const std::string& command) {
    Result result;
    const std::string err_path = "/tmp/specshare_test_stderr_" + std::to_string(getpid());
    const std::string full = command + " 2>" + err_path;
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err_file(err_path);
    std::ostringstream err_text;
    err_text << err_file.rdbuf();
    result.err = err_text.str();
    std::remove(err_path.c_str());
    return result;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

} // namespace subprocess

#endif
