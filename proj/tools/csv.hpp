#ifndef SPECSHARE_TOOLS_CSV_HPP
#define SPECSHARE_TOOLS_CSV_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cli {

inline constexpr const char* kCsvVersionLine = "# specshare-csv v1";

/// Formats a double the same way on every run (shortest %.12g form).
inline std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

/// CSV sink with a schema-version comment and a stable header. Opening an
/// existing file whose version and header match appends rows; anything else
/// starts the file over.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& header) {
        bool append = false;
        {
            std::ifstream existing(path);
            if (existing) {
                std::string version_line, header_line;
                std::getline(existing, version_line);
                std::getline(existing, header_line);
                append = version_line == kCsvVersionLine && header_line == header;
            }
        }
        out_.open(path, append ? std::ios::app : std::ios::trunc);
        if (!out_) throw std::runtime_error("cannot open CSV output: " + path);
        if (!append) {
            out_ << kCsvVersionLine << "\n" << header << "\n";
        }
    }

    void row(const std::string& line) { out_ << line << "\n"; }
    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

private:
    std::ofstream out_;
};

} // namespace cli

#endif
