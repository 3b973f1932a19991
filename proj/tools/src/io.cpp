#include "wentzell_cli/io.hpp"

#include "wentzell/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace wentzell::cli {

void atomic_write(const std::filesystem::path& path, const std::string& content)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw Error(ErrorKind::io, "cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::io, "cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out)
            throw Error(ErrorKind::io, "write failed for " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorKind::io, "cannot move output into place at " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& command, const HeaderFields& fields, const std::vector<std::string>& columns)
    : width_(columns.size())
{
    text_ = "# wentzell " + command + "\n";
    for (const auto& [k, v] : fields)
        text_ += "# " + k + " = " + v + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        text_ += (i ? "," : "") + columns[i];
    text_ += "\n";
}

void CsvWriter::row(const std::vector<double>& values)
{
    std::vector<std::string> s;
    s.reserve(values.size());
    for (double v : values)
        s.push_back(num(v));
    row(s);
}

void CsvWriter::row(const std::vector<std::string>& values)
{
    if (values.size() != width_)
        throw Error(ErrorKind::numerical, "CSV row width does not match the header");
    for (std::size_t i = 0; i < values.size(); ++i)
        text_ += (i ? "," : "") + values[i];
    text_ += "\n";
}

} // namespace wentzell::cli
