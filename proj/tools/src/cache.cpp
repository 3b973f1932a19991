#include "wentzell_cli/cache.hpp"

#include "wentzell/error.hpp"
#include "wentzell_cli/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace wentzell::cli {

namespace {

std::string key_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty())
        return *flag;
    if (const char* env = std::getenv("WENTZELL_CACHE_DIR"); env && *env)
        return env;
    return ".wentzell_cache";
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const PhysicalParams& p, std::size_t M_max,
                                 double residual_tol)
{
    return dir / ("modes_S" + key_number(p.S()) + "_c" + key_number(p.c) + "_mu" + key_number(p.mu) + "_M" +
                  std::to_string(M_max) + "_tol" + key_number(residual_tol) + ".json");
}

std::string serialize_table(const ModeTable& table)
{
    const auto& p = table.params();
    std::string s = "{\n";
    s += "  \"S\": " + num(p.S()) + ",\n";
    s += "  \"c\": " + num(p.c) + ",\n";
    s += "  \"mu\": " + num(p.mu) + ",\n";
    s += "  \"residual_tol\": " + num(table.residual_tol()) + ",\n";
    s += "  \"entries\": [";
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& e = table[i];
        s += i ? ",\n" : "\n";
        s += "    {\"m\": " + std::to_string(e.m) + ", \"q\": " + num(e.q) + ", \"parity\": \"" + to_string(e.parity) +
             "\", \"c_norm\": " + num(e.c_norm) + ", \"d_bdy\": " + num(e.d_bdy) + "}";
    }
    s += "\n  ]\n}\n";
    return s;
}

ModeTable parse_table(const std::string& text, const PhysicalParams& p)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::io, std::string("malformed mode cache: ") + e.what());
    }
    try {
        if (j.at("S").get<double>() != p.S() || j.at("c").get<double>() != p.c || j.at("mu").get<double>() != p.mu)
            throw Error(ErrorKind::io, "mode cache parameters do not match the request");
        std::vector<ModeEntry> entries;
        for (const auto& r : j.at("entries")) {
            ModeEntry e;
            e.m = r.at("m").get<int>();
            e.q = r.at("q").get<double>();
            const auto parity = r.at("parity").get<std::string>();
            if (parity != "even" && parity != "odd")
                throw Error(ErrorKind::io, "mode cache has an unknown parity '" + parity + "'");
            e.parity = parity == "even" ? Parity::even : Parity::odd;
            e.c_norm = r.at("c_norm").get<double>();
            e.d_bdy = r.at("d_bdy").get<double>();
            entries.push_back(e);
        }
        return ModeTable(p, std::move(entries), j.at("residual_tol").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::io, std::string("mode cache is missing fields: ") + e.what());
    }
}

CachedTable load_or_build(const std::filesystem::path& dir, const PhysicalParams& p, std::size_t M_max,
                          double residual_tol)
{
    const auto path = cache_path(dir, p, M_max, residual_tol);
    if (std::filesystem::exists(path)) {
        try {
            auto table = parse_table(read_file(path), p);
            bool ok = table.M_max() == M_max && table.residual_tol() == residual_tol;
            for (std::size_t m = 1; ok && m < table.size(); ++m)
                ok = std::abs(eigen_residual(static_cast<int>(m), table[m].q, p)) <= residual_tol;
            if (ok)
                return {std::move(table), path, true};
        } catch (const Error&) {
        }
    }
    auto table = build_table(M_max, p, residual_tol);
    atomic_write(path, serialize_table(table));
    return {std::move(table), path, false};
}

} // namespace wentzell::cli
