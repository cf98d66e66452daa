#include "liebsim/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace liebsim {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

} // namespace

Config Config::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin)
{
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: unterminated section header at " + origin + ":" +
                                  std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value at " + origin + ":" +
                              std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("config: empty key at " + origin + ":" + std::to_string(lineno));
        cfg.sections_[section][key] = trim(line.substr(eq + 1));
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const
{
    return get(section, key).has_value();
}

std::optional<std::string> Config::get(const std::string& section, const std::string& key) const
{
    const auto s = sections_.find(section);
    if (s == sections_.end())
        return std::nullopt;
    const auto k = s->second.find(key);
    if (k == s->second.end())
        return std::nullopt;
    return k->second;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const
{
    return get(section, key).value_or(fallback);
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const
{
    const auto raw = get(section, key);
    if (!raw)
        return fallback;
    try {
        std::size_t used = 0;
        const double v = std::stod(*raw, &used);
        if (used != raw->size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + section + "." + key + "' is not a number: '" +
                          *raw + "'");
    }
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const
{
    const auto raw = get(section, key);
    if (!raw)
        return fallback;
    try {
        std::size_t used = 0;
        const int v = std::stoi(*raw, &used);
        if (used != raw->size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + section + "." + key + "' is not an integer: '" +
                          *raw + "'");
    }
}

void Config::set(const std::string& section, const std::string& key, const std::string& value)
{
    sections_[section][key] = value;
}

} // namespace liebsim
