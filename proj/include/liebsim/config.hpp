#ifndef LIEBSIM_CONFIG_HPP
#define LIEBSIM_CONFIG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace liebsim {

// Raised on malformed configuration; the message names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat INI-style key-value file with [section] headers, '=' assignments and
// '#' comments.  Keys carry their unit in the name (T_MHz, kappa_kHz, ...).
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<text>");

    bool has(const std::string& section, const std::string& key) const;
    std::optional<std::string> get(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

} // namespace liebsim

#endif
