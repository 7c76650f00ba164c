#pragma once

#include <map>
#include <string>

#include "core/params.hpp"

namespace qst {

// Flat key-value configuration: one decimal number per key, `key = value`
// lines, `#` comments. The default table is the schema; loading overlays a
// (possibly partial) file onto the defaults and rejects unknown keys.
class Config {
public:
    static Config defaults();
    static Config load_file(const std::string& path);
    static Config parse(const std::string& text, const std::string& source_name);

    double get(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_flag(const std::string& key) const;
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, double value);

    // Canonical serialization: sorted keys, stable number formatting. The
    // config hash embedded in output artifacts is FNV-1a 64 over this text.
    std::string serialize() const;
    void save_file(const std::string& path) const;
    std::string hash() const;

    ValidationReport validate() const;

private:
    std::map<std::string, double> values_;
};

QuadDeviceParams quad_params_from_config(const Config& cfg);
SqueezerParams squeezer_params_from_config(const Config& cfg);
PidGains squeezer_gains_from_config(const Config& cfg);

uint64_t fnv1a64(const std::string& data);

}  // namespace qst
